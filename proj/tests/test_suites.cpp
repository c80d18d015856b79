#include <doctest.h>

#include "daha1/errors.hpp"
#include "daha1/suites.hpp"

using namespace daha1;

namespace {
SuiteConfig cfg(const char* text) { return parse_config(Json::parse(text)); }

std::vector<std::string> strip_runtime(const std::vector<CheckReport>& rs) {
  std::vector<std::string> out;
  for (const auto& r : rs) {
    Json j = r.to_json();
    j.erase("runtime_ms");
    out.push_back(j.dump());
  }
  return out;
}
}  // namespace

TEST_CASE("config validation") {
  CHECK_THROWS_AS(cfg(R"({"suite": "nope"})"), ConfigError);
  CHECK_THROWS_AS(cfg(R"({"grid": {}})"), ConfigError);
  CHECK_THROWS_AS(cfg(R"({"suite": "thm72", "grid": {"w": [1]}})"), ConfigError);
  CHECK_THROWS_AS(cfg(R"({"suite": "thm72", "grid": {"q": 0.3}})"), ConfigError);
  CHECK_THROWS_AS(cfg(R"({"suite": "thm72", "grid": {"q": [1.5]}})"), ConfigError);
  CHECK_THROWS_AS(cfg(R"({"suite": "thm72", "grid": {"q": [0.3], "a": [1]}})"), ConfigError);
  CHECK_THROWS_AS(cfg(R"({"suite": "thm72", "grid": {"F": [2]}})"), ConfigError);
  CHECK_THROWS_AS(cfg(R"({"suite": "epoly", "grid": {"n": [1.5]}})"), ConfigError);
  CHECK_THROWS_AS(cfg(R"({"suite": "epoly", "tol": -1})"), ConfigError);
  CHECK_THROWS_AS(cfg(R"({"suite": "epoly", "truncation": {"depth": 3}})"), ConfigError);
  CHECK_THROWS_AS(cfg(R"({"suite": "epoly", "extra": 1})"), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ConfigError);
  SuiteConfig c = cfg(R"({"suite": "thm61", "grid": {"q": [0.3], "k": [[-0.2, 0.1]]}, "tol": 1e-7})");
  CHECK(c.tol.value() == 1e-7);
  CHECK(suite_names().size() == 13);
}

TEST_CASE("empty grids give empty reports") {
  for (const auto& s : suite_names()) {
    SuiteConfig c;
    c.suite = s;
    CAPTURE(s);
    CHECK(run_suite(c).empty());
  }
  // an empty axis empties the product
  CHECK(run_suite(cfg(R"({"suite": "thm72", "grid": {"q": [0.3], "k": [], "F": ["1"], "M": [1]}})")).empty());
}

TEST_CASE("constant-term identity grid") {
  auto rs = run_suite(cfg(R"({"suite": "thm72", "grid": {"q": [0.36787944117144233], "k": [-0.7, -1.3, -2.4],
                               "F": ["X^2", "X^4"], "M": [0.5, 1, 2]}})"));
  CHECK(rs.size() == 18);
  for (const auto& r : rs) {
    CHECK(r.pass);
    CHECK(*r.abs_err < 1e-8);
  }
}

TEST_CASE("errors become failing reports in place") {
  auto rs = run_suite(cfg(R"({"suite": "thm72", "grid": {"q": [0.3], "k": [-0.7],
                               "F": ["X^2", "X", "X^^2", "1"], "M": [1]}})"));
  REQUIRE(rs.size() == 4);
  CHECK(rs[0].pass);
  CHECK_FALSE(rs[1].pass);
  CHECK(rs[1].detail.find("OddCase") != std::string::npos);
  CHECK(rs[1].params["F"] == "X");
  CHECK_FALSE(rs[2].pass);
  CHECK(rs[2].detail.find("SyntaxError") != std::string::npos);
  CHECK(rs[3].pass);
  CHECK(rs[1].to_json()["abs_err"] == "inf");
}

TEST_CASE("reports follow config order and do not depend on jobs") {
  const char* text = R"({"suite": "thm62-overlap", "grid": {"q": [0.35], "k": [-0.45, -0.1, -0.3],
                         "f": ["X^2", "1"], "g": ["X^2"]}})";
  auto serial = run_suite(cfg(text), 1), parallel = run_suite(cfg(text), 4);
  REQUIRE(serial.size() == 6);
  CHECK(serial[0].params["k"] == -0.45);
  CHECK(serial[1].params["f"] == "1");
  CHECK(serial[2].params["k"] == -0.1);
  CHECK(strip_runtime(serial) == strip_runtime(parallel));
  CHECK(strip_runtime(serial) == strip_runtime(run_suite(cfg(text), 3)));
}

TEST_CASE("suites over exact algebra") {
  for (const char* text : {R"({"suite": "relations", "grid": {"deg": [3]}})",
                           R"({"suite": "epoly", "grid": {"n": [-1, 0, 1, 4]}})",
                           R"({"suite": "orthogonality", "grid": {"n": [-2, 0, 3]}})",
                           R"({"suite": "plancherel", "grid": {"deg": [3], "f": ["X^2 - X"], "g": ["t^(1/2)*X^-1"]}})",
                           R"({"suite": "e-limit", "grid": {"n": [-2, 3]}})",
                           R"({"suite": "rational", "grid": {"deg": [4, 5], "k": [0.3], "n": [1, 3]}})"}) {
    CAPTURE(text);
    auto rs = run_suite(cfg(text));
    CHECK_FALSE(rs.empty());
    for (const auto& r : rs) CHECK(r.pass);
  }
}

TEST_CASE("wall points in the overlap suite become wall-crossing checks") {
  auto rs = run_suite(cfg(R"({"suite": "thm62-overlap", "grid": {"q": [0.35], "k": [-1], "f": ["X^2"], "g": ["X^2"]}})"));
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].check_id == "wall_crossing");
  CHECK(rs[0].pass);
}

TEST_CASE("closed forms and weight ratios") {
  for (int n : {-1, 0, 1}) CHECK(check_epoly_closed_form(n).pass);
  CHECK_THROWS_AS(check_epoly_closed_form(2), OutsideDomain);
  for (int j = 1; j <= 4; ++j)
    for (int s : {-1, 1}) {
      CHECK(check_weight_ratio(ParamPoint::from_q(0.35, -1.3), j, s).pass);
      CHECK(check_weight_ratio(ParamPoint::from_q(0.25, cplx(-2.6, 0.1)), j, s).pass);
    }
}
