#include "daha1/suites.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <set>

#include "daha1/continuation.hpp"
#include "daha1/daha_rep.hpp"
#include "daha1/errors.hpp"
#include "daha1/globalfn.hpp"
#include "daha1/macdonald.hpp"
#include "daha1/padic.hpp"
#include "daha1/poly_io.hpp"
#include "daha1/rational.hpp"

namespace daha1 {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"relations", "epoly",     "orthogonality", "thm61", "thm62-overlap",
                                              "thm72",     "prop73",    "radical",       "hc",    "recovery",
                                              "plancherel", "e-limit", "rational"};
  return names;
}

// ---- individual checks

std::vector<CheckReport> check_epoly(int n) {
  Stopwatch sw;
  const EPoly& e = epoly(n);
  Json params = {{"n", n}};
  LaurentPoly diff = apply_generator(Gen::Y, e.poly) - e.poly.scaled(e.eigenvalue);
  CheckReport eig = exact_report("epoly_eigen", params, to_string(diff), "0", diff.is_zero());
  std::string bad;
  for (const auto& [m, c] : e.poly.terms())
    if (m != n && !order_lower(m, n)) bad += (bad.empty() ? "X^" : ", X^") + std::to_string(m);
  bool monic = e.poly.coeff(n).is_one();
  CheckReport tri = exact_report("epoly_triangular", params, bad.empty() ? "lower terms only" : bad,
                                 "lower terms only", bad.empty() && monic);
  if (!monic) tri.detail = "leading coefficient is " + format_coeff(e.poly.coeff(n));
  eig.runtime_ms = tri.runtime_ms = sw.ms();
  return {eig, tri};
}

CheckReport check_epoly_closed_form(int n) {
  Stopwatch sw;
  LaurentPoly expect;
  if (n == 0)
    expect = LaurentPoly::constant(1);
  else if (n == 1)
    expect = LaurentPoly::monomial(1);
  else if (n == -1)
    expect = parse_poly("X^-1 + (1 - t)/(1 - q*t)*X");
  else
    throw OutsideDomain("closed forms are known for n in {-1, 0, 1}");
  const LaurentPoly& e = epoly(n).poly;
  CheckReport r = exact_report("epoly_closed_form", {{"n", n}}, to_string(e), to_string(expect), e == expect);
  r.runtime_ms = sw.ms();
  return r;
}

CheckReport check_ct_orthogonality(int n, int m) {
  Stopwatch sw;
  CtValue c = ct_pair(epoly(n).poly, epoly(m).poly);
  CheckReport r = exact_report("ct_orthogonality", {{"n", n}, {"m", m}}, format_coeff(c.reduced), "0",
                               c.reduced.is_zero());
  r.runtime_ms = sw.ms();
  return r;
}

CheckReport check_single_residue(const LaurentPoly& f, const LaurentPoly& g, const ParamPoint& pt, double tol) {
  Stopwatch sw;
  double kr = pt.k().real();
  if (!(kr < 0.0 && kr > -0.5)) throw OutsideDomain("single residue identity needs -1/2 < Re k < 0");
  NumLaurent F = pairing_integrand(f, g, pt);
  cplx x0 = -0.5 * pt.k();
  cplx lhs = gaussian_pairing(F, pt, 0.25);
  cplx rhs = gaussian_pairing(F, pt, 0.0) +
             theta_contribution(x0, pt) * mu_bullet(ResidualPoint{0}, pt) * eval_at_x(F, x0, pt);
  Json params = param_json(pt);
  params["f"] = to_string(f);
  params["g"] = to_string(g);
  CheckReport r = numeric_report("thm61_single_residue", params, lhs, rhs, tol);
  r.runtime_ms = sw.ms();
  return r;
}

CheckReport check_branch_agreement(const LaurentPoly& f, const LaurentPoly& g, const ParamPoint& pt, double tol) {
  Stopwatch sw;
  cplx a = shapovalov_form(f, g, pt, ShapovalovBranch::quarter);
  cplx b = shapovalov_form(f, g, pt, ShapovalovBranch::residue);
  Json params = param_json(pt);
  params["f"] = to_string(f);
  params["g"] = to_string(g);
  CheckReport r = numeric_report("overlap_branch_agreement", params, a, b, tol);
  r.runtime_ms = sw.ms();
  return r;
}

CheckReport check_wall_crossing(const LaurentPoly& f, const LaurentPoly& g, double q, double wall, double tol) {
  Stopwatch sw;
  const std::vector<double> deltas{0.1, 0.05, 0.025, 0.0125};
  cplx left = wall_limit(f, g, q, wall, -1, deltas), right = wall_limit(f, g, q, wall, 1, deltas);
  Json params = {{"q", q}, {"wall", wall}, {"f", to_string(f)}, {"g", to_string(g)}, {"deltas", deltas}};
  CheckReport r = numeric_report("wall_crossing", params, left, right, tol);
  r.runtime_ms = sw.ms();
  return r;
}

CheckReport check_weight_ratio(const ParamPoint& pt, int j, int sign, double tol) {
  Stopwatch sw;
  cplx direct = mu_bullet(ResidualPoint{j, sign}, pt) / mu_bullet(ResidualPoint{0}, pt);
  cplx closed = weight_ratio(j, sign, pt);
  Json params = param_json(pt);
  params["j"] = j;
  params["sign"] = sign;
  // relative to the size of the ratio
  CheckReport r = numeric_report("weight_ratio", params, direct, closed, tol * std::max(1.0, std::abs(closed)));
  r.runtime_ms = sw.ms();
  return r;
}

// ---- configuration

namespace {

const std::set<std::string> kGridKeys{"q", "a", "k", "deg", "n", "M", "f", "g", "F", "X", "L"};
const std::set<std::string> kTruncKeys{"tail_tol", "quad_tol", "max_nodes", "terms", "term_tol"};

void require(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError(msg);
}

void validate_axis(const std::string& key, const Json& axis) {
  require(axis.is_array(), "grid." + key + " must be an array");
  for (const auto& v : axis) {
    if (key == "f" || key == "g" || key == "F") {
      require(v.is_string(), "grid." + key + " entries must be polynomial strings");
    } else if (key == "deg" || key == "n") {
      require(v.is_number_integer(), "grid." + key + " entries must be integers");
    } else if (key == "k") {
      bool pair = v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number();
      require(v.is_number() || pair, "grid.k entries must be numbers or [re, im] pairs");
    } else {
      require(v.is_number(), "grid." + key + " entries must be numbers");
    }
    if (key == "q") require(v.get<double>() > 0.0 && v.get<double>() < 1.0, "grid.q entries must lie in (0, 1)");
    if (key == "a") require(v.get<double>() > 0.0, "grid.a entries must be positive");
    if (key == "M") require(v.get<double>() > 0.0, "grid.M entries must be positive");
  }
}

std::vector<double> reals(const Json& grid, const char* key) {
  std::vector<double> r;
  if (grid.contains(key))
    for (const auto& v : grid[key]) r.push_back(v.get<double>());
  return r;
}

std::vector<int> ints(const Json& grid, const char* key) {
  std::vector<int> r;
  if (grid.contains(key))
    for (const auto& v : grid[key]) r.push_back(v.get<int>());
  return r;
}

std::vector<std::string> strings(const Json& grid, const char* key) {
  std::vector<std::string> r;
  if (grid.contains(key))
    for (const auto& v : grid[key]) r.push_back(v.get<std::string>());
  return r;
}

std::vector<cplx> ks(const Json& grid) {
  std::vector<cplx> r;
  if (grid.contains("k"))
    for (const auto& v : grid["k"])
      r.push_back(v.is_array() ? cplx(v[0].get<double>(), v[1].get<double>()) : cplx(v.get<double>()));
  return r;
}

// q (or a) outer, k inner.
std::vector<ParamPoint> points(const SuiteConfig& cfg) {
  std::vector<ParamPoint> r;
  bool by_a = cfg.grid.contains("a");
  for (double s : reals(cfg.grid, by_a ? "a" : "q"))
    for (cplx k : ks(cfg.grid)) {
      ParamPoint pt = by_a ? ParamPoint::from_a(s, k) : ParamPoint::from_q(s, k);
      const Json& tr = cfg.truncation;
      if (tr.contains("tail_tol")) pt.tail_tol = tr["tail_tol"].get<double>();
      if (tr.contains("quad_tol")) pt.quad_tol = tr["quad_tol"].get<double>();
      if (tr.contains("max_nodes")) pt.max_nodes = tr["max_nodes"].get<std::size_t>();
      r.push_back(pt);
    }
  return r;
}

}  // namespace

SuiteConfig parse_config(const Json& doc) {
  require(doc.is_object(), "config must be a JSON object");
  for (const auto& [key, v] : doc.items())
    require(key == "suite" || key == "grid" || key == "tol" || key == "truncation", "unknown config key '" + key + "'");
  SuiteConfig cfg;
  require(doc.contains("suite") && doc["suite"].is_string(), "config.suite must be a string");
  cfg.suite = doc["suite"].get<std::string>();
  const auto& names = suite_names();
  require(std::find(names.begin(), names.end(), cfg.suite) != names.end(), "unknown suite '" + cfg.suite + "'");
  if (doc.contains("grid")) {
    require(doc["grid"].is_object(), "config.grid must be an object");
    cfg.grid = doc["grid"];
  }
  for (const auto& [key, v] : cfg.grid.items()) {
    require(kGridKeys.count(key) > 0, "unknown grid key '" + key + "'");
    validate_axis(key, v);
  }
  require(!(cfg.grid.contains("q") && cfg.grid.contains("a")), "grid may give q or a, not both");
  if (doc.contains("tol")) {
    require(doc["tol"].is_number() && doc["tol"].get<double>() > 0.0, "config.tol must be a positive number");
    cfg.tol = doc["tol"].get<double>();
  }
  if (doc.contains("truncation")) {
    require(doc["truncation"].is_object(), "config.truncation must be an object");
    cfg.truncation = doc["truncation"];
    for (const auto& [key, v] : cfg.truncation.items()) {
      require(kTruncKeys.count(key) > 0, "unknown truncation key '" + key + "'");
      if (key == "max_nodes" || key == "terms")
        require(v.is_number_integer() && v.get<long>() > 0, "truncation." + key + " must be a positive integer");
      else
        require(v.is_number() && v.get<double>() > 0.0, "truncation." + key + " must be a positive number");
    }
  }
  return cfg;
}

SuiteConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  Json doc = Json::parse(in, nullptr, false);
  if (doc.is_discarded()) throw ConfigError("config file '" + path + "' is not valid JSON");
  return parse_config(doc);
}

// ---- suites

namespace {

struct Task {
  std::string id;  // check id used if the task throws
  Json params;
  std::function<std::vector<CheckReport>()> run;
};

std::vector<CheckReport> one(CheckReport r) { return {std::move(r)}; }

std::vector<CheckReport> guarded(const Task& t) {
  Stopwatch sw;
  std::string what;
  try {
    return t.run();
  } catch (const std::exception& e) {
    what = e.what();
  } catch (...) {
    what = "unknown exception";
  }
  CheckReport r;
  r.check_id = t.id;
  r.params = t.params;
  r.abs_err = INFINITY;
  r.pass = false;
  r.detail = what;
  r.runtime_ms = sw.ms();
  return {r};
}

Json with(Json base, const Json& extra) {
  for (const auto& [k, v] : extra.items()) base[k] = v;
  return base;
}

std::vector<Task> build_tasks(const SuiteConfig& cfg) {
  const std::string& s = cfg.suite;
  const Json& grid = cfg.grid;
  auto tol = [&](double def) { return cfg.tol.value_or(def); };
  std::vector<Task> tasks;
  auto add = [&](std::string id, Json params, std::function<std::vector<CheckReport>()> run) {
    tasks.push_back({std::move(id), std::move(params), std::move(run)});
  };

  if (s == "relations") {
    for (int d : ints(grid, "deg")) {
      Json p = {{"deg", d}};
      add("daha_relations", p, [d] { return one(check_daha_relations(d)); });
      add("tau_plus_gaussian", p, [d] { return one(check_tau_plus_gaussian(d)); });
      add("fourier_automorphism", p, [d] { return one(check_fourier_automorphism(d)); });
    }
  } else if (s == "epoly") {
    for (int n : ints(grid, "n")) {
      add("epoly_eigen", {{"n", n}}, [n] { return check_epoly(n); });
      if (std::abs(n) <= 1) add("epoly_closed_form", {{"n", n}}, [n] { return one(check_epoly_closed_form(n)); });
    }
  } else if (s == "orthogonality") {
    auto ns = ints(grid, "n");
    for (std::size_t i = 0; i < ns.size(); ++i)
      for (std::size_t j = i + 1; j < ns.size(); ++j) {
        int n = ns[i], m = ns[j];
        add("ct_orthogonality", {{"n", n}, {"m", m}}, [n, m] { return one(check_ct_orthogonality(n, m)); });
      }
  } else if (s == "thm61") {
    for (const ParamPoint& pt : points(cfg)) {
      for (const auto& f : strings(grid, "f"))
        for (const auto& g : strings(grid, "g"))
          add("thm61_single_residue", with(param_json(pt), {{"f", f}, {"g", g}}), [=] {
            return one(check_single_residue(parse_poly(f), parse_poly(g), pt, tol(1e-8)));
          });
      for (int j : ints(grid, "n"))
        for (int sign : {-1, 1})
          add("weight_ratio", with(param_json(pt), {{"j", j}, {"sign", sign}}),
              [=] { return one(check_weight_ratio(pt, j, sign, tol(1e-10))); });
    }
  } else if (s == "thm62-overlap") {
    for (const ParamPoint& pt : points(cfg))
      for (const auto& f : strings(grid, "f"))
        for (const auto& g : strings(grid, "g")) {
          double kr = pt.k().real();
          bool wall = pt.k().imag() == 0.0 && kr <= -1.0 && kr == std::round(kr);
          if (wall)
            add("wall_crossing", {{"q", pt.q()}, {"wall", kr}, {"f", f}, {"g", g}},
                [=] { return one(check_wall_crossing(parse_poly(f), parse_poly(g), pt.q(), kr, tol(1e-6))); });
          else
            add("overlap_branch_agreement", with(param_json(pt), {{"f", f}, {"g", g}}),
                [=] { return one(check_branch_agreement(parse_poly(f), parse_poly(g), pt, tol(1e-8))); });
        }
  } else if (s == "thm72") {
    for (const ParamPoint& pt : points(cfg))
      for (const auto& F : strings(grid, "F"))
        for (double M : reals(grid, "M"))
          add("thm72", with(param_json(pt), {{"M", M}, {"F", F}}),
              [=] { return one(verify_ct_identity_72(parse_poly(F), pt, M, tol(1e-8))); });
  } else if (s == "prop73") {
    double term_tol = cfg.truncation.value("term_tol", 1e-14);
    auto ms = ints(grid, "n");
    for (const ParamPoint& pt : points(cfg))
      for (const auto& F : strings(grid, "F")) {
        std::vector<int> mlist = ms;
        if (mlist.empty()) mlist.push_back(std::max(0, static_cast<int>(std::floor(-pt.k().real()))));
        for (int m : mlist)
          add("prop73_ct", with(param_json(pt), {{"m", m}, {"F", F}}),
              [=] { return verify_prop73(parse_poly(F), pt, m, tol(1e-8), term_tol); });
      }
  } else if (s == "radical") {
    for (double q : reals(grid, "q"))
      for (int m : ints(grid, "n")) add("radical_gram_singular", {{"q", q}, {"m", m}}, [=] { return radical_check(m, q); });
  } else if (s == "hc") {
    int terms = cfg.truncation.value("terms", 60);
    for (const ParamPoint& pt : points(cfg))
      add("hc_expansion", param_json(pt), [=] {
        GlobalFunction gf(pt, terms);
        std::vector<CheckReport> out;
        for (double x : reals(grid, "X"))
          for (double l : reals(grid, "L")) {
            cplx X = pt.qpow(x), L = pt.qpow(l);
            Json extra = {{"X_exponent", x}, {"L_exponent", l}};
            for (auto& r : check_phi_symmetry(gf, X, L, tol(1e-9))) {
              r.params = with(r.params, extra);
              out.push_back(std::move(r));
            }
            // one bad sample must not hide the others
            Task t{"hc_expansion", with(param_json(pt), extra), [&] { return one(check_hc(gf, X, L, tol(1e-6))); }};
            for (auto& r : guarded(t)) {
              r.params = with(r.params, extra);
              out.push_back(std::move(r));
            }
          }
        return out;
      });
  } else if (s == "recovery") {
    int terms = cfg.truncation.value("terms", 60);
    std::vector<double> xe = reals(grid, "X");
    if (xe.empty()) xe = {0.6, 0.9, 1.2};
    for (const ParamPoint& pt : points(cfg)) {
      auto ns = ints(grid, "n");
      if (ns.empty()) continue;
      add("recovery", param_json(pt), [=] {
        GlobalFunction gf(pt, terms);
        std::vector<cplx> xs;
        for (double x : xe) xs.push_back(pt.qpow(x));
        std::vector<CheckReport> out;
        for (int n : ns) {
          Task t{"recovery", with(param_json(pt), {{"n", n}}), [&] { return one(recovery_check(gf, n, xs, tol(1e-7))); }};
          for (auto& r : guarded(t)) out.push_back(std::move(r));
        }
        return out;
      });
    }
  } else if (s == "plancherel") {
    for (int d : ints(grid, "deg")) {
      add("length_additivity", {{"deg", d}}, [d] { return one(check_length_additivity(d)); });
      add("symmetrizer_idempotent", Json::object(), [] { return one(check_symmetrizer_idempotent()); });
    }
    for (const auto& f : strings(grid, "f"))
      for (const auto& g : strings(grid, "g"))
        add("plancherel", {{"f", f}, {"g", g}}, [=] { return one(check_plancherel(parse_poly(f), parse_poly(g))); });
  } else if (s == "e-limit") {
    for (int n : ints(grid, "n")) add("e_limit", {{"n", n}}, [n] { return one(check_e_limit(n)); });
  } else if (s == "rational") {
    for (int d : ints(grid, "deg"))
      for (int a = 0; a <= d; ++a)
        add("rational_form", {{"a", a}, {"b", d - a}}, [a, b = d - a] { return one(check_rational_coinvariant(a, b)); });
    auto ns = ints(grid, "n");
    for (double k : reals(grid, "k"))
      for (int a : ns)
        for (int b : ns)
          if ((a + b) % 2 == 0)
            add("rational_integral", {{"a", a}, {"b", b}, {"k", k}},
                [=] { return one(check_rational_integral(a, b, k, tol(1e-8))); });
  }
  return tasks;
}

}  // namespace

std::vector<CheckReport> run_suite(const SuiteConfig& cfg, int jobs) {
  std::vector<Task> tasks = build_tasks(cfg);
  std::vector<std::vector<CheckReport>> slots(tasks.size());
  const int n = static_cast<int>(tasks.size());
  const int threads = std::max(1, jobs);
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
  for (int i = 0; i < n; ++i) slots[i] = guarded(tasks[i]);
  std::vector<CheckReport> out;
  for (auto& s : slots)
    for (auto& r : s) out.push_back(std::move(r));
  return out;
}

}  // namespace daha1
