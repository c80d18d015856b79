#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "daha1/params.hpp"

namespace daha1 {

using Json = nlohmann::ordered_json;

// One side of a checked identity: a number or exact expression text.
using ReportValue = std::variant<cplx, std::string>;

struct CheckReport {
  std::string check_id;
  Json params = Json::object();
  ReportValue lhs = std::string();
  ReportValue rhs = std::string();
  std::optional<double> abs_err;  // empty means an exact comparison
  double tol = 0.0;
  bool pass = false;
  long runtime_ms = 0;
  std::string detail;  // failure diagnostics, omitted when empty

  Json to_json() const;
};

CheckReport numeric_report(std::string id, Json params, cplx lhs, cplx rhs, double tol);
CheckReport exact_report(std::string id, Json params, std::string lhs, std::string rhs, bool equal);

Json param_json(const ParamPoint& pt);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  long ms() const {
    return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start_)
                                 .count());
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace daha1
