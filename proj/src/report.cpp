#include "daha1/report.hpp"

#include <cmath>

namespace daha1 {

namespace {

Json value_json(const ReportValue& v) {
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  cplx z = std::get<cplx>(v);
  if (z.imag() == 0.0) return z.real();
  Json j;
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

}  // namespace

Json CheckReport::to_json() const {
  Json j;
  j["check_id"] = check_id;
  j["params"] = params;
  j["lhs"] = value_json(lhs);
  j["rhs"] = value_json(rhs);
  if (abs_err)
    j["abs_err"] = std::isfinite(*abs_err) ? Json(*abs_err) : Json("inf");
  else
    j["abs_err"] = "exact";
  j["tol"] = tol;
  j["pass"] = pass;
  j["runtime_ms"] = runtime_ms;
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

CheckReport numeric_report(std::string id, Json params, cplx lhs, cplx rhs, double tol) {
  CheckReport r;
  r.check_id = std::move(id);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  double err = std::abs(lhs - rhs);
  r.abs_err = std::isnan(err) ? INFINITY : err;
  r.tol = tol;
  r.pass = *r.abs_err <= tol;
  return r;
}

CheckReport exact_report(std::string id, Json params, std::string lhs, std::string rhs, bool equal) {
  CheckReport r;
  r.check_id = std::move(id);
  r.params = std::move(params);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.pass = equal;
  return r;
}

Json param_json(const ParamPoint& pt) {
  Json j;
  j["q"] = pt.q();
  j["k"] = pt.k().imag() == 0.0 ? Json(pt.k().real()) : Json::array({pt.k().real(), pt.k().imag()});
  return j;
}

}  // namespace daha1
