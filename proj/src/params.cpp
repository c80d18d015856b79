#include "daha1/params.hpp"

#include <numbers>
#include <sstream>
#include <stdexcept>

namespace daha1 {

ParamPoint::ParamPoint(double a, cplx k) : a_(a), q_(std::exp(-1.0 / a)), k_(k) {
  if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument("ParamPoint: need a > 0");
}

ParamPoint ParamPoint::from_q(double q, cplx k) {
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("ParamPoint: need 0 < q < 1");
  ParamPoint p(-1.0 / std::log(q), k);
  p.q_ = q;  // keep the caller's q rather than its exp(log) round trip
  return p;
}

ParamPoint ParamPoint::from_a(double a, cplx k) { return ParamPoint(a, k); }

double ParamPoint::period() const { return 2.0 * std::numbers::pi * a_; }

ParamPoint ParamPoint::with_k(cplx k) const {
  ParamPoint p = *this;
  p.k_ = k;
  return p;
}

std::string ParamPoint::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << "q=" << q_ << " k=" << k_.real();
  if (k_.imag() != 0.0) os << (k_.imag() < 0 ? "-" : "+") << std::abs(k_.imag()) << "i";
  return os.str();
}

}  // namespace daha1
