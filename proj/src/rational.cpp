#include "daha1/rational.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "daha1/errors.hpp"

namespace daha1 {

QPoly::QPoly(const mpq_class& c) {
  c_.push_back(c);
  trim();
}

QPoly QPoly::from(std::vector<mpq_class> c) {
  QPoly p;
  p.c_ = std::move(c);
  p.trim();
  return p;
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return from(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + o * QPoly(-1); }

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<mpq_class> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return from(std::move(r));
}

double QPoly::eval(double k) const {
  double s = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * k + it->get_d();
  return s;
}

mpq_class QPoly::eval(const mpq_class& k) const {
  mpq_class s = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * k + *it;
  return s;
}

std::string QPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    mpq_class c = c_[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    mpq_class m = abs(c);
    first = false;
    if (i == 0) {
      os << m.get_str();
      continue;
    }
    if (m != 1) os << m.get_str() << "*";
    os << "k";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

XPoly dunkl_apply(const XPoly& f) {
  XPoly r;
  for (const auto& [n, c] : f) {
    if (n == 0) continue;
    // d/dx x^n = n x^{n-1};  (k/x)(1 - s) x^n = 2k x^{n-1} for odd n
    QPoly m = QPoly(n);
    if (n % 2) m += QPoly::k() * QPoly(2);
    QPoly& slot = r[n - 1];
    slot += m * c;
    if (slot.is_zero()) r.erase(n - 1);
  }
  return r;
}

RationalWord RationalWord::term(int a, int delta, int b, const QPoly& c) {
  RationalWord w;
  w.add_term({a, delta, b}, c);
  return w;
}

RationalWord RationalWord::x() {
  QPoly half(mpq_class(1, 2));
  return term(0, 0, 1, half) + term(1, 0, 0, half);
}

RationalWord RationalWord::y() {
  QPoly half(mpq_class(1, 2));
  return term(0, 0, 1, half) + term(1, 0, 0, QPoly(mpq_class(-1, 2)));
}

void RationalWord::add_term(const Key& key, const QPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = c_.try_emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

RationalWord RationalWord::operator+(const RationalWord& o) const {
  RationalWord r = *this;
  for (const auto& [key, c] : o.c_) r.add_term(key, c);
  return r;
}

RationalWord RationalWord::scaled(const QPoly& s) const {
  RationalWord r;
  for (const auto& [key, c] : c_) r.add_term(key, c * s);
  return r;
}

RationalWord RationalWord::left_v() const {
  RationalWord r;
  for (const auto& [key, c] : c_) {
    auto [a, d, b] = key;
    r.add_term({a + 1, d, b}, c);
  }
  return r;
}

RationalWord RationalWord::left_s() const {
  RationalWord r;
  for (const auto& [key, c] : c_) {
    auto [a, d, b] = key;
    r.add_term({a, d ^ 1, b}, a % 2 ? c * QPoly(-1) : c);
  }
  return r;
}

RationalWord RationalWord::left_u() const {
  // u v^a = v^a u + a v^{a-1} + 2k [a odd] v^{a-1} s
  RationalWord r;
  const QPoly two_k = QPoly::k() * QPoly(2);
  for (const auto& [key, c] : c_) {
    auto [a, d, b] = key;
    r.add_term({a, d, b + 1}, d ? c * QPoly(-1) : c);
    if (a > 0) {
      r.add_term({a - 1, d, b}, c * QPoly(a));
      if (a % 2) r.add_term({a - 1, d ^ 1, b}, c * two_k);
    }
  }
  return r;
}

RationalWord RationalWord::operator*(const RationalWord& o) const {
  RationalWord r;
  for (const auto& [key, c] : c_) {
    auto [a, d, b] = key;
    RationalWord w = o;
    for (int i = 0; i < b; ++i) w = w.left_u();
    if (d) w = w.left_s();
    for (int i = 0; i < a; ++i) w = w.left_v();
    r = r + w.scaled(c);
  }
  return r;
}

RationalWord RationalWord::pow(int n) const {
  if (n < 0) throw std::invalid_argument("RationalWord::pow: negative exponent");
  RationalWord r = one();
  for (int i = 0; i < n; ++i) r = *this * r;
  return r;
}

RationalWord kappa(const RationalWord& w) {
  // kappa(v^a s^d u^b) = kappa(u)^b s^d kappa(v)^a = v^b s^d u^a, already normal
  RationalWord r;
  for (const auto& [key, c] : w.terms()) {
    auto [a, d, b] = key;
    r.add_term({b, d, a}, c);
  }
  return r;
}

QPoly coinvariant(const RationalWord& w) {
  QPoly s;
  for (const auto& [key, c] : w.terms()) {
    auto [a, d, b] = key;
    if (a == 0 && b == 0) s += c;
  }
  return s;
}

QPoly rational_form_closed(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("rational_form: negative degree");
  if ((a + b) % 2) return {};
  int p = (a + b) / 2;
  QPoly r(1);
  for (int j = 0; j < p; ++j)
    r = r * QPoly::from({mpq_class(1, 4) + mpq_class(j, 2), mpq_class(1, 2)});
  return r;
}

QPoly rational_form(int a, int b) {
  QPoly closed = rational_form_closed(a, b);
  RationalWord x = RationalWord::x();
  QPoly normal = coinvariant(kappa(x.pow(a)) * x.pow(b));
  if (!(closed == normal))
    throw std::logic_error("rational_form: closed product " + closed.to_string() +
                           " disagrees with normal form " + normal.to_string());
  return closed;
}

namespace {

// int_0^inf y^e e^{-2y^2} dy through y = exp(s); trapezoid in s, halving the
// step until it settles.
double half_line_moment(double e) {
  double alpha = e + 1.0;
  if (!(alpha > 0.0)) throw OutsideDomain("rational_integral needs k > -1/2");
  double peak = 0.5 * std::log(alpha / 4.0);
  double lo = peak - 45.0 / alpha, hi = peak + 3.5;
  auto f = [&](double s) { return std::exp(alpha * s - 2.0 * std::exp(2.0 * s)); };
  int n = 64;
  double h = (hi - lo) / n;
  double sum = 0.5 * (f(lo) + f(hi));
  for (int i = 1; i < n; ++i) sum += f(lo + i * h);
  double prev = sum * h;
  for (int it = 0; it < 20; ++it) {
    for (int i = 0; i < n; ++i) sum += f(lo + (i + 0.5) * h);
    n *= 2;
    h *= 0.5;
    double cur = sum * h;
    if (std::abs(cur - prev) <= 1e-14 * std::abs(cur) && it >= 2) return cur;
    prev = cur;
  }
  throw NoConvergence("rational_integral: quadrature did not settle");
}

cplx ipow(int n) {
  static const cplx pw[4] = {1.0, cplx(0, 1), -1.0, cplx(0, -1)};
  return pw[((n % 4) + 4) % 4];
}

}  // namespace

cplx rational_integral(int a, int b, double k) {
  int n = a + b;
  // (iy)^n on both half lines
  cplx factor = ipow(n) + ipow(n) * (n % 2 ? -1.0 : 1.0);
  if (factor == cplx(0.0)) return 0.0;
  return factor * half_line_moment(n + 2.0 * k);
}

CheckReport check_rational_integral(int a, int b, double k, double tol) {
  Stopwatch sw;
  if ((a + b) % 2) throw OddCase("check_rational_integral needs a + b even");
  if (!(k > -0.5)) throw OutsideDomain("check_rational_integral needs k > -1/2");
  cplx c0 = rational_integral(0, 0, k);
  if (std::abs(c0.imag()) > tol * std::abs(c0) || !(c0.real() > 0.0))
    throw CalibrationFailure("(0,0) anchor is not real positive");
  cplx sigma = rational_integral(1, 1, k) / c0 / rational_form_closed(1, 1).eval(k);
  if (std::abs(std::abs(sigma.real()) - 1.0) > tol || std::abs(sigma.imag()) > tol)
    throw CalibrationFailure("(1,1) anchor does not fix a sign");
  double sg = sigma.real() > 0 ? 1.0 : -1.0;
  int p = (a + b) / 2;
  cplx lhs = rational_integral(a, b, k) / (c0.real() * std::pow(sg, p));
  double rhs = rational_form(a, b).eval(k);
  Json params = {{"a", a}, {"b", b}, {"k", k}, {"calibrated_constant", c0.real()},
                 {"calibrated_sign", sg}};
  CheckReport r = numeric_report("rational_integral", params, lhs, rhs, tol * std::abs(rhs));
  r.runtime_ms = sw.ms();
  return r;
}

CheckReport check_rational_coinvariant(int a, int b) {
  Stopwatch sw;
  QPoly closed = rational_form_closed(a, b);
  RationalWord x = RationalWord::x();
  QPoly normal = coinvariant(kappa(x.pow(a)) * x.pow(b));
  CheckReport r = exact_report("rational_form", {{"a", a}, {"b", b}}, normal.to_string(),
                               closed.to_string(), normal == closed);
  r.runtime_ms = sw.ms();
  return r;
}

}  // namespace daha1
