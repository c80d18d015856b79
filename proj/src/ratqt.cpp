#include "daha1/ratqt.hpp"

#include <sstream>

#include "daha1/errors.hpp"
#include "daha1/params.hpp"

namespace daha1 {

namespace {

BiPoly mono(int eu, int ev) { return BiPoly::monomial(1, static_cast<std::uint32_t>(eu), static_cast<std::uint32_t>(ev)); }

// Removes the largest monomial factor of p into (su, sv).
void strip(BiPoly& p, int& su, int& sv, int sign) {
  std::uint32_t mu = p.min_eu(), mv = p.min_ev();
  if (mu || mv) {
    p = p.unshift(mu, mv);
    su += sign * static_cast<int>(mu);
    sv += sign * static_cast<int>(mv);
  }
}

BiPoly quotient(const BiPoly& a, const BiPoly& b) {
  if (b.is_one()) return a;
  auto q = a.divexact(b);
  if (!q) throw NonDivisible("internal: gcd does not divide");
  return *q;
}

}  // namespace

RatQT::RatQT(long n) : num_(BiPoly::constant(n)), den_(BiPoly::constant(1)) {}

RatQT::RatQT(const mpq_class& r, int su, int sv) {
  mpq_class c = r;
  c.canonicalize();
  if (c == 0) {
    den_ = BiPoly::constant(1);
    return;
  }
  su_ = su;
  sv_ = sv;
  num_ = BiPoly::constant(c.get_num());
  den_ = BiPoly::constant(c.get_den());
}

RatQT RatQT::make(BiPoly num, BiPoly den, int su, int sv) {
  if (den.is_zero()) throw DenominatorVanishes("division by the zero function");
  RatQT r;
  if (num.is_zero()) return r;
  strip(num, su, sv, +1);
  strip(den, su, sv, -1);
  BiPoly g = gcd(num, den);
  if (!g.is_one()) {
    num = quotient(num, g);
    den = quotient(den, g);
  }
  if (den.lead().c < 0) {
    num = -num;
    den = -den;
  }
  r.su_ = su;
  r.sv_ = sv;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

bool RatQT::has_u() const {
  if (su_ != 0) return true;
  for (const auto& t : num_.terms())
    if (t.eu) return true;
  for (const auto& t : den_.terms())
    if (t.eu) return true;
  return false;
}

RatQT RatQT::operator-() const {
  RatQT r = *this;
  r.num_ = -r.num_;
  return r;
}

RatQT RatQT::operator+(const RatQT& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int mu = std::min(su_, o.su_), mv = std::min(sv_, o.sv_);
  BiPoly n1 = num_ * mono(su_ - mu, sv_ - mv);
  BiPoly n2 = o.num_ * mono(o.su_ - mu, o.sv_ - mv);
  RatQT r;
  BiPoly n, d;
  if (den_ == o.den_) {
    n = n1 + n2;
    if (n.is_zero()) return r;
    d = den_;
    if (!d.is_one()) {
      BiPoly g = gcd(n, d);
      if (!g.is_one()) {
        n = quotient(n, g);
        d = quotient(d, g);
      }
    }
  } else {
    BiPoly g = gcd(den_, o.den_);
    if (g.is_one()) {
      n = n1 * o.den_ + n2 * den_;
      if (n.is_zero()) return r;
      d = den_ * o.den_;
    } else {
      BiPoly d1 = quotient(den_, g), d2 = quotient(o.den_, g);
      n = n1 * d2 + n2 * d1;
      if (n.is_zero()) return r;
      BiPoly g2 = gcd(n, g);
      if (!g2.is_one()) n = quotient(n, g2);
      d = d1 * d2 * quotient(g, g2);
    }
  }
  int su = mu, sv = mv;
  strip(n, su, sv, +1);
  if (d.lead().c < 0) {
    n = -n;
    d = -d;
  }
  r.su_ = su;
  r.sv_ = sv;
  r.num_ = std::move(n);
  r.den_ = std::move(d);
  return r;
}

RatQT RatQT::operator-(const RatQT& o) const { return *this + (-o); }

RatQT RatQT::operator*(const RatQT& o) const {
  if (is_zero() || o.is_zero()) return RatQT();
  BiPoly g1 = o.den_.is_one() ? BiPoly::constant(1) : gcd(num_, o.den_);
  BiPoly g2 = den_.is_one() ? BiPoly::constant(1) : gcd(o.num_, den_);
  RatQT r;
  r.num_ = quotient(num_, g1) * quotient(o.num_, g2);
  r.den_ = quotient(den_, g2) * quotient(o.den_, g1);
  r.su_ = su_ + o.su_;
  r.sv_ = sv_ + o.sv_;
  if (r.den_.lead().c < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RatQT RatQT::inv() const {
  if (is_zero()) throw DenominatorVanishes("inverse of zero");
  RatQT r;
  r.num_ = den_;
  r.den_ = num_;
  r.su_ = -su_;
  r.sv_ = -sv_;
  if (r.den_.lead().c < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RatQT RatQT::operator/(const RatQT& o) const { return *this * o.inv(); }

RatQT RatQT::pow(int n) const {
  if (n < 0) return inv().pow(-n);
  RatQT result(1), base = *this;
  while (n) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

bool RatQT::operator==(const RatQT& o) const {
  return su_ == o.su_ && sv_ == o.sv_ && num_ == o.num_ && den_ == o.den_;
}

RatQT RatQT::invert_v() const {
  if (is_zero()) return *this;
  int dn = num_.deg_v(), dd = den_.deg_v();
  RatQT r;
  r.num_ = num_.reverse_v();
  r.den_ = den_.reverse_v();
  r.su_ = su_;
  r.sv_ = -sv_ - dn + dd;
  if (r.den_.lead().c < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

std::complex<double> RatQT::eval(std::complex<double> u, std::complex<double> v) const {
  if (is_zero()) return 0.0;
  std::complex<double> d = den_.eval(u, v);
  double scale = den_.abs_eval(std::abs(u), std::abs(v));
  if (std::abs(d) <= 1e-13 * scale)
    throw DenominatorVanishes("denominator " + den_.to_string() + " vanishes at the parameter point");
  return std::pow(u, su_) * std::pow(v, sv_) * num_.eval(u, v) / d;
}

std::string RatQT::to_string() const {
  std::ostringstream os;
  if (is_zero()) return "0";
  os << "(" << num_.to_string() << ")";
  if (!den_.is_one()) os << "/(" << den_.to_string() << ")";
  if (su_) os << "*u^" << su_;
  if (sv_) os << "*v^" << sv_;
  return os.str();
}

std::complex<double> rat_eval(const RatQT& r, const ParamPoint& pt) { return r.eval(pt.u(), pt.v()); }

RatQT rat_q0_limit(const RatQT& r) {
  if (r.is_zero()) return r;
  if (r.u_shift() < 0) throw PoleAtQZero("pole of order " + std::to_string(-r.u_shift()) + " in q^{1/4}");
  if (r.u_shift() > 0) return RatQT();
  auto as_v = [](const UPoly& p) {
    std::vector<BiPoly::Term> t;
    for (int i = 0; i <= p.degree(); ++i)
      if (p[i] != 0) t.push_back({static_cast<std::uint32_t>(i), 0, p[i]});
    return BiPoly::from_terms(std::move(t));
  };
  return RatQT::make(as_v(r.num().at_u_zero()), as_v(r.den().at_u_zero()), 0, r.v_shift());
}

}  // namespace daha1
