#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace daha1 {

// Dense polynomial in one variable over Z, coefficients low degree first.
// The zero polynomial is the empty vector; otherwise the top entry is nonzero.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<mpz_class> c) : c_(std::move(c)) { trim(); }
  static UPoly constant(const mpz_class& c);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const mpz_class& operator[](int i) const { return c_[i]; }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  const mpz_class& lead() const { return c_.back(); }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator-() const;
  UPoly scaled(const mpz_class& s) const;
  UPoly shifted(int k) const;  // multiply by x^k, k >= 0
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  mpz_class content() const;
  UPoly primitive() const;
  mpz_class eval(const mpz_class& x) const;
  mpz_class max_norm() const;

  // Exact quotient, or nullopt if o does not divide *this over Z.
  std::optional<UPoly> divexact(const UPoly& o) const;
  // lc(o)^(deg - deg o + 1) * (*this) mod o.
  UPoly pseudo_rem(const UPoly& o) const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

// gcd over Z[x], normalized to positive leading coefficient.
UPoly gcd(const UPoly& a, const UPoly& b);

// Sparse polynomial in (u, v) over Z with non-negative exponents.
// Terms are sorted from the leading term down under lex order with v > u.
class BiPoly {
 public:
  struct Term {
    std::uint32_t ev;
    std::uint32_t eu;
    mpz_class c;
  };

  BiPoly() = default;
  static BiPoly constant(const mpz_class& c);
  static BiPoly monomial(const mpz_class& c, std::uint32_t eu, std::uint32_t ev);
  // Build from arbitrary terms; merges duplicates and drops zeros.
  static BiPoly from_terms(std::vector<Term> terms);
  // Embed a polynomial in u (optionally times v^ev).
  static BiPoly from_u(const UPoly& p, std::uint32_t ev = 0);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].ev == 0 && t_[0].eu == 0); }
  bool is_one() const;
  std::size_t size() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }
  const Term& lead() const { return t_.front(); }

  int deg_v() const;
  int deg_u() const;
  std::uint32_t min_eu() const;
  std::uint32_t min_ev() const;

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly operator-() const;
  BiPoly scaled(const mpz_class& s) const;
  BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }
  bool operator==(const BiPoly& o) const;
  bool operator!=(const BiPoly& o) const { return !(*this == o); }

  // Divide by u^du v^dv; caller guarantees all exponents are large enough.
  BiPoly unshift(std::uint32_t du, std::uint32_t dv) const;
  // v -> 1/v followed by multiplication with v^deg_v.
  BiPoly reverse_v() const;
  // Coefficient of v^0 after u = 0, as a polynomial in v.
  UPoly at_u_zero() const;

  mpz_class content() const;
  BiPoly primitive() const;
  std::optional<BiPoly> divexact(const BiPoly& o) const;

  // Coefficients with respect to v, as polynomials in u.
  std::vector<UPoly> v_coeffs() const;
  static BiPoly from_v_coeffs(const std::vector<UPoly>& c);
  UPoly eval_v(const mpz_class& x) const;

  std::complex<double> eval(std::complex<double> u, std::complex<double> v) const;
  // Sum of |c| |u|^eu |v|^ev, the scale used by vanishing guards.
  double abs_eval(double au, double av) const;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<Term> t_;
};

BiPoly gcd(const BiPoly& a, const BiPoly& b);
// Same result computed by primitive remainder sequences only.
BiPoly gcd_reference(const BiPoly& a, const BiPoly& b);

}  // namespace daha1
