#pragma once

#include <map>
#include <vector>

#include "daha1/laurent.hpp"
#include "daha1/report.hpp"

namespace daha1 {

// Element pi^delta s_{i_1} ... s_{i_l} of the extended affine Weyl group of
// type A1, letters alternating in {0, 1}.
struct AHAWord {
  int delta = 0;
  std::vector<int> letters;
  int length() const { return static_cast<int>(letters.size()); }
  auto operator<=>(const AHAWord&) const = default;
};

// Group product g * w for a generator g: -1 stands for pi, 0 and 1 for s_0, s_1.
AHAWord group_mul_gen(int g, const AHAWord& w);
AHAWord group_mul(const AHAWord& a, const AHAWord& b);
AHAWord group_inverse(const AHAWord& w);
// Reduced word of n omega, omega = pi s_1.
AHAWord n_omega(int n);
// Every group element of length <= max_len.
std::vector<AHAWord> words_up_to(int max_len);

// Finite combination of T_w with coefficients in v = t^{1/2}.
class AHAElem {
 public:
  AHAElem() = default;
  static AHAElem identity() { return basis(AHAWord{}); }
  static AHAElem basis(const AHAWord& w, const RatQT& c = RatQT(1));
  static AHAElem pi() { return basis(AHAWord{1, {}}); }
  static AHAElem T(int i) { return basis(AHAWord{0, {i}}); }
  static AHAElem T_inv(int i);
  static AHAElem Y();      // pi T_1
  static AHAElem Y_inv();  // T_1^{-1} pi
  static AHAElem Y_pow(int m);
  // (1 + t^{1/2} T_1) / (1 + t)
  static AHAElem symmetrizer();

  const std::map<AHAWord, RatQT>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  void add_term(const AHAWord& w, const RatQT& c);
  RatQT coeff(const AHAWord& w) const;

  AHAElem& operator+=(const AHAElem& o);
  AHAElem operator+(const AHAElem& o) const { return AHAElem(*this) += o; }
  AHAElem operator-(const AHAElem& o) const { return *this + o.scaled(RatQT(-1)); }
  AHAElem operator*(const AHAElem& o) const;
  AHAElem scaled(const RatQT& s) const;
  // Left multiplication by a generator (-1 = pi).
  AHAElem left_gen(int g) const;
  bool operator==(const AHAElem& o) const { return c_ == o.c_; }

  std::string to_string() const;

 private:
  std::map<AHAWord, RatQT> c_;
};

// Coefficient of the identity.
RatQT aha_trace(const AHAElem& a);
// T_w -> T_{w^{-1}}, coefficients fixed.
AHAElem star(const AHAElem& a);

// Element sum_m c_m Y^m P_+ of H P_+, stored as the Laurent polynomial
// sum_m c_m X^m.
struct SphericalVector {
  LaurentPoly coeffs;
  AHAElem element() const;
  bool operator==(const SphericalVector& o) const { return coeffs == o.coeffs; }
  std::string to_string() const;
};

// Coordinates of an element of H P_+ in the basis Y^m P_+; throws
// NonDivisible if the element lies outside H P_+.
SphericalVector spherical_coordinates(const AHAElem& a);

// t^{-|n|/2} T_{n omega} P_+
AHAElem matsumoto_psi_element(int n);
SphericalVector matsumoto_psi(int n);

// f(X -> Y, t -> 1/t) P_+, with coefficients first taken at q = 0.
AHAElem primed_spherical(const LaurentPoly& f);

// (f T(g) mu_0)_CT at q = 0, mu_0 = (1 - X^2)/(1 - t X^2).
RatQT mu0_pair(const LaurentPoly& f, const LaurentPoly& g);

CheckReport check_plancherel(const LaurentPoly& f, const LaurentPoly& g);
CheckReport check_e_limit(int n);
CheckReport check_length_additivity(int max_len);
CheckReport check_symmetrizer_idempotent();

}  // namespace daha1
