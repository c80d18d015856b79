#pragma once

#include <string>
#include <vector>

#include "daha1/laurent.hpp"
#include "daha1/report.hpp"

namespace daha1 {

// Coefficient domains for the operators: formal (u, v) or a parameter point.
struct ExactDomain {
  using Coeff = RatQT;
  RatQT u_pow(int n) const { return RatQT::u_pow(n); }
  RatQT v_pow(int n) const { return RatQT::v_pow(n); }
};

struct NumericDomain {
  using Coeff = cplx;
  explicit NumericDomain(const ParamPoint& p) : pt(p) {}
  ParamPoint pt;
  cplx u_pow(int n) const { return std::exp(cplx(-0.25 * n / pt.a())); }
  cplx v_pow(int n) const { return pt.qpow(0.5 * n * pt.k()); }
};

enum class Gen { s, p, p_inv, pi, T, T_inv, X, X_inv, Y, Y_inv };

std::string gen_name(Gen g);

template <class D>
Laurent<typename D::Coeff> apply_generator(const D& dom, Gen g, const Laurent<typename D::Coeff>& f) {
  using L = Laurent<typename D::Coeff>;
  switch (g) {
    case Gen::s:
      return f.reflected();
    case Gen::p:
    case Gen::p_inv: {
      int sign = g == Gen::p ? 2 : -2;
      L r;
      for (const auto& [n, c] : f.terms()) r.add_term(n, c * dom.u_pow(sign * n));
      return r;
    }
    case Gen::pi: {
      L r;
      for (const auto& [n, c] : f.terms()) r.add_term(-n, c * dom.u_pow(2 * n));
      return r;
    }
    case Gen::T:
    case Gen::T_inv: {
      // t^{1/2} s + (t^{1/2} - t^{-1/2}) (X^2 - 1)^{-1} (s - 1)
      auto v = dom.v_pow(1), vi = dom.v_pow(-1);
      L sf = f.reflected();
      L r = sf.scaled(v) + divide_by_x2_minus_1(sf - f).scaled(v - vi);
      if (g == Gen::T_inv) r -= f.scaled(v - vi);
      return r;
    }
    case Gen::X:
      return f.shifted(1);
    case Gen::X_inv:
      return f.shifted(-1);
    case Gen::Y:
      return apply_generator(dom, Gen::pi, apply_generator(dom, Gen::T, f));
    case Gen::Y_inv:
      return apply_generator(dom, Gen::T_inv, apply_generator(dom, Gen::pi, f));
  }
  return f;
}

inline LaurentPoly apply_generator(Gen g, const LaurentPoly& f) { return apply_generator(ExactDomain{}, g, f); }

// gamma^g * base, gamma standing for q^{x^2}.
struct GaussianTwisted {
  int gaussian_power = 0;
  LaurentPoly base;
  bool operator==(const GaussianTwisted& o) const {
    return gaussian_power == o.gaussian_power && base == o.base;
  }
};

GaussianTwisted apply_generator(Gen g, const GaussianTwisted& f);

// A word acts right to left: {T, X, T} applied to f is T(X(T(f))).
struct OpTerm {
  RatQT scalar;
  std::vector<Gen> word;
};
using OpExpr = std::vector<OpTerm>;

LaurentPoly apply_expr(const OpExpr& e, const LaurentPoly& f);

struct Relation {
  std::string name;
  OpExpr lhs;
  OpExpr rhs;
};

// Defining relations of the A1 double affine Hecke algebra, together with
// the inverse pairs so that images of inverses are checked as well.
std::vector<Relation> daha_relations();

// An algebra map given on generators; missing generators are fixed.
struct GeneratorImages {
  std::vector<std::pair<Gen, OpExpr>> images;
  OpExpr image_of(Gen g) const;
  OpExpr substitute(const OpExpr& e) const;
};

GeneratorImages tau_plus_images();
GeneratorImages tau_plus_inverse_images();
GeneratorImages fourier_images();

CheckReport check_daha_relations(int deg);
CheckReport check_tau_plus_gaussian(int deg);
CheckReport check_fourier_automorphism(int deg);

}  // namespace daha1
