#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "daha1/daha_rep.hpp"

namespace daha1 {

// Position of X^m in the order 1 < X < X^-1 < X^2 < X^-2 < ...
inline int order_rank(int m) { return m > 0 ? 2 * m - 1 : -2 * m; }
inline int order_label(int rank) { return rank % 2 ? (rank + 1) / 2 : -rank / 2; }
// X^m is lower than X^n.
inline bool order_lower(int m, int n) { return order_rank(m) < order_rank(n); }

// n# = n/2 + sign(n) k/2 with sign(n) = +1 for n > 0 and -1 for n <= 0.
struct SpectralExponent {
  int n;
  int k_sign() const { return n > 0 ? 1 : -1; }
  cplx value(const ParamPoint& pt) const { return 0.5 * n + 0.5 * k_sign() * pt.k(); }
  // q^{-n#} as u^{-2n} v^{-k_sign}
  template <class D>
  typename D::Coeff eigenvalue(const D& dom) const {
    return dom.u_pow(-2 * n) * dom.v_pow(-k_sign());
  }
};

struct EPoly {
  int n = 0;
  LaurentPoly poly;
  SpectralExponent sharp{0};
  RatQT eigenvalue;
};

// Monic Y-eigenvector with leading term X^n, by triangular solve in the
// monomial order. Works over any coefficient domain.
template <class D>
Laurent<typename D::Coeff> solve_epoly(const D& dom, int n) {
  using C = typename D::Coeff;
  using L = Laurent<C>;
  const int R = order_rank(n);
  std::vector<L> images(R + 1);
  for (int r = 0; r <= R; ++r) images[r] = apply_generator(dom, Gen::Y, L::monomial(order_label(r)));
  const C lam_n = SpectralExponent{n}.eigenvalue(dom);
  std::vector<C> c(R + 1, C(0));
  c[R] = C(1);
  for (int r = R - 1; r >= 0; --r) {
    int m = order_label(r);
    C s(0);
    for (int r2 = r + 1; r2 <= R; ++r2)
      if (!coeff_is_zero(c[r2])) s += c[r2] * images[r2].coeff(m);
    C gap = SpectralExponent{m}.eigenvalue(dom) - lam_n;
    if (coeff_is_zero(gap)) throw SingularSystem("eigenvalues of X^" + std::to_string(m) + " and X^" + std::to_string(n) + " coincide");
    c[r] = -s / gap;
  }
  L e;
  for (int r = 0; r <= R; ++r) e.add_term(order_label(r), c[r]);
  return e;
}

// Symmetrizer (1 + t^{1/2} T)/(1 + t) applied to f.
template <class D>
Laurent<typename D::Coeff> symmetrize(const D& dom, const Laurent<typename D::Coeff>& f) {
  auto v = dom.v_pow(1);
  using C = typename D::Coeff;
  return (f + apply_generator(dom, Gen::T, f).scaled(v)).scaled(C(1) / (C(1) + v * v));
}

template <class D>
Laurent<typename D::Coeff> solve_ppoly(const D& dom, int n) {
  using C = typename D::Coeff;
  auto s = symmetrize(dom, solve_epoly(dom, n));
  return s.scaled(C(1) / s.coeff(n));
}

// Exact E_n, memoized; safe to call from several threads.
const EPoly& epoly(int n);
const LaurentPoly& ppoly(int n);

enum class RhoSign { minus, plus };  // X -> t^{-1/2} or X -> t^{1/2}
RatQT eval_at_trho(const LaurentPoly& f, RhoSign sign);

}  // namespace daha1
