#pragma once

#include <vector>

#include "daha1/qpairing.hpp"
#include "daha1/report.hpp"

namespace daha1 {

inline constexpr double kWallGuard = 1e-3;

// Throws OnWall when Re k is within the guard of 0, -1, -2, ...
void require_off_wall(const ParamPoint& pt);

struct ResidualData {
  cplx k;
  int m = 0;  // floor(Re(-k))
  std::vector<ResidualPoint> points;  // -k/2, then -(k+j)/2, (k+j)/2 for j = 1..m
  std::vector<cplx> values;
  std::vector<cplx> ratios;          // mu_bullet(point) / mu_bullet(-k/2), closed form
  std::vector<cplx> weights;         // A(point) mu_bullet(-k/2) ratio
  std::vector<cplx> weights_direct;  // A(point) mu_bullet(point), direct product
  double max_weight_gap = 0.0;       // relative disagreement of the two weight columns
  bool weights_finite = true;        // false at the poles of G
};

// Requires Re k < 0 off the walls.
ResidualData residual_points(const ParamPoint& pt);

enum class ShapovalovBranch { automatic, quarter, residue };

// {f, g} normalized by {1, 1} = 1. The quarter branch integrates on Re x = 1/4
// (needs Re k > -1/2); the residue branch moves to Re x = 0 and adds the
// residual point terms (needs Re k < 0 and f T(g) in X^{+-2}). Automatic takes
// the quarter branch when Re k > -1/2.
cplx shapovalov_form(const LaurentPoly& f, const LaurentPoly& g, const ParamPoint& pt,
                     ShapovalovBranch branch = ShapovalovBranch::automatic, Exec exec = Exec::parallel);

// sqrt(pi a) times the mean of F theta mu on Re x = eps.
cplx gaussian_pairing(const NumLaurent& F, const ParamPoint& pt, double eps, Exec exec = Exec::parallel);

// (F mu)_CT against the mean over M periods plus residues for Re k < 0.
CheckReport verify_ct_identity_72(const LaurentPoly& F, const ParamPoint& pt, double M, double tol = 1e-8);

// The two pure residue expansions valid for Re k < -m: (F mu)_CT and the
// half-period mean. Returns the CT report, then the half-period report.
std::vector<CheckReport> verify_prop73(const LaurentPoly& F, const ParamPoint& pt, int m, double tol = 1e-8,
                                       double term_tol = 1e-14);

// Degeneracy of the form at k = -1/2 - m on the window {X^-2, 1, X^2, X^4}:
// the Gram report, then radical probes.
std::vector<CheckReport> radical_check(int m, double q);

// Smallest singular value of the Gram matrix of {X^{e_i}} under the form.
double gram_min_singular(const std::vector<int>& exponents, const ParamPoint& pt);

// Cubic extrapolation of shapovalov_form(f, g) to Re k = wall from one side,
// sampled at wall + side * delta.
cplx wall_limit(const LaurentPoly& f, const LaurentPoly& g, double q, double wall, int side,
                const std::vector<double>& deltas = {0.1, 0.05, 0.025, 0.0125});

}  // namespace daha1
