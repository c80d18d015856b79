#pragma once

#include <cstddef>
#include <functional>

#include "daha1/params.hpp"

namespace daha1 {

enum class Exec { serial, parallel };

struct QuadOptions {
  double tol = 1e-12;
  std::size_t min_nodes = 64;
  std::size_t max_nodes = std::size_t{1} << 20;
  Exec exec = Exec::parallel;
};

struct QuadResult {
  cplx mean;
  std::size_t nodes;
  double last_change;
};

using PeriodicIntegrand = std::function<cplx(double)>;

// Mean of a periodic integrand over [y0, y0 + length) by the trapezoid rule,
// doubling the node count until successive means differ by less than
// tol * max(1, |mean|). Node values may be computed by OpenMP threads but are
// always summed in index order, so both execution modes agree bit for bit.
// Throws NoConvergence past max_nodes.
QuadResult periodic_mean(const PeriodicIntegrand& f, double y0, double length, const QuadOptions& opt);

// Trapezoid sum at a fixed node count; the building block of periodic_mean.
cplx trapezoid_nodes_sum(const PeriodicIntegrand& f, double y0, double step, std::size_t first, std::size_t stride,
                         std::size_t count, Exec exec);

}  // namespace daha1
