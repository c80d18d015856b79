#include "daha1/quadrature.hpp"

#include <omp.h>

#include <vector>

#include "daha1/errors.hpp"

namespace daha1 {

cplx trapezoid_nodes_sum(const PeriodicIntegrand& f, double y0, double step, std::size_t first, std::size_t stride,
                         std::size_t count, Exec exec) {
  std::vector<cplx> vals(count);
  const long n = static_cast<long>(count);
  if (exec == Exec::parallel && !omp_in_parallel()) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) vals[i] = f(y0 + step * static_cast<double>(first + stride * i));
  } else {
    for (long i = 0; i < n; ++i) vals[i] = f(y0 + step * static_cast<double>(first + stride * i));
  }
  cplx s = 0.0;
  for (const cplx& x : vals) s += x;
  return s;
}

QuadResult periodic_mean(const PeriodicIntegrand& f, double y0, double length, const QuadOptions& opt) {
  std::size_t n = opt.min_nodes;
  cplx sum = trapezoid_nodes_sum(f, y0, length / n, 0, 1, n, opt.exec);
  cplx mean = sum / static_cast<double>(n);
  for (;;) {
    if (2 * n > opt.max_nodes)
      throw NoConvergence("trapezoid rule did not settle within " + std::to_string(opt.max_nodes) + " nodes");
    // New nodes are the midpoints, odd indices on the doubled grid.
    cplx mid = trapezoid_nodes_sum(f, y0, length / (2 * n), 1, 2, n, opt.exec);
    sum += mid;
    n *= 2;
    cplx next = sum / static_cast<double>(n);
    double change = std::abs(next - mean);
    mean = next;
    if (change < opt.tol * std::max(1.0, std::abs(mean))) return {mean, n, change};
  }
}

}  // namespace daha1
