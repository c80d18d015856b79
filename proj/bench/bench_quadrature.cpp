#include <benchmark/benchmark.h>

#include "daha1/continuation.hpp"
#include "daha1/qpairing.hpp"
#include "daha1/quadrature.hpp"

using namespace daha1;

namespace {

Exec mode(const benchmark::State& st) { return st.range(0) ? Exec::parallel : Exec::serial; }

// Fixed-size trapezoid sum of a mu-weighted integrand.
void BM_trapezoid_nodes(benchmark::State& st) {
  ParamPoint pt = ParamPoint::from_q(0.35, 0.8);
  auto f = [&](double y) { return mu_numeric(cplx(0.1, y), pt); };
  const std::size_t n = static_cast<std::size_t>(st.range(1));
  for (auto _ : st)
    benchmark::DoNotOptimize(trapezoid_nodes_sum(f, 0.0, pt.period() / n, 0, 1, n, mode(st)));
  st.SetItemsProcessed(st.iterations() * n);
}

// Contour pairing over several periods, to convergence.
void BM_contour_integral(benchmark::State& st) {
  ParamPoint pt = ParamPoint::from_q(0.35, -1.3);
  NumLaurent F = to_numeric(LaurentPoly::monomial(4) + LaurentPoly::monomial(-2), pt);
  PairingContext ctx{pt, 0.0, false, static_cast<double>(st.range(1)), mode(st)};
  for (auto _ : st) benchmark::DoNotOptimize(contour_integral(F, ctx));
}

void BM_gaussian_pairing(benchmark::State& st) {
  ParamPoint pt = ParamPoint::from_q(0.35, -0.3);
  NumLaurent F = pairing_integrand(LaurentPoly::monomial(2), LaurentPoly::monomial(2), pt);
  for (auto _ : st) benchmark::DoNotOptimize(gaussian_pairing(F, pt, 0.25, mode(st)));
}

}  // namespace

BENCHMARK(BM_trapezoid_nodes)->ArgsProduct({{0, 1}, {1 << 12, 1 << 16}})->UseRealTime();
BENCHMARK(BM_contour_integral)->ArgsProduct({{0, 1}, {1, 8}})->UseRealTime();
BENCHMARK(BM_gaussian_pairing)->Arg(0)->Arg(1)->UseRealTime();

BENCHMARK_MAIN();
