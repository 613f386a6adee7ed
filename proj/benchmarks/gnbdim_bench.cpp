#include <benchmark/benchmark.h>

#include <random>
#include <sstream>

#include "gnbdim/balance.hpp"
#include "gnbdim/coverage.hpp"
#include "gnbdim/opencellid.hpp"
#include "gnbdim/traffic_density.hpp"

namespace {

using namespace gnbdim;

DensityGrid random_grid(std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> w(0.0, 100.0);
  DensityGrid g(GridSpec{0.0, 0.0, 1.0, n, n});
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) g.add(c, r, w(rng));
  return g;
}

void BM_Find5gda(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const DensityGrid g = random_grid(n);
  for (auto _ : state) benchmark::DoNotOptimize(find_5gda(g, 7, 7));
  state.SetComplexityN(state.range(0) * state.range(0));
}
BENCHMARK(BM_Find5gda)->RangeMultiplier(4)->Range(16, 1024)->Complexity(benchmark::oN);

std::string synthetic_csv(int rows) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> lon(-10.0, 30.0), lat(35.0, 60.0);
  std::ostringstream out;
  out << kOpenCellIdHeader << '\n';
  for (int i = 0; i < rows; ++i) {
    out << "LTE,262,1," << (i % 65535) << ',' << (i * 7 % (1 << 28)) << ",," << lon(rng) << ',' << lat(rng)
        << ",1000," << (i % 500) << ",1,1600000000,1700000000,-90\n";
  }
  return out.str();
}

void BM_ParseCsv(benchmark::State& state) {
  const std::string text = synthetic_csv(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(parse_csv(std::string_view(text)));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseCsv)->Arg(1000)->Arg(100000);

void BM_SolveRadius(benchmark::State& state) {
  const auto abg = PropagationModel::abg(35.3, 22.4, 2.1);
  for (auto _ : state) benchmark::DoNotOptimize(solve_radius(abg, 3500.0, 128.0));
}
BENCHMARK(BM_SolveRadius);

void BM_IterateBalance(benchmark::State& state) {
  BalanceProblem p;
  p.nr.bwps = {make_bwp(1, 100, "eMBB")};
  p.link.penetration_margin_db = 55.0;
  p.traffic.target_load = 0.95;
  p.rho_subs_per_km2 = 100.0;
  BalanceThresholds th;
  th.eps_load = 1e-9;
  for (auto _ : state) benchmark::DoNotOptimize(iterate_balance(p, th));
}
BENCHMARK(BM_IterateBalance);

}  // namespace

BENCHMARK_MAIN();
