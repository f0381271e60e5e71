#include <benchmark/benchmark.h>

#include <cstdlib>
#include <string>
#include <vector>

#include "sublab/catalog.hpp"
#include "sublab/homotopy.hpp"
#include "sublab/isotropy.hpp"
#include "sublab/lie.hpp"
#include "sublab/linalg.hpp"
#include "sublab/metric.hpp"

namespace {

using namespace sublab;

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> cat =
      load_catalog(std::string(SUBLAB_BENCH_DATA_DIR) + "/onishchik.catalog");
  return cat;
}

/// Deterministic rank-deficient rational matrix.
RationalMatrix sample_matrix(std::size_t rows, std::size_t cols) {
  RationalMatrix m(rows, cols);
  unsigned long long state = 88172645463325252ULL;
  auto next = [&]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return static_cast<long>(state % 19) - 9;
  };
  for (std::size_t i = 0; i + 1 < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = next();
  for (std::size_t j = 0; j < cols; ++j)
    m.at(rows - 1, j) = m.at(0, j) + m.at(1, j);
  return m;
}

void bm_kernel(benchmark::State& state) {
  RationalMatrix m =
      sample_matrix(static_cast<std::size_t>(state.range(0)),
                    static_cast<std::size_t>(state.range(0)) + 20);
  for (auto _ : state) {
    auto k = kernel(m);
    benchmark::DoNotOptimize(k);
  }
}
BENCHMARK(bm_kernel)->Arg(20)->Arg(40);

void bm_cyclic_closure(benchmark::State& state) {
  ChainScenario sc =
      build_scenario(catalog()[5], static_cast<std::size_t>(state.range(0)));
  DecomposeOptions opt;
  opt.float_check = false;
  for (auto _ : state) {
    Decomposition dec = irreducible_decomposition(sc.h_act, sc.m_total, opt);
    benchmark::DoNotOptimize(dec);
  }
}
BENCHMARK(bm_cyclic_closure)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void bm_commutant(benchmark::State& state) {
  ChainScenario sc = build_scenario(catalog()[14], 3);
  for (auto _ : state) {
    auto ops = commutant(sc.h_act, sc.m_total);
    benchmark::DoNotOptimize(ops);
  }
}
BENCHMARK(bm_commutant)->Unit(benchmark::kMillisecond);

void bm_induced_metric(benchmark::State& state) {
  ChainScenario sc = build_scenario(catalog()[17], 3);
  for (auto _ : state) {
    InducedMetric m = induced_metric(so_dim(sc.ambient), sc.k1.coords());
    RationalMatrix gram = metric_gram(m, sc.m_total);
    benchmark::DoNotOptimize(gram);
  }
}
BENCHMARK(bm_induced_metric)->Unit(benchmark::kMillisecond);

void bm_obstruction_sweep(benchmark::State& state) {
  for (auto _ : state) {
    std::size_t certificates = 0;
    for (std::size_t n = 3; n <= 200; ++n) {
      ObstructionResult r = obstruct_quotient(
          SpaceDescriptor::group("so", 4 * n),
          SpaceDescriptor::stiefel(3, 4 * n - 1));
      if (r.verdict == "certificate") ++certificates;
    }
    benchmark::DoNotOptimize(certificates);
  }
}
BENCHMARK(bm_obstruction_sweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
