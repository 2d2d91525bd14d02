#include <benchmark/benchmark.h>

#include <string>

#include "dyer/growth.hpp"
#include "dyer/oracle.hpp"

namespace {

using namespace dyer;

// Cycle of n vertices alternating order 2 and infinity, label-2 edges, plus
// a braid chord between two involutions when n >= 4.
DyerGraph cycle(std::size_t n) {
  RawGraph raw;
  for (std::size_t i = 0; i < n; ++i) {
    raw.vertices.push_back({"v" + std::to_string(i), i % 2 == 0 ? std::optional<long long>(2) : std::nullopt});
  }
  for (std::size_t i = 0; i < n; ++i) {
    raw.edges.push_back({"v" + std::to_string(i), "v" + std::to_string((i + 1) % n), 2});
  }
  if (n >= 4) raw.edges.push_back({"v0", "v2", 3});
  return validate(raw);
}

void BM_SubsetRecursion(benchmark::State& state) {
  const DyerGraph g = cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(subset_recursion_growth(g));
}
BENCHMARK(BM_SubsetRecursion)->DenseRange(4, 10, 2);

void BM_AmalgamRecursion(benchmark::State& state) {
  const DyerGraph g = cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(amalgam_growth(g));
}
BENCHMARK(BM_AmalgamRecursion)->DenseRange(4, 12, 2);

void BM_Taylor(benchmark::State& state) {
  const RationalFunction f = amalgam_growth(cycle(10));
  for (auto _ : state) benchmark::DoNotOptimize(f.taylor_coefficients(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Taylor)->Range(16, 1024);

void BM_Census(benchmark::State& state) {
  RawGraph raw;
  raw.vertices = {{"a", std::nullopt}, {"b", std::nullopt}, {"c", 3}};
  raw.edges = {{"a", "b", 2}};
  const OraclePtr model = std::get<OraclePtr>(build_oracle(validate(raw)));
  for (auto _ : state) benchmark::DoNotOptimize(bfs_census(*model, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Census)->DenseRange(4, 8, 2);

}  // namespace

BENCHMARK_MAIN();
