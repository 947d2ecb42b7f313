// Serial reference kernels against the OpenMP kernels.
//
//   qpr_bench --benchmark_filter=Subrep

#include <benchmark/benchmark.h>
#include <omp.h>

#include "qpr/oracle.hpp"
#include "qpr/relations.hpp"
#include "test_support.hpp"

using namespace qpr;

namespace {

const QuiverFile& elliptic() {
  static const QuiverFile file = testing::example3();
  return file;
}

const QuiverFile& del_pezzo() {
  static const QuiverFile file = testing::example1();
  return file;
}

const std::vector<RelationPolynomial>& relations_of(const QuiverFile& file) {
  static std::map<std::string, std::vector<RelationPolynomial>> cache;
  auto it = cache.find(file.name);
  if (it == cache.end()) it = cache.emplace(file.name, polynomials_of(all_relations(file.rep, file.e, 1, true))).first;
  return it->second;
}

const QuiverFile& pick(std::int64_t which) { return which == 0 ? del_pezzo() : elliptic(); }

void SubrepReference(benchmark::State& state) {
  const auto& file = pick(state.range(0));
  const auto p = static_cast<std::uint32_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(reference::subrep_points(file.rep, file.e, p));
  state.SetLabel(file.name);
}

void SubrepParallel(benchmark::State& state) {
  const auto& file = pick(state.range(0));
  const auto p = static_cast<std::uint32_t>(state.range(1));
  const int threads = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(subrep_points(file.rep, file.e, p, {}, threads));
  state.SetLabel(file.name);
}

void VarietyReference(benchmark::State& state) {
  const auto& file = pick(state.range(0));
  const auto p = static_cast<std::uint32_t>(state.range(1));
  const auto& rels = relations_of(file);
  for (auto _ : state) benchmark::DoNotOptimize(reference::variety_points(rels, file.rep, file.e, p));
  state.SetLabel(file.name);
}

void VarietyParallel(benchmark::State& state) {
  const auto& file = pick(state.range(0));
  const auto p = static_cast<std::uint32_t>(state.range(1));
  const int threads = static_cast<int>(state.range(2));
  const auto& rels = relations_of(file);
  for (auto _ : state) benchmark::DoNotOptimize(variety_points(rels, file.rep, file.e, p, {}, threads));
  state.SetLabel(file.name);
}

void CountParallel(benchmark::State& state) {
  const auto& file = elliptic();
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_subrepresentations(file.rep, file.e, p, {}, threads));
}

void Relations(benchmark::State& state) {
  const auto& file = elliptic();
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(all_relations(file.rep, file.e, 1, true, threads));
}

void thread_args(benchmark::internal::Benchmark* b, std::vector<std::int64_t> prefix) {
  const int max_threads = omp_get_max_threads();
  for (int t = 1; t <= max_threads; t *= 2) {
    auto args = prefix;
    args.push_back(t);
    b->Args(args);
  }
  if ((max_threads & (max_threads - 1)) != 0) {
    prefix.push_back(max_threads);
    b->Args(prefix);
  }
}

}  // namespace

BENCHMARK(SubrepReference)->Args({0, 5})->Args({1, 7})->Unit(benchmark::kMillisecond);
BENCHMARK(SubrepParallel)->Apply([](auto* b) {
  thread_args(b, {0, 5});
  thread_args(b, {1, 7});
})->Unit(benchmark::kMillisecond);
BENCHMARK(VarietyReference)->Args({0, 5})->Args({1, 7})->Unit(benchmark::kMillisecond);
BENCHMARK(VarietyParallel)->Apply([](auto* b) {
  thread_args(b, {0, 5});
  thread_args(b, {1, 7});
})->Unit(benchmark::kMillisecond);
BENCHMARK(CountParallel)->Apply([](auto* b) { thread_args(b, {13}); })->Unit(benchmark::kMillisecond);
BENCHMARK(Relations)->Apply([](auto* b) { thread_args(b, {}); })->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
