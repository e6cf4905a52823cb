// Parallel kernels against their serial reference twins.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "lstat/arith.hpp"
#include "lstat/kernels.hpp"

using namespace lstat;

namespace {

const ClassicalLambda& lambda() {
  static const ClassicalLambda table = classical_lambda(sieve(2'000'000));
  return table;
}

std::vector<double> ordinates(std::size_t count) {
  // Zeros near height T are spaced about 2 pi / log(T / 2 pi) apart.
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> jitter(-0.3, 0.3);
  std::vector<double> out(count);
  double t = 14.0;
  for (auto& g : out) {
    t += 2 * M_PI / std::log(t / (2 * M_PI) + 2) * (1 + jitter(rng));
    g = t;
  }
  return out;
}

std::vector<std::uint32_t> primes_to(std::int64_t limit) {
  auto out = primes_up_to(limit);
  out.erase(out.begin(), out.begin() + 2);
  return out;
}

template <auto Fn>
void window(benchmark::State& state) {
  const auto& p = lambda().prefix;
  for (auto _ : state) benchmark::DoNotOptimize(Fn(p, 1'000'000, 500.0, 500.0));
  state.SetItemsProcessed(state.iterations() * 1'000'000);
}

template <auto Fn>
void mult_window(benchmark::State& state) {
  const auto& p = lambda().prefix;
  for (auto _ : state) benchmark::DoNotOptimize(Fn(p, 1'000'000, 0.01, 1.0));
  state.SetItemsProcessed(state.iterations() * 1'000'000);
}

template <auto Fn>
void shifted(benchmark::State& state) {
  const auto& p = lambda().values;
  std::vector<double> blocks(100);
  for (auto _ : state) {
    Fn(p, 6, 1'000'000, 10'000, blocks);
    benchmark::DoNotOptimize(blocks.data());
  }
}

template <auto Fn>
void pairs(benchmark::State& state) {
  const auto g = ordinates(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    std::int64_t excluded = 0;
    benchmark::DoNotOptimize(Fn(g, std::log(1000.0), 100.0, excluded));
  }
}

template <auto Fn>
void traces(benchmark::State& state) {
  const auto primes = primes_to(state.range(0));
  std::vector<short_model> models;
  for (const auto p : primes) models.push_back({static_cast<std::int64_t>(p) - 1, 7 % p});
  std::vector<std::int64_t> out(primes.size());
  for (auto _ : state) {
    Fn(primes, models, out);
    benchmark::DoNotOptimize(out.data());
  }
}

template <auto Fn>
void sparse_multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<int128> dense(n, 1), out(n);
  std::vector<sparse_term> sparse;
  for (std::int64_t k = 0; k * (3 * k - 1) / 2 < static_cast<std::int64_t>(n); ++k) {
    sparse.push_back({k * (3 * k - 1) / 2, k % 2 ? -1 : 1});
  }
  for (auto _ : state) {
    Fn(dense, sparse, out);
    benchmark::DoNotOptimize(out.data());
  }
}

}  // namespace

BENCHMARK(window<kernels::window_square_sum>)->Name("window/parallel");
BENCHMARK(window<reference::window_square_sum>)->Name("window/reference");
BENCHMARK(mult_window<kernels::multiplicative_window_square_sum>)->Name("mult_window/parallel");
BENCHMARK(mult_window<reference::multiplicative_window_square_sum>)->Name("mult_window/reference");
BENCHMARK(shifted<kernels::shifted_product_block_sums>)->Name("shifted/parallel");
BENCHMARK(shifted<reference::shifted_product_block_sums>)->Name("shifted/reference");
BENCHMARK(pairs<kernels::zero_pair_sum>)->Name("zero_pairs/parallel")->Arg(10'000);
BENCHMARK(pairs<reference::zero_pair_sum>)->Name("zero_pairs/reference")->Arg(10'000);
BENCHMARK(traces<kernels::elliptic_traces>)->Name("traces/parallel")->Arg(20'000);
BENCHMARK(traces<reference::elliptic_traces>)->Name("traces/reference")->Arg(20'000);
BENCHMARK(sparse_multiply<kernels::sparse_dense_multiply>)->Name("sparse/parallel")->Arg(1 << 18);
BENCHMARK(sparse_multiply<reference::sparse_dense_multiply>)->Name("sparse/reference")->Arg(1 << 18);

BENCHMARK_MAIN();
