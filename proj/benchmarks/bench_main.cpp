#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "famdim/abelian.hpp"
#include "famdim/certificate.hpp"
#include "famdim/lattice.hpp"

using namespace famdim;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                        int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  std::vector<std::vector<Int>> data(rows, std::vector<Int>(cols));
  for (auto& r : data) {
    for (auto& x : r) {
      x = entry(rng);
    }
  }
  return IntMatrix::from_rows(data, cols);
}

std::vector<IntMatrix> corpus(std::size_t n, int bound) {
  std::mt19937 rng(99u);
  std::vector<IntMatrix> out;
  for (int i = 0; i < 64; ++i) {
    out.push_back(random_matrix(rng, n, n, bound));
  }
  return out;
}

void bench_hnf(benchmark::State& state) {
  const auto mats = corpus(static_cast<std::size_t>(state.range(0)), 50);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hnf(mats[i++ % mats.size()]));
  }
}
BENCHMARK(bench_hnf)->Arg(3)->Arg(6)->Arg(10);

void bench_snf(benchmark::State& state) {
  const auto mats = corpus(static_cast<std::size_t>(state.range(0)), 20);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(snf(mats[i++ % mats.size()]));
  }
}
BENCHMARK(bench_snf)->Arg(3)->Arg(6);

void bench_intersect(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto left = corpus(n, 10);
  const auto right = corpus(n, 10);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        lattice_intersect(left[i % left.size()], right[i % right.size()]));
    ++i;
  }
}
BENCHMARK(bench_intersect)->Arg(3)->Arg(6);

void bench_saturate(benchmark::State& state) {
  const auto mats = corpus(static_cast<std::size_t>(state.range(0)), 30);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(saturate(mats[i++ % mats.size()]));
  }
}
BENCHMARK(bench_saturate)->Arg(4)->Arg(8);

void bench_certify(benchmark::State& state) {
  const AbelianGroup g(static_cast<std::size_t>(state.range(0)), {Int(2)});
  const std::size_t r = g.free_rank() - 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify(g, r));
  }
}
BENCHMARK(bench_certify)->Arg(4)->Arg(6);

void bench_enumerate(benchmark::State& state) {
  const AbelianGroup g(3, {});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        enumerate_maximal(g, 2, Int(state.range(0))));
  }
}
BENCHMARK(bench_enumerate)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
