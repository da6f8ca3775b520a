// Serial reference vs OpenMP kernels on spectral-sized arrays.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hodge/kernels.hpp"

namespace k = hodge::kernels;
using k::cplx;

namespace {

struct Data {
  std::vector<cplx> a, b, out;
  std::vector<double> w, ra, rb, rout;
  std::vector<int> kv;
  std::vector<k::TensorEntry> tensor;

  explicit Data(std::size_t n, int ncomp = 3) {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    for (std::size_t i = 0; i < n; ++i) {
      a.emplace_back(g(rng), g(rng));
      b.emplace_back(g(rng), g(rng));
      w.push_back(1.0 + std::abs(g(rng)));
      kv.push_back(static_cast<int>(i % 64) - 32);
    }
    out.assign(n, 0.0);
    for (std::size_t i = 0; i < n * ncomp; ++i) {
      ra.push_back(g(rng));
      rb.push_back(g(rng));
    }
    rout.assign(n * ncomp, 0.0);
    // Convective-like tensor: every (i, j, c) with i == c or j == c.
    for (int i = 0; i < ncomp; ++i)
      for (int j = 0; j < ncomp; ++j)
        for (int c = 0; c < ncomp; ++c)
          if (i == c || j == c) tensor.push_back({i, j, c, 0.5});
  }
};

template <bool Par>
void BM_scale_modes(benchmark::State& st) {
  Data d(st.range(0));
  for (auto _ : st) {
    if constexpr (Par) k::parallel::scale_modes(d.a, d.w); else k::serial::scale_modes(d.a, d.w);
    benchmark::DoNotOptimize(d.a.data());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

template <bool Par>
void BM_add_derivative(benchmark::State& st) {
  Data d(st.range(0));
  for (auto _ : st) {
    if constexpr (Par) k::parallel::add_derivative(d.out, d.a, d.kv, 1.0, false);
    else k::serial::add_derivative(d.out, d.a, d.kv, 1.0, false);
    benchmark::DoNotOptimize(d.out.data());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

template <bool Par>
void BM_real_dot(benchmark::State& st) {
  Data d(st.range(0));
  for (auto _ : st)
    benchmark::DoNotOptimize(Par ? k::parallel::real_dot(d.a, d.b) : k::serial::real_dot(d.a, d.b));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

template <bool Par>
void BM_contract(benchmark::State& st) {
  const std::size_t n = st.range(0);
  Data d(n);
  for (auto _ : st) {
    if constexpr (Par) k::parallel::contract(d.tensor, d.ra, d.rb, d.rout, n);
    else k::serial::contract(d.tensor, d.ra, d.rb, d.rout, n);
    benchmark::DoNotOptimize(d.rout.data());
  }
  st.SetItemsProcessed(st.iterations() * n);
}

template <bool Par>
void BM_fibre_power_sum(benchmark::State& st) {
  const std::size_t n = st.range(0);
  Data d(n);
  for (auto _ : st)
    benchmark::DoNotOptimize(Par ? k::parallel::fibre_power_sum(d.ra, 3, n, 6.0)
                                 : k::serial::fibre_power_sum(d.ra, 3, n, 6.0));
  st.SetItemsProcessed(st.iterations() * n);
}

// 32^2, 32^3, 64^3 sample counts.
#define HODGE_SIZES ->Arg(1 << 10)->Arg(1 << 15)->Arg(1 << 18)

BENCHMARK(BM_scale_modes<false>) HODGE_SIZES;
BENCHMARK(BM_scale_modes<true>) HODGE_SIZES;
BENCHMARK(BM_add_derivative<false>) HODGE_SIZES;
BENCHMARK(BM_add_derivative<true>) HODGE_SIZES;
BENCHMARK(BM_real_dot<false>) HODGE_SIZES;
BENCHMARK(BM_real_dot<true>) HODGE_SIZES;
BENCHMARK(BM_contract<false>) HODGE_SIZES;
BENCHMARK(BM_contract<true>) HODGE_SIZES;
BENCHMARK(BM_fibre_power_sum<false>) HODGE_SIZES;
BENCHMARK(BM_fibre_power_sum<true>) HODGE_SIZES;

}  // namespace

int main(int argc, char** argv) {
  k::configure_threads();
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
}
