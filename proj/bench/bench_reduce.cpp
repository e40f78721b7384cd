#include <benchmark/benchmark.h>

#include <random>

#include "euler/buchberger.hpp"
#include "euler/kernels.hpp"
#include "euler/ring.hpp"

using namespace euler;

namespace {

Polynomial random_poly(const PolyRing& P, std::mt19937_64& gen, unsigned degree, int terms) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::vector<Term> out;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    unsigned left = std::uniform_int_distribution<unsigned>(0, degree)(gen);
    for (std::size_t i = 0; i < P.nvars() && left > 0; ++i) {
      unsigned e = i + 1 == P.nvars() ? left : std::uniform_int_distribution<unsigned>(0, left)(gen);
      m.set(i, e);
      left -= e;
    }
    out.push_back({m, Coeff(coeff(gen))});
  }
  return P.from_terms(std::move(out));
}

struct Fixture {
  RingPtr ring = PresentedRing::make(CoefficientField::rationals(), {"x", "y", "z", "w"}, std::vector<std::string>{},
                                     OrderKind::DegRevLex);
  std::vector<Polynomial> basis, items;

  explicit Fixture(std::size_t batch) {
    std::mt19937_64 gen(17);
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_poly(ring->poly(), gen, 2, 4));
    basis = buchberger(ring->poly(), gens).basis;
    for (std::size_t i = 0; i < batch; ++i) items.push_back(random_poly(ring->poly(), gen, 6, 10));
  }
};

void BM_ReduceSerial(benchmark::State& state) {
  Fixture f(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reduce_batch_serial(f.ring->poly(), f.items, f.basis));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ReduceParallel(benchmark::State& state) {
  Fixture f(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reduce_batch(f.ring->poly(), f.items, f.basis));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_ReduceSerial)->Arg(16)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReduceParallel)->Arg(16)->Arg(128)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
