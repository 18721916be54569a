#include <benchmark/benchmark.h>

#include "boolmeas/dynamics.hpp"
#include "boolmeas/kelley.hpp"
#include "boolmeas/measures.hpp"

namespace {

using namespace boolmeas;

KelleyInstance all_nonzero(unsigned k) {
  KelleyInstance inst{FiniteSetAlgebra::with_atoms(k), {}};
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << k) && inst.family.size() < kMaxKelleyFamily; ++bits) {
    inst.family.push_back({bits, k});
  }
  return inst;
}

void BM_KelleyLp(benchmark::State& state) {
  const auto inst = all_nonzero(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kelley_lp(inst).value);
}
BENCHMARK(BM_KelleyLp)->DenseRange(2, 6);

void BM_KelleyBruteForce(benchmark::State& state) {
  KelleyInstance inst{FiniteSetAlgebra::with_atoms(4), {}};
  for (const char* s : {"1100", "0110", "0011", "1001"}) inst.family.push_back(parse_bitstring(s));
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(intersection_number_bruteforce(inst, n).value);
}
BENCHMARK(BM_KelleyBruteForce)->Arg(4)->Arg(8)->Arg(12);

void BM_MixingTable(benchmark::State& state) {
  const auto a = ClopenSet::interval(make_rational(1, 3), make_rational(5, 7));
  const auto b = ClopenSet::interval(make_rational(1, 9), make_rational(1, 2));
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mixing_table(a, b, n));
}
BENCHMARK(BM_MixingTable)->Arg(12)->Arg(40)->Arg(62);

void BM_ShiftPreimage(benchmark::State& state) {
  const auto a = ClopenSet::interval(make_rational(1, 3), make_rational(5, 7));
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(shift_preimage(a, n));
}
BENCHMARK(BM_ShiftPreimage)->Arg(4)->Arg(8)->Arg(12);

void BM_EpsilonNet(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  const auto alg = FiniteSetAlgebra::with_atoms(k);
  const auto mu = Measure::uniform(alg);
  for (auto _ : state) benchmark::DoNotOptimize(epsilon_net_size(mu, alg, make_rational(1, 3)).size);
}
BENCHMARK(BM_EpsilonNet)->DenseRange(2, 8, 2);

}  // namespace

BENCHMARK_MAIN();
