#include <benchmark/benchmark.h>

#include <map>
#include <string>
#include <vector>

#include "ccomb/exact_linalg.hpp"
#include "ccomb/fixtures.hpp"
#include "ccomb/graphs.hpp"
#include "ccomb/independence.hpp"
#include "ccomb/products.hpp"
#include "ccomb/random.hpp"
#include "ccomb/transforms.hpp"

using namespace ccomb;

namespace {

void BM_Kron(benchmark::State& state) {
  Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_rational_matrix(rng, n);
  const Matrix b = random_rational_matrix(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(kron(a, b));
}
BENCHMARK(BM_Kron)->Arg(2)->Arg(4)->Arg(6);

void BM_DecompositionMoments(benchmark::State& state) {
  const auto d = decompose_theorem41(fixtures::fig1_g1(), fixtures::fig1_g2());
  const SparseMatrix s(d.s1 + d.s2);
  const auto order = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(vector_state_moments(s, d.e_index(), order));
}
BENCHMARK(BM_DecompositionMoments)->Arg(12)->Arg(24);

void BM_WalkCount(benchmark::State& state) {
  const auto p = c_comb_product(fixtures::fig1_g1(), fixtures::fig1_g2());
  const auto length = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_closed_walks(p.graph, length, p.graph.root()));
}
BENCHMARK(BM_WalkCount)->Arg(8)->Arg(12)->Arg(16);

void BM_AdditiveCMonotone(benchmark::State& state) {
  Rng rng(2);
  const auto order = static_cast<unsigned>(state.range(0));
  const auto mu1 = random_moments(rng, order);
  const auto mu2 = random_moments(rng, order);
  const auto nu2 = random_moments(rng, order);
  for (auto _ : state) benchmark::DoNotOptimize(additive_convolve(Convolution::c_monotone, mu1, mu2, nu2));
}
BENCHMARK(BM_AdditiveCMonotone)->Arg(10)->Arg(20);

void BM_MultiplicativeCMonotone(benchmark::State& state) {
  Rng rng(3);
  const auto order = static_cast<unsigned>(state.range(0));
  const auto mu1 = random_eta(rng, order);
  const auto mu2 = random_eta(rng, order);
  const auto nu2 = random_eta(rng, order);
  for (auto _ : state) benchmark::DoNotOptimize(multiplicative_convolve(Convolution::c_monotone, mu1, mu2, nu2));
}
BENCHMARK(BM_MultiplicativeCMonotone)->Arg(10)->Arg(20);

void BM_CoefficientFormula(benchmark::State& state) {
  Rng rng(4);
  const auto n = static_cast<unsigned>(state.range(0));
  const auto mu1 = random_eta(rng, n);
  const auto mu2 = random_eta(rng, n);
  const auto nu2 = random_eta(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(coefficient_formula(Convolution::c_monotone, n, mu1, mu2, nu2));
}
BENCHMARK(BM_CoefficientFormula)->Arg(6)->Arg(10);

void BM_CMonotoneOracle(benchmark::State& state) {
  Rng rng(5);
  const std::vector<std::string> names{"a"};
  const auto m1 = random_matrix_model(rng, 3, names);
  const auto m2 = random_matrix_model(rng, 3, names);
  const std::map<unsigned, StatePair<Rational>> states{{1, states_of(m1)}, {2, states_of(m2)}};
  const std::vector<Letter> letters{{1, "a"}, {2, "a"}};
  const auto words = all_words(letters, static_cast<unsigned>(state.range(0)));
  for (auto _ : state)
    for (const auto& w : words) benchmark::DoNotOptimize(oracle_cmonotone(w, states));
}
BENCHMARK(BM_CMonotoneOracle)->Arg(6)->Arg(8);

void BM_CMonotoneRealization(benchmark::State& state) {
  Rng rng(6);
  const std::vector<std::string> names{"a"};
  const auto f = realize_cmonotone_pair(random_matrix_model(rng, 3, names), random_matrix_model(rng, 3, names));
  const auto max_len = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    std::size_t n = 0;
    f.for_each_word(max_len, [&](const Word&, const Rational&, const std::optional<Rational>&) { ++n; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_CMonotoneRealization)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
