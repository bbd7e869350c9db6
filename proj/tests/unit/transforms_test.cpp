#include "ccomb/transforms.hpp"

#include "ccomb/errors.hpp"
#include "ccomb/fixtures.hpp"
#include "ccomb/graphs.hpp"
#include "ccomb/random.hpp"

#include "doctest.h"

#include <sstream>
#include <vector>

using namespace ccomb;

namespace {

MomentSeries moments(std::initializer_list<int> v) { return MomentSeries(std::vector<Rational>(v.begin(), v.end())); }

PowerSeries series(std::initializer_list<Rational> v) { return PowerSeries(std::vector<Rational>(v)); }

EtaSeries eta(std::initializer_list<Rational> v) { return EtaSeries(OriginSeries::from_coefficients(std::vector<Rational>(v))); }

const Convolution kAll[] = {Convolution::monotone, Convolution::boolean, Convolution::orthogonal,
                            Convolution::c_monotone};

}  // namespace

TEST_CASE("power series arithmetic") {
  const PowerSeries a = series({1, 2, 3});
  const PowerSeries b = series({1, -1, 0});
  CHECK(a * b == series({1, 1, 1}));
  CHECK(reciprocal(series({1, -1, 0, 0})) == series({1, 1, 1, 1}));
  CHECK(compose(series({0, 1, 1}), series({0, 1, 0})) == series({0, 1, 1}));
  CHECK(divide_by_x(series({0, 2, 3})) == series({2, 3}));
  CHECK_THROWS_AS(reciprocal(series({0, 1})), SeriesError);
  CHECK_THROWS_AS(compose(a, series({1, 1, 0})), SeriesError);
  CHECK_THROWS_AS(divide_by_x(a), SeriesError);
}

TEST_CASE("moment series validation") {
  CHECK_THROWS_AS(MomentSeries({2, 0}), SeriesError);
  CHECK_THROWS_AS(MomentSeries({1}), SeriesError);
  CHECK(MomentSeries::delta_one(3) == moments({1, 1, 1, 1}));
}

TEST_CASE("F-transform of the point mass at zero is z") {
  CHECK(moments_to_F(MomentSeries::delta_zero(6)) == FSeries::identity(6));
}

TEST_CASE("F-transform of the edge graph is z - 1/z") {
  const auto m = moments({1, 0, 1, 0, 1});
  const FSeries f = moments_to_F(m);
  CHECK(f.reduced() == series({1, 0, -1, 0, 0}));
  CHECK(f.coefficient(0) == 0);
  CHECK(f.coefficient(1) == -1);
  CHECK(f.coefficient(3) == 0);
  CHECK(F_to_moments(f) == m);
  std::ostringstream os;
  os << f;
  CHECK_FALSE(os.str().empty());
}

TEST_CASE("F round trip on random moments") {
  Rng rng(2);
  for (int i = 0; i < 20; ++i) {
    const auto m = random_moments(rng, 12);
    CHECK(F_to_moments(moments_to_F(m)) == m);
  }
}

TEST_CASE("composition of F-transforms") {
  const FSeries edge = moments_to_F(moments({1, 0, 1, 0, 1, 0, 1}));
  const FSeries id = FSeries::identity(6);
  CHECK(compose_F(edge, id) == edge);
  CHECK(compose_F(id, edge) == edge);
  const auto m = F_to_moments(compose_F(edge, edge));
  CHECK(m.truncated(4) == moments({1, 0, 2, 0, 5}));

  Rng rng(4);
  for (int i = 0; i < 10; ++i) {
    const auto a = moments_to_F(random_moments(rng, 10));
    const auto b = moments_to_F(random_moments(rng, 10));
    const auto c = moments_to_F(random_moments(rng, 10));
    CHECK(compose_F(compose_F(a, b), c) == compose_F(a, compose_F(b, c)));
  }
}

TEST_CASE("additive convolutions") {
  const auto edge = moments({1, 0, 1, 0, 1});
  CHECK(additive_convolve(Convolution::monotone, edge, edge) == moments({1, 0, 2, 0, 5}));
  // Two edges glued at the root: the 3-path from its center.
  const auto star = root_moments(Graph::path(3, 1), 4, 1);
  CHECK(additive_convolve(Convolution::boolean, edge, edge) == star);
  const auto orth = root_moments(Graph::path(3, 0), 4, 0);
  CHECK(additive_convolve(Convolution::orthogonal, edge, edge) == orth);
  CHECK_THROWS_AS(additive_convolve(Convolution::c_monotone, edge, edge), SeriesError);

  Rng rng(6);
  const auto delta0 = MomentSeries::delta_zero(8);
  for (int i = 0; i < 10; ++i) {
    const auto mu1 = random_moments(rng, 8);
    const auto mu2 = random_moments(rng, 8);
    for (auto kind : kAll) CHECK(additive_convolve(kind, mu1, delta0, delta0) == mu1);
    CHECK(additive_convolve(Convolution::c_monotone, mu1, mu2, mu2) == additive_convolve(Convolution::monotone, mu1, mu2));
  }
}

TEST_CASE("c-monotone additive convolution on the first fixture pair") {
  const Graph g1 = fixtures::fig1_g1();
  const Graph g2 = fixtures::fig1_g2();
  const auto m = additive_convolve(Convolution::c_monotone, root_moments(g1, 12, RootSelector::e),
                                   root_moments(g2, 12, RootSelector::e), root_moments(g2, 12, RootSelector::f));
  const std::vector<Rational> expected{1, 0, 2, 0, 10, 0, 55, 0, 321, 0, 1936, 0, 11876};
  CHECK(std::vector<Rational>(m.values().begin(), m.values().end()) == expected);
}

TEST_CASE("psi and eta transforms") {
  CHECK(eta_from_psi(PsiSeries(OriginSeries::from_coefficients({0, 0, 0}))).is_zero());
  CHECK(eta_from_moments(MomentSeries::delta_one(6)) == EtaSeries::identity(6));
  Rng rng(8);
  for (int i = 0; i < 10; ++i) {
    const auto m = random_moments(rng, 12);
    const auto p = psi_from_moments(m);
    CHECK(psi_from_eta(eta_from_psi(p)) == p);
    CHECK(moments_from_psi(p) == m);
  }
}

TEST_CASE("multiplicative convolutions") {
  const auto h1 = eta({2, ratio(1, 2), -1, 3});
  const auto h2 = eta({1, -2, ratio(1, 3), 0});
  const auto id = EtaSeries::identity(4);
  CHECK(multiplicative_convolve(Convolution::monotone, h1, id) == h1);
  CHECK(multiplicative_convolve(Convolution::monotone, id, h1) == h1);
  CHECK(multiplicative_convolve(Convolution::boolean, h1, h2) == multiplicative_convolve(Convolution::boolean, h2, h1));
  CHECK(multiplicative_convolve(Convolution::c_monotone, h1, id, h2) ==
        multiplicative_convolve(Convolution::orthogonal, h1, h2));
  CHECK(multiplicative_convolve(Convolution::c_monotone, h1, h2, h2) ==
        multiplicative_convolve(Convolution::monotone, h1, h2));
  CHECK(multiplicative_convolve(Convolution::c_monotone, h1, h2, h2).coefficient(1) == h1.coefficient(1) * h2.coefficient(1));
  CHECK_THROWS_AS(multiplicative_convolve(Convolution::c_monotone, h1, h2), SeriesError);
}

TEST_CASE("vanishing divisors") {
  const auto h = eta({1, 2, 3});
  const auto zero = eta({0, 0, 0});
  CHECK_THROWS_AS(multiplicative_convolve(Convolution::orthogonal, h, zero), DivisorVanishes);
  CHECK_THROWS_AS(multiplicative_convolve(Convolution::c_monotone, h, h, zero), DivisorVanishes);
  // A divisor with vanishing first coefficient but nonzero tail is fine.
  const auto late = eta({0, 1, 1});
  CHECK_NOTHROW(multiplicative_convolve(Convolution::orthogonal, h, late));
}

TEST_CASE("coefficient sums against the series engine") {
  Rng rng(10);
  for (int i = 0; i < 10; ++i) {
    const auto mu1 = random_eta(rng, 8);
    const auto mu2 = random_eta(rng, 8);
    const auto nu2 = random_eta(rng, 8);
    for (auto kind : kAll) {
      const auto h = multiplicative_convolve(kind, mu1, mu2, nu2);
      for (unsigned n = 1; n <= 8; ++n) CHECK(coefficient_formula(kind, n, mu1, mu2, nu2) == h.coefficient(n));
    }
    CHECK(coefficient_formula(Convolution::c_monotone, 1, mu1, mu2, nu2) ==
          mu1.coefficient(1) * mu2.coefficient(1));
  }
}

TEST_CASE("the r >= 2 convention drops the r = 1 term") {
  const auto mu1 = eta({2, 3, 5, 7});
  const auto mu2 = eta({1, 4, -1, 2});
  const auto nu2 = eta({3, 1, 1, 1});
  for (auto kind : {Convolution::monotone, Convolution::c_monotone}) {
    CHECK(coefficient_formula(kind, 1, mu1, mu2, nu2, SumConvention::from_r2) == mu1.coefficient(1));
    for (unsigned n = 2; n <= 4; ++n) {
      const Rational full = coefficient_formula(kind, n, mu1, mu2, nu2);
      const Rational printed = coefficient_formula(kind, n, mu1, mu2, nu2, SumConvention::from_r2);
      CHECK(full - printed == mu1.coefficient(1) * mu2.coefficient(n));
    }
  }
}

TEST_CASE("CSV output") {
  std::ostringstream os;
  const std::vector<Rational> v{1, ratio(-1, 3), 2};
  write_coefficient_csv(os, v, 1);
  CHECK(os.str() == "n,exact,decimal\n1,-1/3,-0.333333333333\n2,2,2\n");
  CHECK(to_decimal(ratio(1, 8)) == "0.125");
}

TEST_CASE("moment tables") {
  CHECK(parse_moment_table("n,exact,decimal\n0,1,1\n1,-1/2,-0.5\n2,3,3\n") ==
        MomentSeries({1, ratio(-1, 2), 3}));
  CHECK(parse_moment_table("1\n0\n1\n") == moments({1, 0, 1}));
  CHECK_THROWS_AS(parse_moment_table("0,1\n2,1\n"), ParseError);
  CHECK_THROWS_AS(parse_moment_table("1\nx\n"), ParseError);
  CHECK_THROWS_AS(parse_moment_table("2\n1\n"), SeriesError);
}
