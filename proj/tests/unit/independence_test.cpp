#include "ccomb/independence.hpp"

#include "ccomb/errors.hpp"
#include "ccomb/random.hpp"

#include "doctest.h"

#include <map>
#include <string>
#include <vector>

using namespace ccomb;

namespace {

using Tables = std::map<std::vector<std::string>, Rational>;

// Explicit moment tables for two algebras with elements a, a', a'' and b, b'.
std::map<unsigned, StatePair<Rational>> table_states() {
  Tables phi1{{{}, 1}, {{"a"}, 2}, {{"a'"}, 3}, {{"a", "a'"}, 5}, {{"a'", "a"}, 7}};
  Tables phi2{{{}, 1}, {{"b"}, 11}, {{"b'"}, 13}};
  Tables psi2{{{}, 1}, {{"b"}, 17}, {{"b'"}, 19}};
  Tables psi1{{{}, 1}, {{"a"}, 23}, {{"a'"}, 29}, {{"a", "a'"}, 31}};
  return {{1, {table_functional(phi1), table_functional(psi1)}}, {2, {table_functional(phi2), table_functional(psi2)}}};
}

std::vector<std::string> names(std::initializer_list<const char*> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("word parsing") {
  const Word w = parse_word("1:a 2:b 1:a'");
  REQUIRE(w.size() == 3);
  CHECK(w[1] == Letter{2, "b"});
  CHECK(to_string(w) == "1:a 2:b 1:a'");
  CHECK_THROWS_AS(parse_word("1a"), WordError);
  CHECK_THROWS_AS(parse_word("x:a"), WordError);
  CHECK_THROWS_AS(parse_word("1:"), WordError);
}

TEST_CASE("adjacent letters of one algebra collapse") {
  const auto blocks = collapse(parse_word("1:a 1:a' 2:b 2:b' 1:a"));
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[0].names == names({"a", "a'"}));
  CHECK(blocks[1].names == names({"b", "b'"}));
}

TEST_CASE("pair independences on short words") {
  const auto s = table_states();
  CHECK(oracle_moment(PairIndependence::boolean, parse_word("1:a 2:b"), s) == 2 * 11);
  CHECK(oracle_moment(PairIndependence::monotone, parse_word("1:a 2:b 1:a'"), s) == 11 * 5);
  CHECK(oracle_moment(PairIndependence::orthogonal, parse_word("2:b 1:a 2:b'"), s) == 0);
  CHECK(oracle_moment(PairIndependence::tensor, parse_word("1:a 2:b 1:a'"), s) == 5 * 11);
  // a (b) a': psi2(b) (phi1(a a') - phi1(a) phi1(a')).
  CHECK(oracle_moment(PairIndependence::orthogonal, parse_word("1:a 2:b 1:a'"), s) == 17 * (5 - 2 * 3));
}

TEST_CASE("c-monotone oracle on short words") {
  const auto s = table_states();
  CHECK(oracle_cmonotone(parse_word("2:b"), s).phi == 11);
  CHECK(oracle_cmonotone(parse_word("2:b"), s).psi == 17);
  const Rational want = Rational(2 * 3 * 11) + Rational(5 * 17) - Rational(2 * 3 * 17);
  CHECK(oracle_cmonotone(parse_word("1:a 2:b 1:a'"), s).phi == want);
  CHECK(oracle_cmonotone(parse_word("1:a 2:b 1:a'"), s).psi == 17 * 31);
  CHECK_THROWS_AS(oracle_cmonotone(parse_word("1:z"), s), WordError);
}

TEST_CASE("symbolic expansion of a b a'") {
  const std::map<unsigned, StatePair<Polynomial>> s{{1, symbolic_states(1)}, {2, symbolic_states(2)}};
  const auto p = oracle_cmonotone(parse_word("1:a 2:b 1:a'"), s).phi;
  const auto a = Polynomial::atom("phi1(a)");
  const auto a1 = Polynomial::atom("phi1(a')");
  const auto aa1 = Polynomial::atom("phi1(aa')");
  const auto b = Polynomial::atom("phi2(b)");
  const auto qb = Polynomial::atom("psi2(b)");
  CHECK(p == a * a1 * b + aa1 * qb - a * a1 * qb);
  CHECK(to_string(p).find("psi2(b)") != std::string::npos);
}

TEST_CASE("psi = phi turns c-monotone into monotone") {
  Rng rng(1);
  const std::vector<std::string> n{"a"};
  const auto m1 = random_matrix_model(rng, 2, n);
  const auto m2 = random_matrix_model(rng, 3, n);
  std::map<unsigned, StatePair<Rational>> s{{1, states_of(m1)}, {2, states_of(m2)}};
  for (auto& [j, st] : s) st.psi = st.phi;
  const std::vector<Letter> letters{{1, "a"}, {2, "a"}};
  for (const auto& w : all_words(letters, 6))
    CHECK(oracle_cmonotone(w, s).phi == oracle_moment(PairIndependence::monotone, w, s));
}

TEST_CASE("matrix models") {
  MatrixModel m;
  m.dim = 2;
  m.elements.emplace("a", Matrix::from_rows({{1, 2}, {3, 4}}));
  m.xi = 0;
  const std::vector<std::string> aa{"a", "a"};
  CHECK(m.phi(aa) == 7);
  CHECK(m.phi({}) == 1);
  CHECK_THROWS_AS(m.psi(aa), IndexError);
  m.eta = 1;
  CHECK(m.psi(aa) == 22);
}

TEST_CASE("pair realizations restrict to the factor states") {
  Rng rng(2);
  const std::vector<std::string> n{"a"};
  const auto m1 = random_matrix_model(rng, 2, n);
  const auto m2 = random_matrix_model(rng, 2, n);
  const auto single1 = parse_word("1:a");
  const auto single2 = parse_word("2:a");
  const std::vector<std::string> a{"a"};
  for (auto kind : {PairIndependence::boolean, PairIndependence::monotone, PairIndependence::tensor}) {
    const auto f = realize_pair(kind, m1, m2);
    CHECK(f.phi(single1) == m1.phi(a));
    CHECK(f.phi(single2) == m2.phi(a));
  }
  const auto orth = realize_pair(PairIndependence::orthogonal, m1, m2);
  CHECK(orth.phi(parse_word("2:a 1:a 2:a")) == 0);

  const auto c = realize_cmonotone_pair(m1, m2);
  CHECK(c.phi(single1) == m1.phi(a));
  CHECK(c.phi(single2) == m2.phi(a));
  CHECK(c.psi(single2) == m2.psi(a));
}

TEST_CASE("realizations match the oracles on random models") {
  Rng rng(3);
  const std::vector<std::string> n{"a"};
  const std::vector<Letter> letters{{1, "a"}, {2, "a"}};
  for (int i = 0; i < 5; ++i) {
    const auto m1 = random_matrix_model(rng, 1 + i % 3, n);
    const auto m2 = random_matrix_model(rng, 1 + (i + 1) % 3, n);
    std::map<unsigned, StatePair<Rational>> s{{1, states_of(m1)}, {2, states_of(m2)}};
    const auto mono = realize_pair(PairIndependence::monotone, m1, m2);
    const auto c = realize_cmonotone_pair(m1, m2);
    const auto variant = realize_cmonotone_pair(m1, m2, CMonotoneForm::projected);
    for (const auto& w : all_words(letters, 5)) {
      CHECK(mono.phi(w) == oracle_moment(PairIndependence::monotone, w, s));
      const auto o = oracle_cmonotone(w, s);
      CHECK(c.phi(w) == o.phi);
      CHECK(c.psi(w) == o.psi);
      CHECK(variant.phi(w) == o.phi);
    }
  }
}

TEST_CASE("three-algebra family") {
  Rng rng(4);
  const std::vector<std::string> n{"a"};
  const std::vector<MatrixModel> models{random_matrix_model(rng, 2, n), random_matrix_model(rng, 1, n),
                                        random_matrix_model(rng, 2, n)};
  const auto f = realize_cmonotone_family(models);
  REQUIRE(f.separator);
  std::map<unsigned, StatePair<Rational>> s{{1, states_of(models[0])}, {2, states_of(models[1])}, {3, states_of(models[2])}};
  const std::vector<Letter> letters{{1, "a"}, {2, "a"}, {3, "a"}};
  for (const auto& w : all_words(letters, 4)) {
    const auto all = oracle_cmonotone_all_orders(w, s);
    REQUIRE(all);
    CHECK(f.phi(w) == *all);
    CHECK(f.psi(w) == oracle_cmonotone(w, s).psi);
  }
  const std::vector<MatrixModel> four(4, models[0]);
  CHECK_THROWS_AS(realize_cmonotone_family(four), CapExceeded);
}

TEST_CASE("word enumeration") {
  const std::vector<Letter> letters{{1, "a"}, {2, "a"}};
  const auto words = all_words(letters, 3);
  CHECK(words.size() == 2 + 4 + 8);
  CHECK(to_string(words.front()) == "1:a");
  std::size_t visited = 0;
  Rng rng(5);
  const std::vector<std::string> n{"a"};
  const auto f = realize_pair(PairIndependence::boolean, random_matrix_model(rng, 2, n), random_matrix_model(rng, 2, n));
  f.for_each_word(3, [&](const Word& w, const Rational& phi, const std::optional<Rational>&) {
    ++visited;
    CHECK(phi == f.phi(w));
  });
  CHECK(visited == words.size());
}
