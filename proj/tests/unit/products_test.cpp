#include "ccomb/products.hpp"

#include "ccomb/errors.hpp"
#include "ccomb/fixtures.hpp"
#include "ccomb/random.hpp"

#include "doctest.h"

#include <algorithm>
#include <vector>

using namespace ccomb;

namespace {

std::vector<Rational> seq(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

std::vector<Rational> moments_at(const Graph& g, unsigned order, Vertex at) {
  const auto m = root_moments(g, order, at);
  return {m.values().begin(), m.values().end()};
}

std::size_t degree(const Graph& g, Vertex x) {
  return static_cast<std::size_t>(std::count_if(g.edges().begin(), g.edges().end(),
                                                [&](const Edge& e) { return e.u == x || e.v == x; }));
}

Graph birooted_isolated() { return Graph(1, {}, 0, 0); }

const Graph fig1_g1 = fixtures::fig1_g1();
const Graph fig1_g2 = fixtures::fig1_g2();

}  // namespace

TEST_CASE("star product") {
  const Graph g2 = fig1_g2.with_root(0);
  CHECK(adjacency_matrix(star_product(Graph::isolated(), g2).graph) == adjacency_matrix(g2));

  const auto s = star_product(fixtures::edge(), fixtures::edge());
  CHECK(s.graph.vertex_count() == 3);
  CHECK(s.graph.edges().size() == 2);
  CHECK(degree(s.graph, s.graph.root()) == 2);

  const Graph path4 = Graph::path(4, 1);
  CHECK(star_product(path4, g2).graph.vertex_count() == 4 + 4 - 1);
}

TEST_CASE("comb product") {
  const Graph g1 = fig1_g1.with_root(0);
  const Graph g2 = fig1_g2.with_root(0);
  CHECK(adjacency_matrix(comb_product(g1, Graph::isolated()).graph) == adjacency_matrix(g1));
  CHECK(adjacency_matrix(comb_product(Graph::isolated(), g2).graph) == adjacency_matrix(g2));

  // Two edges: the 4-path rooted at an inner vertex.
  const auto c = comb_product(fixtures::edge(), fixtures::edge());
  CHECK(moments_at(c.graph, 4, c.graph.root()) == seq({1, 0, 2, 0, 5}));
  CHECK(moments_at(Graph::path(4, 1), 4, 1) == seq({1, 0, 2, 0, 5}));
  CHECK(c.graph.vertex_count() == 4);
}

TEST_CASE("orthogonal product") {
  const Graph g2 = fig1_g2.with_root(0);
  const auto iso = orthogonal_product(Graph::isolated(), g2);
  CHECK(iso.graph.vertex_count() == 1);
  CHECK(iso.graph.edges().empty());

  const auto o = orthogonal_product(fixtures::edge(), fixtures::edge());
  CHECK(o.graph.vertex_count() == 3);
  CHECK(degree(o.graph, o.graph.root()) == 1);
  CHECK(moments_at(o.graph, 6, o.graph.root()) == moments_at(Graph::path(3, 0), 6, 0));

  const Graph g1 = fig1_g1.with_root(0);
  CHECK(orthogonal_product(g1, g2).graph.vertex_count() == 2 * 4 + 1);
}

TEST_CASE("products color their factors") {
  const auto c = comb_product(fixtures::edge(), fixtures::edge());
  CHECK(c.graph.is_colored());
  CHECK(c.graph.edges().size() == 3);
  std::size_t ones = 0;
  for (const auto& e : c.graph.edges()) ones += e.color == Color::one ? 1 : 0;
  CHECK(ones == 1);
}

TEST_CASE("comb_at") {
  const auto p = comb_at(fig1_g1, fig1_g2);
  CHECK(p.graph.vertex_count() == 12);
  CHECK(p.vertex_labels[p.graph.root()] == Label{0, 1, 0});

  const auto iso = comb_at(Graph::isolated(), fig1_g2);
  CHECK(adjacency_matrix(iso.graph) == adjacency_matrix(fig1_g2));
  CHECK(iso.graph.root() == 0);

  const Graph g2 = fig1_g2.with_roots(0, 0);
  const auto collapsed = comb_at(fig1_g1, g2);
  const auto comb = comb_product(fig1_g1.with_root(0), fig1_g2.with_root(0));
  const auto map = map_by_labels(collapsed, comb, collapse_to_comb(0, 0));
  REQUIRE(map);
  CHECK(is_isomorphism(collapsed.graph, comb.graph, *map));
  CHECK_THROWS_AS(comb_at(fig1_g1, fig1_g2.with_root(0)), GraphError);
}

TEST_CASE("c-comb product") {
  const auto trivial = c_comb_product(birooted_isolated(), birooted_isolated());
  CHECK(trivial.graph.vertex_count() == 2);
  CHECK(trivial.graph.edges().empty());

  const auto p = c_comb_product(fig1_g1, fig1_g2);
  CHECK(p.graph.vertex_count() == 24);
  CHECK(essential_vertex_count(p) == 12);
  const auto comb = comb_product(fig1_g1.with_root(0), fig1_g2.with_root(1));
  CHECK(moments_at(p.graph, 10, *p.graph.second_root()) == moments_at(comb.graph, 10, comb.graph.root()));
  CHECK_THROWS_AS(c_comb_product(fig1_g1.with_root(0), fig1_g2), GraphError);
}

TEST_CASE("comb loop product") {
  const Graph g1 = fig1_g1.with_root(0);
  const Graph g2 = fig1_g2.with_root(0);
  const auto bare = comb_loop_product(g1, Graph::isolated());
  CHECK(bare.graph.loop_count(Color::one) == 0);
  CHECK(adjacency_matrix(bare.graph, Color::one) == adjacency_matrix(g1));

  const auto loop = comb_loop_product(g1, g2);
  CHECK(loop.graph.loop_count(Color::one) == 3 * (4 - 1));
  // Color one minus the plain comb part is the diagonal projection 1 (x) P_e2^perp.
  const auto d = decompose_comb(g1, g2);
  const Matrix diff = adjacency_matrix(loop.graph, Color::one) - d.restricted(d.s1);
  const Matrix expected = d.restricted(kron(Matrix::identity(3), complement_projection(4, 0)));
  CHECK(diff == expected);
}

TEST_CASE("c-comb loop product") {
  const auto trivial = c_comb_loop_product(birooted_isolated(), birooted_isolated());
  CHECK(trivial.graph.vertex_count() == 2);
  CHECK(trivial.graph.edges().empty());

  const Graph g1 = fixtures::fig2_g1();
  const Graph g2 = fixtures::fig2_g2();
  const auto p = c_comb_loop_product(g1, g2);
  const std::size_t n = essential_vertex_count(p);
  CHECK(n == 12);
  std::size_t loops = 0;
  for (const auto& e : p.graph.edges())
    if (e.is_loop() && e.color == Color::one && e.u < n) ++loops;
  CHECK(loops == 9 + 1);  // plus the copy of the loop at e1

  CHECK_THROWS_AS(c_comb_loop_product(g1, g2, LoopColor::two), GraphError);
  const auto one = c_comb_loop_product(fig1_g1, fig1_g2);
  const auto two = c_comb_loop_product(fig1_g1, fig1_g2, LoopColor::two);
  CHECK(adjacency_matrix(two.graph) == adjacency_matrix(one.graph));
  CHECK(two.graph.loop_count(Color::two) == one.graph.loop_count(Color::one) - 3 * 3);

  // With f2 = e2 and e1 = f1 the essential component is the comb loop product.
  const Graph h2 = g2.with_roots(0, 0);
  const auto collapsed = c_comb_loop_product(g1, h2);
  const auto comb = comb_loop_product(g1.with_root(0), h2.with_root(0));
  const std::size_t m = essential_vertex_count(collapsed);
  REQUIRE(m == comb.graph.vertex_count());
  Matrix essential(m, m);
  const Matrix a = adjacency_matrix(collapsed.graph, Color::one);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) essential(i, j) = a(i, j);
  CHECK(essential == adjacency_matrix(comb.graph, Color::one));
}

TEST_CASE("decompositions on trivial inputs are zero") {
  const auto d = decompose_theorem41(birooted_isolated(), birooted_isolated());
  CHECK(d.restricted(d.s1).is_zero());
  CHECK(d.restricted(d.s2).is_zero());
  const auto c = decompose_corollary42(birooted_isolated(), birooted_isolated());
  CHECK(c.restricted_sum().is_zero());
  CHECK(c.restricted_sum().rows() == 2);
}

TEST_CASE("decompositions restrict to the product adjacency on the first fixture pair") {
  const auto d = decompose_theorem41(fig1_g1, fig1_g2);
  const auto p = comb_at(fig1_g1, fig1_g2);
  CHECK(d.ambient_dim == 3 * 4 * 4);
  CHECK(d.restricted_sum() == adjacency_matrix(p.graph));
  CHECK(vector_state_moments(d.s1 + d.s2, d.e_index(), 12) ==
        moments_at(p.graph, 12, p.graph.root()));

  const auto c = decompose_corollary42(fig1_g1, fig1_g2);
  const auto q = c_comb_product(fig1_g1, fig1_g2);
  CHECK(c.ambient_dim == 3 * 16 + 3 * 4);
  CHECK(c.restricted_sum() == adjacency_matrix(q.graph));
  CHECK(c.restricted(c.s1) == adjacency_matrix(q.graph, Color::one));
}

TEST_CASE("loop decompositions on the looped fixture pair") {
  const Graph g1 = fixtures::fig2_g1();
  const Graph g2 = fixtures::fig2_g2();
  const auto d = decompose_lemma51(g1, g2);
  const auto q = c_comb_loop_product(g1, g2);
  CHECK(d.loop_adjusted);
  CHECK(d.restricted(d.s1) == adjacency_matrix(q.graph, Color::one));
  CHECK(d.restricted(d.s2) == adjacency_matrix(q.graph, Color::two));
}

TEST_CASE("random pairs: decompositions and flip") {
  Rng rng(21);
  for (int i = 0; i < 10; ++i) {
    const Graph g1 = random_birooted_graph(rng);
    const Graph g2 = random_birooted_graph(rng);
    const auto d = decompose_theorem41(g1, g2);
    CHECK(d.restricted_sum() == adjacency_matrix(comb_at(g1, g2).graph));
    const Matrix flipped = permute(comb_at_adjacency_unflipped(g1, g2), flip_23(g1.vertex_count(), g2.vertex_count()));
    CHECK(d.restricted(flipped) == d.restricted_sum());
  }
}

TEST_CASE("isomorphism checks reject wrong maps") {
  const auto c = comb_product(fixtures::edge(), fixtures::edge());
  std::vector<Vertex> id(c.graph.vertex_count());
  for (Vertex v = 0; v < id.size(); ++v) id[v] = v;
  CHECK(is_isomorphism(c.graph, c.graph, id));
  std::vector<Vertex> swapped = id;
  std::swap(swapped[0], swapped[1]);
  CHECK_FALSE(is_isomorphism(c.graph, c.graph, swapped));
  const std::vector<Vertex> short_map{0};
  CHECK_FALSE(is_isomorphism(c.graph, c.graph, short_map));
}
