#include "ccomb/graphs.hpp"

#include "ccomb/errors.hpp"
#include "ccomb/fixtures.hpp"
#include "ccomb/graph_io.hpp"
#include "ccomb/random.hpp"

#include "doctest.h"

#include <functional>
#include <string>
#include <vector>

using namespace ccomb;

namespace {

std::vector<Rational> seq(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

std::vector<Rational> moments(const Graph& g, unsigned order, Vertex at) {
  const auto m = root_moments(g, order, at);
  return {m.values().begin(), m.values().end()};
}

struct Step {
  Vertex to;
  Color color;
};

std::vector<Step> steps_from(const Graph& g, Vertex x) {
  std::vector<Step> out;
  for (const auto& e : g.edges()) {
    if (e.u == x) out.push_back({e.v, e.color});
    if (e.v == x && e.u != x) out.push_back({e.u, e.color});
  }
  return out;
}

// Plain enumeration of every walk, no memo and no pruning.
std::uint64_t naive_walks(const Graph& g, unsigned length, Vertex at, WalkRule rule) {
  std::uint64_t count = 0;
  std::vector<Step> path;
  std::function<void(Vertex)> go = [&](Vertex x) {
    if (path.size() == length) {
      if (x != at) return;
      if (rule == WalkRule::d_walk && length % 2 != 0) return;
      count += 1;
      return;
    }
    for (const Step& s : steps_from(g, x)) {
      const std::size_t k = path.size();
      if (rule != WalkRule::any) {
        const Color want = k % 2 == 0 ? Color::one : Color::two;
        if (s.color != want) continue;
        // A completed pair that is not the last must leave the walk away from `at`.
        if (rule == WalkRule::d_walk && k % 2 == 1 && k + 1 < length && s.to == at) continue;
      }
      path.push_back(s);
      go(s.to);
      path.pop_back();
    }
  };
  go(at);
  return count;
}

}  // namespace

TEST_CASE("adjacency conventions") {
  CHECK(adjacency_matrix(Graph::isolated()) == Matrix::from_rows({{0}}));
  CHECK(adjacency_matrix(Graph::loop_vertex()) == Matrix::from_rows({{1}}));
  const Graph tri(3, {{0, 1, Color::one}, {1, 2, Color::two}, {0, 2, Color::two}}, 0, std::nullopt, true);
  CHECK(adjacency_matrix(tri, Color::two) == Matrix::from_rows({{0, 0, 1}, {0, 0, 1}, {1, 1, 0}}));
  CHECK(adjacency_matrix(tri, Color::one) + adjacency_matrix(tri, Color::two) == adjacency_matrix(tri));
  CHECK_THROWS_AS(adjacency_matrix(fixtures::edge(), Color::one), GraphError);
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(Graph(2, {{0, 2}}, 0), GraphError);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}, 0), GraphError);
  CHECK_THROWS_AS(Graph(2, {{0, 1}}, 2), GraphError);
  CHECK_THROWS_AS(Graph(2, {{0, 1}}, 0, 5), GraphError);
  CHECK_THROWS_AS(fixtures::edge().root(RootSelector::f), GraphError);
  CHECK(fixtures::fig1_g2().root(RootSelector::f) == 1);
}

TEST_CASE("root moments") {
  CHECK(moments(fixtures::edge(), 4, 0) == seq({1, 0, 1, 0, 1}));
  CHECK(moments(Graph::loop_vertex(), 5, 0) == seq({1, 1, 1, 1, 1, 1}));
  CHECK(moments(Graph::isolated(), 3, 0) == seq({1, 0, 0, 0}));
  CHECK(root_moments(fixtures::fig1_g2(), 6, RootSelector::f) == root_moments(fixtures::fig1_g2(), 6, 1));
}

TEST_CASE("disjoint union") {
  const Graph two = disjoint_union(Graph::isolated(), Graph::isolated());
  CHECK(two.vertex_count() == 2);
  CHECK(two.edges().empty());
  CHECK(two.root() == 0);
  CHECK(two.second_root() == std::optional<Vertex>(1));

  const Graph u = disjoint_union(fixtures::edge(), Graph::loop_vertex());
  CHECK(u.vertex_count() == 3);
  CHECK(u.edges() == std::vector<Edge>{{0, 1}, {2, 2}});
  CHECK(u.second_root() == std::optional<Vertex>(2));
  CHECK(adjacency_matrix(u) == direct_sum(adjacency_matrix(fixtures::edge()), adjacency_matrix(Graph::loop_vertex())));
}

TEST_CASE("walk counts") {
  CHECK(brute_force_closed_walks(fixtures::edge(), 2, 0) == 1);
  for (unsigned k = 0; k <= 9; ++k) CHECK(brute_force_closed_walks(Graph::loop_vertex(), k, 0) == 1);
  CHECK_THROWS_AS(brute_force_closed_walks(fixtures::edge(), 17, 0), CapExceeded);
  CHECK_THROWS_AS(brute_force_closed_walks(fixtures::edge(), 2, 0, WalkRule::alternating), GraphError);
}

TEST_CASE("walk counts match the matrix route and plain enumeration") {
  Rng rng(5);
  RandomGraphOptions opts;
  opts.loop_percent = 20;
  for (int i = 0; i < 20; ++i) {
    const Graph g = random_birooted_graph(rng, opts);
    const Matrix a = adjacency_matrix(g);
    for (unsigned n = 0; n <= 8; ++n) {
      const auto walks = brute_force_closed_walks(g, n, g.root());
      CHECK(Rational(std::to_string(walks)) == matrix_power_entry(a, n, g.root(), g.root()));
      if (n <= 6) CHECK(walks == naive_walks(g, n, g.root(), WalkRule::any));
    }
  }
}

TEST_CASE("colored walk rules match plain enumeration") {
  Rng rng(9);
  for (int i = 0; i < 15; ++i) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 2, 5));
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u; v < n; ++v) {
        const long pick = uniform_int(rng, 0, 5);
        if (pick == 1) edges.push_back({u, v, Color::one});
        if (pick == 2) edges.push_back({u, v, Color::two});
      }
    const Graph g(n, edges, 0, std::nullopt, true);
    for (unsigned len = 0; len <= 8; ++len) {
      CHECK(brute_force_closed_walks(g, len, 0, WalkRule::alternating) == naive_walks(g, len, 0, WalkRule::alternating));
      CHECK(brute_force_closed_walks(g, len, 0, WalkRule::d_walk) == naive_walks(g, len, 0, WalkRule::d_walk));
    }
  }
}

TEST_CASE("graph files round trip") {
  const Graph g(4, {{0, 1, Color::one}, {1, 2, Color::two}, {3, 3, Color::one}}, 1, 3, true);
  const std::vector<Label> labels{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  const GraphFile f = parse_graph(format_graph(g, &labels));
  CHECK(f.graph == g);
  REQUIRE(f.vertex_labels);
  CHECK(*f.vertex_labels == labels);
  CHECK(format_graph(g, &labels) == format_graph(f.graph, &*f.vertex_labels));
}

TEST_CASE("graph file errors") {
  CHECK_THROWS_AS(parse_graph("{"), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices": 2, "edges": [[0, 3]], "root": 0})"), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices": 2, "edges": [[0, 1], [1, 0]], "root": 0})"), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices": 2, "edges": [[0, 1, 1], [1, 1]], "root": 0})"), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices": 2, "edges": [[0, 1, 3]], "root": 0, "colored": true})"), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"edges": [], "root": 0})"), ParseError);
  const GraphFile f = parse_graph(R"({"vertices": 2, "edges": [[1, 0, 2]], "root": 1})");
  CHECK(f.graph.is_colored());
  CHECK(f.graph.has_edge(0, 1, Color::two));
}

TEST_CASE("bundled fixture files equal the built-in graphs") {
  const std::string dir = CCOMB_FIXTURE_DIR;
  CHECK(read_graph_file(dir + "/fig1_g1.graph.json").graph == fixtures::fig1_g1());
  CHECK(read_graph_file(dir + "/fig1_g2.graph.json").graph == fixtures::fig1_g2());
  CHECK(read_graph_file(dir + "/fig2_g1.graph.json").graph == fixtures::fig2_g1());
  CHECK(read_graph_file(dir + "/fig2_g2.graph.json").graph == fixtures::fig2_g2());
  CHECK(read_graph_file(dir + "/edge.graph.json").graph == fixtures::edge());
  CHECK(read_graph_file(dir + "/isolated.graph.json").graph == fixtures::isolated());
  CHECK(read_graph_file(dir + "/loop.graph.json").graph == fixtures::loop());
}

TEST_CASE("DOT output") {
  const Graph g(3, {{0, 1, Color::one}, {1, 2, Color::two}}, 0, 2, true);
  const std::string dot = to_dot(g);
  CHECK(dot.find("doublecircle") != std::string::npos);
  CHECK(dot.find("square") != std::string::npos);
  CHECK(dot.find("dashed") != std::string::npos);
  CHECK(to_dot(g) == dot);
  const std::string same = to_dot(Graph(1, {}, 0, 0));
  CHECK(same.find("doubleoctagon") != std::string::npos);
}
