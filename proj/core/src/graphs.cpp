#include "ccomb/graphs.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "ccomb/errors.hpp"

namespace ccomb {

// ---------------------------------------------------------------- MomentSeries

MomentSeries::MomentSeries(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.size() < 2) throw SeriesError("moment series needs order >= 1");
  if (values_[0] != 1) throw SeriesError("moment series must be normalized (M_0 = 1)");
}

MomentSeries MomentSeries::delta_zero(unsigned order) {
  std::vector<Rational> v(order + 1);
  v[0] = 1;
  return MomentSeries(std::move(v));
}

MomentSeries MomentSeries::delta_one(unsigned order) {
  return MomentSeries(std::vector<Rational>(order + 1, Rational(1)));
}

const Rational& MomentSeries::at(std::size_t n) const {
  if (n >= values_.size()) throw IndexError("moment index beyond truncation order");
  return values_[n];
}

MomentSeries MomentSeries::truncated(unsigned order) const {
  if (order > this->order()) throw SeriesError("cannot extend a truncated moment series");
  return MomentSeries(std::vector<Rational>(values_.begin(), values_.begin() + order + 1));
}

// ---------------------------------------------------------------- Graph

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges, Vertex root,
             std::optional<Vertex> second_root, bool colored)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      root_(root),
      second_root_(second_root),
      colored_(colored) {
  if (vertex_count_ == 0) throw GraphError("graph must have at least one vertex");
  if (root_ >= vertex_count_) throw GraphError("root " + std::to_string(root_) + " out of range");
  if (second_root_ && *second_root_ >= vertex_count_)
    throw GraphError("second root " + std::to_string(*second_root_) + " out of range");
  for (auto& e : edges_) {
    if (e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") has an endpoint out of range");
    }
    if (colored_ && e.color == Color::none) throw GraphError("colored graph has an uncolored edge");
    if (!colored_ && e.color != Color::none) throw GraphError("uncolored graph has a colored edge");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw GraphError("duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) +
                     ") of color " + std::to_string(static_cast<int>(dup->color)));
  }
}

Graph Graph::isolated() { return Graph(1, {}, 0); }

Graph Graph::loop_vertex() { return Graph(1, {{0, 0, Color::none}}, 0); }

Graph Graph::path(std::size_t n, Vertex root) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, Color::none});
  return Graph(n, std::move(edges), root);
}

std::size_t Graph::loop_count(Color color) const {
  return static_cast<std::size_t>(std::count_if(
      edges_.begin(), edges_.end(), [&](const Edge& e) { return e.is_loop() && e.color == color; }));
}

Vertex Graph::root(RootSelector which) const {
  if (which == RootSelector::e) return root_;
  if (!second_root_) throw GraphError("graph has no second root f");
  return *second_root_;
}

bool Graph::has_edge(Vertex u, Vertex v, Color color) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v, color});
}

Graph Graph::with_root(Vertex e) const { return Graph(vertex_count_, edges_, e, std::nullopt, colored_); }

Graph Graph::with_roots(Vertex e, Vertex f) const { return Graph(vertex_count_, edges_, e, f, colored_); }

Graph Graph::recolored(Color color) const {
  std::vector<Edge> edges = edges_;
  for (auto& e : edges) e.color = color;
  return Graph(vertex_count_, std::move(edges), root_, second_root_, color != Color::none);
}

// ---------------------------------------------------------------- operations

Matrix adjacency_matrix(const Graph& g) {
  Matrix a(g.vertex_count(), g.vertex_count());
  for (const auto& e : g.edges()) {
    a(e.u, e.v) += 1;
    if (!e.is_loop()) a(e.v, e.u) += 1;
  }
  return a;
}

Matrix adjacency_matrix(const Graph& g, Color color) {
  if (!g.is_colored()) throw GraphError("color requested on an uncolored graph");
  if (color == Color::none) return adjacency_matrix(g);
  Matrix a(g.vertex_count(), g.vertex_count());
  for (const auto& e : g.edges()) {
    if (e.color != color) continue;
    a(e.u, e.v) = 1;
    a(e.v, e.u) = 1;
  }
  return a;
}

MomentSeries root_moments(const Graph& g, unsigned order, Vertex at) {
  if (at >= g.vertex_count()) throw IndexError("root_moments: vertex out of range");
  return MomentSeries(vector_state_moments(adjacency_matrix(g), at, order));
}

MomentSeries root_moments(const Graph& g, unsigned order, RootSelector which) {
  return root_moments(g, order, g.root(which));
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  if (g1.is_colored() != g2.is_colored())
    throw GraphError("disjoint_union: cannot mix colored and uncolored graphs");
  const std::size_t shift = g1.vertex_count();
  std::vector<Edge> edges = g1.edges();
  for (const auto& e : g2.edges()) edges.push_back({e.u + shift, e.v + shift, e.color});
  return Graph(shift + g2.vertex_count(), std::move(edges), g1.root(), shift + g2.root(),
               g1.is_colored());
}

namespace {

struct WalkCounter {
  struct Step {
    Vertex to;
    Color color;
  };

  std::vector<std::vector<Step>> out;
  std::vector<std::size_t> distance;  // to the start vertex, ignoring colors
  Vertex start = 0;
  unsigned length = 0;
  WalkRule rule = WalkRule::any;
  // Completions of a walk prefix depend only on (vertex, steps taken, last color).
  std::vector<std::optional<std::uint64_t>> memo;

  std::uint64_t run(Vertex v, unsigned taken, Color last) {
    const unsigned remaining = length - taken;
    if (distance[v] > remaining) return 0;
    if (remaining == 0) return v == start ? 1 : 0;
    if (rule == WalkRule::d_walk && taken > 0 && taken % 2 == 0 && v == start) return 0;
    auto& slot = memo[(v * (length + 1) + taken) * 3 + static_cast<std::size_t>(last)];
    if (slot) return *slot;
    std::uint64_t total = 0;
    for (const auto& s : out[v]) {
      if (rule != WalkRule::any) {
        if (taken == 0 && s.color != Color::one) continue;
        if (taken > 0 && s.color == last) continue;
      }
      total += run(s.to, taken + 1, s.color);
    }
    slot = total;
    return total;
  }
};

}  // namespace

std::uint64_t brute_force_closed_walks(const Graph& g, unsigned length, Vertex at, WalkRule rule,
                                       unsigned cap) {
  if (length > cap) {
    throw CapExceeded("walk length " + std::to_string(length) + " exceeds cap " + std::to_string(cap));
  }
  if (at >= g.vertex_count()) throw IndexError("brute_force_closed_walks: vertex out of range");
  if (rule != WalkRule::any && !g.is_colored())
    throw GraphError("alternating walks need a colored graph");
  if (rule == WalkRule::d_walk && length % 2 != 0) return 0;

  WalkCounter c;
  c.start = at;
  c.length = length;
  c.rule = rule;
  c.out.resize(g.vertex_count());
  c.memo.assign(g.vertex_count() * (length + 1) * 3, std::nullopt);
  for (const auto& e : g.edges()) {
    c.out[e.u].push_back({e.v, e.color});
    if (!e.is_loop()) c.out[e.v].push_back({e.u, e.color});
  }
  constexpr auto unreached = std::numeric_limits<std::size_t>::max();
  c.distance.assign(g.vertex_count(), unreached);
  std::deque<Vertex> queue{at};
  c.distance[at] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (const auto& s : c.out[v]) {
      if (c.distance[s.to] == unreached) {
        c.distance[s.to] = c.distance[v] + 1;
        queue.push_back(s.to);
      }
    }
  }
  return c.run(at, 0, Color::none);
}

}  // namespace ccomb
