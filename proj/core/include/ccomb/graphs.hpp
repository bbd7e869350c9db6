#ifndef CCOMB_GRAPHS_HPP
#define CCOMB_GRAPHS_HPP

// Finite undirected graphs with loops and one or two distinguished roots.
//
// A graph is either uncolored (every edge has Color::none) or colored (every
// edge has color one or two). A vertex pair carries at most one edge per color,
// so a colored graph may hold one edge of each color on the same pair. A loop
// contributes 1 to its diagonal entry of the adjacency matrix.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ccomb/exact_linalg.hpp"
#include "ccomb/moment_series.hpp"

namespace ccomb {

using Vertex = std::size_t;

enum class Color : std::uint8_t { none = 0, one = 1, two = 2 };

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Color color = Color::none;

  bool is_loop() const noexcept { return u == v; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class RootSelector { e, f };

class Graph {
 public:
  /// Validates indices, colors and edge uniqueness; endpoints are normalized
  /// so that u <= v and edges are kept sorted.
  Graph(std::size_t vertex_count, std::vector<Edge> edges, Vertex root,
        std::optional<Vertex> second_root = std::nullopt, bool colored = false);

  /// One vertex, no edges, rooted at it.
  static Graph isolated();
  /// One vertex carrying a loop.
  static Graph loop_vertex();
  /// Path on n vertices 0 - 1 - ... - (n-1), rooted at `root`.
  static Graph path(std::size_t n, Vertex root = 0);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t loop_count(Color color) const;

  Vertex root() const noexcept { return root_; }
  const std::optional<Vertex>& second_root() const noexcept { return second_root_; }
  bool is_birooted() const noexcept { return second_root_.has_value(); }
  bool is_colored() const noexcept { return colored_; }

  /// Root e or f; throws GraphError when f is requested from a single-rooted graph.
  Vertex root(RootSelector which) const;

  bool has_edge(Vertex u, Vertex v, Color color) const;

  Graph with_root(Vertex e) const;
  Graph with_roots(Vertex e, Vertex f) const;
  /// Same vertices and roots; every edge recolored to `color`.
  Graph recolored(Color color) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  Vertex root_ = 0;
  std::optional<Vertex> second_root_;
  bool colored_ = false;
};

/// Symmetric adjacency matrix; on a colored graph this is the sum over both colors.
Matrix adjacency_matrix(const Graph& g);
/// Adjacency matrix of the edges of one color; throws GraphError on an uncolored graph.
Matrix adjacency_matrix(const Graph& g, Color color);

/// M_n = (a^n)[at][at] for n = 0..order.
MomentSeries root_moments(const Graph& g, unsigned order, Vertex at);
MomentSeries root_moments(const Graph& g, unsigned order, RootSelector which);

/// Vertices of g1 followed by those of g2; roots (e1, |V1| + e2).
Graph disjoint_union(const Graph& g1, const Graph& g2);

enum class WalkRule {
  any,
  /// Consecutive edges differ in color and the first edge has color one.
  alternating,
  /// Alternating walk of even length that is away from the start vertex after
  /// every completed (color one, color two) step pair except the last one.
  d_walk,
};

inline constexpr unsigned kDefaultWalkCap = 16;

/// Depth-first count of closed walks of the given length at `at`, memoized on
/// (vertex, steps taken, last color) and pruned by graph distance to `at`.
/// Throws CapExceeded if length > cap, GraphError if a colored rule is applied
/// to an uncolored graph.
std::uint64_t brute_force_closed_walks(const Graph& g, unsigned length, Vertex at,
                                       WalkRule rule = WalkRule::any, unsigned cap = kDefaultWalkCap);

}  // namespace ccomb

#endif  // CCOMB_GRAPHS_HPP
