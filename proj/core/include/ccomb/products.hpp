#ifndef CCOMB_PRODUCTS_HPP
#define CCOMB_PRODUCTS_HPP

// Products of rooted and birooted graphs and the tensor-operator forms of
// their adjacency matrices.
//
// Every product is built combinatorially by gluing copies of the factors and
// records, for each vertex, its coordinate label in V1 x V2 (or V1 x V2 x V2).
// Edges coming from copies of the first factor get color one and edges from
// copies of the second factor get color two (the natural coloring), so product
// graphs are always colored. Inputs are read as uncolored: their own colors are
// discarded.
//
// Vertices of a product are ordered lexicographically by label; for two-component
// products the essential component comes first.
//
// The operator decompositions live in the full tensor space and carry an
// ordered embedding of the product's vertex set, computed independently from
// the set-theoretic description of that vertex set.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ccomb/exact_linalg.hpp"
#include "ccomb/graphs.hpp"

namespace ccomb {

using Label = std::vector<Vertex>;

enum class ProductKind { star, comb, orthogonal, comb_at, c_comb, comb_loop, c_comb_loop };

struct ProductGraph {
  Graph graph;
  /// Coordinates of each vertex: (x, v) in V1 x V2 for two-factor products,
  /// (x, w, v) in V1 x V2 x V2 for the essential component of c-comb products,
  /// where (x, w) lives in the orthogonal product at f2 and v in the copy glued at e2.
  std::vector<Label> vertex_labels;
  /// Composite index of each vertex in the ambient space of the matching
  /// operator decomposition.
  std::vector<std::size_t> essential_span;
  std::size_t ambient_dim = 0;
};

/// Glue G2 at e2 onto G1 at e1. Root (e1, e2).
ProductGraph star_product(const Graph& g1, const Graph& g2);
/// Attach a copy of G2 at e2 to every vertex of G1. Root (e1, e2).
ProductGraph comb_product(const Graph& g1, const Graph& g2);
/// Attach a copy of G2 at e2 to every vertex of G1 except e1. Root (e1, e2).
ProductGraph orthogonal_product(const Graph& g1, const Graph& g2);
/// Orthogonal product of (G1, e1) with (G2, f2), then star product with (G2, e2).
/// Root (e1, f2, e2). G2 must be birooted.
ProductGraph comb_at(const Graph& g1, const Graph& g2);
/// comb_at((G1, e1), (G2, e2, f2)) disjoint-union comb((G1, f1), (G2, f2)).
/// Roots e and f. Both inputs must be birooted.
ProductGraph c_comb_product(const Graph& g1, const Graph& g2);
/// Comb product plus a color-one loop at every vertex of every G2 copy except its root.
ProductGraph comb_loop_product(const Graph& g1, const Graph& g2);

/// Color of the loops added to the essential component of the c-comb loop
/// product. The operator identities hold for color one; color two is kept only
/// to render the alternative reading, and throws GraphError where an added loop
/// lands on a vertex already carrying a color-two loop from a G2 copy.
enum class LoopColor { one, two };

/// Essential loop component (loops on every vertex of the e1-copy except e2 and
/// on every vertex of the other copies except f2) disjoint-union the comb loop
/// product of (G1, f1) and (G2, f2).
ProductGraph c_comb_loop_product(const Graph& g1, const Graph& g2, LoopColor loops = LoopColor::one);

/// Dispatch by kind; kinds needing birooted inputs throw GraphError otherwise.
ProductGraph make_product(ProductKind kind, const Graph& g1, const Graph& g2);

struct OperatorDecomposition {
  Matrix s1;
  Matrix s2;
  std::size_t ambient_dim = 0;
  std::vector<std::size_t> embedding;
  /// True for the loop-adjusted pair (R1, R2) whose sum includes color-one loops.
  bool loop_adjusted = false;
  /// Positions of the roots inside `embedding`.
  std::size_t e_position = 0;
  std::optional<std::size_t> f_position;

  std::size_t e_index() const { return embedding.at(e_position); }
  std::optional<std::size_t> f_index() const;

  /// Matrix of `op` on the embedded subspace (throws NotInvariant if not preserved).
  Matrix restricted(const Matrix& op) const { return subspace_restrict(op, embedding); }
  Matrix restricted_sum() const { return restricted(s1 + s2); }
};

// Two-factor forms on l2(V1) (x) l2(V2).
OperatorDecomposition decompose_star(const Graph& g1, const Graph& g2);
OperatorDecomposition decompose_comb(const Graph& g1, const Graph& g2);
OperatorDecomposition decompose_orthogonal(const Graph& g1, const Graph& g2);
/// R1 = a1 (x) P_e2 + 1 (x) P_e2^perp, R2 = 1 (x) a2.
OperatorDecomposition decompose_comb_loop(const Graph& g1, const Graph& g2);

/// S1 = a1 (x) P_e2 (x) P_f2, S2 = P_e1 (x) a2 (x) 1 + P_e1^perp (x) 1 (x) a2 on
/// l2(V1) (x) l2(V2) (x) l2(V2), embedding the vertex set of comb_at(G1, G2).
OperatorDecomposition decompose_theorem41(const Graph& g1, const Graph& g2);
/// The decompose_theorem41 pair direct-summed with the comb pair (a1 (x) P_f2, 1 (x) a2) on
/// l2(V1) (x) l2(V2); embeds c_comb_product(G1, G2).
OperatorDecomposition decompose_corollary42(const Graph& g1, const Graph& g2);
/// R1 - 1 = (a1 - 1) (x) P_e2 (x) P_f2, R2 - 1 = P_e1 (x) (a2 - 1) (x) 1 + P_e1^perp (x) 1 (x) (a2 - 1);
/// embeds the essential component of c_comb_loop_product(G1, G2).
OperatorDecomposition decompose_prop51(const Graph& g1, const Graph& g2);
/// The decompose_prop51 pair direct-summed with the comb loop pair at (f1, f2);
/// embeds the whole c_comb_loop_product(G1, G2).
OperatorDecomposition decompose_lemma51(const Graph& g1, const Graph& g2);

/// The comb_at adjacency before the leg flip:
/// (a1 (x) P_f2 + P_e1^perp (x) a2) (x) P_e2 + P_e1 (x) P_f2 (x) a2.
Matrix comb_at_adjacency_unflipped(const Graph& g1, const Graph& g2);
/// Composite-index permutation exchanging the two V2 legs of l2(V1) (x) l2(V2) (x) l2(V2).
std::vector<std::size_t> flip_23(std::size_t n1, std::size_t n2);

enum class ColorMatch { exact, ignore };

/// True iff `map` (vertex of a -> vertex of b) is a bijection carrying edges
/// and roots of a exactly onto those of b. With ColorMatch::ignore only the
/// summed adjacency matrices have to correspond.
bool is_isomorphism(const Graph& a, const Graph& b, std::span<const Vertex> map,
                    ColorMatch colors = ColorMatch::exact);

/// Builds a vertex map by translating labels; returns nullopt if some
/// translated label is missing from `to`.
std::optional<std::vector<Vertex>> map_by_labels(const ProductGraph& from, const ProductGraph& to,
                                                 const std::function<Label(const Label&)>& relabel);

/// Label translation V1 x V2 x V2 -> V1 x V2 sending (e1, w, v) to (e1, v) and
/// (x, w, v) to (x, w) otherwise. Identifies comb_at with f2 = e2 with the comb product.
std::function<Label(const Label&)> collapse_to_comb(Vertex e1, Vertex e2);

/// Essential-component vertex count of the c-comb product.
std::size_t essential_vertex_count(const ProductGraph& p);

}  // namespace ccomb

#endif  // CCOMB_PRODUCTS_HPP
