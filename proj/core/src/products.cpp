#include "ccomb/products.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "ccomb/errors.hpp"

namespace ccomb {

namespace {

// A colored graph whose vertices are identified by coordinate labels.
struct LabeledGraph {
  std::vector<Label> labels;  // sorted, unique
  std::vector<Edge> edges;    // colored, over positions in `labels`
  Label root;

  std::size_t position(const Label& l) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), l);
    if (it == labels.end() || *it != l) throw GraphError("internal: unknown product label");
    return static_cast<std::size_t>(it - labels.begin());
  }
};

// Collects labeled vertices and edges, then sorts labels into the canonical order.
class Builder {
 public:
  void vertex(Label l) { vertices_.push_back(std::move(l)); }
  void edge(Label a, Label b, Color c) { edges_.push_back({std::move(a), std::move(b), c}); }

  LabeledGraph finish(Label root) && {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    LabeledGraph g{std::move(vertices_), {}, std::move(root)};
    g.position(g.root);
    for (auto& [a, b, c] : edges_) g.edges.push_back({g.position(a), g.position(b), c});
    return g;
  }

 private:
  struct PendingEdge {
    Label a;
    Label b;
    Color c;
  };
  std::vector<Label> vertices_;
  std::vector<PendingEdge> edges_;
};

Label extend(Label l, Vertex v) {
  l.push_back(v);
  return l;
}

LabeledGraph as_factor(const Graph& g, Vertex root) {
  LabeledGraph lg;
  for (Vertex v = 0; v < g.vertex_count(); ++v) lg.labels.push_back({v});
  for (const auto& e : g.edges()) lg.edges.push_back({e.u, e.v, Color::one});
  lg.root = {root};
  return lg;
}

// Copies the first factor on labels (l, anchor) and the second factor's edges
// into copies hosted at the labels selected by `hosts`.
template <typename HostPredicate>
LabeledGraph glue(const LabeledGraph& first, const Graph& second, Vertex anchor, HostPredicate hosts) {
  Builder b;
  for (const auto& l : first.labels) {
    b.vertex(extend(l, anchor));
    if (!hosts(l)) continue;
    for (Vertex v = 0; v < second.vertex_count(); ++v) b.vertex(extend(l, v));
    for (const auto& e : second.edges()) b.edge(extend(l, e.u), extend(l, e.v), Color::two);
  }
  for (const auto& e : first.edges) {
    b.edge(extend(first.labels[e.u], anchor), extend(first.labels[e.v], anchor), e.color);
  }
  return std::move(b).finish(extend(first.root, anchor));
}

LabeledGraph star_glue(const LabeledGraph& first, const Graph& second, Vertex anchor) {
  return glue(first, second, anchor, [&](const Label& l) { return l == first.root; });
}

LabeledGraph comb_glue(const LabeledGraph& first, const Graph& second, Vertex anchor) {
  return glue(first, second, anchor, [](const Label&) { return true; });
}

LabeledGraph orthogonal_glue(const LabeledGraph& first, const Graph& second, Vertex anchor) {
  return glue(first, second, anchor, [&](const Label& l) { return l != first.root; });
}

void add_loops(LabeledGraph& g, Color color, const std::function<bool(const Label&)>& wants_loop) {
  for (std::size_t i = 0; i < g.labels.size(); ++i)
    if (wants_loop(g.labels[i])) g.edges.push_back({i, i, color});
}

Vertex second_root_of(const Graph& g, const char* what) {
  if (!g.is_birooted()) throw GraphError(std::string(what) + " needs a birooted graph (second root f)");
  return *g.second_root();
}

// Composite index of a two-coordinate label in l2(V1) (x) l2(V2).
std::vector<std::size_t> pair_span(const std::vector<Label>& labels, const TensorShape& shape) {
  std::vector<std::size_t> span;
  span.reserve(labels.size());
  for (const auto& l : labels) span.push_back(shape.flatten(l));
  return span;
}

// Composite index of an essential label (x, w, v) after the leg flip, i.e. of x (x) v (x) w.
std::vector<std::size_t> flipped_triple_span(const std::vector<Label>& labels, std::size_t n1,
                                             std::size_t n2) {
  const TensorShape shape{n1, n2, n2};
  const auto flip = flip_23(n1, n2);
  std::vector<std::size_t> span;
  span.reserve(labels.size());
  for (const auto& l : labels) span.push_back(flip[shape.flatten(l)]);
  return span;
}

ProductGraph finish_single(LabeledGraph lg, std::vector<std::size_t> span, std::size_t ambient) {
  const std::size_t root = lg.position(lg.root);
  ProductGraph p{Graph(lg.labels.size(), std::move(lg.edges), root, std::nullopt, true),
                 std::move(lg.labels), std::move(span), ambient};
  return p;
}

ProductGraph finish_two_component(LabeledGraph essential, std::vector<std::size_t> essential_span,
                                  LabeledGraph comb, std::vector<std::size_t> comb_span,
                                  std::size_t essential_ambient, std::size_t comb_ambient) {
  const std::size_t e = essential.position(essential.root);
  const std::size_t f = comb.position(comb.root);
  const Graph g1(essential.labels.size(), std::move(essential.edges), e, std::nullopt, true);
  const Graph g2(comb.labels.size(), std::move(comb.edges), f, std::nullopt, true);
  ProductGraph p{disjoint_union(g1, g2), std::move(essential.labels), std::move(essential_span),
                 essential_ambient + comb_ambient};
  p.vertex_labels.insert(p.vertex_labels.end(), comb.labels.begin(), comb.labels.end());
  for (auto idx : comb_span) p.essential_span.push_back(essential_ambient + idx);
  return p;
}

LabeledGraph comb_at_labeled(const Graph& g1, Vertex e1, const Graph& g2, Vertex e2, Vertex f2) {
  const LabeledGraph ortho = orthogonal_glue(as_factor(g1, e1), g2, f2);
  return star_glue(ortho, g2, e2);
}

// Loops on every vertex of a comb_at copy except its gluing vertex: in the
// e1-copy (labels (e1, f2, v)) all v != e2; in the other copies (labels
// (x, w, e2), x != e1) all w != f2.
void add_essential_loops(LabeledGraph& g, Vertex e1, Vertex e2, Vertex f2, Color color) {
  add_loops(g, color, [&](const Label& l) {
    if (l[0] == e1) return l[1] == f2 && l[2] != e2;
    return l[2] == e2 && l[1] != f2;
  });
}

}  // namespace

ProductGraph star_product(const Graph& g1, const Graph& g2) {
  auto lg = star_glue(as_factor(g1, g1.root()), g2, g2.root());
  const TensorShape shape{g1.vertex_count(), g2.vertex_count()};
  auto span = pair_span(lg.labels, shape);
  return finish_single(std::move(lg), std::move(span), shape.size());
}

ProductGraph comb_product(const Graph& g1, const Graph& g2) {
  auto lg = comb_glue(as_factor(g1, g1.root()), g2, g2.root());
  const TensorShape shape{g1.vertex_count(), g2.vertex_count()};
  auto span = pair_span(lg.labels, shape);
  return finish_single(std::move(lg), std::move(span), shape.size());
}

ProductGraph orthogonal_product(const Graph& g1, const Graph& g2) {
  auto lg = orthogonal_glue(as_factor(g1, g1.root()), g2, g2.root());
  const TensorShape shape{g1.vertex_count(), g2.vertex_count()};
  auto span = pair_span(lg.labels, shape);
  return finish_single(std::move(lg), std::move(span), shape.size());
}

ProductGraph comb_at(const Graph& g1, const Graph& g2) {
  const Vertex f2 = second_root_of(g2, "comb_at");
  auto lg = comb_at_labeled(g1, g1.root(), g2, g2.root(), f2);
  const std::size_t n1 = g1.vertex_count();
  const std::size_t n2 = g2.vertex_count();
  auto span = flipped_triple_span(lg.labels, n1, n2);
  return finish_single(std::move(lg), std::move(span), n1 * n2 * n2);
}

ProductGraph c_comb_product(const Graph& g1, const Graph& g2) {
  const Vertex f1 = second_root_of(g1, "c_comb_product");
  const Vertex f2 = second_root_of(g2, "c_comb_product");
  const std::size_t n1 = g1.vertex_count();
  const std::size_t n2 = g2.vertex_count();
  auto essential = comb_at_labeled(g1, g1.root(), g2, g2.root(), f2);
  auto comb = comb_glue(as_factor(g1, f1), g2, f2);
  auto essential_span = flipped_triple_span(essential.labels, n1, n2);
  auto comb_span = pair_span(comb.labels, TensorShape{n1, n2});
  return finish_two_component(std::move(essential), std::move(essential_span), std::move(comb),
                              std::move(comb_span), n1 * n2 * n2, n1 * n2);
}

ProductGraph comb_loop_product(const Graph& g1, const Graph& g2) {
  auto lg = comb_glue(as_factor(g1, g1.root()), g2, g2.root());
  const Vertex e2 = g2.root();
  add_loops(lg, Color::one, [&](const Label& l) { return l[1] != e2; });
  const TensorShape shape{g1.vertex_count(), g2.vertex_count()};
  auto span = pair_span(lg.labels, shape);
  return finish_single(std::move(lg), std::move(span), shape.size());
}

ProductGraph c_comb_loop_product(const Graph& g1, const Graph& g2, LoopColor loops) {
  const Vertex f1 = second_root_of(g1, "c_comb_loop_product");
  const Vertex f2 = second_root_of(g2, "c_comb_loop_product");
  const std::size_t n1 = g1.vertex_count();
  const std::size_t n2 = g2.vertex_count();
  auto essential = comb_at_labeled(g1, g1.root(), g2, g2.root(), f2);
  add_essential_loops(essential, g1.root(), g2.root(), f2, loops == LoopColor::one ? Color::one : Color::two);
  auto comb = comb_glue(as_factor(g1, f1), g2, f2);
  add_loops(comb, Color::one, [&](const Label& l) { return l[1] != f2; });
  auto essential_span = flipped_triple_span(essential.labels, n1, n2);
  auto comb_span = pair_span(comb.labels, TensorShape{n1, n2});
  return finish_two_component(std::move(essential), std::move(essential_span), std::move(comb),
                              std::move(comb_span), n1 * n2 * n2, n1 * n2);
}

ProductGraph make_product(ProductKind kind, const Graph& g1, const Graph& g2) {
  switch (kind) {
    case ProductKind::star:
      return star_product(g1, g2);
    case ProductKind::comb:
      return comb_product(g1, g2);
    case ProductKind::orthogonal:
      return orthogonal_product(g1, g2);
    case ProductKind::comb_at:
      return comb_at(g1, g2);
    case ProductKind::c_comb:
      return c_comb_product(g1, g2);
    case ProductKind::comb_loop:
      return comb_loop_product(g1, g2);
    case ProductKind::c_comb_loop:
      return c_comb_loop_product(g1, g2);
  }
  throw GraphError("unknown product kind");
}

// ---------------------------------------------------------------- decompositions

std::optional<std::size_t> OperatorDecomposition::f_index() const {
  if (!f_position) return std::nullopt;
  return embedding.at(*f_position);
}

namespace {

struct Factors {
  std::size_t n1, n2;
  Vertex e1, e2;
  Matrix a1, a2, id1, id2;
  Matrix p_e1, p_e1_perp, p_e2, p_e2_perp;

  Factors(const Graph& g1, const Graph& g2)
      : n1(g1.vertex_count()),
        n2(g2.vertex_count()),
        e1(g1.root()),
        e2(g2.root()),
        a1(adjacency_matrix(g1)),
        a2(adjacency_matrix(g2)),
        id1(Matrix::identity(n1)),
        id2(Matrix::identity(n2)),
        p_e1(basis_projection(n1, e1)),
        p_e1_perp(complement_projection(n1, e1)),
        p_e2(basis_projection(n2, e2)),
        p_e2_perp(complement_projection(n2, e2)) {}
};

std::size_t position_of(const std::vector<std::size_t>& embedding, std::size_t index) {
  auto it = std::find(embedding.begin(), embedding.end(), index);
  if (it == embedding.end()) throw NotInvariant("root is not in the embedded subspace");
  return static_cast<std::size_t>(it - embedding.begin());
}

// Labels listed by a set description, sorted into the canonical product order.
std::vector<std::size_t> sorted_pair_embedding(std::vector<Label> labels, const TensorShape& shape) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return pair_span(labels, shape);
}

// V1 >_{f2} V2 = (V1 |- V2) x {e2} u {(e1, f2)} x V2, with V1 |- V2 taken at f2.
std::vector<Label> comb_at_vertex_set(std::size_t n1, std::size_t n2, Vertex e1, Vertex e2, Vertex f2) {
  std::vector<Label> labels;
  labels.push_back({e1, f2, e2});
  for (Vertex x = 0; x < n1; ++x) {
    if (x == e1) continue;
    for (Vertex w = 0; w < n2; ++w) labels.push_back({x, w, e2});
  }
  for (Vertex v = 0; v < n2; ++v) labels.push_back({e1, f2, v});
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

OperatorDecomposition pair_decomposition(Matrix s1, Matrix s2, std::vector<std::size_t> embedding,
                                         std::size_t root_index, std::size_t ambient, bool loops) {
  OperatorDecomposition d{std::move(s1), std::move(s2), ambient, std::move(embedding), loops, 0, std::nullopt};
  d.e_position = position_of(d.embedding, root_index);
  return d;
}

std::vector<Label> all_pairs(std::size_t n1, std::size_t n2) {
  std::vector<Label> labels;
  for (Vertex x = 0; x < n1; ++x)
    for (Vertex v = 0; v < n2; ++v) labels.push_back({x, v});
  return labels;
}

struct TripleForms {
  Matrix s1, s2;
  std::vector<std::size_t> embedding;
  std::size_t root_index;
};

TripleForms triple_forms(const Factors& f, Vertex f2, bool loop_adjusted) {
  const Matrix p_f2 = basis_projection(f.n2, f2);
  TripleForms t;
  if (loop_adjusted) {
    const Matrix a1v = f.a1 - f.id1;
    const Matrix a2v = f.a2 - f.id2;
    const Matrix one = Matrix::identity(f.n1 * f.n2 * f.n2);
    t.s1 = one + kron_all({a1v, f.p_e2, p_f2});
    t.s2 = one + kron_all({f.p_e1, a2v, f.id2}) + kron_all({f.p_e1_perp, f.id2, a2v});
  } else {
    t.s1 = kron_all({f.a1, f.p_e2, p_f2});
    t.s2 = kron_all({f.p_e1, f.a2, f.id2}) + kron_all({f.p_e1_perp, f.id2, f.a2});
  }
  t.embedding = flipped_triple_span(comb_at_vertex_set(f.n1, f.n2, f.e1, f.e2, f2), f.n1, f.n2);
  t.root_index = TensorShape{f.n1, f.n2, f.n2}.flatten({f.e1, f.e2, f2});
  return t;
}

OperatorDecomposition with_comb_summand(TripleForms t, const Graph& g1, const Graph& g2, bool loops) {
  const Vertex f1 = second_root_of(g1, "decomposition");
  const Vertex f2 = second_root_of(g2, "decomposition");
  const std::size_t n1 = g1.vertex_count();
  const std::size_t n2 = g2.vertex_count();
  const std::size_t triple = n1 * n2 * n2;
  const Matrix a1 = adjacency_matrix(g1);
  const Matrix a2 = adjacency_matrix(g2);
  const Matrix p_f2 = basis_projection(n2, f2);
  Matrix c1 = kron(a1, p_f2);
  Matrix c2 = kron(Matrix::identity(n1), a2);
  if (loops) c1 += kron(Matrix::identity(n1), complement_projection(n2, f2));

  OperatorDecomposition d;
  d.s1 = direct_sum(t.s1, c1);
  d.s2 = direct_sum(t.s2, c2);
  d.ambient_dim = triple + n1 * n2;
  d.loop_adjusted = loops;
  d.embedding = std::move(t.embedding);
  const TensorShape pair{n1, n2};
  for (auto idx : sorted_pair_embedding(all_pairs(n1, n2), pair)) d.embedding.push_back(triple + idx);
  d.e_position = position_of(d.embedding, t.root_index);
  d.f_position = position_of(d.embedding, triple + pair.flatten({f1, f2}));
  return d;
}

}  // namespace

std::vector<std::size_t> flip_23(std::size_t n1, std::size_t n2) {
  return leg_swap_permutation(TensorShape{n1, n2, n2}, 1, 2);
}

OperatorDecomposition decompose_star(const Graph& g1, const Graph& g2) {
  const Factors f(g1, g2);
  std::vector<Label> labels;
  for (Vertex v = 0; v < f.n2; ++v) labels.push_back({f.e1, v});
  for (Vertex x = 0; x < f.n1; ++x) labels.push_back({x, f.e2});
  const TensorShape shape{f.n1, f.n2};
  return pair_decomposition(kron(f.a1, f.p_e2), kron(f.p_e1, f.a2), sorted_pair_embedding(labels, shape),
                            shape.flatten({f.e1, f.e2}), shape.size(), false);
}

OperatorDecomposition decompose_comb(const Graph& g1, const Graph& g2) {
  const Factors f(g1, g2);
  const TensorShape shape{f.n1, f.n2};
  return pair_decomposition(kron(f.a1, f.p_e2), kron(f.id1, f.a2),
                            sorted_pair_embedding(all_pairs(f.n1, f.n2), shape), shape.flatten({f.e1, f.e2}),
                            shape.size(), false);
}

OperatorDecomposition decompose_orthogonal(const Graph& g1, const Graph& g2) {
  const Factors f(g1, g2);
  std::vector<Label> labels{{f.e1, f.e2}};
  for (Vertex x = 0; x < f.n1; ++x) {
    if (x == f.e1) continue;
    for (Vertex v = 0; v < f.n2; ++v) labels.push_back({x, v});
  }
  const TensorShape shape{f.n1, f.n2};
  return pair_decomposition(kron(f.a1, f.p_e2), kron(f.p_e1_perp, f.a2), sorted_pair_embedding(labels, shape),
                            shape.flatten({f.e1, f.e2}), shape.size(), false);
}

OperatorDecomposition decompose_comb_loop(const Graph& g1, const Graph& g2) {
  const Factors f(g1, g2);
  const TensorShape shape{f.n1, f.n2};
  return pair_decomposition(kron(f.a1, f.p_e2) + kron(f.id1, f.p_e2_perp), kron(f.id1, f.a2),
                            sorted_pair_embedding(all_pairs(f.n1, f.n2), shape), shape.flatten({f.e1, f.e2}),
                            shape.size(), true);
}

OperatorDecomposition decompose_theorem41(const Graph& g1, const Graph& g2) {
  const Vertex f2 = second_root_of(g2, "decompose_theorem41");
  const Factors f(g1, g2);
  auto t = triple_forms(f, f2, false);
  return pair_decomposition(std::move(t.s1), std::move(t.s2), std::move(t.embedding), t.root_index,
                            f.n1 * f.n2 * f.n2, false);
}

OperatorDecomposition decompose_corollary42(const Graph& g1, const Graph& g2) {
  second_root_of(g1, "decompose_corollary42");
  const Vertex f2 = second_root_of(g2, "decompose_corollary42");
  return with_comb_summand(triple_forms(Factors(g1, g2), f2, false), g1, g2, false);
}

OperatorDecomposition decompose_prop51(const Graph& g1, const Graph& g2) {
  const Vertex f2 = second_root_of(g2, "decompose_prop51");
  const Factors f(g1, g2);
  auto t = triple_forms(f, f2, true);
  return pair_decomposition(std::move(t.s1), std::move(t.s2), std::move(t.embedding), t.root_index,
                            f.n1 * f.n2 * f.n2, true);
}

OperatorDecomposition decompose_lemma51(const Graph& g1, const Graph& g2) {
  second_root_of(g1, "decompose_lemma51");
  const Vertex f2 = second_root_of(g2, "decompose_lemma51");
  return with_comb_summand(triple_forms(Factors(g1, g2), f2, true), g1, g2, true);
}

Matrix comb_at_adjacency_unflipped(const Graph& g1, const Graph& g2) {
  const Vertex f2 = second_root_of(g2, "comb_at_adjacency_unflipped");
  const Factors f(g1, g2);
  const Matrix p_f2 = basis_projection(f.n2, f2);
  const Matrix ortho = kron(f.a1, p_f2) + kron(f.p_e1_perp, f.a2);
  return kron(ortho, f.p_e2) + kron_all({f.p_e1, p_f2, f.a2});
}

// ---------------------------------------------------------------- isomorphism helpers

bool is_isomorphism(const Graph& a, const Graph& b, std::span<const Vertex> map, ColorMatch colors) {
  if (a.vertex_count() != b.vertex_count() || map.size() != a.vertex_count()) return false;
  std::vector<bool> hit(b.vertex_count(), false);
  for (auto v : map) {
    if (v >= b.vertex_count() || hit[v]) return false;
    hit[v] = true;
  }
  if (colors == ColorMatch::ignore) {
    if (permute(adjacency_matrix(a), map) != adjacency_matrix(b)) return false;
  } else {
    if (a.edge_count() != b.edge_count() || a.is_colored() != b.is_colored()) return false;
    for (const auto& e : a.edges())
      if (!b.has_edge(map[e.u], map[e.v], e.color)) return false;
  }
  if (map[a.root()] != b.root()) return false;
  if (a.second_root().has_value() != b.second_root().has_value()) return false;
  if (a.second_root() && map[*a.second_root()] != *b.second_root()) return false;
  return true;
}

std::optional<std::vector<Vertex>> map_by_labels(const ProductGraph& from, const ProductGraph& to,
                                                 const std::function<Label(const Label&)>& relabel) {
  std::map<Label, Vertex> index;
  for (Vertex v = 0; v < to.vertex_labels.size(); ++v) index.emplace(to.vertex_labels[v], v);
  std::vector<Vertex> map;
  map.reserve(from.vertex_labels.size());
  for (const auto& l : from.vertex_labels) {
    auto it = index.find(relabel(l));
    if (it == index.end()) return std::nullopt;
    map.push_back(it->second);
  }
  return map;
}

std::function<Label(const Label&)> collapse_to_comb(Vertex e1, Vertex e2) {
  (void)e2;
  return [e1](const Label& l) -> Label {
    if (l.size() != 3) return l;
    if (l[0] == e1) return {e1, l[2]};
    return {l[0], l[1]};
  };
}

std::size_t essential_vertex_count(const ProductGraph& p) {
  const auto n = static_cast<std::size_t>(
      std::count_if(p.vertex_labels.begin(), p.vertex_labels.end(), [](const Label& l) { return l.size() == 3; }));
  return n == 0 ? p.graph.vertex_count() : n;
}

}  // namespace ccomb
