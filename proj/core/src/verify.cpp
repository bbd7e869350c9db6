#include "ccomb/verify.hpp"

#include <algorithm>
#include <exception>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include "ccomb/errors.hpp"
#include "ccomb/fixtures.hpp"
#include "ccomb/graphs.hpp"
#include "ccomb/independence.hpp"
#include "ccomb/products.hpp"
#include "ccomb/random.hpp"
#include "ccomb/transforms.hpp"

namespace ccomb {

namespace {

// ---------------------------------------------------------------- plumbing

class Tally {
 public:
  void expect(bool ok, const std::function<std::string()>& what) {
    ++cases_;
    if (ok) return;
    ++failed_;
    if (!first_) first_ = what();
  }

  CheckResult finish(std::string name, const std::string& summary) const {
    if (failed_ == 0) return {std::move(name), true, summary + ", " + std::to_string(cases_) + " comparisons"};
    return {std::move(name), false,
            std::to_string(failed_) + "/" + std::to_string(cases_) + " comparisons failed; first: " + *first_};
  }

 private:
  std::size_t cases_ = 0;
  std::size_t failed_ = 0;
  std::optional<std::string> first_;
};

Rng seeded(const VerifyConfig& cfg, std::uint64_t salt) { return Rng(cfg.seed * 0x9E3779B97F4A7C15ULL ^ salt); }

template <typename Seq>
std::string join(const Seq& values) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& v : values) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  os << ']';
  return os.str();
}

std::vector<Rational> coefficients_of(const OriginSeries& s) {
  std::vector<Rational> out;
  for (unsigned n = 1; n <= s.order(); ++n) out.push_back(s.coefficient(n));
  return out;
}

std::vector<Rational> values_of(const MomentSeries& m) { return {m.values().begin(), m.values().end()}; }

std::vector<Rational> walk_moments(const Graph& g, Vertex at, unsigned order) {
  std::vector<Rational> out;
  const unsigned cap = std::max(kDefaultWalkCap, order);
  for (unsigned n = 0; n <= order; ++n) out.emplace_back(std::to_string(brute_force_closed_walks(g, n, at, WalkRule::any, cap)));
  return out;
}

struct GraphCase {
  std::string name;
  Graph g1;
  Graph g2;
};

std::vector<GraphCase> graph_cases(const VerifyConfig& cfg, std::uint64_t salt, bool loops) {
  std::vector<GraphCase> cases;
  if (loops) {
    cases.push_back({"fig2", fixtures::fig2_g1(), fixtures::fig2_g2()});
  } else {
    cases.push_back({"fig1", fixtures::fig1_g1(), fixtures::fig1_g2()});
  }
  Rng rng = seeded(cfg, salt);
  RandomGraphOptions opts;
  opts.loop_percent = loops ? 25 : 10;
  for (unsigned i = 0; i < cfg.random_graphs; ++i) {
    Graph g1 = random_birooted_graph(rng, opts);
    Graph g2 = random_birooted_graph(rng, opts);
    cases.push_back({"random#" + std::to_string(i), std::move(g1), std::move(g2)});
  }
  return cases;
}

MomentSeries moments_at(const Graph& g, Vertex at, unsigned order) { return root_moments(g, order, at); }

EtaSeries eta_at(const Graph& g, Vertex at, unsigned order) { return eta_from_moments(root_moments(g, order, at)); }

// ---------------------------------------------------------------- products

CheckResult three_route_additive(const VerifyConfig& cfg) {
  Tally t;
  const auto cases = graph_cases(cfg, 101, false);
  for (const auto& c : cases) {
    const auto p = c_comb_product(c.g1, c.g2);
    const auto walks = walk_moments(p.graph, p.graph.root(), cfg.order);

    const auto d = decompose_theorem41(c.g1, c.g2);
    const auto ops = vector_state_moments(d.s1 + d.s2, d.e_index(), cfg.order);

    const Vertex f2 = *c.g2.second_root();
    const auto series = values_of(additive_convolve(Convolution::c_monotone, moments_at(c.g1, c.g1.root(), cfg.order),
                                                    moments_at(c.g2, c.g2.root(), cfg.order),
                                                    moments_at(c.g2, f2, cfg.order)));
    t.expect(walks == ops, [&] { return c.name + ": walks " + join(walks) + " vs operators " + join(ops); });
    t.expect(walks == series, [&] { return c.name + ": walks " + join(walks) + " vs F-formula " + join(series); });
  }
  return t.finish("products.three_route_additive",
                  std::to_string(cases.size()) + " birooted pairs, n<=" + std::to_string(cfg.order));
}

CheckResult f_root_monotone_split(const VerifyConfig& cfg) {
  Tally t;
  const auto cases = graph_cases(cfg, 102, false);
  for (const auto& c : cases) {
    const auto p = c_comb_product(c.g1, c.g2);
    const Vertex f = *p.graph.second_root();
    const auto walks = walk_moments(p.graph, f, cfg.order);
    const auto d = decompose_corollary42(c.g1, c.g2);
    const auto ops = vector_state_moments(d.s1 + d.s2, *d.f_index(), cfg.order);
    const auto series =
        values_of(additive_convolve(Convolution::monotone, moments_at(c.g1, *c.g1.second_root(), cfg.order),
                                    moments_at(c.g2, *c.g2.second_root(), cfg.order)));
    t.expect(walks == series, [&] { return c.name + ": walks at f " + join(walks) + " vs monotone " + join(series); });
    t.expect(ops == series, [&] { return c.name + ": operators at f " + join(ops) + " vs monotone " + join(series); });
  }
  return t.finish("products.f_root_monotone_split",
                  std::to_string(cases.size()) + " birooted pairs, n<=" + std::to_string(cfg.order));
}

CheckResult multiplicative_loop_product(const VerifyConfig& cfg) {
  Tally t;
  const unsigned order = cfg.eta_order;
  const unsigned walk_pairs = std::min(order, kDefaultWalkCap / 2);
  const auto cases = graph_cases(cfg, 103, true);
  for (const auto& c : cases) {
    const auto q = c_comb_loop_product(c.g1, c.g2);
    const Matrix z = adjacency_matrix(q.graph, Color::two) * adjacency_matrix(q.graph, Color::one);
    const Vertex e = q.graph.root();
    const Vertex f = *q.graph.second_root();
    const auto eta_e = eta_from_moments(MomentSeries(vector_state_moments(z, e, order)));
    const auto eta_f = eta_from_moments(MomentSeries(vector_state_moments(z, f, order)));

    const auto mu1 = eta_at(c.g1, c.g1.root(), order);
    const auto nu1 = eta_at(c.g1, *c.g1.second_root(), order);
    const auto mu2 = eta_at(c.g2, c.g2.root(), order);
    const auto nu2 = eta_at(c.g2, *c.g2.second_root(), order);

    const auto series_e = multiplicative_convolve(Convolution::c_monotone, mu1, mu2, nu2);
    const auto series_f = multiplicative_convolve(Convolution::monotone, nu1, nu2);
    t.expect(eta_e == series_e, [&] {
      return c.name + ": eta_Z at e " + join(coefficients_of(eta_e)) + " vs series " + join(coefficients_of(series_e));
    });
    t.expect(eta_f == series_f, [&] {
      return c.name + ": eta_Z at f " + join(coefficients_of(eta_f)) + " vs monotone " + join(coefficients_of(series_f));
    });
    for (unsigned n = 1; n <= order; ++n) {
      const Rational direct = coefficient_formula(Convolution::c_monotone, n, mu1, mu2, nu2);
      t.expect(direct == eta_e.coefficient(n), [&] {
        return c.name + ": coefficient sum at n=" + std::to_string(n) + " gives " + direct.get_str();
      });
      const Rational direct_f = coefficient_formula(Convolution::monotone, n, nu1, nu2);
      t.expect(direct_f == eta_f.coefficient(n), [&] {
        return c.name + ": monotone coefficient sum at n=" + std::to_string(n) + " gives " + direct_f.get_str();
      });
    }
    for (unsigned n = 1; n <= walk_pairs; ++n) {
      const auto de = brute_force_closed_walks(q.graph, 2 * n, e, WalkRule::d_walk);
      const auto df = brute_force_closed_walks(q.graph, 2 * n, f, WalkRule::d_walk);
      t.expect(Rational(std::to_string(de)) == eta_e.coefficient(n), [&] {
        return c.name + ": |D_" + std::to_string(2 * n) + "(e)| = " + std::to_string(de);
      });
      t.expect(Rational(std::to_string(df)) == eta_f.coefficient(n), [&] {
        return c.name + ": |D_" + std::to_string(2 * n) + "(f)| = " + std::to_string(df);
      });
    }
  }
  return t.finish("products.multiplicative_loop_product", std::to_string(cases.size()) + " birooted pairs, n<=" +
                                                           std::to_string(order) + ", d-walks 2n<=" +
                                                           std::to_string(2 * walk_pairs));
}

CheckResult superposition(const VerifyConfig& cfg) {
  Tally t;
  const auto cases = graph_cases(cfg, 104, false);
  for (const auto& c : cases) {
    const Graph g1 = c.g1.with_root(c.g1.root());
    const Graph g2 = c.g2.with_root(c.g2.root());
    const auto comb = comb_product(g1, g2);
    const auto orth = orthogonal_product(g1, g2);
    const auto star = star_product(orth.graph, g2);
    const Vertex e1 = g1.root();
    const Vertex e2 = g2.root();
    // Star labels are (orthogonal vertex, v); the orthogonal root carries the new copy.
    const auto map = map_by_labels(star, comb, [&](const Label& l) -> Label {
      if (l[0] == orth.graph.root() && l[1] != e2) return {e1, l[1]};
      return orth.vertex_labels[l[0]];
    });
    t.expect(map && is_isomorphism(star.graph, comb.graph, *map, ColorMatch::ignore),
             [&] { return c.name + ": star(orthogonal(G1, G2), G2) is not the comb product under the label map"; });
  }
  return t.finish("products.superposition", std::to_string(cases.size()) + " pairs");
}

CheckResult comb_at_collapse(const VerifyConfig& cfg) {
  Tally t;
  const auto cases = graph_cases(cfg, 105, false);
  for (const auto& c : cases) {
    const Vertex e1 = c.g1.root();
    const Vertex e2 = c.g2.root();
    const auto at = comb_at(c.g1.with_root(e1), c.g2.with_roots(e2, e2));
    const auto comb = comb_product(c.g1.with_root(e1), c.g2.with_root(e2));
    const auto map = map_by_labels(at, comb, collapse_to_comb(e1, e2));
    t.expect(map && is_isomorphism(at.graph, comb.graph, *map),
             [&] { return c.name + ": comb_at with f2 = e2 is not the comb product"; });
  }
  return t.finish("products.comb_at_collapse", std::to_string(cases.size()) + " pairs");
}

Matrix leading_block(const Matrix& a, std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j);
  return out;
}

CheckResult decompositions(const VerifyConfig& cfg) {
  Tally t;
  auto cases = graph_cases(cfg, 106, false);
  for (auto& c : graph_cases(cfg, 107, true)) cases.push_back(std::move(c));
  for (const auto& c : cases) {
    auto same = [&](const std::string& what, const OperatorDecomposition& d, const ProductGraph& p, bool split) {
      const Graph& g = p.graph;
      t.expect(d.embedding == p.essential_span,
               [&] { return c.name + ": " + what + " embedding differs from the product's coordinates"; });
      t.expect(d.restricted_sum() == adjacency_matrix(g),
               [&] { return c.name + ": " + what + " restricted S1 + S2 differs from the adjacency matrix"; });
      if (split) {
        t.expect(d.restricted(d.s1) == adjacency_matrix(g, Color::one),
                 [&] { return c.name + ": " + what + " S1 differs from the color-one adjacency"; });
        t.expect(d.restricted(d.s2) == adjacency_matrix(g, Color::two),
                 [&] { return c.name + ": " + what + " S2 differs from the color-two adjacency"; });
      }
      t.expect(g.root() == d.e_position, [&] { return c.name + ": " + what + " root e misplaced"; });
    };
    const Graph g1 = c.g1;
    const Graph g2 = c.g2;
    const Graph r1 = g1.with_root(g1.root());
    const Graph r2 = g2.with_root(g2.root());
    same("star", decompose_star(r1, r2), star_product(r1, r2), true);
    same("comb", decompose_comb(r1, r2), comb_product(r1, r2), true);
    same("orthogonal", decompose_orthogonal(r1, r2), orthogonal_product(r1, r2), true);
    same("comb_loop", decompose_comb_loop(r1, r2), comb_loop_product(r1, r2), true);
    same("theorem41", decompose_theorem41(g1, g2), comb_at(g1, g2), true);
    same("corollary42", decompose_corollary42(g1, g2), c_comb_product(g1, g2), true);
    same("lemma51", decompose_lemma51(g1, g2), c_comb_loop_product(g1, g2), true);

    const auto loop = c_comb_loop_product(g1, g2);
    const auto d = decompose_prop51(g1, g2);
    const std::size_t n = essential_vertex_count(loop);
    t.expect(d.restricted_sum() == leading_block(adjacency_matrix(loop.graph), n),
             [&] { return c.name + ": prop51 restricted R1 + R2 differs from the essential loop component"; });
    t.expect(d.restricted(d.s1) == leading_block(adjacency_matrix(loop.graph, Color::one), n),
             [&] { return c.name + ": prop51 R1 differs from the color-one adjacency"; });

    const auto dc = decompose_corollary42(g1, g2);
    const auto f_index = dc.f_index();
    t.expect(f_index && dc.f_position && *dc.f_position == *c_comb_product(g1, g2).graph.second_root(),
             [&] { return c.name + ": c-comb root f misplaced"; });
  }
  return t.finish("products.decompositions", std::to_string(cases.size()) + " pairs, 8 decompositions each");
}

CheckResult flip(const VerifyConfig& cfg) {
  Tally t;
  const auto cases = graph_cases(cfg, 108, false);
  for (const auto& c : cases) {
    const std::size_t n1 = c.g1.vertex_count();
    const std::size_t n2 = c.g2.vertex_count();
    const auto perm = flip_23(n1, n2);
    const TensorShape shape{n1, n2, n2};
    bool involution = true;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      const auto x = shape.unflatten(i);
      involution = involution && perm[perm[i]] == i && perm[i] == shape.flatten({x[0], x[2], x[1]});
    }
    t.expect(involution, [&] { return c.name + ": flip is not the leg exchange"; });
    const auto d = decompose_theorem41(c.g1, c.g2);
    const Matrix flipped = permute(comb_at_adjacency_unflipped(c.g1, c.g2), perm);
    t.expect(d.restricted(flipped) == adjacency_matrix(comb_at(c.g1, c.g2).graph),
             [&] { return c.name + ": flipped two-step adjacency differs from comb_at"; });
    t.expect(d.restricted(flipped) == d.restricted_sum(),
             [&] { return c.name + ": flipped two-step adjacency differs from S1 + S2 on the subspace"; });
  }
  return t.finish("products.flip", std::to_string(cases.size()) + " pairs");
}

CheckResult vertex_counts(const VerifyConfig& cfg) {
  Tally t;
  const auto cases = graph_cases(cfg, 109, true);
  for (const auto& c : cases) {
    const std::size_t n1 = c.g1.vertex_count();
    const std::size_t n2 = c.g2.vertex_count();
    const Graph r1 = c.g1.with_root(c.g1.root());
    const Graph r2 = c.g2.with_root(c.g2.root());
    auto count = [&](const std::string& what, std::size_t got, std::size_t want) {
      t.expect(got == want, [&] {
        return c.name + ": |" + what + "| = " + std::to_string(got) + ", expected " + std::to_string(want);
      });
    };
    count("star", star_product(r1, r2).graph.vertex_count(), n1 + n2 - 1);
    count("orthogonal", orthogonal_product(r1, r2).graph.vertex_count(), (n1 - 1) * n2 + 1);
    count("comb", comb_product(r1, r2).graph.vertex_count(), n1 * n2);
    count("comb_at", comb_at(c.g1, c.g2).graph.vertex_count(), (n1 - 1) * n2 + n2);
    const auto cc = c_comb_product(c.g1, c.g2);
    count("c_comb essential", essential_vertex_count(cc), n1 * n2);
    count("c_comb", cc.graph.vertex_count(), 2 * n1 * n2);
    const auto loop = comb_loop_product(r1, r2);
    const std::size_t g1_loops = r1.loop_count(Color::none) + r1.loop_count(Color::one) + r1.loop_count(Color::two);
    count("comb_loop added loops", loop.graph.loop_count(Color::one) - g1_loops, n1 * (n2 - 1));
  }
  const auto fig2 = c_comb_loop_product(fixtures::fig2_g1(), fixtures::fig2_g2());
  const auto essential_loops = static_cast<std::size_t>(std::count_if(
      fig2.graph.edges().begin(), fig2.graph.edges().end(),
      [&](const Edge& e) { return e.is_loop() && e.color == Color::one && e.u < essential_vertex_count(fig2); }));
  // One of the color-one loops is the copy of the loop at e1.
  t.expect(essential_loops == 10, [&] {
    return "fig2: essential component has " + std::to_string(essential_loops) + " color-one loops, expected 9 + 1";
  });
  t.expect(essential_vertex_count(fig2) == 12, [&] { return std::string("fig2: essential component size"); });
  return t.finish("products.vertex_counts", std::to_string(cases.size()) + " pairs");
}

CheckResult walk_moments_all_products(const VerifyConfig& cfg) {
  Tally t;
  VerifyConfig small = cfg;
  small.random_graphs = std::max(1U, cfg.random_graphs / 2);
  const auto cases = graph_cases(small, 110, true);
  for (const auto& c : cases) {
    const Graph r1 = c.g1.with_root(c.g1.root());
    const Graph r2 = c.g2.with_root(c.g2.root());
    const std::vector<std::pair<std::string, ProductGraph>> products{
        {"star", star_product(r1, r2)},
        {"comb", comb_product(r1, r2)},
        {"orthogonal", orthogonal_product(r1, r2)},
        {"comb_at", comb_at(c.g1, c.g2)},
        {"c_comb", c_comb_product(c.g1, c.g2)},
        {"comb_loop", comb_loop_product(r1, r2)},
        {"c_comb_loop", c_comb_loop_product(c.g1, c.g2)}};
    for (const auto& [name, p] : products) {
      std::vector<Vertex> roots{p.graph.root()};
      if (p.graph.second_root()) roots.push_back(*p.graph.second_root());
      for (Vertex r : roots) {
        const auto walks = walk_moments(p.graph, r, cfg.order);
        const auto matrix = values_of(root_moments(p.graph, cfg.order, r));
        t.expect(walks == matrix, [&, name = name] { return c.name + ": " + name + " walk count differs from a^n"; });
      }
    }
  }
  return t.finish("products.walk_moments", std::to_string(cases.size()) + " pairs, 7 products, n<=" +
                                               std::to_string(cfg.order));
}

// ---------------------------------------------------------------- transforms

CheckResult collapse_additive(const VerifyConfig& cfg) {
  Tally t;
  Rng rng = seeded(cfg, 201);
  for (unsigned i = 0; i < cfg.random_series; ++i) {
    const auto mu1 = random_moments(rng, cfg.series_order);
    const auto mu2 = random_moments(rng, cfg.series_order);
    const auto c = additive_convolve(Convolution::c_monotone, mu1, mu2, mu2);
    const auto m = additive_convolve(Convolution::monotone, mu1, mu2);
    t.expect(c == m, [&] { return "case " + std::to_string(i) + ": " + join(values_of(c)) + " vs " + join(values_of(m)); });
  }
  return t.finish("transforms.collapse_additive_nu2_eq_mu2",
                  std::to_string(cfg.random_series) + " random pairs, order " + std::to_string(cfg.series_order));
}

CheckResult collapse_multiplicative_delta1(const VerifyConfig& cfg) {
  Tally t;
  Rng rng = seeded(cfg, 202);
  for (unsigned i = 0; i < cfg.random_series; ++i) {
    const auto mu1 = random_eta(rng, cfg.series_order);
    const auto nu2 = random_eta(rng, cfg.series_order);
    const auto c = multiplicative_convolve(Convolution::c_monotone, mu1, EtaSeries::identity(cfg.series_order), nu2);
    const auto o = multiplicative_convolve(Convolution::orthogonal, mu1, nu2);
    t.expect(c == o, [&] { return "case " + std::to_string(i) + ": " + join(coefficients_of(c)) + " vs " + join(coefficients_of(o)); });
  }
  return t.finish("transforms.collapse_multiplicative_mu2_delta1",
                  std::to_string(cfg.random_series) + " random pairs, order " + std::to_string(cfg.series_order));
}

CheckResult collapse_multiplicative_monotone(const VerifyConfig& cfg) {
  Tally t;
  Rng rng = seeded(cfg, 203);
  for (unsigned i = 0; i < cfg.random_series; ++i) {
    const auto mu1 = random_eta(rng, cfg.series_order);
    const auto mu2 = random_eta(rng, cfg.series_order);
    const auto c = multiplicative_convolve(Convolution::c_monotone, mu1, mu2, mu2);
    const auto m = multiplicative_convolve(Convolution::monotone, mu1, mu2);
    t.expect(c == m, [&] { return "case " + std::to_string(i) + ": " + join(coefficients_of(c)) + " vs " + join(coefficients_of(m)); });
  }
  return t.finish("transforms.collapse_multiplicative_nu2_eq_mu2",
                  std::to_string(cfg.random_series) + " random pairs, order " + std::to_string(cfg.series_order));
}

CheckResult boolean_orthogonal_decomposition(const VerifyConfig& cfg) {
  Tally t;
  Rng rng = seeded(cfg, 204);
  for (unsigned i = 0; i < cfg.random_series; ++i) {
    const auto mu1 = random_eta(rng, cfg.series_order);
    const auto mu2 = random_eta(rng, cfg.series_order);
    const auto nu2 = random_eta(rng, cfg.series_order);
    const auto c = multiplicative_convolve(Convolution::c_monotone, mu1, mu2, nu2);
    const auto d = multiplicative_convolve(Convolution::boolean,
                                           multiplicative_convolve(Convolution::orthogonal, mu1, nu2), mu2);
    t.expect(c == d, [&] { return "case " + std::to_string(i) + ": " + join(coefficients_of(c)) + " vs " + join(coefficients_of(d)); });
  }
  return t.finish("transforms.boolean_orthogonal_decomposition",
                  std::to_string(cfg.random_series) + " random triples, order " + std::to_string(cfg.series_order));
}

CheckResult coefficient_formulas(const VerifyConfig& cfg) {
  Tally t;
  Rng rng = seeded(cfg, 205);
  const Convolution kinds[] = {Convolution::orthogonal, Convolution::boolean, Convolution::monotone,
                               Convolution::c_monotone};
  for (unsigned i = 0; i < cfg.random_series; ++i) {
    const auto mu1 = random_eta(rng, cfg.series_order);
    const auto mu2 = random_eta(rng, cfg.series_order);
    const auto nu2 = random_eta(rng, cfg.series_order);
    for (auto kind : kinds) {
      const auto series = multiplicative_convolve(kind, mu1, mu2, nu2);
      for (unsigned n = 1; n <= cfg.series_order; ++n) {
        const Rational direct = coefficient_formula(kind, n, mu1, mu2, nu2);
        t.expect(direct == series.coefficient(n), [&] {
          return "case " + std::to_string(i) + " kind " + std::to_string(static_cast<int>(kind)) + " n=" +
                 std::to_string(n) + ": " + direct.get_str() + " vs " + series.coefficient(n).get_str();
        });
      }
    }
  }
  return t.finish("transforms.coefficient_formula", "4 kinds, " + std::to_string(cfg.random_series) +
                                                        " random triples, n<=" + std::to_string(cfg.series_order));
}

CheckResult series_roundtrips(const VerifyConfig& cfg) {
  Tally t;
  Rng rng = seeded(cfg, 206);
  for (unsigned i = 0; i < cfg.random_series; ++i) {
    const auto m = random_moments(rng, cfg.order);
    t.expect(F_to_moments(moments_to_F(m)) == m, [&] { return "F roundtrip " + join(values_of(m)); });
    const auto p = psi_from_moments(m);
    t.expect(psi_from_eta(eta_from_psi(p)) == p, [&] { return "psi/eta roundtrip " + join(values_of(m)); });
    const auto h = random_eta(rng, cfg.order, false);
    t.expect(eta_from_psi(psi_from_eta(h)) == h, [&] { return "eta/psi roundtrip " + join(coefficients_of(h)); });
  }
  return t.finish("transforms.roundtrips", std::to_string(cfg.random_series) + " random series, order " +
                                               std::to_string(cfg.order));
}

CheckResult F_composition(const VerifyConfig& cfg) {
  Tally t;
  Rng rng = seeded(cfg, 207);
  const FSeries id = FSeries::identity(cfg.series_order);
  for (unsigned i = 0; i < cfg.random_series; ++i) {
    const auto a = moments_to_F(random_moments(rng, cfg.series_order));
    const auto b = moments_to_F(random_moments(rng, cfg.series_order));
    const auto c = moments_to_F(random_moments(rng, cfg.series_order));
    t.expect(compose_F(a, id) == a && compose_F(id, a) == a, [&] { return "z is not a two-sided identity"; });
    t.expect(compose_F(compose_F(a, b), c) == compose_F(a, compose_F(b, c)),
             [&] { return "composition not associative in case " + std::to_string(i); });
  }
  return t.finish("transforms.F_composition", std::to_string(cfg.random_series) + " random triples, order " +
                                                  std::to_string(cfg.series_order));
}

CheckResult additive_laws(const VerifyConfig& cfg) {
  Tally t;
  Rng rng = seeded(cfg, 208);
  const auto delta0 = MomentSeries::delta_zero(cfg.series_order);
  bool monotone_witness = false;
  bool cmonotone_witness = false;
  for (unsigned i = 0; i < cfg.random_series; ++i) {
    const auto mu1 = random_moments(rng, cfg.series_order);
    const auto mu2 = random_moments(rng, cfg.series_order);
    const auto nu2 = random_moments(rng, cfg.series_order);
    for (auto kind : {Convolution::monotone, Convolution::boolean, Convolution::orthogonal, Convolution::c_monotone}) {
      t.expect(additive_convolve(kind, mu1, delta0, delta0) == mu1,
               [&] { return "delta0 is not neutral for kind " + std::to_string(static_cast<int>(kind)); });
    }
    t.expect(additive_convolve(Convolution::boolean, mu1, mu2) == additive_convolve(Convolution::boolean, mu2, mu1),
             [&] { return "boolean convolution not commutative in case " + std::to_string(i); });
    monotone_witness = monotone_witness ||
                       additive_convolve(Convolution::monotone, mu1, mu2) != additive_convolve(Convolution::monotone, mu2, mu1);
    cmonotone_witness = cmonotone_witness || additive_convolve(Convolution::c_monotone, mu1, mu2, nu2) !=
                                                 additive_convolve(Convolution::c_monotone, mu2, mu1, nu2);
  }
  t.expect(monotone_witness, [] { return std::string("no witness of monotone non-commutativity"); });
  t.expect(cmonotone_witness, [] { return std::string("no witness of c-monotone non-commutativity"); });
  return t.finish("transforms.additive_laws", std::to_string(cfg.random_series) + " random triples");
}

CheckResult graph_consistency(const VerifyConfig& cfg) {
  Tally t;
  VerifyConfig small = cfg;
  small.random_graphs = std::max(1U, cfg.random_graphs / 2);
  for (const auto& c : graph_cases(small, 209, true)) {
    const Graph r1 = c.g1.with_root(c.g1.root());
    const Graph r2 = c.g2.with_root(c.g2.root());
    const auto mu1 = moments_at(r1, r1.root(), cfg.order);
    const auto mu2 = moments_at(r2, r2.root(), cfg.order);
    const std::pair<Convolution, ProductGraph> pairs[] = {{Convolution::monotone, comb_product(r1, r2)},
                                                          {Convolution::boolean, star_product(r1, r2)},
                                                          {Convolution::orthogonal, orthogonal_product(r1, r2)}};
    for (const auto& [kind, p] : pairs) {
      const auto walks = walk_moments(p.graph, p.graph.root(), cfg.order);
      const auto series = values_of(additive_convolve(kind, mu1, mu2));
      t.expect(walks == series, [&, kind = kind] {
        return c.name + " kind " + std::to_string(static_cast<int>(kind)) + ": " + join(walks) + " vs " + join(series);
      });
    }
  }
  // The edge graph: F = z - 1/z exactly, and its self-comb gives (1, 0, 2, 0, 5).
  const auto edge = moments_at(fixtures::edge(), 0, 4);
  const auto f = moments_to_F(edge);
  t.expect(f.reduced() == PowerSeries({1, 0, -1, 0, 0}), [] { return std::string("edge graph F is not z - 1/z"); });
  const auto mono = additive_convolve(Convolution::monotone, edge, edge);
  t.expect(values_of(mono) == std::vector<Rational>{1, 0, 2, 0, 5}, [&] { return "monotone(edge, edge) = " + join(values_of(mono)); });
  return t.finish("transforms.graph_consistency", "comb/star/orthogonal vs F-formulas, n<=" + std::to_string(cfg.order));
}

// ---------------------------------------------------------------- independence

const std::vector<std::string> kSingle{"a"};

std::size_t model_dim(unsigned i) { return 1 + i % 3; }

using States = std::map<unsigned, StatePair<Rational>>;

template <typename Realize, typename Oracle>
void compare_words(Tally& t, const std::string& label, const RealizedFamily& f, unsigned max_len, Realize&&,
                   Oracle&& oracle) {
  f.for_each_word(max_len, [&](const Word& w, const Rational& phi, const std::optional<Rational>& psi) {
    const auto [want_phi, want_psi] = oracle(w);
    t.expect(phi == want_phi, [&] {
      return label + " word '" + to_string(w) + "': realized " + phi.get_str() + " vs oracle " + want_phi.get_str();
    });
    if (psi && want_psi) {
      t.expect(*psi == *want_psi, [&] {
        return label + " word '" + to_string(w) + "': realized psi " + psi->get_str() + " vs oracle " + want_psi->get_str();
      });
    }
  });
}

CheckResult pair_kind(const VerifyConfig& cfg, PairIndependence kind, const std::string& name, std::uint64_t salt) {
  Tally t;
  Rng rng = seeded(cfg, salt);
  for (unsigned i = 0; i < cfg.random_models; ++i) {
    const auto m1 = random_matrix_model(rng, model_dim(i), kSingle);
    const auto m2 = random_matrix_model(rng, model_dim(i / 3), kSingle);
    States states{{1, states_of(m1)}, {2, states_of(m2)}};
    // In the tensor realization the psi weight of algebra 2 is its own phi.
    if (kind == PairIndependence::orthogonal) states[2].psi = states[2].phi;
    const auto f = realize_pair(kind, m1, m2);
    compare_words(t, "model " + std::to_string(i), f, cfg.max_word, 0, [&](const Word& w) {
      return std::pair<Rational, std::optional<Rational>>{oracle_moment(kind, w, states), std::nullopt};
    });
  }
  return t.finish(name, std::to_string(cfg.random_models) + " model pairs, dims<=3, words<=" + std::to_string(cfg.max_word));
}

CheckResult cmonotone_pair(const VerifyConfig& cfg, CMonotoneForm form, const std::string& name, std::uint64_t salt) {
  Tally t;
  Rng rng = seeded(cfg, salt);
  for (unsigned i = 0; i < cfg.random_models; ++i) {
    const auto m1 = random_matrix_model(rng, model_dim(i), kSingle);
    const auto m2 = random_matrix_model(rng, model_dim(i / 3), kSingle);
    const States states{{1, states_of(m1)}, {2, states_of(m2)}};
    const auto f = realize_cmonotone_pair(m1, m2, form);
    compare_words(t, "model " + std::to_string(i), f, cfg.max_word, 0, [&](const Word& w) {
      const auto o = oracle_cmonotone(w, states);
      return std::pair<Rational, std::optional<Rational>>{o.phi, o.psi};
    });
    if (form == CMonotoneForm::projected) {
      const auto standard = realize_cmonotone_pair(m1, m2, CMonotoneForm::standard);
      f.for_each_word(cfg.max_word, [&](const Word& w, const Rational& phi, const std::optional<Rational>& psi) {
        t.expect(phi == standard.phi(w) && psi && *psi == standard.psi(w),
                 [&] { return "model " + std::to_string(i) + " word '" + to_string(w) + "': forms differ"; });
      });
    }
  }
  return t.finish(name, std::to_string(cfg.random_models) + " model pairs, dims<=3, words<=" + std::to_string(cfg.max_word));
}

CheckResult cmonotone_family3(const VerifyConfig& cfg) {
  Tally t;
  Rng rng = seeded(cfg, 304);
  const unsigned triples = std::max(1U, cfg.random_models / 3 + (cfg.random_models % 3 ? 1 : 0));
  for (unsigned i = 0; i < triples; ++i) {
    std::vector<MatrixModel> models;
    for (unsigned j = 0; j < 3; ++j) models.push_back(random_matrix_model(rng, model_dim(i + j), kSingle));
    const States states{{1, states_of(models[0])}, {2, states_of(models[1])}, {3, states_of(models[2])}};
    const auto f = realize_cmonotone_family(models);
    compare_words(t, "triple " + std::to_string(i), f, cfg.family_max_word, 0, [&](const Word& w) {
      const auto o = oracle_cmonotone(w, states);
      return std::pair<Rational, std::optional<Rational>>{o.phi, o.psi};
    });
  }
  return t.finish("independence.cmonotone_family3", std::to_string(triples) + " model triples (" +
                                                        std::to_string(3 * triples) + " models), dims<=3, words<=" +
                                                        std::to_string(cfg.family_max_word));
}

// Closed-form expansions of a b a' and a b a' b' a'', written out term by term.
template <typename V>
V three_letter_expansion(const StatePair<V>& s1, const StatePair<V>& s2) {
  auto p1 = [&](std::vector<std::string> n) { return s1.phi(n); };
  const V b = s2.phi(std::vector<std::string>{"b"});
  const V qb = s2.psi(std::vector<std::string>{"b"});
  return p1({"a"}) * p1({"a'"}) * b + p1({"a", "a'"}) * qb - p1({"a"}) * p1({"a'"}) * qb;
}

template <typename V>
V five_letter_expansion(const StatePair<V>& s1, const StatePair<V>& s2) {
  auto p1 = [&](std::vector<std::string> n) { return s1.phi(n); };
  const V b = s2.phi(std::vector<std::string>{"b"});
  const V b2 = s2.phi(std::vector<std::string>{"b'"});
  const V qb = s2.psi(std::vector<std::string>{"b"});
  const V qb2 = s2.psi(std::vector<std::string>{"b'"});
  const V a = p1({"a"}), a1 = p1({"a'"}), a2 = p1({"a''"});
  return a * a1 * a2 * b * b2 + a * (p1({"a'", "a''"}) - a1 * a2) * b * qb2 +
         (p1({"a", "a'"}) - a * a1) * a2 * b2 * qb +
         (p1({"a", "a'", "a''"}) - p1({"a", "a'"}) * a2 - a * p1({"a'", "a''"}) + a * a1 * a2) * qb * qb2;
}

CheckResult worked_expansions(const VerifyConfig& cfg) {
  Tally t;
  const auto s1 = symbolic_states(1);
  const auto s2 = symbolic_states(2);
  const std::map<unsigned, StatePair<Polynomial>> sym{{1, s1}, {2, s2}};
  const Word w31 = parse_word("1:a 2:b 1:a'");
  const Word w32 = parse_word("1:a 2:b 1:a' 2:b' 1:a''");
  const auto o31 = oracle_cmonotone(w31, sym).phi;
  const auto o32 = oracle_cmonotone(w32, sym).phi;
  t.expect(o31 == three_letter_expansion(s1, s2), [&] { return "three-letter word: recursion gives " + to_string(o31); });
  t.expect(o32 == five_letter_expansion(s1, s2), [&] { return "five-letter word: recursion gives " + to_string(o32); });

  Rng rng = seeded(cfg, 305);
  const std::vector<std::string> n1{"a", "a'", "a''"};
  const std::vector<std::string> n2{"b", "b'"};
  for (unsigned i = 0; i < cfg.random_models; ++i) {
    const auto m1 = random_matrix_model(rng, model_dim(i), n1);
    const auto m2 = random_matrix_model(rng, model_dim(i / 3), n2);
    const auto f = realize_cmonotone_pair(m1, m2);
    const auto r1 = states_of(m1);
    const auto r2 = states_of(m2);
    t.expect(f.phi(w31) == three_letter_expansion(r1, r2), [&] { return "three-letter word: realized value differs, model " + std::to_string(i); });
    t.expect(f.phi(w32) == five_letter_expansion(r1, r2), [&] { return "five-letter word: realized value differs, model " + std::to_string(i); });
  }
  return t.finish("independence.worked_expansions", "symbolic expansions and " + std::to_string(cfg.random_models) + " realized models");
}

CheckResult order4_variant(const VerifyConfig& cfg) {
  Tally t;
  Rng rng = seeded(cfg, 306);
  const unsigned len = std::min(cfg.max_word, 6U);
  for (unsigned i = 0; i < cfg.random_models / 5 + 1; ++i) {
    const std::vector<MatrixModel> models{random_matrix_model(rng, model_dim(i), kSingle),
                                          random_matrix_model(rng, model_dim(i + 1), kSingle)};
    const auto family = realize_cmonotone_family(models);
    const auto pair = realize_cmonotone_pair(models[0], models[1]);
    family.for_each_word(len, [&](const Word& w, const Rational& phi, const std::optional<Rational>& psi) {
      t.expect(phi == pair.phi(w) && psi && *psi == pair.psi(w),
               [&] { return "model " + std::to_string(i) + " word '" + to_string(w) + "'"; });
    });
  }
  return t.finish("independence.order4_variant", "two-algebra family vs triple tensor, words<=" + std::to_string(len));
}

CheckResult distinct_elements(const VerifyConfig& cfg) {
  Tally t;
  Rng rng = seeded(cfg, 307);
  const std::vector<std::string> names{"a", "a'"};
  const unsigned len = std::min(cfg.max_word, 5U);
  for (unsigned i = 0; i < cfg.random_models / 5 + 1; ++i) {
    const auto m1 = random_matrix_model(rng, model_dim(i), names);
    const auto m2 = random_matrix_model(rng, model_dim(i + 1), names);
    const auto m3 = random_matrix_model(rng, model_dim(i + 2), names);
    States states{{1, states_of(m1)}, {2, states_of(m2)}, {3, states_of(m3)}};
    const auto f = realize_cmonotone_pair(m1, m2);
    compare_words(t, "model " + std::to_string(i), f, len, 0, [&](const Word& w) {
      const auto o = oracle_cmonotone(w, states);
      return std::pair<Rational, std::optional<Rational>>{o.phi, o.psi};
    });
    const std::vector<MatrixModel> trio{m1, m2, m3};
    const auto fam = realize_cmonotone_family(trio);
    compare_words(t, "triple " + std::to_string(i), fam, std::min(len, 4U), 0, [&](const Word& w) {
      const auto o = oracle_cmonotone(w, states);
      return std::pair<Rational, std::optional<Rational>>{o.phi, o.psi};
    });
    for (auto kind : {PairIndependence::boolean, PairIndependence::monotone, PairIndependence::tensor}) {
      const auto p = realize_pair(kind, m1, m2);
      compare_words(t, "pair model " + std::to_string(i), p, len, 0, [&](const Word& w) {
        return std::pair<Rational, std::optional<Rational>>{oracle_moment(kind, w, states), std::nullopt};
      });
    }
  }
  return t.finish("independence.distinct_elements", "two elements per algebra, words<=" + std::to_string(len));
}

CheckResult local_max_choice(const VerifyConfig& cfg) {
  Tally t;
  Rng rng = seeded(cfg, 308);
  const unsigned len = std::min(cfg.max_word, 7U);
  const std::vector<Letter> letters{{1, "a"}, {2, "a"}, {3, "a"}};
  const auto words = all_words(letters, len);
  for (unsigned i = 0; i < 3; ++i) {
    const auto m1 = random_matrix_model(rng, model_dim(i), kSingle);
    const auto m2 = random_matrix_model(rng, model_dim(i + 1), kSingle);
    const auto m3 = random_matrix_model(rng, model_dim(i + 2), kSingle);
    const States states{{1, states_of(m1)}, {2, states_of(m2)}, {3, states_of(m3)}};
    for (const auto& w : words) {
      const auto all = oracle_cmonotone_all_orders(w, states);
      t.expect(all && *all == oracle_cmonotone(w, states).phi,
               [&] { return "word '" + to_string(w) + "' depends on the reduction order"; });
    }
  }
  const std::map<unsigned, StatePair<Polynomial>> sym{{1, symbolic_states(1)}, {2, symbolic_states(2)}, {3, symbolic_states(3)}};
  for (const auto& w : all_words(letters, std::min(len, 5U))) {
    t.expect(oracle_cmonotone_all_orders(w, sym).has_value(),
             [&] { return "symbolic word '" + to_string(w) + "' depends on the reduction order"; });
  }
  return t.finish("independence.local_max_choice", "every reduction order, words<=" + std::to_string(len));
}

CheckResult psi_equals_phi(const VerifyConfig& cfg) {
  Tally t;
  Rng rng = seeded(cfg, 309);
  const std::vector<Letter> letters{{1, "a"}, {2, "a"}, {3, "a"}};
  const auto words = all_words(letters, std::min(cfg.max_word, 6U));
  for (unsigned i = 0; i < 5; ++i) {
    const auto m1 = random_matrix_model(rng, model_dim(i), kSingle);
    const auto m2 = random_matrix_model(rng, model_dim(i + 1), kSingle);
    const auto m3 = random_matrix_model(rng, model_dim(i + 2), kSingle);
    States states{{1, states_of(m1)}, {2, states_of(m2)}, {3, states_of(m3)}};
    for (auto& [j, s] : states) s.psi = s.phi;
    for (const auto& w : words) {
      t.expect(oracle_cmonotone(w, states).phi == oracle_moment(PairIndependence::monotone, w, states),
               [&] { return "word '" + to_string(w) + "'"; });
    }
  }
  return t.finish("independence.psi_equals_phi", "c-monotone with psi = phi vs monotone");
}

CheckResult separator(const VerifyConfig& cfg) {
  Tally t;
  Rng rng = seeded(cfg, 310);
  const std::vector<Letter> two{{1, "a"}, {2, "a"}};
  const std::vector<Letter> three{{1, "a"}, {2, "a"}, {3, "a"}};
  for (unsigned i = 0; i < 5; ++i) {
    const std::vector<MatrixModel> models{random_matrix_model(rng, model_dim(i), kSingle),
                                          random_matrix_model(rng, model_dim(i + 1), kSingle),
                                          random_matrix_model(rng, model_dim(i + 2), kSingle)};
    const auto pair = realize_cmonotone_pair(models[0], models[1]);
    const auto family = realize_cmonotone_family(models);
    auto check = [&](const RealizedFamily& f, std::span<const Letter> letters, unsigned len) {
      const auto words = all_words(letters, len);
      for (const auto& left : words) {
        for (const auto& right : words) {
          Vector v(f.dim());
          v[f.phi_index()] = 1;
          v = f.apply(left, *f.separator * f.apply(right, v));
          t.expect(v[f.phi_index()] == f.phi(left) * f.phi(right),
                   [&] { return "'" + to_string(left) + "' P '" + to_string(right) + "'"; });
        }
      }
    };
    check(pair, two, 3);
    check(family, three, 2);
  }
  return t.finish("independence.separator", "phi(W P W') = phi(W) phi(W')");
}

CheckResult orthogonal_boundary(const VerifyConfig& cfg) {
  Tally t;
  Rng rng = seeded(cfg, 311);
  for (unsigned i = 0; i < 10; ++i) {
    const auto m1 = random_matrix_model(rng, model_dim(i), kSingle);
    const auto m2 = random_matrix_model(rng, model_dim(i + 1), kSingle);
    const auto f = realize_pair(PairIndependence::orthogonal, m1, m2);
    f.for_each_word(std::min(cfg.max_word, 6U), [&](const Word& w, const Rational& phi, const std::optional<Rational>&) {
      if (w.front().algebra == 2 || w.back().algebra == 2)
        t.expect(phi == 0, [&] { return "word '" + to_string(w) + "' gives " + phi.get_str(); });
    });
  }
  return t.finish("independence.orthogonal_boundary", "words starting or ending in algebra 2 vanish");
}

MatrixModel graph_model(const Graph& g, bool shifted) {
  MatrixModel m;
  m.dim = g.vertex_count();
  Matrix a = adjacency_matrix(g);
  if (shifted) a -= Matrix::identity(m.dim);
  m.elements.emplace("a", std::move(a));
  m.xi = g.root();
  m.eta = g.second_root();
  return m;
}

CheckResult bridge(const VerifyConfig& cfg, bool loops) {
  Tally t;
  VerifyConfig small = cfg;
  small.random_graphs = std::max(1U, cfg.random_graphs / 4);
  const auto cases = graph_cases(small, loops ? 313 : 312, loops);
  for (const auto& c : cases) {
    const auto d = loops ? decompose_lemma51(c.g1, c.g2) : decompose_corollary42(c.g1, c.g2);
    Matrix s1 = d.restricted(d.s1);
    Matrix s2 = d.restricted(d.s2);
    if (loops) {
      s1 -= Matrix::identity(s1.rows());
      s2 -= Matrix::identity(s2.rows());
    }
    std::map<Letter, SparseMatrix> ops;
    ops.emplace(Letter{1, "a"}, SparseMatrix(s1));
    ops.emplace(Letter{2, "a"}, SparseMatrix(s2));
    const RealizedFamily f(std::move(ops), d.e_position, d.f_position);
    const auto m1 = graph_model(c.g1, loops);
    const auto m2 = graph_model(c.g2, loops);
    const States states{{1, states_of(m1)}, {2, states_of(m2)}};
    compare_words(t, c.name, f, cfg.max_word, 0, [&](const Word& w) {
      const auto o = oracle_cmonotone(w, states);
      return std::pair<Rational, std::optional<Rational>>{o.phi, o.psi};
    });
  }
  return t.finish(loops ? "independence.loop_pair_bridge" : "independence.c_comb_pair_bridge",
                  std::to_string(cases.size()) + " graph pairs, words<=" + std::to_string(cfg.max_word));
}

std::vector<CheckSpec> make_checks() {
  using S = Suite;
  std::vector<CheckSpec> v;
  v.push_back({"products.three_route_additive", S::products, 1, three_route_additive});
  v.push_back({"products.f_root_monotone_split", S::products, 2, f_root_monotone_split});
  v.push_back({"products.multiplicative_loop_product", S::products, 4, multiplicative_loop_product});
  v.push_back({"products.superposition", S::products, 6, superposition});
  v.push_back({"products.comb_at_collapse", S::products, 6, comb_at_collapse});
  v.push_back({"products.decompositions", S::products, 6, decompositions});
  v.push_back({"products.flip", S::products, 6, flip});
  v.push_back({"products.vertex_counts", S::products, 0, vertex_counts});
  v.push_back({"products.walk_moments", S::products, 0, walk_moments_all_products});

  v.push_back({"transforms.collapse_additive_nu2_eq_mu2", S::transforms, 5, collapse_additive});
  v.push_back({"transforms.collapse_multiplicative_mu2_delta1", S::transforms, 5, collapse_multiplicative_delta1});
  v.push_back({"transforms.collapse_multiplicative_nu2_eq_mu2", S::transforms, 5, collapse_multiplicative_monotone});
  v.push_back({"transforms.boolean_orthogonal_decomposition", S::transforms, 5, boolean_orthogonal_decomposition});
  v.push_back({"transforms.coefficient_formula", S::transforms, 0, coefficient_formulas});
  v.push_back({"transforms.roundtrips", S::transforms, 0, series_roundtrips});
  v.push_back({"transforms.F_composition", S::transforms, 0, F_composition});
  v.push_back({"transforms.additive_laws", S::transforms, 0, additive_laws});
  v.push_back({"transforms.graph_consistency", S::transforms, 0, graph_consistency});

  v.push_back({"independence.pair_boolean", S::independence, 3, [](const VerifyConfig& c) {
                 return pair_kind(c, PairIndependence::boolean, "independence.pair_boolean", 301);
               }});
  v.push_back({"independence.pair_monotone", S::independence, 3, [](const VerifyConfig& c) {
                 return pair_kind(c, PairIndependence::monotone, "independence.pair_monotone", 302);
               }});
  v.push_back({"independence.pair_orthogonal", S::independence, 3, [](const VerifyConfig& c) {
                 return pair_kind(c, PairIndependence::orthogonal, "independence.pair_orthogonal", 303);
               }});
  v.push_back({"independence.pair_tensor", S::independence, 0, [](const VerifyConfig& c) {
                 return pair_kind(c, PairIndependence::tensor, "independence.pair_tensor", 314);
               }});
  v.push_back({"independence.cmonotone_pair", S::independence, 3, [](const VerifyConfig& c) {
                 return cmonotone_pair(c, CMonotoneForm::standard, "independence.cmonotone_pair", 315);
               }});
  v.push_back({"independence.cmonotone_projected_form", S::independence, 3, [](const VerifyConfig& c) {
                 return cmonotone_pair(c, CMonotoneForm::projected, "independence.cmonotone_projected_form", 316);
               }});
  v.push_back({"independence.cmonotone_family3", S::independence, 3, cmonotone_family3});
  v.push_back({"independence.worked_expansions", S::independence, 3, worked_expansions});
  v.push_back({"independence.order4_variant", S::independence, 0, order4_variant});
  v.push_back({"independence.distinct_elements", S::independence, 0, distinct_elements});
  v.push_back({"independence.local_max_choice", S::independence, 0, local_max_choice});
  v.push_back({"independence.psi_equals_phi", S::independence, 0, psi_equals_phi});
  v.push_back({"independence.separator", S::independence, 0, separator});
  v.push_back({"independence.orthogonal_boundary", S::independence, 0, orthogonal_boundary});
  v.push_back({"independence.c_comb_pair_bridge", S::independence, 0,
               [](const VerifyConfig& c) { return bridge(c, false); }});
  v.push_back({"independence.loop_pair_bridge", S::independence, 0,
               [](const VerifyConfig& c) { return bridge(c, true); }});
  return v;
}

CheckResult run_guarded(const CheckSpec& spec, const VerifyConfig& cfg) {
  try {
    return spec.run(cfg);
  } catch (const std::exception& e) {
    return {spec.name, false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "products") return Suite::products;
  if (name == "transforms") return Suite::transforms;
  if (name == "independence") return Suite::independence;
  if (name == "all") return Suite::all;
  throw Error("unknown suite '" + std::string(name) + "' (expected products, transforms, independence or all)");
}

const std::vector<CheckSpec>& all_checks() {
  static const std::vector<CheckSpec> checks = make_checks();
  return checks;
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const CheckResult& c) { return !c.passed; }));
}

void Report::write(std::ostream& os) const {
  for (const auto& c : checks_) os << "CHECK " << c.name << ' ' << (c.passed ? "PASS" : "FAIL") << ' ' << c.detail << '\n';
  os << "SUMMARY " << checks_.size() << " checks, " << checks_.size() - failures() << " passed, " << failures()
     << " failed\n";
}

Report run_suite(Suite suite, const VerifyConfig& config) {
  Report r;
  for (const auto& spec : all_checks())
    if (suite == Suite::all || spec.suite == suite) r.add(run_guarded(spec, config));
  return r;
}

Report run_criterion(int criterion, const VerifyConfig& config) {
  Report r;
  for (const auto& spec : all_checks())
    if (spec.criterion == criterion) r.add(run_guarded(spec, config));
  return r;
}

}  // namespace ccomb
