#include "ccomb/random.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace ccomb {

long uniform_int(Rng& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng() % span);
}

Rational random_rational(Rng& rng, long max_num, long max_den) {
  const long num = uniform_int(rng, -max_num, max_num);
  return ratio(num, uniform_int(rng, 1, max_den));
}

namespace {

bool chance(Rng& rng, unsigned percent) { return uniform_int(rng, 0, 99) < static_cast<long>(percent); }

}  // namespace

Graph random_birooted_graph(Rng& rng, const RandomGraphOptions& options) {
  const auto n = static_cast<std::size_t>(
      uniform_int(rng, static_cast<long>(options.min_vertices), static_cast<long>(options.max_vertices)));
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({static_cast<Vertex>(uniform_int(rng, 0, static_cast<long>(v) - 1)), v});
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const bool present = std::any_of(edges.begin(), edges.end(),
                                       [&](const Edge& e) { return e.u == u && e.v == v; });
      if (!present && chance(rng, options.extra_edge_percent)) edges.push_back({u, v});
    }
    if (chance(rng, options.loop_percent)) edges.push_back({u, u});
  }
  const auto e = static_cast<Vertex>(uniform_int(rng, 0, static_cast<long>(n) - 1));
  const auto f = static_cast<Vertex>(uniform_int(rng, 0, static_cast<long>(n) - 1));
  return Graph(n, std::move(edges), e, f);
}

Matrix random_rational_matrix(Rng& rng, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational(rng);
  return m;
}

MatrixModel random_matrix_model(Rng& rng, std::size_t dim, std::span<const std::string> names) {
  MatrixModel m;
  m.dim = dim;
  for (const auto& name : names) m.elements.emplace(name, random_rational_matrix(rng, dim));
  m.xi = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(dim) - 1));
  m.eta = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(dim) - 1));
  return m;
}

MomentSeries random_moments(Rng& rng, unsigned order) {
  std::vector<Rational> m(order + 1);
  m[0] = 1;
  for (unsigned n = 1; n <= order; ++n) m[n] = random_rational(rng);
  return MomentSeries(std::move(m));
}

EtaSeries random_eta(Rng& rng, unsigned order, bool nonzero_first) {
  std::vector<Rational> c(order);
  for (auto& q : c) q = random_rational(rng);
  while (nonzero_first && c[0] == 0) c[0] = random_rational(rng);
  return EtaSeries(OriginSeries::from_coefficients(std::move(c)));
}

}  // namespace ccomb
