#ifndef CCOMB_RANDOM_HPP
#define CCOMB_RANDOM_HPP

// Seeded generators for the randomized identity checks. Draws use only the raw
// output of std::mt19937_64, so a seed gives the same cases on every platform.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>

#include "ccomb/graphs.hpp"
#include "ccomb/independence.hpp"
#include "ccomb/transforms.hpp"

namespace ccomb {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
long uniform_int(Rng& rng, long lo, long hi);

/// num / den with num in [-max_num, max_num] and den in [1, max_den].
Rational random_rational(Rng& rng, long max_num = 3, long max_den = 3);

struct RandomGraphOptions {
  std::size_t min_vertices = 2;
  std::size_t max_vertices = 6;
  /// Probability, in percent, of each extra non-tree edge.
  unsigned extra_edge_percent = 20;
  /// Probability, in percent, of a loop at each vertex.
  unsigned loop_percent = 0;
};

/// Connected uncolored graph (random spanning tree plus extra edges and loops)
/// with random roots e and f.
Graph random_birooted_graph(Rng& rng, const RandomGraphOptions& options = {});

Matrix random_rational_matrix(Rng& rng, std::size_t n);

/// Model of the given dimension with one random element per name, xi and eta
/// drawn independently.
MatrixModel random_matrix_model(Rng& rng, std::size_t dim, std::span<const std::string> names);

/// M_0 = 1 followed by random rationals.
MomentSeries random_moments(Rng& rng, unsigned order);

/// Random eta coefficients; the first coefficient is nonzero when asked.
EtaSeries random_eta(Rng& rng, unsigned order, bool nonzero_first = true);

}  // namespace ccomb

#endif  // CCOMB_RANDOM_HPP
