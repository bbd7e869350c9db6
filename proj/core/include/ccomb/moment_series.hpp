#ifndef CCOMB_MOMENT_SERIES_HPP
#define CCOMB_MOMENT_SERIES_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "ccomb/exact_linalg.hpp"

namespace ccomb {

/// Truncated moment sequence M_0..M_N of a normalized distribution (M_0 = 1).
class MomentSeries {
 public:
  /// Throws SeriesError unless values has at least two entries and values[0] == 1.
  explicit MomentSeries(std::vector<Rational> values);

  /// Moments of the point mass at zero: (1, 0, ..., 0).
  static MomentSeries delta_zero(unsigned order);
  /// Moments of the point mass at one: (1, 1, ..., 1).
  static MomentSeries delta_one(unsigned order);

  unsigned order() const noexcept { return static_cast<unsigned>(values_.size() - 1); }
  const Rational& operator[](std::size_t n) const { return values_[n]; }
  const Rational& at(std::size_t n) const;
  std::span<const Rational> values() const noexcept { return values_; }

  /// The first order + 1 moments.
  MomentSeries truncated(unsigned order) const;

  friend bool operator==(const MomentSeries&, const MomentSeries&) = default;

 private:
  std::vector<Rational> values_;
};

}  // namespace ccomb

#endif  // CCOMB_MOMENT_SERIES_HPP
