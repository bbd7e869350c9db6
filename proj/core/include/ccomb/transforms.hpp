#ifndef CCOMB_TRANSFORMS_HPP
#define CCOMB_TRANSFORMS_HPP

// Truncated formal power series over exact rationals and the transforms built
// on them: reciprocal Cauchy transforms F, moment generating series psi and
// eta = psi / (1 + psi), with the additive and multiplicative convolutions
// they linearize.
//
// Truncation rule: every operation on order-N inputs returns an order-N result
// whose coefficients are all exact (nothing beyond order N is ever guessed).

#include <iosfwd>
#include <optional>
#include <string>
#include <span>
#include <vector>

#include "ccomb/exact_linalg.hpp"
#include "ccomb/moment_series.hpp"

namespace ccomb {

/// c_0 + c_1 x + ... + c_N x^N.
class PowerSeries {
 public:
  PowerSeries() = default;
  explicit PowerSeries(std::vector<Rational> coefficients);

  static PowerSeries zero(unsigned order);
  static PowerSeries one(unsigned order);
  /// The series x.
  static PowerSeries variable(unsigned order);

  unsigned order() const noexcept { return static_cast<unsigned>(c_.size() - 1); }
  const Rational& operator[](std::size_t n) const { return c_[n]; }
  std::span<const Rational> coefficients() const noexcept { return c_; }
  bool is_zero() const;

  PowerSeries truncated(unsigned order) const;

  PowerSeries& operator+=(const PowerSeries& other);
  PowerSeries& operator-=(const PowerSeries& other);
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const Rational& s, PowerSeries a);

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> c_;
};

/// 1 / s; throws SeriesError if s[0] == 0.
PowerSeries reciprocal(const PowerSeries& s);
/// outer(inner(x)); throws SeriesError unless inner[0] == 0.
PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner);
/// s / x for s[0] == 0; the result has order one less (SeriesError otherwise).
PowerSeries divide_by_x(const PowerSeries& s);

/// Reciprocal Cauchy transform F(z) = 1 / G(z) truncated at order N, stored
/// through w = 1/z as F(z) = z r(w) with r(0) = 1. Coefficient c_0 of z^0 is
/// r_1 and coefficient c_n of z^{-n} is r_{n+1}.
class FSeries {
 public:
  /// Throws SeriesError unless r[0] == 1.
  explicit FSeries(PowerSeries r);
  /// F(z) = z.
  static FSeries identity(unsigned order);

  unsigned order() const noexcept { return r_.order(); }
  const PowerSeries& reduced() const noexcept { return r_; }
  /// c_0 for n = 0, else the coefficient of z^{-n}; n ranges over 0..N-1.
  const Rational& coefficient(unsigned n) const;

  friend bool operator==(const FSeries&, const FSeries&) = default;

 private:
  PowerSeries r_;
};

std::ostream& operator<<(std::ostream& os, const FSeries& f);

FSeries moments_to_F(const MomentSeries& m);
MomentSeries F_to_moments(const FSeries& f);

/// F1(F2(z)).
FSeries compose_F(const FSeries& f1, const FSeries& f2);

enum class Convolution { monotone, boolean, orthogonal, c_monotone };

/// The F-transform identity of the given convolution, expanded back to moments.
/// nu2 is required for c_monotone (SeriesError otherwise) and ignored by the others.
MomentSeries additive_convolve(Convolution kind, const MomentSeries& mu1, const MomentSeries& mu2,
                               const std::optional<MomentSeries>& nu2 = std::nullopt);

/// A series with zero constant term: coefficient(n) for n = 1..N.
class OriginSeries {
 public:
  /// Throws SeriesError unless s[0] == 0.
  explicit OriginSeries(PowerSeries s);
  /// Builds from coefficients of z^1..z^N.
  static OriginSeries from_coefficients(std::vector<Rational> coefficients);

  unsigned order() const noexcept { return s_.order(); }
  const PowerSeries& series() const noexcept { return s_; }
  /// Coefficient of z^n; n must be in 1..N.
  const Rational& coefficient(unsigned n) const;
  bool is_zero() const { return s_.is_zero(); }

  friend bool operator==(const OriginSeries&, const OriginSeries&) = default;

 private:
  PowerSeries s_;
};

/// psi(z) = sum_{n >= 1} M_n z^n.
struct PsiSeries : OriginSeries {
  using OriginSeries::OriginSeries;
  explicit PsiSeries(OriginSeries s) : OriginSeries(std::move(s)) {}
};

/// eta(z) = psi / (1 + psi) = sum_{n >= 1} N(n) z^n.
struct EtaSeries : OriginSeries {
  using OriginSeries::OriginSeries;
  explicit EtaSeries(OriginSeries s) : OriginSeries(std::move(s)) {}
  /// eta(z) = z, the transform of the point mass at one.
  static EtaSeries identity(unsigned order);
};

PsiSeries psi_from_moments(const MomentSeries& m);
MomentSeries moments_from_psi(const PsiSeries& p);
EtaSeries eta_from_psi(const PsiSeries& p);
PsiSeries psi_from_eta(const EtaSeries& h);
EtaSeries eta_from_moments(const MomentSeries& m);

/// The eta-transform identity of the given convolution:
///   monotone    eta1(eta2(z))
///   boolean     eta1(z) eta2(z) / z
///   orthogonal  z eta1(eta2(z)) / eta2(z)
///   c_monotone  eta_mu2(z) eta1(eta_nu2(z)) / eta_nu2(z)
/// Quotients are expanded as sum_k N1(k) h^{k-1}, which only needs h != 0.
/// Throws DivisorVanishes when the divisor is identically zero (its
/// distribution is concentrated at zero) and SeriesError if nu2 is missing
/// for c_monotone.
EtaSeries multiplicative_convolve(Convolution kind, const EtaSeries& mu1, const EtaSeries& mu2,
                                  const std::optional<EtaSeries>& nu2 = std::nullopt);

/// How the r = 1 term of the monotone-type composition sums is treated.
enum class SumConvention {
  /// Sum over every r >= 1; this is the expansion of eta1(eta2(z)) and its
  /// c-monotone analogue, so it agrees with multiplicative_convolve.
  complete,
  /// Sum over r >= 2 with the base case N(1) = N1(1), as the sums are usually
  /// printed. For n >= 2 this drops the r = 1 term N1(1) N_mu2(n); at n = 1
  /// it returns N1(1) instead of N1(1) N_mu2(1).
  from_r2,
};

/// Coefficient n of the convolution evaluated by exhaustive enumeration of
/// integer compositions. nu2 is required for c_monotone. The convention only
/// affects the monotone and c_monotone kinds.
Rational coefficient_formula(Convolution kind, unsigned n, const EtaSeries& mu1, const EtaSeries& mu2,
                             const std::optional<EtaSeries>& nu2 = std::nullopt,
                             SumConvention convention = SumConvention::complete);

/// Writes "n,exact,decimal" rows for values[first..], numbered from `first`.
void write_coefficient_csv(std::ostream& os, std::span<const Rational> values, unsigned first);

/// Reads a moment table: one row per moment, either "value" or "n,value[,...]",
/// with an optional header line starting with "n". Rows must be numbered
/// 0, 1, 2, ... Values are exact fractions such as "3" or "-5/2".
/// Throws ParseError on malformed rows and SeriesError if M0 != 1.
MomentSeries parse_moment_table(const std::string& text);

/// Decimal rendering with 12 significant digits.
std::string to_decimal(const Rational& q);

}  // namespace ccomb

#endif  // CCOMB_TRANSFORMS_HPP
