#include "ccomb/transforms.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <functional>
#include <sstream>
#include <ostream>
#include <string>
#include <utility>

#include "ccomb/errors.hpp"

namespace ccomb {

// ---------------------------------------------------------------- PowerSeries

PowerSeries::PowerSeries(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
  if (c_.empty()) throw SeriesError("power series needs at least a constant term");
}

PowerSeries PowerSeries::zero(unsigned order) { return PowerSeries(std::vector<Rational>(order + 1)); }

PowerSeries PowerSeries::one(unsigned order) {
  std::vector<Rational> c(order + 1);
  c[0] = 1;
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::variable(unsigned order) {
  std::vector<Rational> c(order + 1);
  if (order >= 1) c[1] = 1;
  return PowerSeries(std::move(c));
}

bool PowerSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

PowerSeries PowerSeries::truncated(unsigned order) const {
  if (order > this->order()) throw SeriesError("cannot extend a truncated series");
  return PowerSeries(std::vector<Rational>(c_.begin(), c_.begin() + order + 1));
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& other) {
  const auto n = std::min(c_.size(), other.c_.size());
  c_.resize(n);
  for (std::size_t i = 0; i < n; ++i) c_[i] += other.c_[i];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& other) {
  const auto n = std::min(c_.size(), other.c_.size());
  c_.resize(n);
  for (std::size_t i = 0; i < n; ++i) c_[i] -= other.c_[i];
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const unsigned order = std::min(a.order(), b.order());
  std::vector<Rational> c(order + 1);
  for (unsigned i = 0; i <= order; ++i) {
    if (a.c_[i] == 0) continue;
    for (unsigned j = 0; i + j <= order; ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return PowerSeries(std::move(c));
}

PowerSeries operator*(const Rational& s, PowerSeries a) {
  for (auto& q : a.c_) q *= s;
  return a;
}

PowerSeries reciprocal(const PowerSeries& s) {
  if (s[0] == 0) throw SeriesError("reciprocal of a series with zero constant term");
  const unsigned order = s.order();
  std::vector<Rational> r(order + 1);
  r[0] = 1 / s[0];
  for (unsigned n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (unsigned k = 1; k <= n; ++k) acc += s[k] * r[n - k];
    r[n] = -acc * r[0];
  }
  return PowerSeries(std::move(r));
}

PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner) {
  if (inner[0] != 0) throw SeriesError("composition needs an inner series without constant term");
  const unsigned order = std::min(outer.order(), inner.order());
  // Horner: outer_0 + inner (outer_1 + inner (outer_2 + ...)).
  PowerSeries acc = PowerSeries::zero(order);
  for (unsigned k = outer.order() + 1; k-- > 0;) {
    acc = acc * inner.truncated(order);
    std::vector<Rational> c(acc.coefficients().begin(), acc.coefficients().end());
    c[0] += outer[k];
    acc = PowerSeries(std::move(c));
  }
  return acc;
}

PowerSeries divide_by_x(const PowerSeries& s) {
  if (s[0] != 0) throw SeriesError("divide_by_x needs a series without constant term");
  if (s.order() == 0) throw SeriesError("divide_by_x on an order-0 series");
  auto c = s.coefficients();
  return PowerSeries(std::vector<Rational>(c.begin() + 1, c.end()));
}

namespace {

// g (x) h where g has order N - 1, h has zero constant term and order N; every
// coefficient up to x^N is exact because h_0 = 0.
PowerSeries times_origin(const PowerSeries& g, const PowerSeries& h) {
  const unsigned order = h.order();
  if (g.order() + 1 < order) throw SeriesError("times_origin: orders do not line up");
  std::vector<Rational> c(order + 1);
  for (unsigned n = 1; n <= order; ++n)
    for (unsigned k = 1; k <= n; ++k) c[n] += h[k] * g[n - k];
  return PowerSeries(std::move(c));
}

unsigned common_order(unsigned a, unsigned b) {
  if (a != b) throw SeriesError("series have different truncation orders");
  return a;
}

}  // namespace

// ---------------------------------------------------------------- F-transforms

FSeries::FSeries(PowerSeries r) : r_(std::move(r)) {
  if (r_[0] != 1) throw SeriesError("F-series must have leading term z");
}

FSeries FSeries::identity(unsigned order) { return FSeries(PowerSeries::one(order)); }

const Rational& FSeries::coefficient(unsigned n) const {
  if (n + 1 > order()) throw IndexError("F-series coefficient beyond truncation order");
  return r_[n + 1];
}

std::ostream& operator<<(std::ostream& os, const FSeries& f) {
  os << "z";
  for (unsigned n = 0; n + 1 <= f.order(); ++n) {
    const Rational& c = f.coefficient(n);
    if (c == 0) continue;
    os << (c < 0 ? " - " : " + ") << abs(c);
    if (n == 1) os << "/z";
    if (n > 1) os << "/z^" << n;
  }
  return os << " + O(z^-" << f.order() << ")";
}

FSeries moments_to_F(const MomentSeries& m) {
  const auto v = m.values();
  return FSeries(reciprocal(PowerSeries(std::vector<Rational>(v.begin(), v.end()))));
}

MomentSeries F_to_moments(const FSeries& f) {
  const PowerSeries m = reciprocal(f.reduced());
  return MomentSeries(std::vector<Rational>(m.coefficients().begin(), m.coefficients().end()));
}

FSeries compose_F(const FSeries& f1, const FSeries& f2) {
  // 1 / F2(z) = w m2(w) with m2 = 1 / r2, so F1(F2(z)) = z r2(w) r1(w m2(w)).
  const unsigned order = common_order(f1.order(), f2.order());
  const PowerSeries& r2 = f2.reduced();
  const PowerSeries inner = times_origin(reciprocal(r2).truncated(order - 1), PowerSeries::variable(order));
  return FSeries(r2 * compose(f1.reduced(), inner));
}

MomentSeries additive_convolve(Convolution kind, const MomentSeries& mu1, const MomentSeries& mu2,
                               const std::optional<MomentSeries>& nu2) {
  const unsigned order = common_order(mu1.order(), mu2.order());
  const FSeries f1 = moments_to_F(mu1);
  const FSeries f2 = moments_to_F(mu2);
  const PowerSeries one = PowerSeries::one(order);
  switch (kind) {
    case Convolution::monotone:
      return F_to_moments(compose_F(f1, f2));
    case Convolution::boolean:
      return F_to_moments(FSeries(f1.reduced() + f2.reduced() - one));
    case Convolution::orthogonal:
      return F_to_moments(FSeries(compose_F(f1, f2).reduced() - f2.reduced() + one));
    case Convolution::c_monotone: {
      if (!nu2) throw SeriesError("c-monotone convolution needs nu2");
      common_order(order, nu2->order());
      const FSeries fn = moments_to_F(*nu2);
      return F_to_moments(FSeries(compose_F(f1, fn).reduced() + f2.reduced() - fn.reduced()));
    }
  }
  throw SeriesError("unknown convolution kind");
}

// ---------------------------------------------------------------- psi / eta

OriginSeries::OriginSeries(PowerSeries s) : s_(std::move(s)) {
  if (s_[0] != 0) throw SeriesError("series must have zero constant term");
  if (s_.order() == 0) throw SeriesError("series needs order >= 1");
}

OriginSeries OriginSeries::from_coefficients(std::vector<Rational> coefficients) {
  coefficients.insert(coefficients.begin(), Rational(0));
  return OriginSeries(PowerSeries(std::move(coefficients)));
}

const Rational& OriginSeries::coefficient(unsigned n) const {
  if (n == 0 || n > order()) throw IndexError("coefficient index outside 1..N");
  return s_[n];
}

EtaSeries EtaSeries::identity(unsigned order) { return EtaSeries(PowerSeries::variable(order)); }

PsiSeries psi_from_moments(const MomentSeries& m) {
  std::vector<Rational> c(m.values().begin(), m.values().end());
  c[0] = 0;
  return PsiSeries(PowerSeries(std::move(c)));
}

MomentSeries moments_from_psi(const PsiSeries& p) {
  std::vector<Rational> c(p.series().coefficients().begin(), p.series().coefficients().end());
  c[0] = 1;
  return MomentSeries(std::move(c));
}

EtaSeries eta_from_psi(const PsiSeries& p) {
  const PowerSeries& s = p.series();
  return EtaSeries(s * reciprocal(PowerSeries::one(s.order()) + s));
}

PsiSeries psi_from_eta(const EtaSeries& h) {
  const PowerSeries& s = h.series();
  return PsiSeries(s * reciprocal(PowerSeries::one(s.order()) - s));
}

EtaSeries eta_from_moments(const MomentSeries& m) { return eta_from_psi(psi_from_moments(m)); }

namespace {

// sum_k N1(k) h^{k-1}: the quotient eta1(h) / h, order N - 1.
PowerSeries quotient_by_inner(const EtaSeries& eta1, const EtaSeries& h) {
  if (h.is_zero()) throw DivisorVanishes("divisor eta-series vanishes: the distribution is concentrated at zero");
  const unsigned order = h.order() - 1;
  return compose(divide_by_x(eta1.series()), h.series().truncated(order));
}

}  // namespace

EtaSeries multiplicative_convolve(Convolution kind, const EtaSeries& mu1, const EtaSeries& mu2,
                                  const std::optional<EtaSeries>& nu2) {
  const unsigned order = common_order(mu1.order(), mu2.order());
  switch (kind) {
    case Convolution::monotone:
      return EtaSeries(compose(mu1.series(), mu2.series()));
    case Convolution::boolean:
      return EtaSeries(times_origin(divide_by_x(mu1.series()), mu2.series()));
    case Convolution::orthogonal:
      return EtaSeries(times_origin(quotient_by_inner(mu1, mu2), PowerSeries::variable(order)));
    case Convolution::c_monotone:
      if (!nu2) throw SeriesError("c-monotone convolution needs nu2");
      common_order(order, nu2->order());
      return EtaSeries(times_origin(quotient_by_inner(mu1, *nu2), mu2.series()));
  }
  throw SeriesError("unknown convolution kind");
}

// ---------------------------------------------------------------- coefficient sums

namespace {

// Calls visit(parts) for every composition of n into exactly r positive parts.
void for_each_composition(unsigned n, unsigned r, const std::function<void(const std::vector<unsigned>&)>& visit) {
  if (r == 0 || r > n) return;
  std::vector<unsigned> parts(r, 1);
  std::function<void(unsigned, unsigned)> fill = [&](unsigned slot, unsigned left) {
    if (slot + 1 == r) {
      parts[slot] = left;
      visit(parts);
      return;
    }
    for (unsigned k = 1; k + (r - slot - 1) <= left; ++k) {
      parts[slot] = k;
      fill(slot + 1, left - k);
    }
  };
  fill(0, n);
}

// sum_{r >= r_min} N1(r) sum_{k_1 + ... + k_r = n} N_inner(k_1) ... N_inner(k_{r-1}) N_last(k_r).
Rational monotone_type_sum(unsigned n, unsigned r_min, const EtaSeries& mu1, const EtaSeries& inner,
                           const EtaSeries& last) {
  Rational total = 0;
  for (unsigned r = r_min; r <= n; ++r) {
    if (mu1.coefficient(r) == 0) continue;
    Rational inner_sum = 0;
    for_each_composition(n, r, [&](const std::vector<unsigned>& k) {
      Rational term = last.coefficient(k.back());
      for (std::size_t i = 0; i + 1 < k.size(); ++i) term *= inner.coefficient(k[i]);
      inner_sum += term;
    });
    total += mu1.coefficient(r) * inner_sum;
  }
  return total;
}

}  // namespace

Rational coefficient_formula(Convolution kind, unsigned n, const EtaSeries& mu1, const EtaSeries& mu2,
                             const std::optional<EtaSeries>& nu2, SumConvention convention) {
  if (n == 0) throw IndexError("coefficient_formula needs n >= 1");
  if (n > mu1.order() || n > mu2.order()) throw IndexError("coefficient_formula: n beyond truncation order");
  switch (kind) {
    case Convolution::orthogonal: {
      if (n == 1) return mu1.coefficient(1);
      Rational total = 0;
      for (unsigned r = 2; r <= n; ++r) {
        for_each_composition(n - 1, r - 1, [&](const std::vector<unsigned>& k) {
          Rational term = mu1.coefficient(r);
          for (auto part : k) term *= mu2.coefficient(part);
          total += term;
        });
      }
      return total;
    }
    case Convolution::boolean: {
      Rational total = 0;
      for (unsigned j = 1; j <= n; ++j) total += mu1.coefficient(j) * mu2.coefficient(n + 1 - j);
      return total;
    }
    case Convolution::monotone:
    case Convolution::c_monotone: {
      const EtaSeries* inner = &mu2;
      if (kind == Convolution::c_monotone) {
        if (!nu2) throw SeriesError("c-monotone coefficient formula needs nu2");
        if (n > nu2->order()) throw IndexError("coefficient_formula: n beyond truncation order");
        inner = &*nu2;
      }
      if (convention == SumConvention::complete) return monotone_type_sum(n, 1, mu1, *inner, mu2);
      if (n == 1) return mu1.coefficient(1);
      return monotone_type_sum(n, 2, mu1, *inner, mu2);
    }
  }
  throw SeriesError("unknown convolution kind");
}

// ---------------------------------------------------------------- output

std::string to_decimal(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", q.get_d());
  return buf;
}

void write_coefficient_csv(std::ostream& os, std::span<const Rational> values, unsigned first) {
  os << "n,exact,decimal\n";
  for (std::size_t n = first; n < values.size(); ++n) os << n << ',' << values[n] << ',' << to_decimal(values[n]) << '\n';
}

MomentSeries parse_moment_table(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Rational> values;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }), line.end());
    if (line.empty() || line[0] == '#') continue;
    if (values.empty() && line[0] == 'n') continue;
    std::vector<std::string> fields;
    std::stringstream row(line);
    for (std::string f; std::getline(row, f, ',');) fields.push_back(f);
    std::string value = fields.size() == 1 ? fields[0] : fields.size() > 1 ? fields[1] : "";
    if (fields.size() > 1 && fields[0] != std::to_string(values.size()))
      throw ParseError("moment table line " + std::to_string(line_no) + ": expected n = " +
                       std::to_string(values.size()));
    Rational q;
    if (value.empty() || q.set_str(value, 10) != 0 || q.get_den() == 0)
      throw ParseError("moment table line " + std::to_string(line_no) + ": bad value '" + value + "'");
    q.canonicalize();
    values.push_back(std::move(q));
  }
  return MomentSeries(std::move(values));
}

}  // namespace ccomb
