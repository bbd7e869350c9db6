#ifndef CCOMB_INDEPENDENCE_HPP
#define CCOMB_INDEPENDENCE_HPP

// Mixed moments of noncommutative random variables: the defining recursions of
// boolean, monotone, orthogonal, tensor and c-monotone independence (oracles)
// and tensor-product matrix models realizing them.
//
// A word is a sequence of letters j:name, where j indexes an algebra in the
// linearly ordered set J (ordered as unsigned integers) and name an element of
// that algebra. Adjacent letters of the same algebra are multiplied inside the
// algebra before any recursion runs.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ccomb/errors.hpp"
#include "ccomb/exact_linalg.hpp"

namespace ccomb {

struct Letter {
  unsigned algebra = 0;
  std::string name;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Parses "1:a 2:b 1:a'"; throws WordError on malformed tokens.
Word parse_word(std::string_view text);
std::string to_string(const Word& word);

/// Maximal run of letters from one algebra, multiplied left to right.
struct Block {
  unsigned algebra = 0;
  std::vector<std::string> names;

  friend auto operator<=>(const Block&, const Block&) = default;
};

std::vector<Block> collapse(const Word& word);

/// phi_j or psi_j evaluated on a product of element names of one algebra. The
/// empty product evaluates to one.
template <typename V>
using Functional = std::function<V(std::span<const std::string>)>;

template <typename V>
struct StatePair {
  Functional<V> phi;
  Functional<V> psi;
};

/// Finite-dimensional model of one algebra: named matrices on C^dim with the
/// vector state at coordinate xi (phi) and optionally at eta (psi).
struct MatrixModel {
  std::size_t dim = 0;
  std::map<std::string, Matrix> elements;
  std::size_t xi = 0;
  std::optional<std::size_t> eta;

  /// Product of the named elements, left to right; identity for no names.
  Matrix product(std::span<const std::string> names) const;
  Rational phi(std::span<const std::string> names) const;
  /// Throws IndexError when the model has no eta coordinate.
  Rational psi(std::span<const std::string> names) const;
};

StatePair<Rational> states_of(const MatrixModel& model);
/// Functional backed by a table of values keyed by the name sequence; unknown
/// products throw WordError.
Functional<Rational> table_functional(std::map<std::vector<std::string>, Rational> table);

enum class PairIndependence { boolean, monotone, orthogonal, tensor };

/// Polynomial in named atoms with rational coefficients; used to expand the
/// recursions symbolically.
class Polynomial {
 public:
  using Monomial = std::vector<std::string>;  // sorted atom names

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT: implicit for arithmetic
  Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT
  static Polynomial atom(std::string name);

  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void add(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

std::string to_string(const Polynomial& p);

/// Atoms "phi<j>(names)" and "psi<j>(names)" for the symbolic expansions.
StatePair<Polynomial> symbolic_states(unsigned algebra);

namespace detail {

template <typename V>
using StateMap = std::map<unsigned, StatePair<V>>;

template <typename V>
const StatePair<V>& states_for(const StateMap<V>& states, unsigned algebra) {
  auto it = states.find(algebra);
  if (it == states.end()) throw WordError("no states given for algebra " + std::to_string(algebra));
  return it->second;
}

// Blocks[0..i) followed by blocks[i+1..), merging the two blocks that become adjacent.
inline std::vector<Block> remove_block(const std::vector<Block>& blocks, std::size_t i) {
  std::vector<Block> out(blocks.begin(), blocks.begin() + static_cast<std::ptrdiff_t>(i));
  for (std::size_t k = i + 1; k < blocks.size(); ++k) {
    if (!out.empty() && out.back().algebra == blocks[k].algebra) {
      out.back().names.insert(out.back().names.end(), blocks[k].names.begin(), blocks[k].names.end());
    } else {
      out.push_back(blocks[k]);
    }
  }
  return out;
}

inline std::vector<Block> slice(const std::vector<Block>& blocks, std::size_t from, std::size_t to) {
  return {blocks.begin() + static_cast<std::ptrdiff_t>(from), blocks.begin() + static_cast<std::ptrdiff_t>(to)};
}

inline bool is_local_max(const std::vector<Block>& blocks, std::size_t i) {
  const unsigned j = blocks[i].algebra;
  if (i > 0 && blocks[i - 1].algebra > j) return false;
  if (i + 1 < blocks.size() && blocks[i + 1].algebra > j) return false;
  return true;
}

inline std::size_t first_global_max(const std::vector<Block>& blocks) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < blocks.size(); ++i)
    if (blocks[i].algebra > blocks[best].algebra) best = i;
  return best;
}

template <typename V>
V monotone(const std::vector<Block>& blocks, const StateMap<V>& states, bool use_psi) {
  if (blocks.empty()) return V(1);
  const std::size_t i = first_global_max(blocks);
  const auto& s = states_for(states, blocks[i].algebra);
  const V local = use_psi ? s.psi(blocks[i].names) : s.phi(blocks[i].names);
  return local * monotone(remove_block(blocks, i), states, use_psi);
}

template <typename V>
class CMonotone {
 public:
  CMonotone(const StateMap<V>& states, bool every_choice) : states_(states), every_choice_(every_choice) {}

  V phi(const std::vector<Block>& blocks) {
    if (blocks.empty()) return V(1);
    if (auto it = memo_.find(blocks); it != memo_.end()) return it->second;
    std::optional<V> value;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (!is_local_max(blocks, i)) continue;
      V v = reduce_at(blocks, i);
      if (!value) {
        value = std::move(v);
        if (!every_choice_) break;
      } else if (!(v == *value)) {
        consistent_ = false;
      }
    }
    return memo_.emplace(blocks, *value).first->second;
  }

  bool consistent() const noexcept { return consistent_; }

 private:
  // (phi(b) - psi(b)) phi(L) phi(R) + psi(b) phi(L R) for the local maximum b = blocks[i].
  V reduce_at(const std::vector<Block>& blocks, std::size_t i) {
    const auto& s = states_for(states_, blocks[i].algebra);
    const V p = s.phi(blocks[i].names);
    const V q = s.psi(blocks[i].names);
    const V split = phi(slice(blocks, 0, i)) * phi(slice(blocks, i + 1, blocks.size()));
    return (p - q) * split + q * phi(remove_block(blocks, i));
  }

  const StateMap<V>& states_;
  bool every_choice_;
  bool consistent_ = true;
  std::map<std::vector<Block>, V> memo_;
};

template <typename V>
V orthogonal(const std::vector<Block>& blocks, const Functional<V>& phi1, const Functional<V>& psi2) {
  if (blocks.empty()) return V(1);
  if (blocks.front().algebra == 2 || blocks.back().algebra == 2) return V(0);
  if (blocks.size() == 1) return phi1(blocks.front().names);
  const std::size_t i = 1;  // blocks alternate, so blocks[1] is an interior block of algebra 2
  const V whole = orthogonal(remove_block(blocks, i), phi1, psi2);
  const V split = orthogonal(slice(blocks, 0, i), phi1, psi2) * orthogonal(slice(blocks, i + 1, blocks.size()), phi1, psi2);
  return psi2(blocks[i].names) * (whole - split);
}

}  // namespace detail

/// Moment of a word under the pair-type independences.
///   boolean, monotone, tensor: any J, using each algebra's phi.
///   orthogonal: J = {1, 2}; algebra 2 is orthogonal to algebra 1 with respect
///   to (phi, psi) where phi restricted to algebra 1 is states[1].phi and the
///   psi weight of an algebra-2 element is states[2].psi.
template <typename V>
V oracle_moment(PairIndependence kind, const Word& word, const std::map<unsigned, StatePair<V>>& states) {
  const auto blocks = collapse(word);
  switch (kind) {
    case PairIndependence::boolean: {
      V value(1);
      for (const auto& b : blocks) value = value * detail::states_for(states, b.algebra).phi(b.names);
      return value;
    }
    case PairIndependence::monotone:
      return detail::monotone(blocks, states, false);
    case PairIndependence::orthogonal: {
      for (const auto& b : blocks)
        if (b.algebra != 1 && b.algebra != 2) throw WordError("orthogonal independence needs algebras 1 and 2");
      return detail::orthogonal(blocks, detail::states_for(states, 1).phi, detail::states_for(states, 2).psi);
    }
    case PairIndependence::tensor: {
      std::map<unsigned, std::vector<std::string>> per_algebra;
      for (const auto& b : blocks) {
        auto& names = per_algebra[b.algebra];
        names.insert(names.end(), b.names.begin(), b.names.end());
      }
      V value(1);
      for (const auto& [j, names] : per_algebra) value = value * detail::states_for(states, j).phi(names);
      return value;
    }
  }
  throw WordError("unknown independence kind");
}

template <typename V>
struct CMonotoneMoments {
  V phi;
  V psi;
};

/// phi by the c-monotone local-maximum rule, psi by the monotone rule with the psi_j.
template <typename V>
CMonotoneMoments<V> oracle_cmonotone(const Word& word, const std::map<unsigned, StatePair<V>>& states) {
  const auto blocks = collapse(word);
  detail::CMonotone<V> rec(states, false);
  return {rec.phi(blocks), detail::monotone(blocks, states, true)};
}

/// Evaluates the c-monotone phi recursion through every choice of local
/// maximum at every step; returns nullopt if two choices ever disagree.
template <typename V>
std::optional<V> oracle_cmonotone_all_orders(const Word& word, const std::map<unsigned, StatePair<V>>& states) {
  detail::CMonotone<V> rec(states, true);
  V value = rec.phi(collapse(word));
  if (!rec.consistent()) return std::nullopt;
  return value;
}

/// A family of operators on one space with the vector states phi (and psi).
class RealizedFamily {
 public:
  RealizedFamily(std::map<Letter, SparseMatrix> operators, std::size_t phi_index,
                 std::optional<std::size_t> psi_index);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t phi_index() const noexcept { return phi_index_; }
  const std::optional<std::size_t>& psi_index() const noexcept { return psi_index_; }
  const std::map<Letter, SparseMatrix>& operators() const noexcept { return ops_; }
  const SparseMatrix& op(const Letter& letter) const;

  /// A_{w_1} ... A_{w_n} v.
  Vector apply(const Word& word, Vector v) const;
  Rational phi(const Word& word) const;
  /// Throws IndexError when there is no psi state.
  Rational psi(const Word& word) const;

  /// Visits every word of length 1..max_length over the operator letters with
  /// its phi and (when present) psi moments. Words sharing a suffix share work.
  void for_each_word(unsigned max_length,
                     const std::function<void(const Word&, const Rational& phi, const std::optional<Rational>& psi)>&
                         visit) const;

  /// Optional projection that separates phi-moments: phi(W P W') = phi(W) phi(W').
  std::optional<SparseMatrix> separator;

 private:
  std::map<Letter, SparseMatrix> ops_;
  std::size_t dim_ = 0;
  std::size_t phi_index_ = 0;
  std::optional<std::size_t> psi_index_;
};

/// Pair realizations on C^n1 (x) C^n2 at xi1 (x) xi2: A1 = a1 (x) P_xi2 and
///   A2 = P_xi1 (x) a2 (boolean), 1 (x) a2 (monotone), P_xi1^perp (x) a2
///   (orthogonal); tensor uses A1 = a1 (x) 1, A2 = 1 (x) a2.
/// Letters are 1:name for model1 elements and 2:name for model2 elements.
RealizedFamily realize_pair(PairIndependence kind, const MatrixModel& model1, const MatrixModel& model2);

enum class CMonotoneForm {
  /// A2 = P (x) a2 (x) 1 + P^perp (x) 1 (x) a2.
  standard,
  /// A2 = P (x) a2 (x) Q + P^perp (x) Q (x) a2.
  projected,
};

/// Triple-tensor realization on C^n1 (x) C^n2 (x) C^n2 with A1 = a1 (x) P_xi2 (x) P_eta2
/// and phi at xi1 (x) xi2 (x) eta2, direct-summed with the monotone pair
/// (a1 (x) P_eta2, 1 (x) a2) on C^n1 (x) C^n2 carrying psi at eta1 (x) eta2.
/// Both models need an eta coordinate.
RealizedFamily realize_cmonotone_pair(const MatrixModel& model1, const MatrixModel& model2,
                                      CMonotoneForm form = CMonotoneForm::standard);

inline constexpr std::size_t kDefaultFamilyCap = 3;

/// Realization on the tensor product over j of (C^nj (x) C^nj), the first copy
/// carrying P_xi_j and the second P_eta_j:
///   A_j = (a_j (x) 1) (x) p_j + (1 (x) a_j) (x) (p'_j - p_j),
/// with phi at the tensor product of (xi_j (x) eta_j). The psi state lives on a
/// direct summand carrying the monotone family 1 (x) ... (x) a_j (x) P_eta (x) ...
/// at the tensor product of eta_j. Algebra indices are 1..|models|.
/// Throws CapExceeded when |models| > cap.
RealizedFamily realize_cmonotone_family(std::span<const MatrixModel> models, std::size_t cap = kDefaultFamilyCap);

/// Every word over the given letters with length 1..max_length, in
/// lexicographic order by letter sequence within each length.
std::vector<Word> all_words(std::span<const Letter> letters, unsigned max_length);

}  // namespace ccomb

#endif  // CCOMB_INDEPENDENCE_HPP
