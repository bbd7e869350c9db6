#include "ccomb/independence.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <utility>

namespace ccomb {

// ---------------------------------------------------------------- words

Word parse_word(std::string_view text) {
  Word word;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ',') {
      ++pos;
      continue;
    }
    const std::size_t end = std::min(text.find_first_of(" \t,", pos), text.size());
    const std::string_view token = text.substr(pos, end - pos);
    pos = end;
    const std::size_t colon = token.find(':');
    if (colon == std::string_view::npos || colon == 0 || colon + 1 == token.size())
      throw WordError("malformed letter '" + std::string(token) + "', expected index:name");
    unsigned algebra = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + colon, algebra);
    if (ec != std::errc() || ptr != token.data() + colon || algebra == 0)
      throw WordError("bad algebra index in '" + std::string(token) + "'");
    word.push_back({algebra, std::string(token.substr(colon + 1))});
  }
  return word;
}

std::string to_string(const Word& word) {
  std::string out;
  for (const auto& l : word) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l.algebra) + ':' + l.name;
  }
  return out;
}

std::vector<Block> collapse(const Word& word) {
  std::vector<Block> blocks;
  for (const auto& l : word) {
    if (!blocks.empty() && blocks.back().algebra == l.algebra) {
      blocks.back().names.push_back(l.name);
    } else {
      blocks.push_back({l.algebra, {l.name}});
    }
  }
  return blocks;
}

// ---------------------------------------------------------------- functionals

Matrix MatrixModel::product(std::span<const std::string> names) const {
  Matrix m = Matrix::identity(dim);
  for (const auto& n : names) {
    auto it = elements.find(n);
    if (it == elements.end()) throw WordError("unknown element '" + n + "'");
    m = m * it->second;
  }
  return m;
}

namespace {

Rational vector_state(const MatrixModel& model, std::span<const std::string> names, std::size_t at) {
  Vector v(model.dim);
  v[at] = 1;
  for (auto it = names.rbegin(); it != names.rend(); ++it) {
    auto e = model.elements.find(*it);
    if (e == model.elements.end()) throw WordError("unknown element '" + *it + "'");
    v = e->second * v;
  }
  return v[at];
}

}  // namespace

Rational MatrixModel::phi(std::span<const std::string> names) const { return vector_state(*this, names, xi); }

Rational MatrixModel::psi(std::span<const std::string> names) const {
  if (!eta) throw IndexError("matrix model has no psi coordinate");
  return vector_state(*this, names, *eta);
}

StatePair<Rational> states_of(const MatrixModel& model) {
  StatePair<Rational> s;
  s.phi = [&model](std::span<const std::string> names) { return model.phi(names); };
  s.psi = [&model](std::span<const std::string> names) { return model.psi(names); };
  return s;
}

Functional<Rational> table_functional(std::map<std::vector<std::string>, Rational> table) {
  return [table = std::move(table)](std::span<const std::string> names) -> Rational {
    if (names.empty()) return 1;
    auto it = table.find(std::vector<std::string>(names.begin(), names.end()));
    if (it == table.end()) {
      std::string key;
      for (const auto& n : names) key += n + ' ';
      throw WordError("moment table has no entry for '" + key + "'");
    }
    return it->second;
  };
}

// ---------------------------------------------------------------- polynomials

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::atom(std::string name) {
  Polynomial p;
  p.terms_.emplace(Monomial{std::move(name)}, Rational(1));
  return p;
}

void Polynomial::add(const Monomial& m, const Rational& c) {
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Polynomial::Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      std::sort(m.begin(), m.end());
      out.add(m, ca * cb);
    }
  }
  return out;
}

std::string to_string(const Polynomial& p) {
  if (p.terms().empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    const Rational mag = abs(c);
    if (m.empty() || mag != 1) os << mag;
    for (std::size_t i = 0; i < m.size(); ++i) os << (i == 0 && (mag == 1) ? "" : " ") << m[i];
    first = false;
  }
  return os.str();
}

StatePair<Polynomial> symbolic_states(unsigned algebra) {
  auto make = [algebra](const char* prefix) {
    return [algebra, prefix = std::string(prefix)](std::span<const std::string> names) -> Polynomial {
      if (names.empty()) return Polynomial(1);
      std::string atom = prefix + std::to_string(algebra) + '(';
      for (const auto& n : names) atom += n;
      return Polynomial::atom(atom + ')');
    };
  };
  return {make("phi"), make("psi")};
}

// ---------------------------------------------------------------- realizations

RealizedFamily::RealizedFamily(std::map<Letter, SparseMatrix> operators, std::size_t phi_index,
                               std::optional<std::size_t> psi_index)
    : ops_(std::move(operators)), phi_index_(phi_index), psi_index_(psi_index) {
  if (ops_.empty()) throw DimensionError("realized family needs at least one operator");
  dim_ = ops_.begin()->second.rows();
  for (const auto& [l, a] : ops_) {
    if (a.rows() != dim_ || a.cols() != dim_) throw DimensionError("realized operators must share one square shape");
  }
  if (phi_index_ >= dim_ || (psi_index_ && *psi_index_ >= dim_)) throw IndexError("state coordinate out of range");
}

const SparseMatrix& RealizedFamily::op(const Letter& letter) const {
  auto it = ops_.find(letter);
  if (it == ops_.end()) throw WordError("no operator for letter " + std::to_string(letter.algebra) + ":" + letter.name);
  return it->second;
}

Vector RealizedFamily::apply(const Word& word, Vector v) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = op(*it) * v;
  return v;
}

Rational RealizedFamily::phi(const Word& word) const {
  Vector v(dim_);
  v[phi_index_] = 1;
  return apply(word, std::move(v))[phi_index_];
}

Rational RealizedFamily::psi(const Word& word) const {
  if (!psi_index_) throw IndexError("realized family has no psi state");
  Vector v(dim_);
  v[*psi_index_] = 1;
  return apply(word, std::move(v))[*psi_index_];
}

void RealizedFamily::for_each_word(
    unsigned max_length,
    const std::function<void(const Word&, const Rational&, const std::optional<Rational>&)>& visit) const {
  // Words are grown leftwards so that A_w v is extended by one operator per step.
  Word suffix;
  std::function<void(const Vector&, const std::optional<Vector>&)> grow = [&](const Vector& u,
                                                                              const std::optional<Vector>& w) {
    if (suffix.size() == max_length) return;
    for (const auto& [letter, a] : ops_) {
      Vector nu = a * u;
      std::optional<Vector> nw;
      if (w) nw = a * *w;
      suffix.insert(suffix.begin(), letter);
      std::optional<Rational> psi_value;
      if (nw) psi_value = (*nw)[*psi_index_];
      visit(suffix, nu[phi_index_], psi_value);
      grow(nu, nw);
      suffix.erase(suffix.begin());
    }
  };
  Vector start(dim_);
  start[phi_index_] = 1;
  std::optional<Vector> start_psi;
  if (psi_index_) {
    start_psi = Vector(dim_);
    (*start_psi)[*psi_index_] = 1;
  }
  grow(start, start_psi);
}

namespace {

void check_model(const MatrixModel& m, bool needs_eta) {
  if (m.dim == 0) throw DimensionError("matrix model has dimension zero");
  if (m.xi >= m.dim) throw IndexError("matrix model xi out of range");
  if (needs_eta && !m.eta) throw IndexError("matrix model needs an eta coordinate");
  if (m.eta && *m.eta >= m.dim) throw IndexError("matrix model eta out of range");
  for (const auto& [name, a] : m.elements)
    if (a.rows() != m.dim || a.cols() != m.dim) throw DimensionError("element '" + name + "' has the wrong shape");
}

SparseMatrix sparse_kron(std::initializer_list<Matrix> factors) {
  std::vector<SparseMatrix> s;
  s.reserve(factors.size());
  for (const auto& f : factors) s.emplace_back(f);
  return kron_all(s);
}

}  // namespace

RealizedFamily realize_pair(PairIndependence kind, const MatrixModel& model1, const MatrixModel& model2) {
  check_model(model1, false);
  check_model(model2, false);
  const Matrix q = basis_projection(model2.dim, model2.xi);
  const Matrix id1 = Matrix::identity(model1.dim);
  const Matrix id2 = Matrix::identity(model2.dim);
  Matrix left;
  switch (kind) {
    case PairIndependence::boolean:
      left = basis_projection(model1.dim, model1.xi);
      break;
    case PairIndependence::monotone:
    case PairIndependence::tensor:
      left = id1;
      break;
    case PairIndependence::orthogonal:
      left = complement_projection(model1.dim, model1.xi);
      break;
  }
  const Matrix& right = kind == PairIndependence::tensor ? id2 : q;
  std::map<Letter, SparseMatrix> ops;
  for (const auto& [name, a] : model1.elements) ops.emplace(Letter{1, name}, SparseMatrix(kron(a, right)));
  for (const auto& [name, a] : model2.elements) ops.emplace(Letter{2, name}, SparseMatrix(kron(left, a)));
  const TensorShape shape{model1.dim, model2.dim};
  return RealizedFamily(std::move(ops), shape.flatten({model1.xi, model2.xi}), std::nullopt);
}

RealizedFamily realize_cmonotone_pair(const MatrixModel& model1, const MatrixModel& model2, CMonotoneForm form) {
  check_model(model1, true);
  check_model(model2, true);
  const std::size_t n1 = model1.dim;
  const std::size_t n2 = model2.dim;
  const Matrix p = basis_projection(n1, model1.xi);
  const Matrix p_perp = complement_projection(n1, model1.xi);
  const Matrix q_xi = basis_projection(n2, model2.xi);
  const Matrix q_eta = basis_projection(n2, *model2.eta);
  const Matrix id1 = Matrix::identity(n1);
  const Matrix id2 = Matrix::identity(n2);

  std::map<Letter, SparseMatrix> ops;
  for (const auto& [name, a] : model1.elements) {
    ops.emplace(Letter{1, name}, direct_sum(sparse_kron({a, q_xi, q_eta}), sparse_kron({a, q_eta})));
  }
  for (const auto& [name, a] : model2.elements) {
    SparseMatrix phi_part = form == CMonotoneForm::standard
                                ? sparse_kron({p, a, id2}) + sparse_kron({p_perp, id2, a})
                                : sparse_kron({p, a, q_eta}) + sparse_kron({p_perp, q_xi, a});
    ops.emplace(Letter{2, name}, direct_sum(phi_part, sparse_kron({id1, a})));
  }
  const std::size_t triple = n1 * n2 * n2;
  const std::size_t phi_index = TensorShape{n1, n2, n2}.flatten({model1.xi, model2.xi, *model2.eta});
  const std::size_t psi_index = triple + TensorShape{n1, n2}.flatten({*model1.eta, *model2.eta});
  RealizedFamily family(std::move(ops), phi_index, psi_index);
  family.separator = direct_sum(sparse_kron({p, q_xi, q_eta}), SparseMatrix(n1 * n2, n1 * n2));
  return family;
}

RealizedFamily realize_cmonotone_family(std::span<const MatrixModel> models, std::size_t cap) {
  if (models.size() > cap) {
    throw CapExceeded("c-monotone family of " + std::to_string(models.size()) + " algebras exceeds cap " +
                      std::to_string(cap));
  }
  if (models.empty()) throw DimensionError("c-monotone family needs at least one algebra");
  for (const auto& m : models) check_model(m, true);
  const std::size_t k = models.size();

  auto proj = [&](std::size_t j) {  // P_xi_j (x) P_eta_j
    return SparseMatrix(kron(basis_projection(models[j].dim, models[j].xi),
                             basis_projection(models[j].dim, *models[j].eta)));
  };
  auto ident = [&](std::size_t j) { return SparseMatrix::identity(models[j].dim * models[j].dim); };

  std::map<Letter, SparseMatrix> ops;
  std::size_t phi_dim = 1;
  std::size_t psi_dim = 1;
  for (const auto& m : models) {
    phi_dim *= m.dim * m.dim;
    psi_dim *= m.dim;
  }
  for (std::size_t j = 0; j < k; ++j) {
    const auto& mj = models[j];
    const Matrix id = Matrix::identity(mj.dim);
    for (const auto& [name, a] : mj.elements) {
      std::vector<SparseMatrix> first, second, second_p;
      std::vector<SparseMatrix> psi_legs;
      for (std::size_t l = 0; l < k; ++l) {
        if (l == j) {
          first.emplace_back(kron(a, id));
          second.emplace_back(kron(id, a));
          second_p.emplace_back(kron(id, a));
          psi_legs.emplace_back(a);
          continue;
        }
        first.push_back(proj(l));
        second_p.push_back(proj(l));
        second.push_back(l < j ? ident(l) : proj(l));
        psi_legs.push_back(l < j ? SparseMatrix::identity(models[l].dim)
                                 : SparseMatrix(basis_projection(models[l].dim, *models[l].eta)));
      }
      // (a (x) 1) (x) p_j + (1 (x) a) (x) p'_j - (1 (x) a) (x) p_j
      SparseMatrix phi_part = kron_all(first) + kron_all(second) - kron_all(second_p);
      ops.emplace(Letter{static_cast<unsigned>(j + 1), name}, direct_sum(phi_part, kron_all(psi_legs)));
    }
  }

  std::vector<std::size_t> phi_dims, psi_dims, phi_coords, psi_coords;
  for (const auto& m : models) {
    phi_dims.insert(phi_dims.end(), {m.dim, m.dim});
    phi_coords.insert(phi_coords.end(), {m.xi, *m.eta});
    psi_dims.push_back(m.dim);
    psi_coords.push_back(*m.eta);
  }
  const std::size_t phi_index = TensorShape(phi_dims).flatten(phi_coords);
  const std::size_t psi_index = phi_dim + TensorShape(psi_dims).flatten(psi_coords);
  RealizedFamily family(std::move(ops), phi_index, psi_index);

  std::vector<SparseMatrix> seps;
  for (std::size_t j = 0; j < k; ++j) seps.push_back(proj(j));
  family.separator = direct_sum(kron_all(seps), SparseMatrix(psi_dim, psi_dim));
  return family;
}

std::vector<Word> all_words(std::span<const Letter> letters, unsigned max_length) {
  std::vector<Word> out;
  std::vector<Word> layer{Word{}};
  for (unsigned len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      for (const auto& l : letters) {
        Word x = w;
        x.push_back(l);
        next.push_back(std::move(x));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace ccomb
