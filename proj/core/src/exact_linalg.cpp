#include "ccomb/exact_linalg.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "ccomb/errors.hpp"

namespace ccomb {

namespace {

std::string shape_str(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch " + shape_str(a.rows(), a.cols()) +
                         " vs " + shape_str(b.rows(), b.cols()));
  }
}

}  // namespace

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw DimensionError("matrix " + shape_str(rows, cols) + " given " +
                         std::to_string(data_.size()) + " entries");
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Rational> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("from_rows: ragged rows");
    data.insert(data.end(), row.begin(), row.end());
  }
  return Matrix(r, c, std::move(data));
}

Matrix Matrix::diagonal(std::span<const Rational> diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

const Rational& Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw IndexError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                     shape_str(rows_, cols_));
  }
  return (*this)(i, j);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& scalar) {
  for (auto& x : data_) x *= scalar;
  return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols_ != rhs.rows_) {
    throw DimensionError("matrix product " + shape_str(lhs.rows_, lhs.cols_) + " * " +
                         shape_str(rhs.rows_, rhs.cols_));
  }
  Matrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Rational& a = lhs(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        if (sgn(rhs(k, j)) != 0) out(i, j) += a * rhs(k, j);
      }
    }
  }
  return out;
}

Vector operator*(const Matrix& lhs, const Vector& v) {
  if (lhs.cols_ != v.size()) throw DimensionError("matrix-vector product: size mismatch");
  Vector out(lhs.rows_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      if (sgn(v[k]) != 0 && sgn(lhs(i, k)) != 0) out[i] += lhs(i, k) * v[k];
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[" : " [");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j == 0 ? "" : ", ") << m(i, j);
    os << ']';
  }
  return os << ']';
}

// ---------------------------------------------------------------- SparseMatrix

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), rows_data_(rows) {}

SparseMatrix::SparseMatrix(const Matrix& dense) : SparseMatrix(dense.rows(), dense.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn(dense(i, j)) != 0) rows_data_[i].push_back({j, dense(i, j)});
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_data_[i].push_back({i, Rational(1)});
  return m;
}

std::size_t SparseMatrix::nonzeros() const noexcept {
  std::size_t n = 0;
  for (const auto& r : rows_data_) n += r.size();
  return n;
}

void SparseMatrix::add(std::size_t i, std::size_t j, const Rational& value) {
  if (i >= rows_ || j >= cols_) throw IndexError("sparse add outside matrix");
  if (sgn(value) == 0) return;
  auto& row = rows_data_[i];
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const Entry& e, std::size_t c) { return e.col < c; });
  if (it != row.end() && it->col == j) {
    it->value += value;
    if (sgn(it->value) == 0) row.erase(it);
  } else {
    row.insert(it, {j, value});
  }
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& e : rows_data_[i]) m(i, e.col) = e.value;
  return m;
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("sparse +: shape mismatch");
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& e : other.rows_data_[i]) add(i, e.col, e.value);
  return *this;
}

SparseMatrix& SparseMatrix::operator-=(const SparseMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("sparse -: shape mismatch");
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& e : other.rows_data_[i]) add(i, e.col, -e.value);
  return *this;
}

SparseMatrix operator*(const SparseMatrix& lhs, const SparseMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw DimensionError("sparse product: shape mismatch");
  SparseMatrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i)
    for (const auto& a : lhs.rows_data_[i])
      for (const auto& b : rhs.rows_data_[a.col]) out.add(i, b.col, a.value * b.value);
  return out;
}

Vector operator*(const SparseMatrix& lhs, const Vector& v) {
  if (lhs.cols_ != v.size()) throw DimensionError("sparse matrix-vector product: size mismatch");
  Vector out(lhs.rows_);
  for (std::size_t i = 0; i < lhs.rows_; ++i)
    for (const auto& e : lhs.rows_data_[i])
      if (sgn(v[e.col]) != 0) out[i] += e.value * v[e.col];
  return out;
}

bool operator==(const SparseMatrix& lhs, const SparseMatrix& rhs) {
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) return false;
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    const auto& a = lhs.rows_data_[i];
    const auto& b = rhs.rows_data_[i];
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k].col != b[k].col || a[k].value != b[k].value) return false;
  }
  return true;
}

// ---------------------------------------------------------------- free functions

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& x = a(i, j);
      if (sgn(x) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (sgn(b(k, l)) != 0) out(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  }
  return out;
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (const auto& x : a.row(i))
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (const auto& y : b.row(k)) out.add(i * b.rows() + k, x.col * b.cols() + y.col, x.value * y.value);
  return out;
}

Matrix kron_all(std::initializer_list<Matrix> factors) {
  if (factors.size() == 0) throw DimensionError("kron_all: no factors");
  auto it = factors.begin();
  Matrix out = *it++;
  for (; it != factors.end(); ++it) out = kron(out, *it);
  return out;
}

SparseMatrix kron_all(std::span<const SparseMatrix> factors) {
  if (factors.empty()) throw DimensionError("kron_all: no factors");
  SparseMatrix out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) out = kron(out, factors[k]);
  return out;
}

Matrix basis_projection(std::size_t dim, std::size_t i) {
  if (i >= dim) {
    throw IndexError("basis_projection: index " + std::to_string(i) + " out of range for dim " +
                     std::to_string(dim));
  }
  Matrix p(dim, dim);
  p(i, i) = 1;
  return p;
}

Matrix complement_projection(std::size_t dim, std::size_t i) {
  return Matrix::identity(dim) - basis_projection(dim, i);
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square()) throw DimensionError("direct_sum: inputs must be square");
  const std::size_t n = a.rows();
  Matrix out(n + b.rows(), n + b.rows());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.rows(); ++j) out(n + i, n + j) = b(i, j);
  return out;
}

SparseMatrix direct_sum(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols())
    throw DimensionError("direct_sum: inputs must be square");
  const std::size_t n = a.rows();
  SparseMatrix out(n + b.rows(), n + b.rows());
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& e : a.row(i)) out.add(i, e.col, e.value);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (const auto& e : b.row(i)) out.add(n + i, n + e.col, e.value);
  return out;
}

Matrix matrix_power(const Matrix& a, unsigned n) {
  if (!a.is_square()) throw DimensionError("matrix_power: matrix must be square");
  Matrix result = Matrix::identity(a.rows());
  Matrix base = a;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

Rational matrix_power_entry(const Matrix& a, unsigned n, std::size_t i, std::size_t j) {
  if (!a.is_square()) throw DimensionError("matrix_power_entry: matrix must be square");
  if (i >= a.rows() || j >= a.rows()) throw IndexError("matrix_power_entry: index out of range");
  Vector v(a.rows());
  v[j] = 1;
  for (unsigned step = 0; step < n; ++step) v = a * v;
  return v[i];
}

namespace {

template <typename M>
std::vector<Rational> moments_impl(const M& a, std::size_t at, unsigned order) {
  if (a.rows() != a.cols()) throw DimensionError("vector_state_moments: matrix must be square");
  if (at >= a.rows()) throw IndexError("vector_state_moments: index out of range");
  std::vector<Rational> out;
  out.reserve(order + 1);
  Vector v(a.rows());
  v[at] = 1;
  for (unsigned n = 0; n <= order; ++n) {
    out.push_back(v[at]);
    if (n < order) v = a * v;
  }
  return out;
}

}  // namespace

std::vector<Rational> vector_state_moments(const Matrix& a, std::size_t at, unsigned order) {
  return moments_impl(a, at, order);
}

std::vector<Rational> vector_state_moments(const SparseMatrix& a, std::size_t at, unsigned order) {
  return moments_impl(a, at, order);
}

Matrix subspace_restrict(const Matrix& a, std::span<const std::size_t> basis) {
  if (!a.is_square()) throw DimensionError("subspace_restrict: matrix must be square");
  const std::size_t n = a.rows();
  std::vector<std::ptrdiff_t> position(n, -1);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (basis[k] >= n) throw IndexError("subspace_restrict: basis index out of range");
    if (position[basis[k]] != -1) throw IndexError("subspace_restrict: repeated basis index");
    position[basis[k]] = static_cast<std::ptrdiff_t>(k);
  }
  Matrix out(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const std::size_t j = basis[col];
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(a(i, j)) == 0) continue;
      if (position[i] < 0) {
        throw NotInvariant("subspace_restrict: basis vector " + std::to_string(j) +
                           " is mapped onto coordinate " + std::to_string(i) + " outside the span");
      }
      out(static_cast<std::size_t>(position[i]), col) = a(i, j);
    }
  }
  return out;
}

// ---------------------------------------------------------------- TensorShape

TensorShape::TensorShape(std::vector<std::size_t> dims) : dims_(std::move(dims)), size_(1) {
  for (auto d : dims_) {
    if (d == 0) throw DimensionError("TensorShape: zero-dimensional leg");
    size_ *= d;
  }
}

std::size_t TensorShape::flatten(std::span<const std::size_t> coords) const {
  if (coords.size() != dims_.size()) throw IndexError("TensorShape::flatten: wrong number of coordinates");
  std::size_t index = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (coords[k] >= dims_[k]) throw IndexError("TensorShape::flatten: coordinate out of range");
    index = index * dims_[k] + coords[k];
  }
  return index;
}

std::vector<std::size_t> TensorShape::unflatten(std::size_t index) const {
  if (index >= size_) throw IndexError("TensorShape::unflatten: index out of range");
  std::vector<std::size_t> coords(dims_.size());
  for (std::size_t k = dims_.size(); k-- > 0;) {
    coords[k] = index % dims_[k];
    index /= dims_[k];
  }
  return coords;
}

std::vector<std::size_t> leg_swap_permutation(const TensorShape& shape, std::size_t leg_a,
                                              std::size_t leg_b) {
  if (leg_a >= shape.legs() || leg_b >= shape.legs()) throw IndexError("leg_swap_permutation: bad leg");
  if (shape.dim(leg_a) != shape.dim(leg_b))
    throw DimensionError("leg_swap_permutation: legs have different dimensions");
  std::vector<std::size_t> perm(shape.size());
  for (std::size_t i = 0; i < shape.size(); ++i) {
    auto c = shape.unflatten(i);
    std::swap(c[leg_a], c[leg_b]);
    perm[i] = shape.flatten(c);
  }
  return perm;
}

Matrix permute(const Matrix& a, std::span<const std::size_t> perm) {
  if (!a.is_square() || perm.size() != a.rows()) throw DimensionError("permute: size mismatch");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(perm[i], perm[j]) = a(i, j);
  return out;
}

}  // namespace ccomb
