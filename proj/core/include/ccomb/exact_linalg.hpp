#ifndef CCOMB_EXACT_LINALG_HPP
#define CCOMB_EXACT_LINALG_HPP

// Exact rational linear algebra on dense and sparse matrices.
//
// Every realization in the library (adjacency operators, Kronecker products of
// projections, direct sums) is built from these types. There is no floating
// point anywhere below this header.
//
// Composite tensor indices follow a single convention: for a product of legs
// with dimensions (d_0, ..., d_{k-1}) the coordinate tuple (i_0, ..., i_{k-1})
// maps to ((i_0 * d_1 + i_1) * d_2 + ...) * d_{k-1} + i_{k-1}. In particular
// kron(A, B) places A[i][j] * B[k][l] at row i * rows(B) + k, column
// j * cols(B) + l.

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ccomb {

/// Arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;

using Vector = std::vector<Rational>;

/// num / den in lowest terms (mpq_class(num, den) alone does not canonicalize).
inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

class Matrix {
 public:
  Matrix() = default;
  /// Zero matrix.
  Matrix(std::size_t rows, std::size_t cols);
  /// Row-major entries; throws DimensionError if the size is not rows * cols.
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t n) { return Matrix(n, n); }
  /// Convenience for literals in tests: {{0, 1}, {1, 0}}.
  static Matrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);
  static Matrix diagonal(std::span<const Rational> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;

  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  /// Bounds-checked access.
  const Rational& at(std::size_t i, std::size_t j) const;

  std::span<const Rational> entries() const noexcept { return data_; }

  Matrix transpose() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& scalar);

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(Matrix lhs, const Rational& s) { return lhs *= s; }
  friend Matrix operator*(const Rational& s, Matrix rhs) { return rhs *= s; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend Vector operator*(const Matrix& lhs, const Vector& v);

  friend bool operator==(const Matrix& lhs, const Matrix& rhs) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Compressed-row exact matrix used where Kronecker products get large
/// (hundreds of rows) but stay very sparse.
class SparseMatrix {
 public:
  struct Entry {
    std::size_t col;
    Rational value;
  };

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);
  explicit SparseMatrix(const Matrix& dense);

  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nonzeros() const noexcept;

  std::span<const Entry> row(std::size_t i) const { return rows_data_[i]; }

  /// Adds value at (i, j); zero results are dropped.
  void add(std::size_t i, std::size_t j, const Rational& value);

  Matrix to_dense() const;

  SparseMatrix& operator+=(const SparseMatrix& other);
  SparseMatrix& operator-=(const SparseMatrix& other);
  friend SparseMatrix operator+(SparseMatrix lhs, const SparseMatrix& rhs) { return lhs += rhs; }
  friend SparseMatrix operator-(SparseMatrix lhs, const SparseMatrix& rhs) { return lhs -= rhs; }
  friend SparseMatrix operator*(const SparseMatrix& lhs, const SparseMatrix& rhs);
  friend Vector operator*(const SparseMatrix& lhs, const Vector& v);

  friend bool operator==(const SparseMatrix& lhs, const SparseMatrix& rhs);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> rows_data_;  // each row sorted by column
};

Matrix kron(const Matrix& a, const Matrix& b);
SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

/// Left-to-right Kronecker product of all factors; throws on an empty list.
Matrix kron_all(std::initializer_list<Matrix> factors);
SparseMatrix kron_all(std::span<const SparseMatrix> factors);

/// The rank-one projection onto the i-th coordinate of a dim-dimensional space.
Matrix basis_projection(std::size_t dim, std::size_t i);
/// Identity minus basis_projection(dim, i).
Matrix complement_projection(std::size_t dim, std::size_t i);

/// Block-diagonal [[a, 0], [0, b]]; both inputs must be square.
Matrix direct_sum(const Matrix& a, const Matrix& b);
SparseMatrix direct_sum(const SparseMatrix& a, const SparseMatrix& b);

/// Returns a^n; n = 0 gives the identity. Uses repeated squaring.
Matrix matrix_power(const Matrix& a, unsigned n);

/// (a^n)[i][j], computed by iterating a on the j-th basis vector.
Rational matrix_power_entry(const Matrix& a, unsigned n, std::size_t i, std::size_t j);

/// Diagonal entries (a^n)[at][at] for n = 0..order.
std::vector<Rational> vector_state_moments(const Matrix& a, std::size_t at, unsigned order);
std::vector<Rational> vector_state_moments(const SparseMatrix& a, std::size_t at, unsigned order);

/// The matrix of `a` on the ordered sub-basis; throws NotInvariant if `a` maps a
/// basis vector outside the span, and IndexError on bad or repeated indices.
Matrix subspace_restrict(const Matrix& a, std::span<const std::size_t> basis);

/// Dimensions of a tensor product of legs; converts between coordinate tuples
/// and composite indices.
class TensorShape {
 public:
  TensorShape() = default;
  explicit TensorShape(std::vector<std::size_t> dims);
  TensorShape(std::initializer_list<std::size_t> dims) : TensorShape(std::vector<std::size_t>(dims)) {}

  std::size_t legs() const noexcept { return dims_.size(); }
  std::size_t dim(std::size_t leg) const { return dims_.at(leg); }
  std::size_t size() const noexcept { return size_; }

  std::size_t flatten(std::span<const std::size_t> coords) const;
  std::size_t flatten(std::initializer_list<std::size_t> coords) const {
    return flatten(std::span<const std::size_t>(coords.begin(), coords.size()));
  }
  std::vector<std::size_t> unflatten(std::size_t index) const;

 private:
  std::vector<std::size_t> dims_;
  std::size_t size_ = 0;
};

/// Composite-index permutation exchanging two legs of equal dimension:
/// result[old_index] = new_index, where the coordinates at legs a and b are
/// swapped. With legs (1, 2) on a 3-leg shape this is the flip
/// x (x) y (x) z -> x (x) z (x) y.
std::vector<std::size_t> leg_swap_permutation(const TensorShape& shape, std::size_t leg_a,
                                              std::size_t leg_b);

/// Conjugation by a permutation: result[perm[i]][perm[j]] = a[i][j].
Matrix permute(const Matrix& a, std::span<const std::size_t> perm);

}  // namespace ccomb

#endif  // CCOMB_EXACT_LINALG_HPP
