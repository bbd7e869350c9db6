#include "ccomb/exact_linalg.hpp"

#include "ccomb/errors.hpp"
#include "ccomb/random.hpp"

#include "doctest.h"

#include <vector>

using namespace ccomb;

namespace {

Matrix swap2() { return Matrix::from_rows({{0, 1}, {1, 0}}); }

Matrix diag(std::vector<Rational> d) { return Matrix::diagonal(d); }

// Plain triple loop, independent of matrix_power's squaring.
Rational naive_power_entry(const Matrix& a, unsigned n, std::size_t i, std::size_t j) {
  Matrix p = Matrix::identity(a.rows());
  for (unsigned k = 0; k < n; ++k) {
    Matrix next(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c)
        for (std::size_t m = 0; m < a.cols(); ++m) next(r, c) += p(r, m) * a(m, c);
    p = next;
  }
  return p(i, j);
}

}  // namespace

TEST_CASE("kron of identities is the identity") {
  CHECK(kron(Matrix::identity(2), Matrix::identity(3)) == Matrix::identity(6));
}

TEST_CASE("kron with a 1x1 factor scales") {
  CHECK(kron(swap2(), Matrix::from_rows({{2}})) == Matrix::from_rows({{0, 2}, {2, 0}}));
}

TEST_CASE("kron of two edges is two disjoint edges") {
  const Matrix k = kron(swap2(), swap2());
  Matrix expected(4, 4);
  expected(0, 3) = expected(3, 0) = expected(1, 2) = expected(2, 1) = 1;
  CHECK(k == expected);
}

TEST_CASE("kron follows the composite index convention") {
  Rng rng(7);
  const Matrix a = random_rational_matrix(rng, 2);
  const Matrix b = random_rational_matrix(rng, 3);
  const Matrix k = kron(a, b);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) CHECK(k(i * 3 + r, j * 3 + c) == a(i, j) * b(r, c));
  CHECK(SparseMatrix(k) == kron(SparseMatrix(a), SparseMatrix(b)));
}

TEST_CASE("kron_all is left to right") {
  const Matrix p = basis_projection(2, 1);
  CHECK(kron_all({swap2(), p, Matrix::identity(2)}) == kron(kron(swap2(), p), Matrix::identity(2)));
  CHECK_THROWS_AS(kron_all({}), DimensionError);
}

TEST_CASE("basis projections and complements") {
  CHECK(basis_projection(1, 0) == Matrix::from_rows({{1}}));
  CHECK(basis_projection(3, 1) == diag({0, 1, 0}));
  CHECK(complement_projection(2, 0) == diag({0, 1}));
  CHECK_THROWS_AS(basis_projection(2, 2), IndexError);
}

TEST_CASE("direct sums") {
  CHECK(direct_sum(Matrix::from_rows({{0}}), Matrix::from_rows({{0}})) == diag({0, 0}));
  CHECK(direct_sum(Matrix::identity(2), Matrix::from_rows({{5}})) == diag({1, 1, 5}));
  CHECK(direct_sum(swap2(), Matrix::from_rows({{1}})) == Matrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
  CHECK(direct_sum(SparseMatrix(swap2()), SparseMatrix::identity(1)).to_dense() ==
        direct_sum(swap2(), Matrix::identity(1)));
}

TEST_CASE("matrix powers") {
  CHECK(matrix_power_entry(swap2(), 4, 0, 0) == 1);
  CHECK(matrix_power_entry(Matrix::from_rows({{1}}), 7, 0, 0) == 1);
  Rng rng(11);
  const Matrix a = random_rational_matrix(rng, 3);
  CHECK(matrix_power(a, 0) == Matrix::identity(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(matrix_power_entry(a, 0, i, j) == (i == j ? 1 : 0));
  for (unsigned n = 1; n <= 6; ++n) {
    const Matrix p = matrix_power(a, n);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        CHECK(p(i, j) == naive_power_entry(a, n, i, j));
        CHECK(matrix_power_entry(a, n, i, j) == p(i, j));
      }
  }
  const auto m = vector_state_moments(a, 1, 6);
  const auto ms = vector_state_moments(SparseMatrix(a), 1, 6);
  CHECK(m == ms);
  for (unsigned n = 0; n <= 6; ++n) CHECK(m[n] == naive_power_entry(a, n, 1, 1));
}

TEST_CASE("subspace restriction") {
  const std::vector<std::size_t> even{0, 2};
  CHECK(subspace_restrict(Matrix::identity(4), even) == Matrix::identity(2));
  const std::vector<std::size_t> one{1};
  CHECK(subspace_restrict(diag({1, 2, 3}), one) == Matrix::from_rows({{2}}));
  const std::vector<std::size_t> root_leg{0, 2};  // (0,0) and (1,0) in C^2 (x) C^2
  CHECK(subspace_restrict(kron(swap2(), basis_projection(2, 0)), root_leg) == swap2());
  const std::vector<std::size_t> first{0};
  CHECK_THROWS_AS(subspace_restrict(swap2(), first), NotInvariant);
  const std::vector<std::size_t> repeated{0, 0};
  CHECK_THROWS_AS(subspace_restrict(swap2(), repeated), IndexError);
}

TEST_CASE("tensor shapes") {
  const TensorShape s{2, 3, 4};
  CHECK(s.size() == 24);
  CHECK(s.flatten({1, 2, 3}) == (1 * 3 + 2) * 4 + 3);
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(s.flatten(s.unflatten(i)) == i);
}

TEST_CASE("arithmetic is exact and canonical") {
  CHECK(ratio(6, 3) == 2);
  CHECK(ratio(6, 4).get_str() == "3/2");
  Matrix m = Matrix::from_rows({{ratio(1, 3), 0}, {0, ratio(2, 3)}});
  m += m;
  CHECK(m(0, 0) + m(1, 1) == 2);
  CHECK_THROWS_AS(Matrix(2, 2, std::vector<Rational>(3)), DimensionError);
  CHECK_THROWS_AS(swap2() * Matrix::identity(3), DimensionError);
}

TEST_CASE("sparse and dense products agree") {
  Rng rng(3);
  for (int k = 0; k < 5; ++k) {
    const Matrix a = random_rational_matrix(rng, 3);
    const Matrix b = random_rational_matrix(rng, 3);
    CHECK((SparseMatrix(a) * SparseMatrix(b)).to_dense() == a * b);
    Vector v{1, ratio(-1, 2), 3};
    CHECK(SparseMatrix(a) * v == a * v);
  }
}
