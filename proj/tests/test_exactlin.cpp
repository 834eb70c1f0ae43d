#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace hilbseries;

namespace {

template <ExactField F>
Matrix<F> random_matrix(const F& k, std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> entry(-2, 2);
  std::vector<std::vector<Rational>> data(rows, std::vector<Rational>(cols));
  for (auto& r : data)
    for (auto& x : r) x = entry(rng);
  return rows == 0 ? Matrix<F>(k, 0, cols) : Matrix<F>::from_rows(k, data);
}

template <ExactField F>
bool is_zero_matrix(const Matrix<F>& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m.field().is_zero(m(r, c))) return false;
  return true;
}

}  // namespace

TEST(PrimeField, RejectsComposites) {
  EXPECT_THROW(PrimeField(4), InputError);
  EXPECT_THROW(PrimeField(1), InputError);
  EXPECT_THROW(PrimeField(65537), InputError);
  EXPECT_NO_THROW(PrimeField(65521));
}

TEST(PrimeField, Inverses) {
  for (std::uint32_t p : {2u, 3u, 5u, 7919u}) {
    PrimeField k(p);
    for (std::uint32_t a = 1; a < std::min(p, 200u); ++a) EXPECT_EQ(k.mul(a, k.inv(a)), 1u);
    EXPECT_THROW(k.inv(0), std::domain_error);
  }
}

TEST(PrimeField, FromRational) {
  PrimeField k(7);
  EXPECT_EQ(k.from_rational(Rational(1, 2)), 4u);
  EXPECT_EQ(k.from_rational(Rational(-1)), 6u);
  EXPECT_THROW(k.from_rational(Rational(1, 7)), InputError);
}

TEST(Rref, EmptyMatrix) {
  Matrix<PrimeField> m(PrimeField(2), 0, 0);
  auto r = rref(m);
  EXPECT_EQ(r.reduced.rows(), 0u);
  EXPECT_TRUE(r.pivots.empty());
}

TEST(Rref, IdentityIsReduced) {
  auto id = Matrix<PrimeField>::identity(PrimeField(2), 2);
  auto r = rref(id);
  EXPECT_EQ(r.reduced, id);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, RepeatedRowOverF2) {
  PrimeField k(2);
  auto m = Matrix<PrimeField>::from_rows(k, {{1, 1}, {1, 1}});
  auto r = rref(m);
  EXPECT_EQ(r.reduced, Matrix<PrimeField>::from_rows(k, {{1, 1}, {0, 0}}));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));
}

TEST(Kernel, Examples) {
  PrimeField k(2);
  EXPECT_EQ(kernel_basis(Matrix<PrimeField>::identity(k, 3)).rows(), 0u);
  auto z = kernel_basis(Matrix<PrimeField>(k, 2, 3));
  EXPECT_EQ(z, Matrix<PrimeField>::identity(k, 3));
  auto one = kernel_basis(Matrix<PrimeField>::from_rows(k, {{1, 1}}));
  EXPECT_EQ(one, Matrix<PrimeField>::from_rows(k, {{1, 1}}));
}

TEST(Rank, Examples) {
  RationalField q;
  EXPECT_EQ(rank(Matrix<RationalField>(q, 3, 4)), 0u);
  EXPECT_EQ(rank(Matrix<RationalField>::identity(q, 5)), 5u);
  EXPECT_EQ(rank(Matrix<RationalField>::from_rows(q, {{2, 4}, {1, 2}})), 1u);
  EXPECT_EQ(rank(Matrix<PrimeField>::from_rows(PrimeField(3), {{1, 2}, {2, 1}})), 1u);
}

// Property tests over 1000+ random matrices per field.
template <class F>
void matrix_properties(const F& k, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(0, 6);
  for (int trial = 0; trial < 1200; ++trial) {
    auto m = random_matrix(k, rng, size(rng), size(rng) + 1);
    auto r = rref(m);
    // idempotence
    EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
    // pivots are unit columns
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      for (std::size_t row = 0; row < r.reduced.rows(); ++row)
        EXPECT_TRUE(k.is_zero(k.sub(r.reduced(row, r.pivots[i]), row == i ? k.one() : k.zero())));
    }
    // kernel correctness: m * K^T = 0 and rank + nullity = cols
    auto ker = kernel_basis(m);
    EXPECT_EQ(rank(m) + ker.rows(), m.cols());
    if (ker.rows() > 0 && m.rows() > 0) { EXPECT_TRUE(is_zero_matrix(multiply(m, transpose(ker)))); }
    EXPECT_EQ(rank(ker), ker.rows());
    // rank of transpose
    EXPECT_EQ(rank(m), rank(transpose(m)));
  }
}

TEST(MatrixProperties, RandomOverF2) { matrix_properties(PrimeField(2), 1); }
TEST(MatrixProperties, RandomOverF5) { matrix_properties(PrimeField(5), 2); }
TEST(MatrixProperties, RandomOverQ) { matrix_properties(RationalField{}, 3); }

TEST(SparseEchelon, AgreesWithDense) {
  std::mt19937_64 rng(11);
  PrimeField k(3);
  std::uniform_int_distribution<std::size_t> size(1, 7);
  for (int trial = 0; trial < 1000; ++trial) {
    auto m = random_matrix(k, rng, size(rng), size(rng));
    Echelon<PrimeField> e(k, static_cast<std::uint32_t>(m.cols()));
    std::vector<SparseVec<PrimeField>> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      SparseVec<PrimeField> v;
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (m(r, c) != 0) v.emplace_back(static_cast<std::uint32_t>(c), m(r, c));
      rows.push_back(v);
      e.insert(v);
    }
    ASSERT_EQ(e.rank(), rank(m));
    auto dense = nonzero_rows(rref(m));
    EXPECT_EQ(to_dense(k, e.rref(), m.cols()), dense);
    // sparse kernel of the column map equals the dense left kernel
    auto ker = sparse_kernel(k, rows, static_cast<std::uint32_t>(m.cols()));
    auto dense_ker = kernel_basis(transpose(m));
    EXPECT_EQ(to_dense(k, ker, m.rows()), dense_ker);
  }
}
