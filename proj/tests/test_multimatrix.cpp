#include <gtest/gtest.h>

#include "hopfcheck/multimatrix.hpp"
#include "support.hpp"

using namespace hopfcheck;

TEST(MultiMatrix, CanonicalBasisOrder) {
  auto A = make_algebra({1, 2}, {"p", "M"});
  EXPECT_EQ(A->dim(), 5);
  EXPECT_EQ(A->index(1, 0, 1), 2);
  EXPECT_EQ(A->basis_name(0), "p");
  EXPECT_EQ(A->basis_name(3), "M[2,1]");
  auto pos = A->locate(4);
  EXPECT_EQ(pos.block, 1);
  EXPECT_EQ(pos.row, 1);
  EXPECT_EQ(pos.col, 1);
}

TEST(MultiMatrix, MatrixUnitProducts) {
  auto A = make_algebra({1, 2});
  auto e = [&](int r, int c) { return AlgElement::matrix_unit(A, 1, r, c); };
  EXPECT_EQ(e(0, 1) * e(1, 0), e(0, 0));
  EXPECT_TRUE((e(0, 1) * e(0, 1)).is_zero());
  EXPECT_TRUE((AlgElement::basis(A, 0) * e(0, 0)).is_zero());
  AlgElement one = AlgElement::one(A);
  EXPECT_EQ(one * e(1, 0), e(1, 0));
  EXPECT_EQ((CycQ8::i() * e(0, 1)).star(), -CycQ8::i() * e(1, 0));
}

TEST(MultiMatrix, TensorLayoutIsLexicographicKronecker) {
  auto A = make_algebra({1, 2});
  auto B = make_algebra({2, 1});
  auto AB = tensor(A, B);
  EXPECT_EQ(AB->block_sizes(), (std::vector<int>{2, 1, 4, 2}));
  const auto& table = tensor_index_table(A, B);
  // e_{M[1,2]} (x) e_{N[2,1]}: block (1, 0), Kronecker row 0*2+1, col 1*2+0
  const int p = A->index(1, 0, 1), q = B->index(0, 1, 0);
  EXPECT_EQ(table[p * B->dim() + q], AB->index(2, 1, 2));
  const auto& pairs = tensor_pair_table(A, B);
  for (int k = 0; k < AB->dim(); ++k)
    EXPECT_EQ(table[pairs[k].first * B->dim() + pairs[k].second], k);
}

TEST(MultiMatrix, TensorIsAlgebraHom) {
  hopfcheck::testing::Rng rng(5);
  auto A = make_algebra({1, 2});
  auto B = make_algebra({2});
  for (int k = 0; k < 50; ++k) {
    AlgElement a1 = rng.element(A), a2 = rng.element(A), b1 = rng.element(B), b2 = rng.element(B);
    EXPECT_EQ(tensor(a1, b1) * tensor(a2, b2), tensor(a1 * a2, b1 * b2));
    EXPECT_EQ(tensor(a1, b1).star(), tensor(a1.star(), b1.star()));
  }
}

TEST(MultiMatrix, AssociatedTensorsShareBasis) {
  auto A = make_algebra({1, 2});
  auto AA = tensor(A, A);
  EXPECT_EQ(tensor(AA, A)->block_sizes(), tensor(A, AA)->block_sizes());
  const auto& t = tensor_index_table(A, A);
  const auto& left = tensor_index_table(AA, A);
  const auto& right = tensor_index_table(A, AA);
  const int n = A->dim();
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        ASSERT_EQ(left[t[p * n + q] * n + r], right[p * n * n + t[q * n + r]]);
}

TEST(MultiMatrix, MultiplicationUnitFlipMaps) {
  hopfcheck::testing::Rng rng(6);
  auto A = make_algebra({1, 2});
  LinearMap m = multiplication_map(A);
  LinearMap flip = flip_map(A, A);
  for (int k = 0; k < 20; ++k) {
    AlgElement x = rng.element(A), y = rng.element(A);
    EXPECT_EQ(m.apply(tensor(x, y)), x * y);
    EXPECT_EQ(flip.apply(tensor(x, y)), tensor(y, x));
  }
  EXPECT_EQ(unit_map(A).apply(AlgElement::one(scalar_algebra())), AlgElement::one(A));
}

TEST(MultiMatrix, ShapeMismatchThrows) {
  auto A = make_algebra({1, 2});
  auto B = make_algebra({2, 1});
  EXPECT_THROW(AlgElement::one(A) + AlgElement::one(B), Error);
}

TEST(MultiMatrix, SpanRank) {
  auto A = make_algebra({2});
  std::vector<AlgElement> v = {AlgElement::basis(A, 0), AlgElement::basis(A, 1),
                               AlgElement::basis(A, 0) + AlgElement::basis(A, 1)};
  EXPECT_EQ(span_rank(v), 2u);
  EXPECT_EQ(span_rank(v, Exec::Serial), 2u);
}
