#include <gtest/gtest.h>

#include <limits>

#include "hopfcheck/cyclotomic.hpp"
#include "hopfcheck/linalg.hpp"
#include "support.hpp"

using namespace hopfcheck;
using hopfcheck::testing::num;
using hopfcheck::testing::close;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(3, -6).str(), "-1/2");
  EXPECT_EQ(Rational(6, 3).str(), "2");
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_THROW(Rational(1, 0), Error);
  EXPECT_THROW(Rational::parse("1/x"), Error);
}

TEST(Rational, OverflowPromotesAndDemotes) {
  const long long big = std::numeric_limits<long long>::max();
  Rational a(big);
  Rational b = a * a;
  EXPECT_TRUE(b.is_big());
  mpq_class m(std::to_string(big));
  mpq_class oracle = m * m;
  EXPECT_EQ(b.to_mpq(), oracle);
  Rational c = b / a;
  EXPECT_FALSE(c.is_big());
  EXPECT_EQ(c, a);
  EXPECT_EQ(Rational(big) + Rational(1) - Rational(1), Rational(big));
}

TEST(Rational, DivisionByZeroThrows) {
  try {
    Rational(0).inverse();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
  }
}

TEST(CycQ8, Constants) {
  EXPECT_EQ(CycQ8::zeta_pow(8), CycQ8(1));
  EXPECT_EQ(CycQ8::zeta_pow(4), CycQ8(-1));
  EXPECT_EQ(CycQ8::i() * CycQ8::i(), CycQ8(-1));
  EXPECT_EQ(CycQ8::sqrt2() * CycQ8::sqrt2(), CycQ8(2));
  EXPECT_EQ(CycQ8::inv_sqrt2() * CycQ8::inv_sqrt2(), CycQ8(Rational(1, 2)));
  EXPECT_TRUE(close(num(CycQ8::sqrt2()), std::sqrt(2.0)));
  EXPECT_TRUE(close(num(CycQ8::zeta()), std::polar(1.0, std::acos(-1.0) / 4)));
  EXPECT_EQ(CycQ8::zeta_pow(-1), CycQ8::zeta().conj());
}

TEST(CycQ8, InverseAndDivision) {
  CycQ8 x(1, 2, 0, -1);
  EXPECT_EQ(x * x.inverse(), CycQ8(1));
  EXPECT_TRUE(close(num(x.inverse()), 1.0 / num(x)));
  EXPECT_THROW(CycQ8().inverse(), Error);
}

TEST(CycQ8, Rendering) {
  EXPECT_EQ(CycQ8().str(), "0");
  EXPECT_EQ(CycQ8(Rational(1, 2)).str(), "1/2");
}

TEST(Linalg, SolveUniqueAndInconsistent) {
  CMatrix a = make_matrix({{1, 1}, {1, -1}});
  CMatrix b = make_matrix({{3}, {1}});
  auto s = solve(a, b);
  ASSERT_TRUE(s);
  EXPECT_TRUE(s->unique());
  EXPECT_EQ(s->particular, make_matrix({{2}, {1}}));

  CMatrix c = make_matrix({{1, 1}, {2, 2}});
  EXPECT_FALSE(solve(c, make_matrix({{1}, {3}})));
  auto t = solve(c, make_matrix({{1}, {2}}));
  ASSERT_TRUE(t);
  EXPECT_EQ(t->kernel.cols(), 1u);
}

TEST(Linalg, NullspaceAnnihilates) {
  CMatrix m = make_matrix({{1, CycQ8::i(), 0, 2}, {0, 1, CycQ8::sqrt2(), 1}, {1, CycQ8::i() + 1, CycQ8::sqrt2(), 3}});
  CMatrix n = nullspace(m);
  EXPECT_EQ(rank(m), 2u);
  EXPECT_EQ(n.cols(), 2u);
  EXPECT_TRUE(matmul(m, n).is_zero());
}

TEST(Linalg, SerialMatchesParallel) {
  hopfcheck::testing::Rng rng(11);
  for (int k = 0; k < 20; ++k) {
    CMatrix a(9, 7), b(7, 5);
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c)
        a(r, c) = rng.cyc(0.4);
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c)
        b(r, c) = rng.cyc(0.4);
    EXPECT_EQ(matmul_serial(a, b), matmul_parallel(a, b));
    auto es = row_reduce(a, Exec::Serial), ep = row_reduce(a, Exec::Parallel);
    EXPECT_EQ(es.reduced, ep.reduced);
    EXPECT_EQ(es.pivots, ep.pivots);
  }
}

TEST(Matrix, KronAndAdjoint) {
  CMatrix a = make_matrix({{1, 2}, {3, 4}});
  CMatrix b = make_matrix({{0, CycQ8::i()}, {1, 0}});
  CMatrix k = kron(a, b);
  EXPECT_EQ(k(0, 1), CycQ8::i());
  EXPECT_EQ(k(3, 2), CycQ8(4));
  EXPECT_EQ(adjoint(b), make_matrix({{0, 1}, {-CycQ8::i(), 0}}));
  EXPECT_EQ(trace(a), CycQ8(5));
  EXPECT_TRUE(is_unitary(make_matrix({{0, CycQ8::i()}, {1, 0}})));
  EXPECT_FALSE(is_unitary(a));
}
