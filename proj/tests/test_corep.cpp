#include <gtest/gtest.h>

#include "hopfcheck/corep.hpp"
#include "support.hpp"

using namespace hopfcheck;
using namespace hopfcheck::testing;

TEST(Corep, DisplayedOneDimsMatchLibraryTranscription) {
  const HopfPtr& kp = kp_model().hopf;
  EXPECT_EQ(printed_one_dim_kp(), displayed_one_dims(kp));
  EXPECT_EQ(printed_projections(), displayed_projections());
}

TEST(Corep, GroupLikesOfKacPaljutkin) {
  const HopfPtr& kp = kp_model().hopf;
  OneDimGroup g = one_dim_group(kp);
  ASSERT_EQ(g.order(), 4);
  EXPECT_TRUE(g.is_klein_four());
  for (const auto& u : displayed_one_dims(kp)) {
    EXPECT_GE(g.index_of(u), 0) << u.str();
    // oracle: group-like means D u = u (x) u, eps(u) = 1
    EXPECT_EQ(kp->delta(u), tensor(u, u));
    EXPECT_EQ(kp->eps(u), CycQ8(1));
  }
  EXPECT_EQ(g.elements[g.identity], AlgElement::one(kp->algebra));
  EXPECT_TRUE(one_dim_kp_check().passed());
}

TEST(Corep, GroupLikesOfSmallFunctionAlgebras) {
  // group-likes of C(G) are the characters of G
  auto z2 = function_algebra(generate_group({CMatrix::identity(2) * CycQ8(-1)}, 8));
  EXPECT_EQ(one_dim_group(z2).order(), 2);
  // V~ has abelianisation K4
  EXPECT_EQ(one_dim_group(vtilde_function_algebra()).order(), 4);
}

TEST(Corep, FundamentalIsUnitaryIrreducible) {
  Corep u = kp_fundamental();
  CorepReport r = verify_corep(u);
  EXPECT_TRUE(r.is_corep());
  EXPECT_TRUE(r.unitary);
  EXPECT_EQ(intertwiners(u, u).dim(), 1);
}

TEST(Corep, TensorSquareDecomposition) {
  auto P = displayed_projections();
  CMatrix sum(4, 4);
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(P[i] * P[i], P[i]);
    EXPECT_EQ(adjoint(P[i]), P[i]);
    EXPECT_EQ(trace(P[i]), CycQ8(1));
    for (int j = 0; j < 4; ++j)
      if (i != j)
        EXPECT_TRUE((P[i] * P[j]).is_zero());
    sum += P[i];
  }
  EXPECT_EQ(sum, CMatrix::identity(4));
  AxiomReport r = tensor_square_kp_check();
  EXPECT_TRUE(r.passed()) << r.to_json().dump();
}

TEST(Corep, FusionGraphIsAffineD4Star) {
  KPFusion f = kp_fusion_check();
  EXPECT_TRUE(f.report.passed()) << f.report.to_json().dump();
  const auto& m = f.graph.mult;
  for (int x = 0; x < 4; ++x) {
    EXPECT_EQ(m[x][4], 1);
    EXPECT_EQ(m[4][x], 1);
  }
  EXPECT_EQ(m[4][4], 0);
  auto w = f.graph.weights();
  EXPECT_EQ(w[0][4], Rational(2));
  EXPECT_EQ(w[4][0], Rational(1, 2));
  EXPECT_NE(f.graph.to_dot().find("digraph"), std::string::npos);
}

TEST(Corep, IncompleteIrreducibleListRejected) {
  const HopfPtr& kp = kp_model().hopf;
  std::vector<Corep> irr = {Corep::trivial(kp), kp_fundamental()};
  try {
    fusion_graph(kp, kp_fundamental(), irr, {"u1", "fund"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IncompleteIrreducibles);
  }
}

TEST(Corep, IntertwinersOfDirectSums) {
  const HopfPtr& kp = kp_model().hopf;
  auto us = displayed_one_dims(kp);
  Corep a = direct_sum({Corep::one_dim(kp, us[1]), kp_fundamental()});
  Corep b = direct_sum({kp_fundamental(), Corep::one_dim(kp, us[1]), Corep::one_dim(kp, us[2])});
  EXPECT_EQ(intertwiners(a, b).dim(), 2);
  EXPECT_EQ(intertwiners(a, b, Exec::Serial).dim(), 2);
  for (const auto& t : intertwiners(a, b).basis) {
    EXPECT_EQ(t.rows(), 4u);
    EXPECT_EQ(t.cols(), 3u);
  }
}
