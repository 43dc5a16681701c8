#include <gtest/gtest.h>

#include "hopfcheck/group_twist.hpp"
#include "hopfcheck/models.hpp"
#include "support.hpp"

using namespace hopfcheck;

namespace {

CMatrix diag2(CycQ8 a, CycQ8 b) { return make_matrix({{a, 0}, {0, b}}); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Io;  // sentinel: nothing thrown
}

}  // namespace

TEST(Group, VtildeIsQuaternionic) {
  const FiniteMatrixGroup& g = vtilde_group();
  EXPECT_EQ(g.order(), 8);
  const CMatrix minus = CMatrix::identity(2) * CycQ8(-1);
  for (const char* s : {"s1", "s2", "s3"}) {
    const CMatrix& m = g.elements[g.index_of(s)];
    EXPECT_EQ(m * m, minus) << s;
    EXPECT_EQ(determinant(m), CycQ8(1));
  }
  // every element outside +-I has order 4
  for (int h = 0; h < g.order(); ++h) {
    const std::string& n = g.names[h];
    if (n == "I" || n == "-I")
      continue;
    EXPECT_EQ(g.mul(h, h), g.index_of("-I")) << n;
  }
}

TEST(Group, GeneratorErrors) {
  EXPECT_EQ(kind_of([] { generate_group({make_matrix({{1, 1}, {0, 1}})}, 8); }), ErrorKind::NotUnitary);
  EXPECT_EQ(kind_of([] { generate_group({diag2(1, -1)}, 8); }), ErrorKind::NotUnimodular);
  EXPECT_EQ(kind_of([] { generate_group({diag2(CycQ8::zeta(), CycQ8::zeta().conj())}, 4); }),
            ErrorKind::CapExceeded);
}

TEST(Group, ConjugationActionAndGrading) {
  const FiniteMatrixGroup& g = vtilde_group();
  GroupAction2 theta = conjugation_action(g, vtilde_action_unitary());
  EXPECT_FALSE(theta.trivial());
  for (int h = 0; h < g.order(); ++h)
    EXPECT_EQ(theta(theta(h)), h);
  const CMatrix u = vtilde_action_unitary();
  for (int h = 0; h < g.order(); ++h)
    EXPECT_EQ(g.elements[theta(h)], u * g.elements[h] * adjoint(u)) << g.names[h];
  EXPECT_EQ(theta(g.index_of("s1")), g.index_of("-s2"));
  EXPECT_EQ(theta(g.index_of("s3")), g.index_of("-s3"));
  CentralGrading z = central_grading(g, CMatrix::identity(2) * CycQ8(-1));
  EXPECT_EQ(z.z, g.index_of("-I"));
  EXPECT_EQ(kind_of([&] { central_grading(g, g.elements[g.index_of("s1")]); }), ErrorKind::NotCentral);
}

TEST(Smash, DimensionsAndCrossedRelations) {
  const FiniteMatrixGroup& g = vtilde_group();
  GroupAction2 theta = conjugation_action(g, vtilde_action_unitary());
  auto sp = smash_product(g, theta);
  EXPECT_EQ(sp->hopf->dim(), 16);
  EXPECT_TRUE(verify_hopf_axioms(*sp->hopf).passed());
  const AlgElement& lam = sp->lambda;
  EXPECT_EQ(lam * lam, AlgElement::one(sp->hopf->algebra));
  EXPECT_EQ(lam.star(), lam);
  for (int h = 0; h < g.order(); ++h) {
    EXPECT_EQ(lam * sp->delta[h], sp->delta[theta(h)] * lam);
    EXPECT_EQ(sp->delta[h] * sp->delta[h], sp->delta[h]);
  }
  EXPECT_EQ(sp->crossed_basis().rows(), 16u);
}

TEST(Twist, VtildeTwistShape) {
  const FiniteMatrixGroup& g = vtilde_group();
  GroupAction2 theta = conjugation_action(g, vtilde_action_unitary());
  auto tw = graded_twist(g, central_grading(g, CMatrix::identity(2) * CycQ8(-1)), theta);
  EXPECT_EQ(tw->hopf->dim(), 8);
  EXPECT_EQ(tw->hopf->algebra->block_sizes(), (std::vector<int>{1, 1, 1, 1, 2}));
  EXPECT_TRUE(verify_hopf_axioms(*tw->hopf).passed());
  auto f = commutativity_flags(*tw->hopf);
  EXPECT_FALSE(f.commutative);
  EXPECT_FALSE(f.cocommutative);
  // the embedding is an injective unital *-homomorphism
  const auto& emb = tw->embedding;
  EXPECT_EQ(emb.apply(AlgElement::one(tw->hopf->algebra)), AlgElement::one(tw->smash->hopf->algebra));
  std::vector<AlgElement> imgs;
  for (int k = 0; k < 8; ++k)
    imgs.push_back(emb.image(k));
  EXPECT_EQ(span_rank(imgs), 8u);
  for (int p = 0; p < 8; ++p)
    for (int q = 0; q < 8; ++q)
      ASSERT_EQ(emb.apply(tw->hopf->basis(p) * tw->hopf->basis(q)), emb.image(p) * emb.image(q));
}

TEST(Twist, TrivialActionGivesCommutativeTwist) {
  const FiniteMatrixGroup& g = vtilde_group();
  GroupAction2 id = conjugation_action(g, CMatrix::identity(2));
  EXPECT_TRUE(id.trivial());
  auto tw = graded_twist(g, central_grading(g, CMatrix::identity(2) * CycQ8(-1)), id);
  EXPECT_TRUE(verify_hopf_axioms(*tw->hopf).passed());
  EXPECT_TRUE(commutativity_flags(*tw->hopf).commutative);
}

TEST(Twist, ActionMovingZIsRejected) {
  // conjugation fixes the centre, so stability failures need a non-central z
  const FiniteMatrixGroup& g = vtilde_group();
  GroupAction2 theta = conjugation_action(g, vtilde_action_unitary());
  const ErrorKind k = kind_of([&] {
    CentralGrading z;
    z.z = g.index_of("s1");
    graded_twist(g, z, theta);
  });
  EXPECT_TRUE(k == ErrorKind::NotStable || k == ErrorKind::NotCentral || k == ErrorKind::NotInvolutive);
}
