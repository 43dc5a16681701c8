#include <gtest/gtest.h>

#include "hopfcheck/models.hpp"
#include "support.hpp"

using namespace hopfcheck;
using hopfcheck::testing::Displayed;

namespace {

struct Term {
  int p, q;
  CycQ8 c;
};

AlgElement sum(const HopfAlgebra& h, const std::vector<Term>& ts) {
  AlgElement out = AlgElement::zero(tensor(h.algebra, h.algebra));
  for (const auto& t : ts)
    out += t.c * tensor(h.basis(t.p), h.basis(t.q));
  return out;
}

// Matrix-block part of the displayed coproduct of x in M2:
// sum over the four projections g of g (x) w_g x w_g* + conj(w_g) x conj(w_g)* (x) g.
AlgElement display_m2(const HopfAlgebra& h, const CMatrix& x, const std::array<int, 4>& proj,
                      const std::array<CMatrix, 4>& w) {
  auto block = [&](const CMatrix& m) { return AlgElement::from_block(h.algebra, 4, m); };
  auto conj = [](const CMatrix& m) {
    CMatrix c = m;
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t s = 0; s < 2; ++s)
        c(r, s) = m(r, s).conj();
    return c;
  };
  AlgElement out = AlgElement::zero(tensor(h.algebra, h.algebra));
  for (int g = 0; g < 4; ++g) {
    out += tensor(h.basis(proj[g]), block(w[g] * x * adjoint(w[g])));
    out += tensor(block(conj(w[g]) * x * adjoint(conj(w[g]))), h.basis(proj[g]));
  }
  return out;
}

CMatrix unit(int i, int j) {
  CMatrix m(2, 2);
  m(i, j) = 1;
  return m;
}

}  // namespace

TEST(KacPaljutkin, ProjectionCoproductsMatchDisplay) {
  const HopfAlgebra& h = *kp_model().hopf;
  const CycQ8 hf = Rational(1, 2), i = CycQ8::i();
  EXPECT_EQ(h.delta(h.basis(kAlpha)),
            sum(h, {{kEps, kAlpha, 1}, {kAlpha, kEps, 1}, {kBeta, kGamma, 1}, {kGamma, kBeta, 1},
                    {kE11, kE22, hf}, {kE12, kE21, hf * i}, {kE21, kE12, -hf * i}, {kE22, kE11, hf}}));
  EXPECT_EQ(h.delta(h.basis(kGamma)),
            sum(h, {{kEps, kGamma, 1}, {kGamma, kEps, 1}, {kAlpha, kBeta, 1}, {kBeta, kAlpha, 1},
                    {kE11, kE11, hf}, {kE12, kE12, -hf}, {kE21, kE21, -hf}, {kE22, kE22, hf}}));
}

TEST(KacPaljutkin, MatrixBlockCoproductMatchesDisplay) {
  const HopfAlgebra& h = *kp_model().hopf;
  Displayed d;
  const std::array<CMatrix, 4> w = {CMatrix::identity(2), d.u_alpha, d.u_beta, d.u_gamma};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      AlgElement x = AlgElement::from_block(h.algebra, 4, unit(i, j));
      EXPECT_EQ(h.delta(x), display_m2(h, unit(i, j), {kEps, kAlpha, kBeta, kGamma}, w)) << i << j;
    }
}

TEST(KacPaljutkin, AxiomsAndFlags) {
  const HopfAlgebra& h = *kp_model().hopf;
  AxiomReport r = verify_hopf_axioms(h);
  EXPECT_TRUE(r.passed()) << r.to_json().dump();
  EXPECT_TRUE(r.find("antipode_squared_identity")->passed);
  auto f = commutativity_flags(h);
  EXPECT_FALSE(f.commutative);
  EXPECT_FALSE(f.cocommutative);
}

TEST(Twist, DerivedCoproductMatchesDisplay) {
  const TwistModel& tw = twist_model();
  EXPECT_EQ(tw.hopf->coproduct, displayed_twist_coproduct());
  const HopfAlgebra& h = *tw.hopf;
  Displayed d;
  const std::array<CMatrix, 4> w = {CMatrix::identity(2), d.w_alpha, d.w_beta, d.w_gamma};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      AlgElement x = AlgElement::from_block(h.algebra, 4, unit(i, j));
      EXPECT_EQ(h.delta(x), display_m2(h, unit(i, j), {kEps, kAlpha, kBeta, kGamma}, w));
    }
  const CycQ8 hf = Rational(1, 2);
  EXPECT_EQ(h.delta(h.basis(kAlpha)),
            sum(h, {{kEps, kAlpha, 1}, {kAlpha, kEps, 1}, {kBeta, kGamma, 1}, {kGamma, kBeta, 1},
                    {kE11, kE11, hf}, {kE12, kE12, hf}, {kE21, kE21, hf}, {kE22, kE22, hf}}));
}

TEST(Twist, RelabelHandlesLandOnPrintedBasis) {
  const TwistModel& tw = twist_model();
  ASSERT_FALSE(tw.handles.empty());
  for (const auto& hd : tw.handles)
    EXPECT_EQ(tw.to_smash.apply(hd.paper), hd.smash) << hd.label;
  // (d_I + d_-I) + (d_I - d_-I) lambda = 2 eps
  AlgElement x = tw.delta("I") + tw.delta("-I") + (tw.delta("I") - tw.delta("-I")) * tw.smash().lambda;
  EXPECT_EQ(tw.from_smash(x), CycQ8(2) * tw.hopf->basis(kEps));
}

TEST(Phi, IsomorphismAndConjugationIdentities) {
  PhiResult p = build_phi_and_verify();
  EXPECT_TRUE(p.report.passed()) << p.report.to_json().dump();
  Displayed d;
  EXPECT_EQ(d.v * d.w_alpha * adjoint(d.v), d.u_gamma);
  EXPECT_EQ(d.v * d.w_beta * adjoint(d.v), d.u_alpha);
  EXPECT_EQ(d.v * d.w_gamma * adjoint(d.v), d.u_beta);
  const HopfAlgebra& kp = *kp_model().hopf;
  EXPECT_EQ(p.phi.apply(twist_model().hopf->basis(kAlpha)), kp.basis(kGamma));
  EXPECT_EQ(p.phi.apply(twist_model().hopf->basis(kBeta)), kp.basis(kAlpha));
  EXPECT_EQ(p.phi.apply(twist_model().hopf->basis(kGamma)), kp.basis(kBeta));
}

TEST(Quotient, GeneratorRelationsAndSpan) {
  GeneratorImages g = fundamental_images_and_su2m1_check();
  EXPECT_TRUE(g.report.passed()) << g.report.to_json().dump();
  EXPECT_EQ(g.u(2, 2), g.u(1, 1).star());
  EXPECT_EQ(g.u(1, 2), g.u(2, 1).star());
  ASSERT_FALSE(g.rank_by_length.empty());
  EXPECT_EQ(g.rank_by_length.back(), 8u);
  EXPECT_EQ(g.saturation_length, 2);
}

TEST(Twist, NoncommutativityWitnesses) {
  AxiomReport r = twist_witness_check();
  EXPECT_TRUE(r.passed()) << r.to_json().dump();
  const TwistModel& tw = twist_model();
  const AlgElement& lam = tw.smash().lambda;
  AlgElement a = tw.delta("s1") + tw.delta("-s1");
  AlgElement b = (tw.delta("s2") - tw.delta("-s2")) * lam;
  EXPECT_TRUE((a * b).is_zero());
  EXPECT_FALSE((b * a).is_zero());
}

TEST(Vtilde, SubgroupConditions) {
  AxiomReport r = vtilde_subgroup_check();
  EXPECT_TRUE(r.passed()) << r.to_json().dump();
  EXPECT_EQ(r.results.size(), 3u);
}
