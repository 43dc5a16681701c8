#ifndef HOPFCHECK_MODELS_HPP_
#define HOPFCHECK_MODELS_HPP_

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "hopfcheck/group_twist.hpp"

namespace hopfcheck {

// Canonical positions shared by the Kac-Paljutkin algebra and the relabelled
// twist: four projections, then the M2 block (e11, e12, e21, e22).
enum KPIndex { kEps = 0, kAlpha = 1, kBeta = 2, kGamma = 3, kE11 = 4, kE12 = 5, kE21 = 6, kE22 = 7 };

struct KPModel {
  HopfPtr hopf;
  CMatrix u_alpha, u_beta, u_gamma;

  AlgElement basis(int k) const { return hopf->basis(k); }
  // Matrix unit e_ij of the M2 block, 1-based as printed.
  AlgElement e(int i, int j) const { return hopf->basis(kE11 + 2 * (i - 1) + (j - 1)); }
};

// Coproduct of C(G_KP) from the five displayed formulas, eps and S solved,
// all axioms verified (AxiomFailure otherwise).
KPModel build_kp();
const KPModel& kp_model();

// The order-8 subgroup of SU(2) generated by s1, s2, s3, with elements named
// I, -I, s1, -s1, s2, -s2, s3, -s3.
std::vector<NamedMatrix> vtilde_named_elements();
std::array<CMatrix, 3> vtilde_generators();
const FiniteMatrixGroup& vtilde_group();
// Conjugation by diag(i, -i).
CMatrix vtilde_action_unitary();
const HopfPtr& vtilde_function_algebra();

struct RelabelHandle {
  std::string label;   // e.g. "(d_s1 - d_-s1) lambda"
  AlgElement smash;    // the combination inside the smash product
  AlgElement paper;    // its image in the printed basis
};

struct TwistModel {
  // Twist in the printed basis eps, alpha', beta', gamma', e_ij.
  HopfPtr hopf;
  std::shared_ptr<const GradedTwist> twist;
  LinearMap to_smash;  // printed basis -> smash product
  LinearMap to_twist;  // printed basis -> generic twist basis
  std::vector<RelabelHandle> handles;
  CMatrix w_alpha, w_beta, w_gamma, v;

  // Coordinates in the printed basis of a smash element lying in the twist.
  AlgElement from_smash(const AlgElement& x) const;
  const SmashProduct& smash() const { return *twist->smash; }
  // Smash element delta_h for a named element of the group.
  AlgElement delta(const std::string& name) const;
};

// Graded twist of C(V~) at z = -I, relabelled by the printed correspondence;
// throws ModelMismatch quoting the first coefficient that differs from the
// displayed twisted coproduct.
TwistModel build_vtilde_twist();
const TwistModel& twist_model();

// Coproduct transcribed from the twisted-coproduct display, on the printed basis.
LinearMap displayed_twist_coproduct();

struct PhiResult {
  LinearMap phi;  // printed twist basis -> C(G_KP)
  AxiomReport report;
};

// (eps, alpha', beta', gamma') -> (eps, gamma, alpha, beta), x -> v x v*,
// checked as a Hopf *-isomorphism together with v w v* = u identities.
PhiResult build_phi_and_verify();

struct GeneratorImages {
  // u'_ij = (sum_h h_ij delta_h) lambda, printed twist basis, row-major.
  std::array<AlgElement, 4> twist_entries;
  std::array<AlgElement, 4> kp_entries;  // Phi images
  int saturation_length = 0;
  std::vector<std::size_t> rank_by_length;
  AxiomReport report;

  const AlgElement& u(int i, int j) const { return twist_entries[2 * (i - 1) + (j - 1)]; }
};

GeneratorImages fundamental_images_and_su2m1_check();

// Products and coproducts from the noncommutativity / noncocommutativity
// argument for the twist.
AxiomReport twist_witness_check();

// The three subgroup conditions: +-I in V~, theta-stable, an element with
// abcd != 0.
AxiomReport vtilde_subgroup_check();

} // namespace hopfcheck

#endif
