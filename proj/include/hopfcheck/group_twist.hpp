#ifndef HOPFCHECK_GROUP_TWIST_HPP_
#define HOPFCHECK_GROUP_TWIST_HPP_

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hopfcheck/hopf.hpp"

namespace hopfcheck {

// Finite group of unitary matrices with an explicit multiplication table.
// Element 0 is the identity; the remaining order is breadth-first from the
// generators, so it is deterministic.
struct FiniteMatrixGroup {
  std::vector<CMatrix> elements;
  std::vector<std::string> names;
  std::vector<std::vector<int>> table;  // table[a][b] = index of a * b
  std::vector<int> inverse;
  int identity = 0;

  int order() const { return static_cast<int>(elements.size()); }
  int mul(int a, int b) const { return table[a][b]; }
  // -1 when m is not in the group.
  int index_of(const CMatrix& m) const;
  int index_of(const std::string& name) const;
};

using NamedMatrix = std::pair<CMatrix, std::string>;

// Closure of the generators under products. Elements matching an entry of
// `names` get that name, others "h<k>". Throws NotUnitary / NotUnimodular
// for bad generators and CapExceeded when the group grows beyond cap.
FiniteMatrixGroup generate_group(const std::vector<CMatrix>& generators, int cap,
                                 const std::vector<NamedMatrix>& names = {});

// Determinant by exact elimination.
CycQ8 determinant(const CMatrix& m);

// C(G): |G| one-dimensional blocks (basis delta_h, labelled by element
// name), D delta_h = sum_{k1 k2 = h} delta_k1 (x) delta_k2.
HopfPtr function_algebra(const FiniteMatrixGroup& g);

// Involutive automorphism h -> u h u* of G.
struct GroupAction2 {
  std::vector<int> perm;
  CMatrix unitary;

  int operator()(int h) const { return perm[h]; }
  bool trivial() const;
  // delta_h -> delta_{theta h} on the function algebra.
  LinearMap induced_map(const HopfAlgebra& fn) const;
};

// Throws NotUnitary, NotStable (u G u* not inside G) or NotInvolutive.
GroupAction2 conjugation_action(const FiniteMatrixGroup& g, const CMatrix& u);

// Z/2-grading of C(G) from a central z with z^2 = e: f is even when
// f(zh) = f(h) and odd when f(zh) = -f(h).
struct CentralGrading {
  int z = 0;
  bool trivial() const { return z == 0; }
};

// Throws NotCentral when z is not a central element of order <= 2.
CentralGrading central_grading(const FiniteMatrixGroup& g, const CMatrix& z);

// C(G) x| Z/2 with lambda delta_h = delta_{theta h} lambda, lambda^2 = 1,
// (a lambda)* = theta(a*) lambda, D(a lambda^k) = D(a)(lambda^k (x) lambda^k).
//
// The algebra is presented through orbit matrix units: a fixed point x
// gives the one-dimensional blocks (delta_x +- delta_x lambda)/2, a free
// orbit {x, theta x} gives an M2 block with E11 = delta_x,
// E22 = delta_{theta x}, E12 = delta_x lambda, E21 = delta_{theta x} lambda.
struct SmashProduct {
  HopfPtr hopf;
  std::shared_ptr<const FiniteMatrixGroup> group;
  GroupAction2 action;
  std::vector<AlgElement> delta;  // delta_h
  AlgElement lambda;

  // delta_h lambda^k
  AlgElement crossed(int h, int k) const { return k ? delta[h] * lambda : delta[h]; }
  // Columns: delta_h lambda^k in canonical coordinates, index k * |G| + h.
  CMatrix crossed_basis() const;
};

// Throws AxiomFailure when theta is not a Hopf automorphism of C(G) or the
// result fails verify_hopf_axioms.
std::shared_ptr<const SmashProduct> smash_product(const FiniteMatrixGroup& g, const GroupAction2& theta);

// Subalgebra C(G)_even + C(G)_odd lambda of the smash product, as a
// standalone Hopf algebra. Cosets c = {h, zh} contribute e_c = delta_h +
// delta_zh and o_c = (delta_h - delta_zh) lambda; the block structure comes
// from the theta-orbits on cosets.
struct GradedTwist {
  HopfPtr hopf;
  std::shared_ptr<const SmashProduct> smash;
  CentralGrading grading;
  LinearMap embedding;  // twist -> smash
  std::vector<int> coset_reps;

  // e_c and o_c of the coset containing h, pushed into the twist algebra.
  AlgElement even(int h) const;
  AlgElement odd(int h) const;
  // Preimage of a smash element lying in the twist; throws NotClosed otherwise.
  AlgElement pull_back(const AlgElement& x) const;
};

// Throws NotClosed when the subspace is not a sub-Hopf-algebra, NotStable
// when theta moves z.
std::shared_ptr<const GradedTwist> graded_twist(const FiniteMatrixGroup& g, const CentralGrading& grading,
                                                const GroupAction2& theta);

} // namespace hopfcheck

#endif
