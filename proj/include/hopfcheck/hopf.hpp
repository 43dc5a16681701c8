#ifndef HOPFCHECK_HOPF_HPP_
#define HOPFCHECK_HOPF_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopfcheck/multimatrix.hpp"

namespace hopfcheck {

using json = nlohmann::json;

// Multimatrix algebra with coproduct A -> A (x) A, counit A -> k and
// antipode A -> A, all as exact matrices on canonical bases.
struct HopfAlgebra {
  std::string name;
  AlgebraPtr algebra;
  LinearMap coproduct;
  LinearMap counit;
  LinearMap antipode;

  int dim() const { return algebra->dim(); }
  AlgElement delta(const AlgElement& x) const { return coproduct.apply(x); }
  CycQ8 eps(const AlgElement& x) const { return counit.apply(x)[0]; }
  AlgElement S(const AlgElement& x) const { return antipode.apply(x); }
  AlgElement basis(int k) const { return AlgElement::basis(algebra, k); }
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

struct CounitAntipode {
  LinearMap counit;
  LinearMap antipode;
};

// Solves (eps (x) id) D = id = (id (x) eps) D and
// m (S (x) id) D = eta eps = m (id (x) S) D exactly.
// Throws NoSolution when a system is inconsistent, NonUnique when the
// solution space is not a single point.
CounitAntipode solve_counit_antipode(const AlgebraPtr& algebra, const LinearMap& coproduct);

// Solves eps and S, and bundles. Does not verify the axioms.
HopfPtr make_hopf(std::string name, AlgebraPtr algebra, LinearMap coproduct);
// make_hopf followed by verify_hopf_axioms; throws AxiomFailure naming the
// first failing law.
HopfPtr make_verified_hopf(std::string name, AlgebraPtr algebra, LinearMap coproduct);

struct AxiomResult {
  std::string name;
  bool passed = true;
  // Report-only results do not enter passed().
  bool gating = true;
  json witness;  // null on success
};

struct AxiomReport {
  std::vector<AxiomResult> results;

  bool passed() const;
  const AxiomResult* first_failure() const;
  const AxiomResult* find(const std::string& name) const;
  json to_json() const;
};

// Coassociativity, counit laws, antipode laws, coproduct multiplicative /
// unital / star-compatible, counit a *-character, cancellation ranks, and
// the report-only S^2 = id and S * S * = id.
AxiomReport verify_hopf_axioms(const HopfAlgebra& h, Exec exec = Exec::Parallel);

enum class MorphismKind { Hom, Iso, Surjective };

AxiomReport check_hopf_morphism(const LinearMap& f, const HopfAlgebra& h1, const HopfAlgebra& h2,
                                MorphismKind require, Exec exec = Exec::Parallel);

struct CommutativityFlags {
  bool commutative = true;
  bool cocommutative = true;
  json commutative_witness;    // first basis pair (a, b) with ab != ba
  json cocommutative_witness;  // first basis element with flip(D x) != D x
};

CommutativityFlags commutativity_flags(const HopfAlgebra& h);

} // namespace hopfcheck

#endif
