#ifndef HOPFCHECK_COREP_HPP_
#define HOPFCHECK_COREP_HPP_

#include <string>
#include <vector>

#include "hopfcheck/hopf.hpp"

namespace hopfcheck {

// n x n matrix with entries in a Hopf algebra, row-major.
struct Corep {
  HopfPtr hopf;
  int size = 0;
  std::vector<AlgElement> entries;

  const AlgElement& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * size + j]; }
  static Corep trivial(const HopfPtr& h);
  static Corep one_dim(const HopfPtr& h, const AlgElement& u);
};

struct CorepReport {
  bool comultiplicative = true;  // D(u_ij) = sum_k u_ik (x) u_kj
  bool counital = true;          // eps(u_ij) = delta_ij
  bool unitary = true;           // U*U = UU* = 1 over the algebra
  json witness;                  // first failure

  bool is_corep() const { return comultiplicative && counital; }
};

CorepReport verify_corep(const Corep& u);

// (U (x) V)_{(i,k),(j,l)} = u_ij v_kl
Corep tensor_corep(const Corep& u, const Corep& v);

// Basis of {T : (T (x) 1) U = V (T (x) 1)}, T of size dim V x dim U.
struct IntertwinerSpace {
  std::vector<CMatrix> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

IntertwinerSpace intertwiners(const Corep& u, const Corep& v, Exec exec = Exec::Parallel);

struct OneDimGroup {
  std::vector<AlgElement> elements;  // elements[identity] is 1
  std::vector<std::vector<int>> table;
  int identity = 0;

  int order() const { return static_cast<int>(elements.size()); }
  int index_of(const AlgElement& x) const;
  // Every element squares to the identity and the table is commutative.
  bool is_klein_four() const;
};

// All u with D u = u (x) u, eps(u) = 1, u* u = 1. Values on 1x1 blocks are
// enumerated over 8th roots of unity as characters of the block group; the
// larger blocks follow from the linear equations (phi (x) id) D u = c_phi u,
// and any remaining freedom is searched over a finite set of entry values
// before the full quadratic identity is verified.
OneDimGroup one_dim_group(const HopfPtr& h);

struct FusionGraph {
  std::vector<std::string> labels;
  std::vector<int> dims;
  std::vector<std::vector<int>> mult;  // mult[x][y]: multiplicity of y in fund (x) x

  // Edge weights mult * dim(y) / dim(x), so the outgoing total from each
  // vertex is dim(fund). Recorded only.
  std::vector<std::vector<Rational>> weights() const;
  std::string to_dot() const;
  json to_json() const;
};

// Throws IncompleteIrreducibles when the list is not a complete set of
// pairwise non-isomorphic irreducibles (sum of dim^2 = dim H).
FusionGraph fusion_graph(const HopfPtr& h, const Corep& fundamental, const std::vector<Corep>& irreducibles,
                         const std::vector<std::string>& labels);

// ---- Kac-Paljutkin instances

// u1..u4 as printed, in order.
std::vector<AlgElement> printed_one_dim_kp();
// P1..P4 as printed.
std::vector<CMatrix> printed_projections();
// U := Phi(U') as a corep of C(G_KP).
Corep kp_fundamental();

// Projection identities for P1..P4 and U (x) U = sum_i P_i (x) u_i.
AxiomReport tensor_square_kp_check();
// u1..u4 found by one_dim_group, unit, K4 table.
AxiomReport one_dim_kp_check();

struct KPFusion {
  FusionGraph graph;
  AxiomReport report;  // star shape, fund (x) fund, u_i (x) fund
};
KPFusion kp_fusion_check();

} // namespace hopfcheck

#endif
