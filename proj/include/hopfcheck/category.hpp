#ifndef HOPFCHECK_CATEGORY_HPP_
#define HOPFCHECK_CATEGORY_HPP_

#include <array>
#include <string>
#include <vector>

#include "hopfcheck/corep.hpp"

namespace hopfcheck {

// Tambara-Yamagami data over a finite abelian group A = {0, ..., n-1}
// (0 the identity) with simples 0..n-1 for A and n for rho.
//
// F-symbols F^{abc}_d[e][f] (e in a(x)b, f in b(x)c) are multiplicity free:
//   F^{s rho t}_rho = chi(s, t)
//   F^{rho s rho}_g = chi(s, g)      (literal flag: 1)
//   F^{rho rho rho}_rho[k][l] = tau / chi(k, l)
// and 1 otherwise.
struct TYData {
  std::vector<std::vector<int>> table;
  std::vector<std::string> names;
  std::vector<std::vector<CycQ8>> chi;
  CycQ8 tau;
  bool literal_rho_s_rho = false;
  bool nondegenerate = false;
  bool klein_four = false;

  int group_order() const { return static_cast<int>(table.size()); }
  int rho() const { return group_order(); }
  int num_simples() const { return group_order() + 1; }
  std::string name(int x) const { return x == rho() ? "rho" : names[x]; }

  // Simples z with N_{xy}^z = 1, ascending.
  std::vector<int> fuse(int x, int y) const;
  bool allowed(int x, int y, int z) const;
  // Throws ShapeMismatch on an inadmissible label set.
  CycQ8 F(int a, int b, int c, int d, int e, int f) const;
};

// Validates symmetry, the bicharacter law and tau != 0 (Bicharacter error);
// records nondegeneracy and whether the group is the Klein four-group.
TYData build_ty_data(std::vector<std::vector<int>> table, std::vector<std::string> names,
                     std::vector<std::vector<CycQ8>> chi, CycQ8 tau, bool literal_rho_s_rho = false);

// K4 = {e, a, b, c} with XOR law (a = bit 0, b = bit 1).
std::vector<std::vector<int>> klein_four_table();
// chi_c(a, a) = chi_c(b, b) = -1, chi_c(a, b) = 1, extended bilinearly.
std::vector<std::vector<CycQ8>> chi_c();
TYData klein_four_ty(const CycQ8& tau, bool literal_rho_s_rho = false);
// Same data with group elements renamed by a permutation (perm[old] = new).
TYData relabel(const TYData& t, const std::vector<int>& perm);

struct PentagonReport {
  int quadruples = 0;
  int equations = 0;
  int failing_equations = 0;
  std::vector<std::array<int, 4>> failing;  // quadruples with a failing equation
  json first_failure;
  bool associators_unitary = true;
  json unitarity_witness;
  bool hom_dims_consistent = true;

  bool passed() const { return failing.empty() && associators_unitary && hom_dims_consistent; }
  json to_json(const TYData& t) const;
};

// Both composites of the pentagon for every quadruple of simples, compared
// entry by entry over the fusion-tree bases, plus unitarity of every F-matrix.
PentagonReport pentagon_check(const TYData& t, Exec exec = Exec::Parallel);

struct FusionMatch {
  std::vector<std::vector<int>> bijections;  // successful maps group element -> irreducible index
  int tried = 0;
  json to_json(const TYData& t, const std::vector<std::string>& labels) const;
};

// Compares N_{xy}^z of the TY ring with multiplicities of the irreducible
// coreps (group-likes first, the 2-dim irreducible last) under every
// bijection of the group onto the 1-dim irreducibles; rho goes to the last.
// Throws NoBijection when none works.
FusionMatch fusion_ring_match(const TYData& t, const std::vector<Corep>& irreducibles);

// ---- module category data

enum class PsiReading {
  Columns,  // column j of psi_g is the image of xi_j
  Rows,     // transposed convention
};

struct ModuleData {
  std::array<CMatrix, 4> psi_g;  // e, a, b, c as printed
  CMatrix psi_rho;               // columns xi_g (x) xi_{g rho}; rows e1xi1, e1xi2, e2xi1, e2xi2
  PsiReading reading = PsiReading::Columns;
  std::string source;            // "printed" or "repaired"
  std::vector<std::string> changes;

  // psi_g as a map, columns = images of xi_1, xi_2.
  CMatrix psi_map(int g) const;
};

ModuleData printed_module_data();
ModuleData build_module_data(const std::string& source);

// Unitarity of the five maps, the H_g diagram for each g, the H_rho diagram,
// the norm consistency of the two solution vectors and the g = b
// intermediate vector (1/sqrt2)(e1 (x) xi1 - e2 (x) xi2).
AxiomReport verify_module_diagrams(const ModuleData& m);

struct RepairSolution {
  ModuleData data;
  int cost = 0;
};

struct RepairResult {
  std::vector<RepairSolution> solutions;
  int designated = -1;
  json log;

  const ModuleData& best() const { return solutions.at(designated).data; }
};

// Fourth-root phases on each nonzero entry of psi_rho, a global fourth-root
// phase on each psi_g, and both readings of psi_g. Cost = changed psi_rho
// entries + rephased psi_g + 1 for the transposed reading. Throws NoneFound.
RepairResult sign_repair_search(const ModuleData& printed);

} // namespace hopfcheck

#endif
