// Runs acceptance criteria 1-9 and prints one line per criterion.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "hopfcheck/category.hpp"
#include "hopfcheck/checks.hpp"
#include "hopfcheck/serialize.hpp"
#include "support.hpp"

using namespace hopfcheck;
using namespace hopfcheck::testing;

namespace {

struct Line {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

int failures = 0;

void emit(int n, const std::string& title, const std::function<Line()>& body) {
  Line l;
  try {
    l = body();
  } catch (const std::exception& e) {
    l.ok = false;
    l.note = std::string("exception: ") + e.what();
  }
  if (!l.ok)
    ++failures;
  std::printf("[%s] AC%d %s%s%s\n", l.ok ? "PASS" : "FAIL", n, title.c_str(), l.ok ? "" : " -- ",
              l.note.c_str());
  std::fflush(stdout);
}

std::size_t cancellation_rank(const HopfAlgebra& h, bool left) {
  std::vector<AlgElement> v;
  const AlgElement one = AlgElement::one(h.algebra);
  for (int p = 0; p < h.dim(); ++p)
    for (int q = 0; q < h.dim(); ++q)
      v.push_back(left ? tensor(h.basis(p), one) * h.delta(h.basis(q)) : h.delta(h.basis(q)) * tensor(one, h.basis(p)));
  return span_rank(v);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

int main() {
  emit(1, "Hopf *-algebra axioms for C(G_KP), cancellation ranks 64", [] {
    Line l;
    const HopfAlgebra& h = *kp_model().hopf;
    AxiomReport r = verify_hopf_axioms(h);
    l.require(r.passed(), "axiom failure: " + (r.first_failure() ? r.first_failure()->name : ""));
    l.require(cancellation_rank(h, true) == 64, "left cancellation rank != 64");
    l.require(cancellation_rank(h, false) == 64, "right cancellation rank != 64");
    return l;
  });

  emit(2, "twist: dim 8, axioms, flags (false, false), witnesses", [] {
    Line l;
    const TwistModel& tw = twist_model();
    l.require(tw.hopf->dim() == 8, "dimension");
    l.require(verify_hopf_axioms(*tw.hopf).passed(), "axioms");
    auto f = commutativity_flags(*tw.hopf);
    l.require(!f.commutative && !f.cocommutative, "flags");
    const AlgElement& lam = tw.smash().lambda;
    AlgElement a = tw.delta("s1") + tw.delta("-s1");
    AlgElement b = (tw.delta("s2") - tw.delta("-s2")) * lam;
    l.require((a * b).is_zero(), "(d_s1 + d_-s1)(d_s2 - d_-s2) lambda != 0");
    l.require(!(b * a).is_zero(), "reverse product vanishes");
    AlgElement x = tw.from_smash((tw.delta("s3") - tw.delta("-s3")) * lam);
    l.require(!(tw.hopf->delta(x) == flip_map(tw.hopf->algebra, tw.hopf->algebra).apply(tw.hopf->delta(x))),
              "D = D^op on (d_s3 - d_-s3) lambda");
    l.require(twist_witness_check().passed(), "witness report");
    return l;
  });

  emit(3, "Phi is a Hopf *-isomorphism; v w v* = u identities", [] {
    Line l;
    PhiResult p = build_phi_and_verify();
    l.require(p.report.passed(), "morphism report");
    Displayed d;
    l.require(d.v * d.w_alpha * adjoint(d.v) == d.u_gamma, "v w_alpha' v* != u_gamma");
    l.require(d.v * d.w_beta * adjoint(d.v) == d.u_alpha, "v w_beta' v* != u_alpha");
    l.require(d.v * d.w_gamma * adjoint(d.v) == d.u_beta, "v w_gamma' v* != u_beta");
    return l;
  });

  emit(4, "U' unitary, u'22 = u'11*, u'12 = u'21*, comultiplicative, words span 8", [] {
    Line l;
    GeneratorImages g = fundamental_images_and_su2m1_check();
    l.require(g.report.passed(), "generator report");
    l.require(g.u(2, 2) == g.u(1, 1).star() && g.u(1, 2) == g.u(2, 1).star(), "star relations");
    const HopfAlgebra& h = *twist_model().hopf;
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) {
        AlgElement s = AlgElement::zero(tensor(h.algebra, h.algebra));
        for (int k = 1; k <= 2; ++k)
          s += tensor(g.u(i, k), g.u(k, j));
        l.require(h.delta(g.u(i, j)) == s, "D(u'_ij) != sum u'_ik (x) u'_kj");
      }
    l.require(!g.rank_by_length.empty() && g.rank_by_length.back() == 8, "words do not span");
    return l;
  });

  emit(5, "exactly four group-likes, equal to u1..u4, forming K4, u1 = 1", [] {
    Line l;
    const HopfPtr& kp = kp_model().hopf;
    OneDimGroup g = one_dim_group(kp);
    l.require(g.order() == 4, "count");
    for (const auto& u : displayed_one_dims(kp))
      l.require(g.index_of(u) >= 0, "missing " + u.str());
    l.require(g.is_klein_four(), "not K4");
    l.require(displayed_one_dims(kp)[0] == AlgElement::one(kp->algebra), "u1 is not the unit");
    return l;
  });

  emit(6, "P_i projections, U (x) U = sum P_i (x) u_i, D4 affine fusion graph", [] {
    Line l;
    auto P = displayed_projections();
    CMatrix sum(4, 4);
    for (int i = 0; i < 4; ++i) {
      l.require(P[i] * P[i] == P[i] && adjoint(P[i]) == P[i], "P_i not a projection");
      l.require(trace(P[i]) == CycQ8(1), "trace P_i != 1");
      for (int j = 0; j < 4; ++j)
        if (i != j)
          l.require((P[i] * P[j]).is_zero(), "P_i P_j != 0");
      sum += P[i];
    }
    l.require(sum == CMatrix::identity(4), "sum P_i != I");
    l.require(tensor_square_kp_check().passed(), "U (x) U decomposition");
    KPFusion f = kp_fusion_check();
    l.require(f.report.passed(), "fusion graph");
    return l;
  });

  emit(7, "TY pentagon: 625 quadruples pass at tau = 1/2, tau = 1 fails, fusion ring matches", [] {
    Line l;
    PentagonReport good = pentagon_check(klein_four_ty(CycQ8(Rational(1, 2))));
    l.require(good.quadruples == 625 && good.passed(), "tau = 1/2 fails");
    l.require(!pentagon_check(klein_four_ty(CycQ8(1))).passed(), "tau = 1 passes");
    std::vector<Corep> irr;
    for (const auto& u : displayed_one_dims(kp_model().hopf))
      irr.push_back(Corep::one_dim(kp_model().hopf, u));
    irr.push_back(kp_fundamental());
    FusionMatch m = fusion_ring_match(klein_four_ty(CycQ8(Rational(1, 2))), irr);
    l.require(!m.bijections.empty(), "no bijection");
    return l;
  });

  emit(8, "module data: printed psi_rho not unitary; repaired data passes every diagram", [] {
    Line l;
    AxiomReport printed = verify_module_diagrams(printed_module_data());
    l.require(!printed.find("psi_rho unitary")->passed, "printed psi_rho is unitary");
    RepairResult r = sign_repair_search(printed_module_data());
    const ModuleData& best = r.best();
    AxiomReport rep = verify_module_diagrams(best);
    l.require(rep.passed(), "repaired data fails " + (rep.first_failure() ? rep.first_failure()->name : ""));
    bool sign = false;
    for (const auto& c : best.changes)
      sign = sign || c == "psi_rho(4,3) * -1";
    l.require(sign, "designated repair lacks the e2 (x) xi2 sign");
    l.require(rep.find("g = b intermediate vector")->passed, "g = b intermediate vector");
    return l;
  });

  emit(9, "verify --all as expected, byte-identical round trip, property suites x1000", [] {
    Line l;
    for (const Report& r : run_all())
      l.require(r.as_expected(), "unexpected verdict for " + r.id);
    for (const char* id : {"kp", "vtilde", "vtilde-twist", "smash"}) {
      const auto dir = std::filesystem::temp_directory_path();
      const std::string p1 = (dir / (std::string("acc_") + id + "_1.json")).string();
      const std::string p2 = (dir / (std::string("acc_") + id + "_2.json")).string();
      save_hopf(*exportable_model(id), p1);
      HopfPtr h = load_hopf(p1);
      l.require(verify_hopf_axioms(*h).passed(), std::string("reloaded ") + id + " fails axioms");
      save_hopf(*h, p2);
      l.require(slurp(p1) == slurp(p2), std::string("round trip differs for ") + id);
      std::filesystem::remove(p1);
      std::filesystem::remove(p2);
    }
    for (auto [name, r] : {std::pair<std::string, PropertyResult>{"field axioms", field_axioms_property(1000)},
                           {"star", star_property(1000)},
                           {"tensor functoriality", tensor_functoriality_property(1000)},
                           {"intertwiner symmetry", intertwiner_symmetry_property(1000)}})
      l.require(r.ok() && r.cases >= 1000, name + ": " + r.first);
    return l;
  });

  return failures == 0 ? 0 : 1;
}
