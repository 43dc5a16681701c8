#include "hopfcheck/checks.hpp"

#include <algorithm>
#include <chrono>
#include <future>

#include "hopfcheck/category.hpp"
#include "hopfcheck/corep.hpp"
#include "hopfcheck/models.hpp"
#include "hopfcheck/serialize.hpp"

namespace hopfcheck {

const char* to_string(Verdict v) {
  switch (v) {
  case Verdict::Pass:
    return "pass";
  case Verdict::Fail:
    return "fail";
  case Verdict::Error:
    return "error";
  }
  return "error";
}

json Report::to_json() const {
  return {{"id", id}, {"verdict", hopfcheck::to_string(verdict)}, {"elapsed_ms", elapsed_ms}, {"witness", witness},
          {"anchor", anchor}};
}

namespace {

CheckOutcome from_report(const AxiomReport& r, json extra = json::object()) {
  extra["laws"] = r.to_json();
  return {r.passed(), std::move(extra)};
}

CheckOutcome hopf_axioms(const HopfAlgebra& h) {
  AxiomReport r = verify_hopf_axioms(h);
  return from_report(r, {{"algebra", h.name}, {"dim", h.dim()}, {"block_sizes", h.algebra->block_sizes()}});
}

CheckOutcome pentagon(const TYData& t) {
  PentagonReport par = pentagon_check(t, Exec::Parallel);
  PentagonReport ser = pentagon_check(t, Exec::Serial);
  json w = par.to_json(t);
  const bool agree = par.failing == ser.failing && par.equations == ser.equations &&
                     par.failing_equations == ser.failing_equations;
  w["serial_parallel_agree"] = agree;
  return {par.passed() && agree && par.quadruples == 625, w};
}

std::vector<Corep> kp_irreducibles() {
  const KPModel& kp = kp_model();
  std::vector<Corep> irr;
  for (const auto& u : printed_one_dim_kp())
    irr.push_back(Corep::one_dim(kp.hopf, u));
  irr.push_back(kp_fundamental());
  return irr;
}

CheckOutcome check_bicharacter(const CheckOptions&) {
  AxiomReport rep;
  auto add = [&](std::string name, bool ok, json w = nullptr) {
    AxiomResult r;
    r.name = std::move(name);
    r.passed = ok;
    if (!ok)
      r.witness = std::move(w);
    rep.results.push_back(std::move(r));
  };
  const TYData t = klein_four_ty(CycQ8(Rational(1, 2)));
  add("chi_c is a symmetric bicharacter", true);
  add("chi_c nondegenerate", t.nondegenerate);
  add("chi_c(c, c) = 1", t.chi[3][3] == CycQ8(1), {{"chi(c,c)", t.chi[3][3].str()}});
  add("K4 recognised", t.klein_four);

  std::vector<std::vector<CycQ8>> ones(4, std::vector<CycQ8>(4, CycQ8(1)));
  const TYData triv = build_ty_data(klein_four_table(), {"e", "a", "b", "c"}, ones, CycQ8(Rational(1, 2)));
  add("trivial chi flagged degenerate", !triv.nondegenerate);

  auto bad = chi_c();
  bad[1][2] = bad[2][1] = CycQ8(-1);
  bool rejected = false;
  try {
    build_ty_data(klein_four_table(), {"e", "a", "b", "c"}, bad, CycQ8(Rational(1, 2)));
  } catch (const Error& e) {
    rejected = e.kind() == ErrorKind::Bicharacter;
  }
  add("non-bicharacter rejected", rejected);

  json table = json::array();
  for (const auto& row : t.chi) {
    json r = json::array();
    for (const auto& x : row)
      r.push_back(x.str());
    table.push_back(r);
  }
  return from_report(rep, {{"chi_c", table}});
}

CheckOutcome check_fusion_match(const CheckOptions&) {
  const TYData t = klein_four_ty(CycQ8(Rational(1, 2)));
  FusionMatch m = fusion_ring_match(t, kp_irreducibles());
  json w = m.to_json(t, {"u1", "u2", "u3", "u4", "fund"});
  w["designated"] = w["bijections"][0];
  return {m.tried == 24 && m.bijections.size() == 6, w};
}

CheckOutcome check_modcat_unitarity(const CheckOptions&) {
  const ModuleData m = printed_module_data();
  AxiomReport r = verify_module_diagrams(m);
  AxiomReport u;
  for (const auto& x : r.results)
    if (x.name.find("unitary") != std::string::npos)
      u.results.push_back(x);
  return from_report(u, {{"data", "printed"}});
}

CheckOutcome check_modcat_diagrams(const CheckOptions&) {
  const ModuleData m = build_module_data("repaired");
  json printed = verify_module_diagrams(printed_module_data()).to_json();
  return from_report(verify_module_diagrams(m), {{"data", "repaired"}, {"changes", m.changes}, {"printed", printed}});
}

CheckOutcome check_modcat_repair(const CheckOptions&) {
  const RepairResult r = sign_repair_search(printed_module_data());
  const ModuleData& best = r.best();
  bool proof_sign = false;
  for (const auto& c : best.changes)
    proof_sign = proof_sign || c == "psi_rho(4,3) * -1";
  const AxiomReport diag = verify_module_diagrams(best);
  const AxiomResult* gb = diag.find("g = b intermediate vector");
  json w = r.log;
  w["proof_consistent_sign"] = proof_sign;
  return {diag.passed() && proof_sign && gb && gb->passed, w};
}

CheckOutcome check_model(const CheckOptions& o) {
  ModelFile mf = o.model_path ? load_model(*o.model_path) : vtilde_model_file();
  UserModel u = build_user_model(mf);
  AxiomReport all;
  json dims = json::object();
  for (const auto& [label, h] : {std::pair<std::string, HopfPtr>{"functions", u.functions},
                                 {"smash", u.smash->hopf},
                                 {"twist", u.twist->hopf}}) {
    AxiomReport r = verify_hopf_axioms(*h);
    for (auto x : r.results) {
      x.name = label + ": " + x.name;
      all.results.push_back(std::move(x));
    }
    dims[label] = h->dim();
  }
  const CommutativityFlags f = commutativity_flags(*u.twist->hopf);
  return from_report(all, {{"source", o.model_path ? *o.model_path : "built-in"},
                           {"group_order", u.group.order()},
                           {"dims", dims},
                           {"twist_blocks", u.twist->hopf->algebra->block_sizes()},
                           {"twist_commutative", f.commutative},
                           {"twist_cocommutative", f.cocommutative}});
}

std::vector<CheckDescriptor> build_registry() {
  const CycQ8 half(Rational(1, 2));
  std::vector<CheckDescriptor> r = {
      {"corep.fusion-graph", "fusion graph of U is the D4 affine star", "fusion graph figure",
       [](const CheckOptions&) {
         KPFusion f = kp_fusion_check();
         return from_report(f.report, {{"graph", f.graph.to_json()}, {"dot", f.graph.to_dot()}});
       }},
      {"corep.one-dim", "four group-likes forming K4", "list of 1-dim representations u1..u4",
       [](const CheckOptions&) { return from_report(one_dim_kp_check()); }},
      {"corep.tensor-square", "U (x) U = sum P_i (x) u_i", "tensor square decomposition with P1..P4",
       [](const CheckOptions&) { return from_report(tensor_square_kp_check()); }},
      {"kp.axioms", "Hopf *-algebra axioms for C(G_KP)", "Kac-Paljutkin coproduct display",
       [](const CheckOptions&) { return hopf_axioms(*kp_model().hopf); }},
      {"modcat.diagrams", "module diagrams commute for the repaired data", "module category over C(chi_c, 1/2)",
       check_modcat_diagrams},
      {"modcat.repair", "phase repair search, minimal correction", "psi_rho display and the g = b computation",
       check_modcat_repair},
      {"modcat.unitarity", "printed psi maps are unitary (negative control)", "psi_g and psi_rho displays",
       check_modcat_unitarity, Verdict::Fail},
      {"model.axioms", "user twist model: C(G), smash product and twist axioms", "graded twist construction",
       check_model},
      {"smash.axioms", "Hopf axioms for the smash product C(V~) # Z/2", "crossed product with lambda",
       [](const CheckOptions&) { return hopf_axioms(*twist_model().smash().hopf); }},
      {"su2m1.quotient", "U' unitary, SU_-1(2) relations, words span", "fundamental corepresentation U'",
       [](const CheckOptions&) {
         GeneratorImages g = fundamental_images_and_su2m1_check();
         return from_report(g.report, {{"saturation_length", g.saturation_length}, {"rank_by_length", g.rank_by_length}});
       }},
      {"twist.axioms", "Hopf axioms for the twist C(V~)^{t,alpha}", "twisted coproduct display",
       [](const CheckOptions&) { return hopf_axioms(*twist_model().hopf); }},
      {"twist.iso-phi", "Phi is a Hopf *-isomorphism onto C(G_KP)", "isomorphism theorem and v w v* identities",
       [](const CheckOptions&) { return from_report(build_phi_and_verify().report); }},
      {"twist.noncommutative", "twist is noncommutative and noncocommutative", "noncommutativity argument",
       [](const CheckOptions&) {
         AxiomReport r = twist_witness_check();
         const CommutativityFlags f = commutativity_flags(*twist_model().hopf);
         AxiomResult flags;
         flags.name = "commutativity flags (false, false)";
         flags.passed = !f.commutative && !f.cocommutative;
         r.results.push_back(flags);
         return from_report(r, {{"commutative_witness", f.commutative_witness},
                                {"cocommutative_witness", f.cocommutative_witness}});
       }},
      {"ty.bicharacter", "chi_c symmetric nondegenerate bicharacter on K4", "bicharacter chi_c",
       check_bicharacter},
      {"ty.fusion-match", "TY fusion ring matches Rep(G_KP)", "fusion rules of C(chi_c, 1/2)",
       check_fusion_match},
      {"ty.pentagon", "pentagon for C(chi_c, tau), default tau = 1/2", "TY associator displays",
       [half](const CheckOptions& o) { return pentagon(klein_four_ty(o.tau.value_or(half))); }},
      {"ty.pentagon-literal", "pentagon with phi_{rho,s,rho} read literally (negative control)",
       "associator display for phi_{rho,s,rho}",
       [half](const CheckOptions& o) { return pentagon(klein_four_ty(o.tau.value_or(half), true)); }, Verdict::Fail},
      {"ty.pentagon-negative", "pentagon with tau = 1 (negative control)", "TY associator displays",
       [](const CheckOptions& o) { return pentagon(klein_four_ty(o.tau.value_or(CycQ8(1)))); }, Verdict::Fail},
      {"vtilde.axioms", "Hopf axioms for C(V~), order 8", "subgroup V~ of SU(2)",
       [](const CheckOptions&) {
         CheckOutcome o = hopf_axioms(*vtilde_function_algebra());
         o.witness["group_order"] = vtilde_group().order();
         o.passed = o.passed && vtilde_group().order() == 8;
         return o;
       }},
      {"vtilde.subgroup", "V~ satisfies the subgroup conditions", "conditions on the subgroup V",
       [](const CheckOptions&) { return from_report(vtilde_subgroup_check()); }},
  };
  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return r;
}

} // namespace

const std::vector<CheckDescriptor>& check_registry() {
  static const std::vector<CheckDescriptor> reg = build_registry();
  return reg;
}

std::vector<const CheckDescriptor*> list_checks(const std::string& filter) {
  std::vector<const CheckDescriptor*> out;
  for (const auto& d : check_registry())
    if (filter.empty() || d.id.find(filter) != std::string::npos)
      out.push_back(&d);
  return out;
}

Report run_check(const std::string& id, const CheckOptions& opts) {
  const CheckDescriptor* d = nullptr;
  for (const auto& x : check_registry())
    if (x.id == id)
      d = &x;
  if (!d)
    fail(ErrorKind::UnknownCheck, "no check named '" + id + "'");

  Report rep;
  rep.id = d->id;
  rep.anchor = d->anchor;
  rep.expected = d->expected;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    CheckOutcome o = d->run(opts);
    rep.verdict = o.passed ? Verdict::Pass : Verdict::Fail;
    rep.witness = std::move(o.witness);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ModelFormat || e.kind() == ErrorKind::Io)
      throw;
    rep.verdict = Verdict::Error;
    rep.witness = {{"error", e.what()}};
  } catch (const std::exception& e) {
    rep.verdict = Verdict::Error;
    rep.witness = {{"error", e.what()}};
  }
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<Report> run_all(const CheckOptions& opts) {
  std::vector<std::future<Report>> futs;
  for (const auto& d : check_registry())
    futs.push_back(std::async(std::launch::async, [&opts, id = d.id] { return run_check(id, opts); }));
  std::vector<Report> out;
  for (auto& f : futs)
    out.push_back(f.get());
  return out;
}

HopfPtr exportable_model(const std::string& id) {
  if (id == "kp")
    return kp_model().hopf;
  if (id == "vtilde")
    return vtilde_function_algebra();
  if (id == "vtilde-twist")
    return twist_model().hopf;
  if (id == "smash")
    return twist_model().smash().hopf;
  fail(ErrorKind::UnknownCheck, "unknown model '" + id + "' (expected kp, vtilde, vtilde-twist or smash)");
}

} // namespace hopfcheck
