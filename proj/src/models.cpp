#include "hopfcheck/models.hpp"

#include <sstream>

#include "hopfcheck/linalg.hpp"

namespace hopfcheck {

namespace {

constexpr int kM2Block = 4;

// c * e_ij (x) e_kl, indices 1-based; the displays carry an overall 1/2.
struct HalfTerm {
  CycQ8 c;
  int i, j, k, l;
};

struct ProjectionFormula {
  std::array<std::pair<int, int>, 4> pairs;
  std::array<HalfTerm, 4> half;
};

// The shape shared by both coproduct displays: four projection formulas and
// D(x) = eps (x) x + sum_p p (x) u_p x u_p* + x (x) eps + sum_p conj(u_p) x conj(u_p)* (x) p
// for x in M2, with p running over the last three projections.
LinearMap display_coproduct(const AlgebraPtr& A, const std::array<ProjectionFormula, 4>& proj,
                            const std::array<CMatrix, 3>& u) {
  auto unit = [&](int i, int j) { return AlgElement::matrix_unit(A, kM2Block, i - 1, j - 1); };
  std::vector<AlgElement> images;
  const CycQ8 half = Rational(1, 2);
  for (const auto& f : proj) {
    AlgElement d = AlgElement::zero(tensor(A, A));
    for (const auto& [p, q] : f.pairs)
      d += tensor(AlgElement::basis(A, p), AlgElement::basis(A, q));
    for (const auto& t : f.half)
      d += (half * t.c) * tensor(unit(t.i, t.j), unit(t.k, t.l));
    images.push_back(std::move(d));
  }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CMatrix x(2, 2);
      x(i, j) = 1;
      const AlgElement xe = AlgElement::from_block(A, kM2Block, x);
      const AlgElement eps = AlgElement::basis(A, kEps);
      AlgElement d = tensor(eps, xe) + tensor(xe, eps);
      for (int p = 0; p < 3; ++p) {
        const AlgElement proj_p = AlgElement::basis(A, p + 1);
        const CMatrix& up = u[p];
        CMatrix ub(2, 2);
        for (int r = 0; r < 2; ++r)
          for (int c = 0; c < 2; ++c)
            ub(r, c) = up(r, c).conj();
        d += tensor(proj_p, AlgElement::from_block(A, kM2Block, up * x * adjoint(up)));
        d += tensor(AlgElement::from_block(A, kM2Block, ub * x * adjoint(ub)), proj_p);
      }
      images.push_back(std::move(d));
    }
  return LinearMap::from_images(A, tensor(A, A), images);
}

std::array<std::pair<int, int>, 4> group_pairs(int p) {
  // K4 law on the projections: eps is the unit, the others multiply to the third.
  switch (p) {
  case kEps: return {{{0, 0}, {1, 1}, {2, 2}, {3, 3}}};
  case kAlpha: return {{{0, 1}, {1, 0}, {2, 3}, {3, 2}}};
  case kBeta: return {{{0, 2}, {2, 0}, {1, 3}, {3, 1}}};
  default: return {{{0, 3}, {3, 0}, {1, 2}, {2, 1}}};
  }
}

const CycQ8 I = CycQ8::i();

std::array<HalfTerm, 4> all_plus() { return {{{1, 1, 1, 1, 1}, {1, 1, 2, 1, 2}, {1, 2, 1, 2, 1}, {1, 2, 2, 2, 2}}}; }
std::array<HalfTerm, 4> diag_signed() {
  return {{{1, 1, 1, 1, 1}, {-1, 1, 2, 1, 2}, {-1, 2, 1, 2, 1}, {1, 2, 2, 2, 2}}};
}
std::array<HalfTerm, 4> cross(const CycQ8& s) {
  return {{{1, 1, 1, 2, 2}, {s, 1, 2, 2, 1}, {-s, 2, 1, 1, 2}, {1, 2, 2, 1, 1}}};
}

CMatrix mat2(CycQ8 a, CycQ8 b, CycQ8 c, CycQ8 d) { return make_matrix({{a, b}, {c, d}}); }

AxiomResult result(std::string name, bool ok, json witness = nullptr) {
  AxiomResult r{std::move(name), ok, true, nullptr};
  if (!ok)
    r.witness = std::move(witness);
  return r;
}

AlgElement kp_m2(const AlgebraPtr& A, const CMatrix& m) { return AlgElement::from_block(A, kM2Block, m); }

} // namespace

// ------------------------------------------------------------------------ KP

KPModel build_kp() {
  KPModel m;
  m.u_alpha = mat2(0, I, 1, 0);
  m.u_beta = mat2(0, 1, I, 0);
  m.u_gamma = mat2(-1, 0, 0, 1);
  AlgebraPtr A = make_algebra({1, 1, 1, 1, 2}, {"eps", "alpha", "beta", "gamma", "e"});
  std::array<ProjectionFormula, 4> f{{
      {group_pairs(kEps), all_plus()},
      {group_pairs(kAlpha), cross(I)},
      {group_pairs(kBeta), cross(-I)},
      {group_pairs(kGamma), diag_signed()},
  }};
  m.hopf = make_verified_hopf("C(G_KP)", A, display_coproduct(A, f, {m.u_alpha, m.u_beta, m.u_gamma}));
  return m;
}

const KPModel& kp_model() {
  static const KPModel m = build_kp();
  return m;
}

// ------------------------------------------------------------------------ V~

std::array<CMatrix, 3> vtilde_generators() {
  const CycQ8 r = CycQ8::inv_sqrt2();
  return {mat2(I * r, I * r, I * r, -I * r), mat2(-I * r, I * r, I * r, I * r), mat2(0, -1, 1, 0)};
}

std::vector<NamedMatrix> vtilde_named_elements() {
  const auto s = vtilde_generators();
  const CMatrix id = CMatrix::identity(2);
  const CycQ8 m1 = -1;
  return {{id, "I"},           {id * m1, "-I"},     {s[0], "s1"}, {s[0] * m1, "-s1"},
          {s[1], "s2"},        {s[1] * m1, "-s2"},  {s[2], "s3"}, {s[2] * m1, "-s3"}};
}

const FiniteMatrixGroup& vtilde_group() {
  static const FiniteMatrixGroup g = [] {
    const auto s = vtilde_generators();
    return generate_group({s[0], s[1], s[2]}, 64, vtilde_named_elements());
  }();
  return g;
}

CMatrix vtilde_action_unitary() { return mat2(I, 0, 0, -I); }

const HopfPtr& vtilde_function_algebra() {
  static const HopfPtr h = function_algebra(vtilde_group());
  return h;
}

// --------------------------------------------------------------------- twist

LinearMap displayed_twist_coproduct() {
  AlgebraPtr P = make_algebra({1, 1, 1, 1, 2}, {"eps", "alpha'", "beta'", "gamma'", "e"});
  std::array<ProjectionFormula, 4> f{{
      {group_pairs(kEps), diag_signed()},
      {group_pairs(kAlpha), all_plus()},
      {group_pairs(kBeta), cross(I)},
      {group_pairs(kGamma), cross(-I)},
  }};
  return display_coproduct(P, f, {mat2(-1, 0, 0, 1), mat2(0, 1, I, 0), mat2(0, -I, -1, 0)});
}

AlgElement TwistModel::delta(const std::string& name) const {
  const int k = smash().group->index_of(name);
  if (k < 0)
    fail(ErrorKind::ModelMismatch, "no group element named " + name);
  return smash().delta[k];
}

AlgElement TwistModel::from_smash(const AlgElement& x) const {
  CMatrix rhs(x.dim(), 1);
  for (int k = 0; k < x.dim(); ++k)
    rhs(k, 0) = x[k];
  auto sol = solve(to_smash.matrix(), rhs, Exec::Serial);
  if (!sol)
    fail(ErrorKind::NotClosed, "element does not lie in the graded twist");
  AlgElement out = AlgElement::zero(hopf->algebra);
  for (int k = 0; k < out.dim(); ++k)
    out[k] = sol->particular(k, 0);
  return out;
}

TwistModel build_vtilde_twist() {
  TwistModel m;
  const FiniteMatrixGroup& G = vtilde_group();
  const GroupAction2 theta = conjugation_action(G, vtilde_action_unitary());
  const CentralGrading grading = central_grading(G, CMatrix::identity(2) * CycQ8(-1));
  m.twist = graded_twist(G, grading, theta);
  m.w_alpha = mat2(-1, 0, 0, 1);
  m.w_beta = mat2(0, 1, I, 0);
  m.w_gamma = mat2(0, -I, -1, 0);
  m.v = mat2(-1, 0, 0, I);

  const LinearMap shown = displayed_twist_coproduct();
  const AlgebraPtr P = shown.source();
  const SmashProduct& sp = *m.twist->smash;
  const AlgebraPtr& S = sp.hopf->algebra;
  auto d = [&](const char* n) { return m.delta(n); };
  auto e_c = [&](const char* h, const char* zh) { return d(h) + d(zh); };
  auto o_c = [&](const char* h, const char* zh) { return (d(h) - d(zh)) * sp.lambda; };
  const CycQ8 half = Rational(1, 2);
  const AlgElement eI = e_c("I", "-I"), oI = o_c("I", "-I");
  const AlgElement e3 = e_c("s3", "-s3"), o3 = o_c("s3", "-s3");
  const AlgElement e1 = e_c("s1", "-s1"), o1 = o_c("s1", "-s1");
  const AlgElement e2 = e_c("s2", "-s2"), o2 = o_c("s2", "-s2");

  // Printed basis -> smash product, inverted from the correspondence
  // e_s3 -> beta' + gamma', o_s3 -> i(beta' - gamma'), e_I -> eps + alpha',
  // o_I -> eps - alpha', e_s1 -> e11, o_s1 -> -e12, e_s2 -> e22, o_s2 -> e21.
  std::vector<AlgElement> images = {
      half * (eI + oI),      half * (eI - oI), half * (e3 - I * o3), half * (e3 + I * o3),
      e1,                    -o1,              o2,                   e2,
  };
  m.to_smash = LinearMap::from_images(P, S, images);

  auto b = [&](int k) { return AlgElement::basis(P, k); };
  m.handles = {
      {"d_s1 + d_-s1", e1, b(kE11)},
      {"d_s2 + d_-s2", e2, b(kE22)},
      {"d_s3 + d_-s3", e3, b(kBeta) + b(kGamma)},
      {"d_I + d_-I", eI, b(kEps) + b(kAlpha)},
      {"(d_s1 - d_-s1) lambda", o1, -b(kE12)},
      {"(d_s2 - d_-s2) lambda", o2, b(kE21)},
      {"(d_s3 - d_-s3) lambda", o3, I * (b(kBeta) - b(kGamma))},
      {"(d_I - d_-I) lambda", oI, b(kEps) - b(kAlpha)},
  };
  for (const auto& h : m.handles)
    if (!(m.to_smash.apply(h.paper) == h.smash))
      fail(ErrorKind::ModelMismatch, "relabelling does not send " + h.paper.str() + " to " + h.label);

  // The correspondence must be a unital *-isomorphism onto the twist.
  if (!(m.to_smash.apply(AlgElement::one(P)) == AlgElement::one(S)))
    fail(ErrorKind::ModelMismatch, "relabelling is not unital");
  for (int p = 0; p < P->dim(); ++p) {
    if (!(m.to_smash.apply(b(p).star()) == images[p].star()))
      fail(ErrorKind::ModelMismatch, "relabelling does not commute with the star at " + P->basis_name(p));
    for (int q = 0; q < P->dim(); ++q)
      if (!(m.to_smash.apply(b(p) * b(q)) == images[p] * images[q]))
        fail(ErrorKind::ModelMismatch,
             "relabelling is not multiplicative at " + P->basis_name(p) + ", " + P->basis_name(q));
  }
  std::vector<AlgElement> in_twist;
  for (const auto& x : images)
    in_twist.push_back(m.twist->pull_back(x));
  m.to_twist = LinearMap::from_images(P, m.twist->hopf->algebra, in_twist);
  auto inv = solve(m.to_twist.matrix(), CMatrix::identity(P->dim()));
  if (!inv || !inv->unique())
    fail(ErrorKind::ModelMismatch, "relabelling is not bijective onto the twist");
  const LinearMap back(m.twist->hopf->algebra, P, inv->particular);

  std::vector<AlgElement> deltas;
  for (int p = 0; p < P->dim(); ++p)
    deltas.push_back(apply_tensor(back, back, m.twist->hopf->delta(m.to_twist.image(p))));
  LinearMap derived = LinearMap::from_images(P, tensor(P, P), deltas);

  for (int p = 0; p < P->dim(); ++p)
    for (std::size_t k = 0; k < derived.matrix().rows(); ++k)
      if (!(derived.matrix()(k, p) == shown.matrix()(k, p))) {
        std::ostringstream os;
        os << "D(" << P->basis_name(p) << ") coefficient of " << tensor(P, P)->basis_name(static_cast<int>(k))
           << ": derived " << derived.matrix()(k, p).str() << ", displayed " << shown.matrix()(k, p).str();
        fail(ErrorKind::ModelMismatch, os.str());
      }
  m.hopf = make_verified_hopf("C(V~)^t", P, std::move(derived));
  return m;
}

const TwistModel& twist_model() {
  static const TwistModel m = build_vtilde_twist();
  return m;
}

// ----------------------------------------------------------------------- Phi

PhiResult build_phi_and_verify() {
  const KPModel& kp = kp_model();
  const TwistModel& tw = twist_model();
  const AlgebraPtr& K = kp.hopf->algebra;
  std::vector<AlgElement> images = {kp.basis(kEps), kp.basis(kGamma), kp.basis(kAlpha), kp.basis(kBeta)};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CMatrix x(2, 2);
      x(i, j) = 1;
      images.push_back(kp_m2(K, tw.v * x * adjoint(tw.v)));
    }
  PhiResult out;
  out.phi = LinearMap::from_images(tw.hopf->algebra, K, images);
  out.report = check_hopf_morphism(out.phi, *tw.hopf, *kp.hopf, MorphismKind::Iso);

  auto conj_check = [&](const char* name, const CMatrix& w, const CMatrix& u) {
    const CMatrix l = tw.v * w * adjoint(tw.v);
    out.report.results.push_back(
        result(name, l == u, {{"lhs", kp_m2(K, l).str()}, {"rhs", kp_m2(K, u).str()}}));
  };
  conj_check("v w_alpha' v* = u_gamma", tw.w_alpha, kp.u_gamma);
  conj_check("v w_beta' v* = u_alpha", tw.w_beta, kp.u_alpha);
  conj_check("v w_gamma' v* = u_beta", tw.w_gamma, kp.u_beta);
  return out;
}

// --------------------------------------------------------- SU_{-1}(2) images

namespace {

// Relations of the q = -1 fundamental corepresentation on a 2x2 matrix of
// elements of h: unitarity, u_ij = (u_{s(i) s(j)})* with s the swap, and
// comultiplicativity with the counit condition.
void su2m1_relations(const HopfAlgebra& h, const std::array<AlgElement, 4>& u, const std::string& tag,
                     std::vector<AxiomResult>& out) {
  auto at = [&](int i, int j) -> const AlgElement& { return u[2 * i + j]; };
  const AlgElement one = AlgElement::one(h.algebra), zero = AlgElement::zero(h.algebra);
  bool unitary = true;
  json w;
  for (int i = 0; i < 2 && unitary; ++i)
    for (int j = 0; j < 2 && unitary; ++j) {
      AlgElement rows = zero, cols = zero;
      for (int k = 0; k < 2; ++k) {
        rows += at(i, k) * at(j, k).star();
        cols += at(k, i).star() * at(k, j);
      }
      const AlgElement& expect = i == j ? one : zero;
      if (!(rows == expect) || !(cols == expect)) {
        unitary = false;
        w = {{"i", i + 1}, {"j", j + 1}, {"UU*", rows.str()}, {"U*U", cols.str()}};
      }
    }
  out.push_back(result(tag + "unitary", unitary, w));

  bool conj = true;
  for (int i = 0; i < 2 && conj; ++i)
    for (int j = 0; j < 2 && conj; ++j)
      if (!(at(i, j) == at(1 - i, 1 - j).star())) {
        conj = false;
        w = {{"i", i + 1}, {"j", j + 1}, {"u_ij", at(i, j).str()}, {"conj", at(1 - i, 1 - j).star().str()}};
      }
  out.push_back(result(tag + "U = F conj(U) F^-1", conj, w));

  bool comult = true;
  for (int i = 0; i < 2 && comult; ++i)
    for (int j = 0; j < 2 && comult; ++j) {
      AlgElement rhs = AlgElement::zero(tensor(h.algebra, h.algebra));
      for (int k = 0; k < 2; ++k)
        rhs += tensor(at(i, k), at(k, j));
      const AlgElement lhs = h.delta(at(i, j));
      if (!(lhs == rhs) || !(h.eps(at(i, j)) == CycQ8(i == j ? 1 : 0))) {
        comult = false;
        w = {{"i", i + 1}, {"j", j + 1}, {"lhs", lhs.str()}, {"rhs", rhs.str()}};
      }
    }
  out.push_back(result(tag + "comultiplicative", comult, w));
}

} // namespace

GeneratorImages fundamental_images_and_su2m1_check() {
  const TwistModel& tw = twist_model();
  const SmashProduct& sp = tw.smash();
  const FiniteMatrixGroup& G = *sp.group;
  GeneratorImages out;
  auto& res = out.report.results;

  bool inside = true;
  json where;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      AlgElement f = AlgElement::zero(sp.hopf->algebra);
      for (int h = 0; h < G.order(); ++h)
        if (!G.elements[h](i, j).is_zero())
          f += G.elements[h](i, j) * sp.delta[h];
      try {
        out.twist_entries[2 * i + j] = tw.from_smash(f * sp.lambda);
      } catch (const Error& e) {
        inside = false;
        where = {{"i", i + 1}, {"j", j + 1}, {"error", e.what()}};
        out.twist_entries[2 * i + j] = AlgElement::zero(tw.hopf->algebra);
      }
    }
  res.push_back(result("entries lie in the twist", inside, where));
  su2m1_relations(*tw.hopf, out.twist_entries, "", res);

  const PhiResult phi = build_phi_and_verify();
  for (int k = 0; k < 4; ++k)
    out.kp_entries[k] = phi.phi.apply(out.twist_entries[k]);
  su2m1_relations(*kp_model().hopf, out.kp_entries, "Phi(U') ", res);

  // Words in the u'_ij, longer until the span stops growing twice in a row.
  const AlgebraPtr& A = tw.hopf->algebra;
  std::vector<AlgElement> span{AlgElement::one(A)}, frontier{AlgElement::one(A)};
  out.rank_by_length.push_back(span_rank(span));
  for (int len = 1; len <= 8; ++len) {
    std::vector<AlgElement> next;
    for (const auto& w : frontier)
      for (const auto& g : out.twist_entries)
        next.push_back(w * g);
    span.insert(span.end(), next.begin(), next.end());
    frontier = std::move(next);
    out.rank_by_length.push_back(span_rank(span));
    const std::size_t n = out.rank_by_length.size();
    if (n >= 3 && out.rank_by_length[n - 1] == out.rank_by_length[n - 2] &&
        out.rank_by_length[n - 2] == out.rank_by_length[n - 3])
      break;
  }
  for (std::size_t l = 0; l < out.rank_by_length.size(); ++l)
    if (out.rank_by_length[l] == out.rank_by_length.back()) {
      out.saturation_length = static_cast<int>(l);
      break;
    }
  res.push_back(result("words span the algebra", out.rank_by_length.back() == static_cast<std::size_t>(A->dim()),
                       {{"rank_by_length", out.rank_by_length}}));
  return out;
}

// ------------------------------------------------------------------ witnesses

AxiomReport twist_witness_check() {
  const TwistModel& tw = twist_model();
  const SmashProduct& sp = tw.smash();
  AxiomReport rep;
  auto& res = rep.results;
  const AlgElement a = tw.delta("s1") + tw.delta("-s1");
  const AlgElement b = (tw.delta("s2") - tw.delta("-s2")) * sp.lambda;
  const AlgElement ab = a * b, ba = b * a;
  res.push_back(result("(d_s1 + d_-s1)(d_s2 - d_-s2) lambda = 0", ab.is_zero(), {{"product", ab.str()}}));
  res.push_back(result("(d_s2 - d_-s2) lambda (d_s1 + d_-s1) = (d_s2 - d_-s2) lambda", ba == b && !ba.is_zero(),
                       {{"product", ba.str()}}));
  // lambda d_s1 = d_-s2 lambda, the relation behind the reverse product.
  res.push_back(result("lambda d_s1 = d_-s2 lambda", sp.lambda * tw.delta("s1") == tw.delta("-s2") * sp.lambda));

  const AlgElement ta = tw.from_smash(a), tb = tw.from_smash(b);
  res.push_back(result("twist: a b != b a", !(ta * tb == tb * ta), {{"ab", (ta * tb).str()}, {"ba", (tb * ta).str()}}));

  const AlgElement x = tw.from_smash((tw.delta("s3") - tw.delta("-s3")) * sp.lambda);
  const AlgElement dx = tw.hopf->delta(x);
  const AlgElement dop = flip_map(tw.hopf->algebra, tw.hopf->algebra).apply(dx);
  AxiomResult nc = result("D != D^op on (d_s3 - d_-s3) lambda", !(dx == dop));
  nc.witness = {{"delta", dx.str()}, {"delta_op", dop.str()}};
  res.push_back(std::move(nc));

  const CommutativityFlags f = commutativity_flags(*tw.hopf);
  res.push_back(result("twist noncommutative", !f.commutative));
  res.push_back(result("twist noncocommutative", !f.cocommutative));
  rep.results.back().witness = f.cocommutative_witness;
  return rep;
}

AxiomReport vtilde_subgroup_check() {
  const FiniteMatrixGroup& G = vtilde_group();
  AxiomReport rep;
  auto& res = rep.results;
  const CMatrix id = CMatrix::identity(2);
  res.push_back(result("contains I and -I", G.index_of(id) >= 0 && G.index_of(id * CycQ8(-1)) >= 0));
  bool stable = true;
  json w;
  try {
    conjugation_action(G, vtilde_action_unitary());
  } catch (const Error& e) {
    stable = false;
    w = e.what();
  }
  res.push_back(result("stable under the action", stable, w));
  int found = -1;
  for (int h = 0; h < G.order() && found < 0; ++h) {
    const CMatrix& m = G.elements[h];
    if (!(m(0, 0) * m(0, 1) * m(1, 0) * m(1, 1)).is_zero())
      found = h;
  }
  AxiomResult r = result("has an element with abcd != 0", found >= 0);
  if (found >= 0)
    r.witness = {{"element", G.names[found]}};
  res.push_back(std::move(r));
  return rep;
}

} // namespace hopfcheck
