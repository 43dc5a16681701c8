#include "hopfcheck/corep.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hopfcheck/linalg.hpp"
#include "hopfcheck/models.hpp"

namespace hopfcheck {

Corep Corep::trivial(const HopfPtr& h) { return one_dim(h, AlgElement::one(h->algebra)); }

Corep Corep::one_dim(const HopfPtr& h, const AlgElement& u) { return Corep{h, 1, {u}}; }

CorepReport verify_corep(const Corep& u) {
  CorepReport rep;
  const HopfAlgebra& h = *u.hopf;
  const int n = u.size;
  const AlgebraPtr AA = tensor(h.algebra, h.algebra);
  for (int i = 0; i < n && rep.comultiplicative; ++i)
    for (int j = 0; j < n && rep.comultiplicative; ++j) {
      AlgElement rhs = AlgElement::zero(AA);
      for (int k = 0; k < n; ++k)
        rhs += tensor(u.at(i, k), u.at(k, j));
      AlgElement lhs = h.delta(u.at(i, j));
      if (!(lhs == rhs)) {
        rep.comultiplicative = false;
        rep.witness = {{"law", "comultiplicative"}, {"i", i + 1}, {"j", j + 1},
                       {"lhs", lhs.str()}, {"rhs", rhs.str()}};
      }
    }
  for (int i = 0; i < n && rep.counital; ++i)
    for (int j = 0; j < n && rep.counital; ++j) {
      const CycQ8 e = h.eps(u.at(i, j));
      if (!(e == CycQ8(i == j ? 1 : 0))) {
        rep.counital = false;
        if (rep.witness.is_null())
          rep.witness = {{"law", "counital"}, {"i", i + 1}, {"j", j + 1}, {"eps", e.str()}};
      }
    }
  const AlgElement one = AlgElement::one(h.algebra), zero = AlgElement::zero(h.algebra);
  for (int i = 0; i < n && rep.unitary; ++i)
    for (int j = 0; j < n && rep.unitary; ++j) {
      AlgElement uus = zero, usu = zero;
      for (int k = 0; k < n; ++k) {
        uus += u.at(i, k) * u.at(j, k).star();
        usu += u.at(k, i).star() * u.at(k, j);
      }
      const AlgElement& expect = i == j ? one : zero;
      if (!(uus == expect) || !(usu == expect)) {
        rep.unitary = false;
        if (rep.witness.is_null())
          rep.witness = {{"law", "unitary"}, {"i", i + 1}, {"j", j + 1}, {"UU*", uus.str()}, {"U*U", usu.str()}};
      }
    }
  return rep;
}

Corep tensor_corep(const Corep& u, const Corep& v) {
  if (u.hopf != v.hopf && !u.hopf->algebra->same_shape(*v.hopf->algebra))
    fail(ErrorKind::ShapeMismatch, "coreps of different Hopf algebras");
  const int n = u.size, m = v.size;
  Corep out{u.hopf, n * m, {}};
  out.entries.resize(static_cast<std::size_t>(n * m) * (n * m));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < m; ++k)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < m; ++l)
          out.entries[static_cast<std::size_t>(i * m + k) * (n * m) + (j * m + l)] = u.at(i, j) * v.at(k, l);
  return out;
}

IntertwinerSpace intertwiners(const Corep& u, const Corep& v, Exec exec) {
  const int nu = u.size, nv = v.size, d = u.hopf->dim();
  // Row (i, j, t): sum_k T_ik u_kj[t] - sum_k v_ik[t] T_kj = 0, unknown T_ab at a * nu + b.
  CMatrix sys(static_cast<std::size_t>(nv) * nu * d, static_cast<std::size_t>(nv) * nu);
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nu; ++j)
      for (int t = 0; t < d; ++t) {
        const std::size_t row = (static_cast<std::size_t>(i) * nu + j) * d + t;
        for (int k = 0; k < nu; ++k)
          if (!u.at(k, j)[t].is_zero())
            sys(row, static_cast<std::size_t>(i) * nu + k) += u.at(k, j)[t];
        for (int k = 0; k < nv; ++k)
          if (!v.at(i, k)[t].is_zero())
            sys(row, static_cast<std::size_t>(k) * nu + j) -= v.at(i, k)[t];
      }
  const CMatrix ns = nullspace(sys, exec);
  IntertwinerSpace out;
  for (std::size_t c = 0; c < ns.cols(); ++c) {
    CMatrix t(nv, nu);
    for (int a = 0; a < nv; ++a)
      for (int b = 0; b < nu; ++b)
        t(a, b) = ns(static_cast<std::size_t>(a) * nu + b, c);
    out.basis.push_back(std::move(t));
  }
  return out;
}

// ----------------------------------------------------------- group-likes

int OneDimGroup::index_of(const AlgElement& x) const {
  for (int k = 0; k < order(); ++k)
    if (elements[k] == x)
      return k;
  return -1;
}

bool OneDimGroup::is_klein_four() const {
  if (order() != 4)
    return false;
  for (int a = 0; a < 4; ++a) {
    if (table[a][a] != identity)
      return false;
    for (int b = 0; b < 4; ++b)
      if (table[a][b] != table[b][a] || table[a][b] < 0)
        return false;
  }
  return true;
}

namespace {

// Entry values tried for the coordinates left free by the linear equations.
std::vector<CycQ8> entry_candidates() {
  std::vector<CycQ8> out{CycQ8(0)};
  for (int k = 0; k < 8; ++k)
    out.push_back(CycQ8::zeta_pow(k));
  for (int k = 0; k < 8; ++k)
    out.push_back(CycQ8::zeta_pow(k) * CycQ8::inv_sqrt2());
  return out;
}

constexpr int kMaxFreeParameters = 3;

} // namespace

OneDimGroup one_dim_group(const HopfPtr& hp) {
  const HopfAlgebra& h = *hp;
  const AlgebraPtr& A = h.algebra;
  const int d = A->dim();
  const auto& ti = tensor_index_table(A, A);
  const CMatrix& D = h.coproduct.matrix();
  auto dentry = [&](int p, int q, int x) -> const CycQ8& { return D(ti[static_cast<std::size_t>(p) * d + q], x); };

  std::vector<int> ones;  // basis indices of 1x1 blocks
  for (int b = 0; b < A->num_blocks(); ++b)
    if (A->block_size(b) == 1)
      ones.push_back(A->offset(b));
  const int n1 = static_cast<int>(ones.size());

  // (phi_p (x) phi_q) D is again a 1x1-block character phi_r when the row
  // of D is a single 1; record r as a position in `ones`.
  std::vector<std::vector<int>> prod(n1, std::vector<int>(n1, -1));
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n1; ++b) {
      int hit = -1;
      bool clean = true;
      for (int x = 0; x < d && clean; ++x) {
        const CycQ8& v = dentry(ones[a], ones[b], x);
        if (v.is_zero())
          continue;
        auto it = std::find(ones.begin(), ones.end(), x);
        if (!v.is_one() || hit >= 0 || it == ones.end())
          clean = false;
        else
          hit = static_cast<int>(it - ones.begin());
      }
      if (clean)
        prod[a][b] = hit;
    }

  std::vector<std::vector<CycQ8>> characters;
  std::vector<int> exps(n1, -1);
  std::function<void(int)> assign = [&](int a) {
    if (a == n1) {
      std::vector<CycQ8> c;
      for (int e : exps)
        c.push_back(CycQ8::zeta_pow(e));
      characters.push_back(std::move(c));
      return;
    }
    for (int e = 0; e < 8; ++e) {
      exps[a] = e;
      bool ok = true;
      for (int x = 0; x <= a && ok; ++x)
        for (int y = 0; y <= a && ok; ++y) {
          const int r = prod[x][y];
          if (r >= 0 && r <= a && (exps[x] + exps[y]) % 8 != exps[r])
            ok = false;
        }
      if (ok)
        assign(a + 1);
    }
    exps[a] = -1;
  };
  assign(0);

  const std::vector<CycQ8> cands = entry_candidates();
  const AlgElement one = AlgElement::one(A);
  const AlgebraPtr AA = tensor(A, A);
  OneDimGroup out;
  for (const auto& c : characters) {
    // Linear part: fixed 1x1 values and (phi (x) id) D u = c u = (id (x) phi) D u.
    const std::size_t rows = static_cast<std::size_t>(n1) + 2 * static_cast<std::size_t>(n1) * d;
    CMatrix sys(rows, d), rhs(rows, 1);
    std::size_t r = 0;
    for (int a = 0; a < n1; ++a, ++r) {
      sys(r, ones[a]) = 1;
      rhs(r, 0) = c[a];
    }
    for (int a = 0; a < n1; ++a)
      for (int t = 0; t < d; ++t) {
        for (int x = 0; x < d; ++x) {
          sys(r, x) += dentry(ones[a], t, x);
          sys(r + 1, x) += dentry(t, ones[a], x);
        }
        sys(r, t) -= c[a];
        sys(r + 1, t) -= c[a];
        r += 2;
      }
    auto sol = solve(sys, rhs, Exec::Serial);
    if (!sol)
      continue;
    const int k = static_cast<int>(sol->kernel.cols());
    if (k > kMaxFreeParameters)
      fail(ErrorKind::CapExceeded, "group-like search: too many free parameters");
    std::vector<int> idx(k, 0);
    while (true) {
      AlgElement u = AlgElement::zero(A);
      for (int x = 0; x < d; ++x) {
        u[x] = sol->particular(x, 0);
        for (int j = 0; j < k; ++j)
          if (!cands[idx[j]].is_zero())
            u[x] += cands[idx[j]] * sol->kernel(x, j);
      }
      if (u.star() * u == one && h.eps(u).is_one() && h.delta(u) == tensor(u, u) && out.index_of(u) < 0)
        out.elements.push_back(std::move(u));
      int j = 0;
      while (j < k && ++idx[j] == static_cast<int>(cands.size()))
        idx[j++] = 0;
      if (j == k)
        break;
    }
  }

  out.identity = out.index_of(one);
  if (out.identity < 0)
    fail(ErrorKind::NoneFound, "the unit was not found among the group-likes");
  if (out.identity != 0) {
    std::swap(out.elements[0], out.elements[out.identity]);
    out.identity = 0;
  }
  out.table.assign(out.order(), std::vector<int>(out.order(), -1));
  for (int a = 0; a < out.order(); ++a)
    for (int b = 0; b < out.order(); ++b) {
      out.table[a][b] = out.index_of(out.elements[a] * out.elements[b]);
      if (out.table[a][b] < 0)
        fail(ErrorKind::NotClosed, "group-likes are not closed under products");
    }
  return out;
}

// ------------------------------------------------------------------- fusion

std::vector<std::vector<Rational>> FusionGraph::weights() const {
  std::vector<std::vector<Rational>> w(labels.size(), std::vector<Rational>(labels.size()));
  for (std::size_t x = 0; x < labels.size(); ++x)
    for (std::size_t y = 0; y < labels.size(); ++y)
      w[x][y] = Rational(static_cast<long long>(mult[x][y]) * dims[y], dims[x]);
  return w;
}

std::string FusionGraph::to_dot() const {
  std::ostringstream os;
  const auto w = weights();
  os << "digraph fusion {\n";
  for (std::size_t x = 0; x < labels.size(); ++x)
    os << "  \"" << labels[x] << "\" [label=\"" << labels[x] << " (" << dims[x] << ")\"];\n";
  for (std::size_t x = 0; x < labels.size(); ++x)
    for (std::size_t y = 0; y < labels.size(); ++y)
      if (mult[x][y] > 0)
        os << "  \"" << labels[x] << "\" -> \"" << labels[y] << "\" [label=\"" << w[x][y].str()
           << "\", multiplicity=" << mult[x][y] << "];\n";
  os << "}\n";
  return os.str();
}

json FusionGraph::to_json() const {
  json w = json::array();
  for (const auto& row : weights()) {
    json r = json::array();
    for (const auto& x : row)
      r.push_back(x.str());
    w.push_back(std::move(r));
  }
  return {{"labels", labels}, {"dims", dims}, {"multiplicity", mult}, {"weights", w}};
}

FusionGraph fusion_graph(const HopfPtr& h, const Corep& fundamental, const std::vector<Corep>& irreducibles,
                         const std::vector<std::string>& labels) {
  if (labels.size() != irreducibles.size())
    fail(ErrorKind::ShapeMismatch, "one label per irreducible required");
  const int n = static_cast<int>(irreducibles.size());
  int total = 0;
  for (const auto& u : irreducibles)
    total += u.size * u.size;
  if (total != h->dim())
    fail(ErrorKind::IncompleteIrreducibles,
         "sum of squared dimensions " + std::to_string(total) + " != " + std::to_string(h->dim()));
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      const int k = intertwiners(irreducibles[x], irreducibles[y]).dim();
      if (k != (x == y ? 1 : 0))
        fail(ErrorKind::IncompleteIrreducibles,
             labels[x] + ", " + labels[y] + ": intertwiner dimension " + std::to_string(k));
    }
  FusionGraph g;
  g.labels = labels;
  for (const auto& u : irreducibles)
    g.dims.push_back(u.size);
  g.mult.assign(n, std::vector<int>(n, 0));
  for (int x = 0; x < n; ++x) {
    const Corep fx = tensor_corep(fundamental, irreducibles[x]);
    int sum = 0;
    for (int y = 0; y < n; ++y) {
      g.mult[x][y] = intertwiners(irreducibles[y], fx).dim();
      sum += g.mult[x][y] * g.dims[y];
    }
    if (sum != fundamental.size * g.dims[x])
      fail(ErrorKind::IncompleteIrreducibles, "decomposition of fund (x) " + labels[x] + " does not re-sum");
  }
  return g;
}

// ----------------------------------------------------------- KP instances

namespace {

AxiomResult result(std::string name, bool ok, json witness = nullptr) {
  AxiomResult r{std::move(name), ok, true, nullptr};
  if (!ok)
    r.witness = std::move(witness);
  return r;
}

CMatrix quarter_or_half(long long den, std::vector<std::vector<long long>> rows) {
  CMatrix m(rows.size(), rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows.size(); ++c)
      m(r, c) = Rational(rows[r][c], den);
  return m;
}

} // namespace

std::vector<AlgElement> printed_one_dim_kp() {
  const KPModel& kp = kp_model();
  const AlgElement proj_all = kp.basis(kEps) + kp.basis(kAlpha) + kp.basis(kBeta) + kp.basis(kGamma);
  const AlgElement proj_mix = kp.basis(kEps) - kp.basis(kAlpha) - kp.basis(kBeta) + kp.basis(kGamma);
  return {proj_all + kp.e(1, 1) + kp.e(2, 2), proj_mix + kp.e(1, 1) - kp.e(2, 2),
          proj_all - kp.e(1, 1) - kp.e(2, 2), proj_mix - kp.e(1, 1) + kp.e(2, 2)};
}

std::vector<CMatrix> printed_projections() {
  return {
      quarter_or_half(2, {{0, 0, 0, 0}, {0, 1, 1, 0}, {0, 1, 1, 0}, {0, 0, 0, 0}}),
      quarter_or_half(4, {{1, 1, -1, 1}, {1, 1, -1, 1}, {-1, -1, 1, -1}, {1, 1, -1, 1}}),
      quarter_or_half(2, {{1, 0, 0, -1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {-1, 0, 0, 1}}),
      quarter_or_half(4, {{1, -1, 1, 1}, {-1, 1, -1, -1}, {1, -1, 1, 1}, {1, -1, 1, 1}}),
  };
}

Corep kp_fundamental() {
  static const Corep u = [] {
    const GeneratorImages g = fundamental_images_and_su2m1_check();
    return Corep{kp_model().hopf, 2, {g.kp_entries.begin(), g.kp_entries.end()}};
  }();
  return u;
}

AxiomReport tensor_square_kp_check() {
  AxiomReport rep;
  auto& res = rep.results;
  const auto P = printed_projections();
  const auto u = printed_one_dim_kp();
  const CMatrix id4 = CMatrix::identity(4);
  const CMatrix zero4(4, 4);

  bool proj = true, orth = true, tr = true;
  json wp, wo, wt;
  CMatrix sum(4, 4);
  for (int i = 0; i < 4; ++i) {
    sum += P[i];
    if (!(P[i] * P[i] == P[i]) || !(adjoint(P[i]) == P[i])) {
      proj = false;
      wp = {{"P", i + 1}};
    }
    if (!trace(P[i]).is_one() && tr) {
      tr = false;
      wt = {{"P", i + 1}, {"trace", trace(P[i]).str()}};
    }
    for (int j = 0; j < 4; ++j)
      if (i != j && !(P[i] * P[j] == zero4) && orth) {
        orth = false;
        wo = {{"P", i + 1}, {"Q", j + 1}};
      }
  }
  res.push_back(result("P_i self-adjoint projections", proj, wp));
  res.push_back(result("P_i mutually orthogonal", orth, wo));
  res.push_back(result("sum P_i = I_4", sum == id4));
  res.push_back(result("trace P_i = 1", tr, wt));

  const Corep U = kp_fundamental();
  const CorepReport cu = verify_corep(U);
  res.push_back(result("U unitary corepresentation", cu.is_corep() && cu.unitary, cu.witness));

  const Corep UU = tensor_corep(U, U);
  bool eq = true;
  json w;
  for (int a = 0; a < 4 && eq; ++a)
    for (int b = 0; b < 4 && eq; ++b) {
      AlgElement rhs = AlgElement::zero(U.hopf->algebra);
      for (int i = 0; i < 4; ++i)
        if (!P[i](a, b).is_zero())
          rhs += P[i](a, b) * u[i];
      if (!(UU.at(a, b) == rhs)) {
        eq = false;
        w = {{"row", a + 1}, {"col", b + 1}, {"lhs", UU.at(a, b).str()}, {"rhs", rhs.str()}};
      }
    }
  res.push_back(result("U (x) U = sum P_i (x) u_i", eq, w));
  return rep;
}

AxiomReport one_dim_kp_check() {
  AxiomReport rep;
  auto& res = rep.results;
  const KPModel& kp = kp_model();
  const OneDimGroup g = one_dim_group(kp.hopf);
  const auto printed = printed_one_dim_kp();
  json found = json::array();
  for (const auto& e : g.elements)
    found.push_back(e.str());
  res.push_back(result("exactly four group-likes", g.order() == 4, {{"found", found}}));
  bool all = true;
  json missing = json::array();
  for (std::size_t i = 0; i < printed.size(); ++i)
    if (g.index_of(printed[i]) < 0) {
      all = false;
      missing.push_back("u" + std::to_string(i + 1));
    }
  res.push_back(result("matches printed u1..u4", all && g.order() == 4, {{"missing", missing}, {"found", found}}));
  res.push_back(result("u1 is the unit", printed[0] == AlgElement::one(kp.hopf->algebra)));
  res.push_back(result("group is Klein four", g.is_klein_four(), {{"table", g.table}}));
  bool coreps = true;
  for (const auto& u : printed) {
    const CorepReport r = verify_corep(Corep::one_dim(kp.hopf, u));
    coreps = coreps && r.is_corep() && r.unitary;
  }
  res.push_back(result("printed u_i are unitary corepresentations", coreps));
  return rep;
}

KPFusion kp_fusion_check() {
  const KPModel& kp = kp_model();
  const Corep fund = kp_fundamental();
  std::vector<Corep> irr;
  for (const auto& u : printed_one_dim_kp())
    irr.push_back(Corep::one_dim(kp.hopf, u));
  irr.push_back(fund);
  KPFusion out;
  out.graph = fusion_graph(kp.hopf, fund, irr, {"u1", "u2", "u3", "u4", "fund"});
  const auto& m = out.graph.mult;
  auto& res = out.report.results;

  bool ff = m[4][4] == 0;
  for (int i = 0; i < 4; ++i)
    ff = ff && m[4][i] == 1;
  res.push_back(result("fund (x) fund = u1 + u2 + u3 + u4", ff, {{"row", m[4]}}));
  bool uf = true;
  for (int i = 0; i < 4; ++i) {
    uf = uf && m[i][4] == 1;
    for (int j = 0; j < 4; ++j)
      uf = uf && m[i][j] == 0;
  }
  res.push_back(result("u_i (x) fund = fund", uf, {{"multiplicity", m}}));
  bool star = true;
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) {
      const bool edge = (x == 4) != (y == 4);
      star = star && m[x][y] == (edge ? 1 : 0) && m[x][y] == m[y][x];
    }
  res.push_back(result("undirected graph is the D4 affine star", star, {{"multiplicity", m}}));
  const int inv = intertwiners(Corep::trivial(kp.hopf), tensor_corep(fund, fund)).dim();
  res.push_back(result("one invariant vector in U (x) U", inv == 1, {{"dim", inv}}));
  AxiomResult w{"edge weights (recorded)", true, false, out.graph.to_json()["weights"]};
  res.push_back(std::move(w));
  return out;
}

} // namespace hopfcheck
