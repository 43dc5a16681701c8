#include "hopfcheck/category.hpp"

#include <algorithm>
#include <numeric>

namespace hopfcheck {

namespace {

AxiomResult result(std::string name, bool ok, json witness = nullptr) {
  AxiomResult r;
  r.name = std::move(name);
  r.passed = ok;
  if (!ok)
    r.witness = std::move(witness);
  return r;
}

json matrix_json(const CMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(m(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

const char* kGroupNames[4] = {"e", "a", "b", "c"};

} // namespace

// ---- TY data

std::vector<int> TYData::fuse(int x, int y) const {
  const int r = rho();
  if (x < r && y < r)
    return {table[x][y]};
  if (x == r && y == r) {
    std::vector<int> all(r);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  return {r};
}

bool TYData::allowed(int x, int y, int z) const {
  const int r = rho();
  if (x < r && y < r)
    return z == table[x][y];
  if (x == r && y == r)
    return z < r;
  return z == r;
}

CycQ8 TYData::F(int a, int b, int c, int d, int e, int f) const {
  if (!allowed(a, b, e) || !allowed(e, c, d) || !allowed(b, c, f) || !allowed(a, f, d))
    fail(ErrorKind::ShapeMismatch, "inadmissible F-symbol labels");
  const int r = rho();
  if (a < r && b == r && c < r)
    return chi[a][c];
  if (a == r && b < r && c == r)
    return literal_rho_s_rho ? CycQ8(1) : chi[b][d];
  if (a == r && b == r && c == r)
    return tau / chi[e][f];
  return CycQ8(1);
}

TYData build_ty_data(std::vector<std::vector<int>> table, std::vector<std::string> names,
                     std::vector<std::vector<CycQ8>> chi, CycQ8 tau, bool literal_rho_s_rho) {
  const std::size_t n = table.size();
  if (n == 0 || names.size() != n || chi.size() != n)
    fail(ErrorKind::ShapeMismatch, "group table, names and chi must have the same order");
  for (std::size_t g = 0; g < n; ++g) {
    if (table[g].size() != n || chi[g].size() != n)
      fail(ErrorKind::ShapeMismatch, "group table and chi must be square");
    if (table[0][g] != static_cast<int>(g) || table[g][0] != static_cast<int>(g))
      fail(ErrorKind::ShapeMismatch, "element 0 must be the identity");
  }
  if (tau.is_zero())
    fail(ErrorKind::Bicharacter, "tau must be nonzero");
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      if (chi[g][h].is_zero())
        fail(ErrorKind::Bicharacter, "chi(" + names[g] + ", " + names[h] + ") = 0");
      if (!(chi[g][h] == chi[h][g]))
        fail(ErrorKind::Bicharacter, "chi not symmetric at (" + names[g] + ", " + names[h] + ")");
      for (std::size_t k = 0; k < n; ++k)
        if (!(chi[table[g][h]][k] == chi[g][k] * chi[h][k]))
          fail(ErrorKind::Bicharacter,
               "chi(" + names[g] + names[h] + ", " + names[k] + ") != chi(" + names[g] + ", " + names[k] +
                   ") chi(" + names[h] + ", " + names[k] + ")");
    }

  TYData t;
  t.table = std::move(table);
  t.names = std::move(names);
  t.chi = std::move(chi);
  t.tau = std::move(tau);
  t.literal_rho_s_rho = literal_rho_s_rho;

  // nondegenerate: g -> chi(g, .) injective
  t.nondegenerate = true;
  for (std::size_t g = 0; g < n && t.nondegenerate; ++g)
    for (std::size_t h = g + 1; h < n; ++h)
      if (t.chi[g] == t.chi[h]) {
        t.nondegenerate = false;
        break;
      }

  t.klein_four = n == 4;
  for (std::size_t g = 0; g < n && t.klein_four; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (t.table[g][g] != 0 || t.table[g][h] != t.table[h][g]) {
        t.klein_four = false;
        break;
      }
  return t;
}

std::vector<std::vector<int>> klein_four_table() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int g = 0; g < 4; ++g)
    for (int h = 0; h < 4; ++h)
      t[g][h] = g ^ h;
  return t;
}

std::vector<std::vector<CycQ8>> chi_c() {
  std::vector<std::vector<CycQ8>> chi(4, std::vector<CycQ8>(4));
  for (int g = 0; g < 4; ++g)
    for (int h = 0; h < 4; ++h) {
      int s = (g & 1) * (h & 1) + ((g >> 1) & 1) * ((h >> 1) & 1);
      chi[g][h] = s % 2 ? CycQ8(-1) : CycQ8(1);
    }
  return chi;
}

TYData klein_four_ty(const CycQ8& tau, bool literal_rho_s_rho) {
  return build_ty_data(klein_four_table(), {"e", "a", "b", "c"}, chi_c(), tau, literal_rho_s_rho);
}

TYData relabel(const TYData& t, const std::vector<int>& perm) {
  const int n = t.group_order();
  if (static_cast<int>(perm.size()) != n || perm[0] != 0)
    fail(ErrorKind::ShapeMismatch, "relabelling must permute the group and fix the identity");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  std::vector<std::vector<CycQ8>> chi(n, std::vector<CycQ8>(n));
  for (int g = 0; g < n; ++g) {
    names[perm[g]] = t.names[g];
    for (int h = 0; h < n; ++h) {
      table[perm[g]][perm[h]] = perm[t.table[g][h]];
      chi[perm[g]][perm[h]] = t.chi[g][h];
    }
  }
  return build_ty_data(std::move(table), std::move(names), std::move(chi), t.tau, t.literal_rho_s_rho);
}

// ---- pentagon

namespace {

struct QuadOutcome {
  int equations = 0;
  int failures = 0;
  bool failed = false;
  json witness;
  bool unitary = true;
  json unitary_witness;
  bool hom_ok = true;
};

// dim Hom(e, ((a b) c) d) by repeated fusion from the left.
std::vector<int> word_dims(const TYData& t, const std::array<int, 4>& w) {
  const int S = t.num_simples();
  std::vector<int> v(S, 0);
  v[w[0]] = 1;
  for (int k = 1; k < 4; ++k) {
    std::vector<int> nv(S, 0);
    for (int x = 0; x < S; ++x)
      if (v[x])
        for (int z : t.fuse(x, w[k]))
          nv[z] += v[x];
    v = std::move(nv);
  }
  return v;
}

QuadOutcome check_quadruple(const TYData& t, int a, int b, int c, int d) {
  QuadOutcome out;
  const int S = t.num_simples();
  const std::vector<int> dims = word_dims(t, {a, b, c, d});

  // associator F^{abc}_x for each x: unitary on its tree bases
  for (int x = 0; x < S && out.unitary; ++x) {
    std::vector<int> es, fs;
    for (int e : t.fuse(a, b))
      if (t.allowed(e, c, x))
        es.push_back(e);
    for (int f : t.fuse(b, c))
      if (t.allowed(a, f, x))
        fs.push_back(f);
    if (es.size() != fs.size()) {
      out.hom_ok = false;
      continue;
    }
    if (es.empty())
      continue;
    CMatrix m(es.size(), fs.size());
    for (std::size_t i = 0; i < es.size(); ++i)
      for (std::size_t j = 0; j < fs.size(); ++j)
        m(i, j) = t.F(a, b, c, x, es[i], fs[j]);
    if (!is_unitary(m)) {
      out.unitary = false;
      out.unitary_witness = {{"F", {t.name(a), t.name(b), t.name(c), t.name(x)}}, {"matrix", matrix_json(m)}};
    }
  }

  for (int e = 0; e < S; ++e) {
    // left trees (f, g): f in a b, g in f c, e in g d
    int left = 0;
    for (int f : t.fuse(a, b))
      for (int g : t.fuse(f, c))
        if (t.allowed(g, d, e))
          ++left;
    // right trees (l, k): l in c d, k in b l, e in a k
    int right = 0;
    for (int l : t.fuse(c, d))
      for (int k : t.fuse(b, l))
        if (t.allowed(a, k, e))
          ++right;
    if (left != dims[e] || right != dims[e])
      out.hom_ok = false;

    for (int f : t.fuse(a, b))
      for (int g : t.fuse(f, c)) {
        if (!t.allowed(g, d, e))
          continue;
        for (int l : t.fuse(c, d)) {
          if (!t.allowed(f, l, e))
            continue;
          for (int k : t.fuse(b, l)) {
            if (!t.allowed(a, k, e))
              continue;
            CycQ8 lhs = t.F(f, c, d, e, g, l) * t.F(a, b, l, e, f, k);
            CycQ8 rhs;
            for (int h : t.fuse(b, c))
              if (t.allowed(a, h, g) && t.allowed(h, d, k))
                rhs += t.F(a, b, c, g, f, h) * t.F(a, h, d, e, g, k) * t.F(b, c, d, k, h, l);
            ++out.equations;
            if (!(lhs == rhs))
              ++out.failures;
            if (!(lhs == rhs) && !out.failed) {
              out.failed = true;
              out.witness = {{"quadruple", {t.name(a), t.name(b), t.name(c), t.name(d)}},
                             {"e", t.name(e)},
                             {"f", t.name(f)},
                             {"g", t.name(g)},
                             {"k", t.name(k)},
                             {"l", t.name(l)},
                             {"lhs", lhs.str()},
                             {"rhs", rhs.str()}};
            }
          }
        }
      }
  }
  return out;
}

} // namespace

PentagonReport pentagon_check(const TYData& t, Exec exec) {
  const int S = t.num_simples();
  const int total = S * S * S * S;
  std::vector<QuadOutcome> outs(total);

  auto run = [&](int q) {
    int a = q / (S * S * S), b = (q / (S * S)) % S, c = (q / S) % S, d = q % S;
    outs[q] = check_quadruple(t, a, b, c, d);
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int q = 0; q < total; ++q)
      run(q);
  } else {
    for (int q = 0; q < total; ++q)
      run(q);
  }

  PentagonReport rep;
  rep.quadruples = total;
  for (int q = 0; q < total; ++q) {
    const QuadOutcome& o = outs[q];
    rep.equations += o.equations;
    rep.failing_equations += o.failures;
    if (o.failed) {
      rep.failing.push_back({q / (S * S * S), (q / (S * S)) % S, (q / S) % S, q % S});
      if (rep.first_failure.is_null())
        rep.first_failure = o.witness;
    }
    if (!o.unitary && rep.associators_unitary) {
      rep.associators_unitary = false;
      rep.unitarity_witness = o.unitary_witness;
    }
    if (!o.hom_ok)
      rep.hom_dims_consistent = false;
  }
  return rep;
}

json PentagonReport::to_json(const TYData& t) const {
  json j = {{"quadruples", quadruples},
            {"equations", equations},
            {"failing_quadruples", failing.size()},
            {"failing_equations", failing_equations},
            {"associators_unitary", associators_unitary},
            {"hom_dims_consistent", hom_dims_consistent},
            {"tau", t.tau.str()},
            {"literal_rho_s_rho", t.literal_rho_s_rho}};
  json list = json::array();
  for (std::size_t k = 0; k < failing.size() && k < 16; ++k)
    list.push_back({t.name(failing[k][0]), t.name(failing[k][1]), t.name(failing[k][2]), t.name(failing[k][3])});
  j["failing"] = list;
  if (!first_failure.is_null())
    j["first_failure"] = first_failure;
  if (!associators_unitary)
    j["non_unitary"] = unitarity_witness;
  return j;
}

// ---- fusion ring match

FusionMatch fusion_ring_match(const TYData& t, const std::vector<Corep>& irreducibles) {
  const int n = t.group_order();
  const int S = t.num_simples();
  if (static_cast<int>(irreducibles.size()) != S)
    fail(ErrorKind::ShapeMismatch, "need one irreducible per simple object");
  for (int k = 0; k < n; ++k)
    if (irreducibles[k].size != 1)
      fail(ErrorKind::ShapeMismatch, "the first irreducibles must be one-dimensional");

  // rep[x][y][z] = dim Hom(z, x (x) y)
  std::vector<std::vector<std::vector<int>>> rep(S, std::vector<std::vector<int>>(S, std::vector<int>(S)));
  for (int x = 0; x < S; ++x)
    for (int y = 0; y < S; ++y) {
      Corep xy = tensor_corep(irreducibles[x], irreducibles[y]);
      for (int z = 0; z < S; ++z)
        rep[x][y][z] = intertwiners(irreducibles[z], xy).dim();
    }

  FusionMatch m;
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    ++m.tried;
    auto s = [&](int x) { return x == t.rho() ? n : sigma[x]; };
    bool ok = true;
    for (int x = 0; x < S && ok; ++x)
      for (int y = 0; y < S && ok; ++y)
        for (int z = 0; z < S && ok; ++z)
          if ((t.allowed(x, y, z) ? 1 : 0) != rep[s(x)][s(y)][s(z)])
            ok = false;
    if (ok)
      m.bijections.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  if (m.bijections.empty())
    fail(ErrorKind::NoBijection, "no relabelling matches the TY fusion ring");
  return m;
}

json FusionMatch::to_json(const TYData& t, const std::vector<std::string>& labels) const {
  json list = json::array();
  for (const auto& s : bijections) {
    json b = json::object();
    for (std::size_t g = 0; g < s.size(); ++g)
      b[t.names[g]] = labels.at(s[g]);
    b["rho"] = labels.at(s.size());
    list.push_back(b);
  }
  return {{"tried", tried}, {"succeeded", bijections.size()}, {"bijections", list}};
}

// ---- module data

CMatrix ModuleData::psi_map(int g) const {
  return reading == PsiReading::Columns ? psi_g[g] : psi_g[g].transpose();
}

ModuleData printed_module_data() {
  const CycQ8 r = CycQ8::inv_sqrt2();
  const CycQ8 s2 = CycQ8::sqrt2();
  const CycQ8 h = Rational(1, 2);
  ModuleData m;
  m.psi_g[0] = make_matrix({{0, 1}, {1, 0}});
  m.psi_g[1] = make_matrix({{r, -r}, {r, r}});
  m.psi_g[2] = make_matrix({{1, 0}, {0, -1}});
  m.psi_g[3] = make_matrix({{r, r}, {-r, r}});
  m.psi_rho = h * make_matrix({{0, 1, s2, 1}, {s2, 1, 0, -1}, {s2, -1, 0, 1}, {0, 1, s2, 1}});
  m.source = "printed";
  return m;
}

ModuleData build_module_data(const std::string& source) {
  if (source == "printed" || source == "paper")
    return printed_module_data();
  if (source == "repaired") {
    ModuleData m = sign_repair_search(printed_module_data()).best();
    m.source = "repaired";
    return m;
  }
  fail(ErrorKind::Parse, "unknown module data source '" + source + "'");
}

namespace {

// sqrt2 sum_k psi_rho[(n,k), g] M_g[m][k], as a 2x2 matrix in (n, m).
CMatrix g_diagram(const CMatrix& psi_rho, const CMatrix& map, int g) {
  CMatrix out(2, 2);
  for (int n = 0; n < 2; ++n)
    for (int m = 0; m < 2; ++m) {
      CycQ8 s;
      for (int k = 0; k < 2; ++k)
        s.add_product(psi_rho(2 * n + k, g), map(m, k));
      out(n, m) = CycQ8::sqrt2() * s;
    }
  return out;
}

bool g_diagram_holds(const CMatrix& psi_rho, const CMatrix& map, int g) {
  return g_diagram(psi_rho, map, g) == CMatrix::identity(2);
}

} // namespace

AxiomReport verify_module_diagrams(const ModuleData& m) {
  AxiomReport rep;
  for (int g = 0; g < 4; ++g)
    rep.results.push_back(result(std::string("psi_") + kGroupNames[g] + " unitary", is_unitary(m.psi_g[g]),
                                 {{"matrix", matrix_json(m.psi_g[g])}}));
  {
    CMatrix p = adjoint(m.psi_rho) * m.psi_rho;
    rep.results.push_back(result("psi_rho unitary", is_unitary(m.psi_rho), {{"psi_rho* psi_rho", matrix_json(p)}}));
  }

  for (int g = 0; g < 4; ++g) {
    CMatrix lhs = g_diagram(m.psi_rho, m.psi_map(g), g);
    rep.results.push_back(result(std::string("H_") + kGroupNames[g] + " diagram", lhs == CMatrix::identity(2),
                                 {{"coefficients of e_n (x) e_m", matrix_json(lhs)}, {"expected", "identity"}}));
  }

  // (1/sqrt2) sum_g (M_g)_{mj} (psi_rho)_{(n,k),g} = delta_mn delta_kj
  {
    bool ok = true;
    json w;
    for (int j = 0; j < 2 && ok; ++j)
      for (int m_ = 0; m_ < 2 && ok; ++m_)
        for (int n = 0; n < 2 && ok; ++n)
          for (int k = 0; k < 2 && ok; ++k) {
            CycQ8 s;
            for (int g = 0; g < 4; ++g)
              s.add_product(m.psi_map(g)(m_, j), m.psi_rho(2 * n + k, g));
            s *= CycQ8::inv_sqrt2();
            CycQ8 want = (m_ == n && k == j) ? CycQ8(1) : CycQ8(0);
            if (!(s == want)) {
              ok = false;
              w = {{"xi", j + 1},
                   {"coefficient", "e" + std::to_string(m_ + 1) + " (x) e" + std::to_string(n + 1) + " (x) xi" +
                                       std::to_string(k + 1)},
                   {"got", s.str()},
                   {"expected", want.str()}};
            }
          }
    rep.results.push_back(result("H_rho diagram", ok, w));
  }

  // |sqrt2 xi_{g rho} (x) xi_{rho g}|^2 and |(1/sqrt2) sum_g xi_{rho g} (x) xi_{g rho}|^2
  {
    CycQ8 lhs = CycQ8::sqrt2() * CycQ8::sqrt2();
    CycQ8 rhs;
    for (int g = 0; g < 4; ++g)
      rhs.add_product(CycQ8::inv_sqrt2(), CycQ8::inv_sqrt2());
    rep.results.push_back(
        result("solution vector norms agree", lhs == rhs && lhs == CycQ8(2), {{"lhs", lhs.str()}, {"rhs", rhs.str()}}));
  }

  // g = b: (psi_rho (x) id)(xi_b (x) xi_{b rho} (x) xi_{rho b}) = (1/sqrt2)(e1 xi1 - e2 xi2)
  {
    const CycQ8 r = CycQ8::inv_sqrt2();
    CMatrix want = make_matrix({{r}, {0}, {0}, {-r}});
    CMatrix got = m.psi_rho.column(2);
    rep.results.push_back(result("g = b intermediate vector", got == want,
                                 {{"got", matrix_json(got.transpose())}, {"expected", matrix_json(want.transpose())}}));
  }
  return rep;
}

// ---- sign repair

namespace {

struct ColumnChoice {
  std::vector<CycQ8> column;  // 4 entries
  int psi_phase = 0;          // k: psi_g scaled by i^k
  int cost = 0;
  std::vector<std::string> changes;
};

const char* kPhaseNames[4] = {"1", "i", "-1", "-i"};

} // namespace

RepairResult sign_repair_search(const ModuleData& printed) {
  RepairResult res;
  std::array<CycQ8, 4> phases = {CycQ8(1), CycQ8::i(), CycQ8(-1), -CycQ8::i()};
  json per_reading = json::array();

  for (PsiReading reading : {PsiReading::Columns, PsiReading::Rows}) {
    ModuleData base = printed;
    base.reading = reading;
    const int reading_cost = reading == PsiReading::Rows ? 1 : 0;

    // per column g: phases on the nonzero entries and on psi_g passing the H_g diagram
    std::array<std::vector<ColumnChoice>, 4> survivors;
    for (int g = 0; g < 4; ++g) {
      std::vector<int> rows;
      for (int r = 0; r < 4; ++r)
        if (!printed.psi_rho(r, g).is_zero())
          rows.push_back(r);
      int combos = 1;
      for (std::size_t k = 0; k < rows.size(); ++k)
        combos *= 4;
      for (int p = 0; p < 4; ++p) {
        CMatrix map = base.psi_map(g) * phases[p];
        for (int code = 0; code < combos; ++code) {
          ColumnChoice ch;
          ch.psi_phase = p;
          CMatrix col = printed.psi_rho;
          int c = code;
          for (int r : rows) {
            int ph = c % 4;
            c /= 4;
            col(r, g) = printed.psi_rho(r, g) * phases[ph];
            if (ph) {
              ++ch.cost;
              ch.changes.push_back("psi_rho(" + std::to_string(r + 1) + "," + std::to_string(g + 1) + ") * " +
                                   kPhaseNames[ph]);
            }
          }
          if (!g_diagram_holds(col, map, g))
            continue;
          if (p) {
            ++ch.cost;
            ch.changes.push_back(std::string("psi_") + kGroupNames[g] + " * " + kPhaseNames[p]);
          }
          for (int r = 0; r < 4; ++r)
            ch.column.push_back(col(r, g));
          survivors[g].push_back(std::move(ch));
        }
      }
    }

    int found = 0;
    int best_cost = -1;
    json best_changes;
    for (const auto& c0 : survivors[0])
      for (const auto& c1 : survivors[1])
        for (const auto& c2 : survivors[2])
          for (const auto& c3 : survivors[3]) {
            const ColumnChoice* cs[4] = {&c0, &c1, &c2, &c3};
            ModuleData cand = base;
            cand.source = "repaired";
            int cost = reading_cost;
            if (reading == PsiReading::Rows)
              cand.changes.push_back("psi_g read by rows");
            for (int g = 0; g < 4; ++g) {
              for (int r = 0; r < 4; ++r)
                cand.psi_rho(r, g) = cs[g]->column[r];
              cand.psi_g[g] = printed.psi_g[g] * phases[cs[g]->psi_phase];
              cost += cs[g]->cost;
              cand.changes.insert(cand.changes.end(), cs[g]->changes.begin(), cs[g]->changes.end());
            }
            if (!verify_module_diagrams(cand).passed())
              continue;
            ++found;
            if (best_cost < 0 || cost < best_cost) {
              best_cost = cost;
              best_changes = cand.changes;
            }
            res.solutions.push_back({std::move(cand), cost});
          }

    per_reading.push_back({{"reading", reading == PsiReading::Columns ? "columns" : "rows"},
                           {"solutions", found},
                           {"min_cost", best_cost},
                           {"min_changes", best_changes.is_null() ? json::array() : best_changes}});
  }

  if (res.solutions.empty())
    fail(ErrorKind::NoneFound, "no phase correction makes every module diagram commute");

  res.designated = 0;
  for (std::size_t k = 1; k < res.solutions.size(); ++k)
    if (res.solutions[k].cost < res.solutions[res.designated].cost)
      res.designated = static_cast<int>(k);
  const RepairSolution& best = res.solutions[res.designated];
  res.log = {{"readings", per_reading},
             {"total_solutions", res.solutions.size()},
             {"designated", {{"cost", best.cost}, {"changes", best.data.changes}}}};
  return res;
}

} // namespace hopfcheck
