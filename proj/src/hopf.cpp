#include "hopfcheck/hopf.hpp"

#include "hopfcheck/linalg.hpp"

namespace hopfcheck {

namespace {

json pair_witness(const AlgebraPtr& a, int p, int q, const AlgElement& lhs, const AlgElement& rhs) {
  return {{"a", a->basis_name(p)}, {"b", a->basis_name(q)}, {"lhs", lhs.str()}, {"rhs", rhs.str()}};
}

json elem_witness(const AlgebraPtr& a, int p, const AlgElement& lhs, const AlgElement& rhs) {
  return {{"basis", a->basis_name(p)}, {"lhs", lhs.str()}, {"rhs", rhs.str()}};
}

// Reinterprets an element of k (x) A or A (x) k as an element of A.
AlgElement as_algebra(const AlgebraPtr& a, const AlgElement& x) { return AlgElement(a, x.coords()); }

// Product e_s e_q of canonical basis vectors as a basis index, or -1.
int basis_product(const MultiMatrixAlgebra& a, int s, int q) {
  const auto& ps = a.locate(s);
  const auto& pq = a.locate(q);
  if (ps.block != pq.block || ps.col != pq.row)
    return -1;
  return a.index(ps.block, ps.row, pq.col);
}

// Runs a per-basis predicate and records the first failure.
template <class Fn>
AxiomResult basis_law(const std::string& name, int n, Fn&& fn, bool gating = true) {
  AxiomResult r{name, true, gating, nullptr};
  for (int p = 0; p < n && r.passed; ++p) {
    json w = fn(p);
    if (!w.is_null()) {
      r.passed = false;
      r.witness = std::move(w);
    }
  }
  return r;
}

AxiomResult rank_law(const std::string& name, std::size_t rank, std::size_t expected, bool gating = true) {
  AxiomResult r{name, rank == expected, gating, nullptr};
  if (!r.passed)
    r.witness = {{"rank", rank}, {"expected", expected}};
  return r;
}

} // namespace

// ------------------------------------------------------------------- solving

CounitAntipode solve_counit_antipode(const AlgebraPtr& algebra, const LinearMap& coproduct) {
  const MultiMatrixAlgebra& a = *algebra;
  const int d = a.dim();
  if (!coproduct.source()->same_shape(a) || !coproduct.target()->same_shape(*tensor(algebra, algebra)))
    fail(ErrorKind::DimensionMismatch, "coproduct must map A to A (x) A");
  const auto& pairs = tensor_pair_table(algebra, algebra);
  const CMatrix& D = coproduct.matrix();
  const std::size_t dd = static_cast<std::size_t>(d) * d;

  // Counit: unknown c_p = eps(e_p).
  // Left law, row (r, q): sum_p D[(p,q), r] c_p = delta_qr.
  // Right law, row (r, p): sum_q D[(p,q), r] c_q = delta_pr.
  CMatrix ce(2 * dd, d), cb(2 * dd, 1);
  for (int r = 0; r < d; ++r)
    for (std::size_t k = 0; k < dd; ++k) {
      const CycQ8& v = D(k, r);
      if (v.is_zero())
        continue;
      const auto [p, q] = pairs[k];
      ce(static_cast<std::size_t>(r) * d + q, p) += v;
      ce(dd + static_cast<std::size_t>(r) * d + p, q) += v;
    }
  for (int r = 0; r < d; ++r) {
    cb(static_cast<std::size_t>(r) * d + r, 0) = 1;
    cb(dd + static_cast<std::size_t>(r) * d + r, 0) = 1;
  }
  auto csol = solve(ce, cb);
  if (!csol)
    fail(ErrorKind::NoSolution, "no counit satisfies both counit laws");
  if (!csol->unique())
    fail(ErrorKind::NonUnique, "counit is not determined by the coproduct");
  CMatrix eps(1, d);
  for (int p = 0; p < d; ++p)
    eps(0, p) = csol->particular(p, 0);

  // Antipode: unknown S[s, p], flattened as s * d + p.
  // Left law, row (r, t): sum D[(p,q), r] S[s,p] [e_s e_q = e_t] = eps_r one_t.
  // Right law, row (r, t): sum D[(p,q), r] S[s,q] [e_p e_s = e_t] = eps_r one_t.
  CMatrix se(2 * dd, dd), sb(2 * dd, 1);
  const AlgElement one = AlgElement::one(algebra);
  for (int r = 0; r < d; ++r)
    for (std::size_t k = 0; k < dd; ++k) {
      const CycQ8& v = D(k, r);
      if (v.is_zero())
        continue;
      const auto [p, q] = pairs[k];
      const auto& pq = a.locate(q);
      const int n = a.block_size(pq.block);
      for (int row = 0; row < n; ++row) {
        const int s = a.index(pq.block, row, pq.row);
        const int t = basis_product(a, s, q);
        se(static_cast<std::size_t>(r) * d + t, static_cast<std::size_t>(s) * d + p) += v;
      }
      const auto& pp = a.locate(p);
      const int m = a.block_size(pp.block);
      for (int col = 0; col < m; ++col) {
        const int s = a.index(pp.block, pp.col, col);
        const int t = basis_product(a, p, s);
        se(dd + static_cast<std::size_t>(r) * d + t, static_cast<std::size_t>(s) * d + q) += v;
      }
    }
  for (int r = 0; r < d; ++r) {
    if (eps(0, r).is_zero())
      continue;
    for (int t = 0; t < d; ++t)
      if (!one[t].is_zero()) {
        sb(static_cast<std::size_t>(r) * d + t, 0) = eps(0, r) * one[t];
        sb(dd + static_cast<std::size_t>(r) * d + t, 0) = eps(0, r) * one[t];
      }
  }
  auto ssol = solve(se, sb);
  if (!ssol)
    fail(ErrorKind::NoSolution, "no antipode satisfies both antipode laws");
  if (!ssol->unique())
    fail(ErrorKind::NonUnique, "antipode is not determined by the coproduct");
  CMatrix s(d, d);
  for (int row = 0; row < d; ++row)
    for (int col = 0; col < d; ++col)
      s(row, col) = ssol->particular(static_cast<std::size_t>(row) * d + col, 0);

  return {LinearMap(algebra, scalar_algebra(), std::move(eps)), LinearMap(algebra, algebra, std::move(s))};
}

HopfPtr make_hopf(std::string name, AlgebraPtr algebra, LinearMap coproduct) {
  CounitAntipode ca = solve_counit_antipode(algebra, coproduct);
  auto h = std::make_shared<HopfAlgebra>();
  h->name = std::move(name);
  h->algebra = std::move(algebra);
  h->coproduct = std::move(coproduct);
  h->counit = std::move(ca.counit);
  h->antipode = std::move(ca.antipode);
  return h;
}

HopfPtr make_verified_hopf(std::string name, AlgebraPtr algebra, LinearMap coproduct) {
  HopfPtr h = make_hopf(std::move(name), std::move(algebra), std::move(coproduct));
  AxiomReport rep = verify_hopf_axioms(*h);
  if (const AxiomResult* f = rep.first_failure())
    fail(ErrorKind::AxiomFailure, h->name + ": " + f->name + " fails: " + f->witness.dump());
  return h;
}

// -------------------------------------------------------------------- report

bool AxiomReport::passed() const { return first_failure() == nullptr; }

const AxiomResult* AxiomReport::first_failure() const {
  for (const auto& r : results)
    if (r.gating && !r.passed)
      return &r;
  return nullptr;
}

const AxiomResult* AxiomReport::find(const std::string& name) const {
  for (const auto& r : results)
    if (r.name == name)
      return &r;
  return nullptr;
}

json AxiomReport::to_json() const {
  json out = json::array();
  for (const auto& r : results) {
    json j = {{"law", r.name}, {"passed", r.passed}};
    if (!r.gating)
      j["report_only"] = true;
    if (!r.witness.is_null())
      j["witness"] = r.witness;
    out.push_back(std::move(j));
  }
  return out;
}

// -------------------------------------------------------------------- axioms

AxiomReport verify_hopf_axioms(const HopfAlgebra& h, Exec exec) {
  const AlgebraPtr& A = h.algebra;
  const int d = A->dim();
  const LinearMap id = LinearMap::identity(A);
  const LinearMap mul = multiplication_map(A);
  const AlgElement one = AlgElement::one(A);
  const AlgebraPtr AA = tensor(A, A);
  std::vector<AlgElement> deltas;
  deltas.reserve(d);
  for (int p = 0; p < d; ++p)
    deltas.push_back(h.delta(h.basis(p)));

  AxiomReport rep;
  auto& out = rep.results;

  out.push_back(basis_law("coassociativity", d, [&](int p) -> json {
    AlgElement l = apply_tensor(h.coproduct, id, deltas[p]);
    AlgElement r = apply_tensor(id, h.coproduct, deltas[p]);
    // (A (x) A) (x) A and A (x) (A (x) A) share one canonical basis.
    if (l.coords() == r.coords())
      return nullptr;
    return elem_witness(A, p, l, r);
  }));

  out.push_back(basis_law("counit_left", d, [&](int p) -> json {
    AlgElement l = as_algebra(A, apply_tensor(h.counit, id, deltas[p]));
    return l == h.basis(p) ? json() : elem_witness(A, p, l, h.basis(p));
  }));
  out.push_back(basis_law("counit_right", d, [&](int p) -> json {
    AlgElement l = as_algebra(A, apply_tensor(id, h.counit, deltas[p]));
    return l == h.basis(p) ? json() : elem_witness(A, p, l, h.basis(p));
  }));

  out.push_back(basis_law("antipode_left", d, [&](int p) -> json {
    AlgElement l = mul.apply(apply_tensor(h.antipode, id, deltas[p]));
    AlgElement r = h.eps(h.basis(p)) * one;
    return l == r ? json() : elem_witness(A, p, l, r);
  }));
  out.push_back(basis_law("antipode_right", d, [&](int p) -> json {
    AlgElement l = mul.apply(apply_tensor(id, h.antipode, deltas[p]));
    AlgElement r = h.eps(h.basis(p)) * one;
    return l == r ? json() : elem_witness(A, p, l, r);
  }));

  {
    AxiomResult r{"coproduct_multiplicative", true, true, nullptr};
    for (int p = 0; p < d && r.passed; ++p)
      for (int q = 0; q < d && r.passed; ++q) {
        AlgElement l = h.delta(h.basis(p) * h.basis(q));
        AlgElement rr = deltas[p] * deltas[q];
        if (!(l == rr)) {
          r.passed = false;
          r.witness = pair_witness(A, p, q, l, rr);
        }
      }
    out.push_back(std::move(r));
  }

  {
    AlgElement l = h.delta(one), r = AlgElement::one(AA);
    AxiomResult res{"coproduct_unital", l == r, true, nullptr};
    if (!res.passed)
      res.witness = {{"lhs", l.str()}, {"rhs", r.str()}};
    out.push_back(std::move(res));
  }

  out.push_back(basis_law("coproduct_star", d, [&](int p) -> json {
    AlgElement l = h.delta(h.basis(p).star());
    AlgElement r = deltas[p].star();
    return l == r ? json() : elem_witness(A, p, l, r);
  }));

  {
    AxiomResult r{"counit_star_character", true, true, nullptr};
    if (!h.eps(one).is_one()) {
      r.passed = false;
      r.witness = {{"eps(1)", h.eps(one).str()}};
    }
    for (int p = 0; p < d && r.passed; ++p) {
      const CycQ8 ep = h.eps(h.basis(p));
      if (!(h.eps(h.basis(p).star()) == ep.conj())) {
        r.passed = false;
        r.witness = {{"basis", A->basis_name(p)}, {"law", "eps(a*) = conj(eps(a))"}};
      }
      for (int q = 0; q < d && r.passed; ++q)
        if (!(h.eps(h.basis(p) * h.basis(q)) == ep * h.eps(h.basis(q)))) {
          r.passed = false;
          r.witness = {{"a", A->basis_name(p)}, {"b", A->basis_name(q)}, {"law", "eps(ab) = eps(a) eps(b)"}};
        }
    }
    out.push_back(std::move(r));
  }

  {
    const AlgElement oneA = AlgElement::one(A);
    std::vector<AlgElement> left, right;
    left.reserve(static_cast<std::size_t>(d) * d);
    right.reserve(static_cast<std::size_t>(d) * d);
    for (int p = 0; p < d; ++p) {
      AlgElement lp = tensor(h.basis(p), oneA), rp = tensor(oneA, h.basis(p));
      for (int q = 0; q < d; ++q) {
        left.push_back(lp * deltas[q]);
        right.push_back(rp * deltas[q]);
      }
    }
    const std::size_t full = static_cast<std::size_t>(d) * d;
    out.push_back(rank_law("cancellation_left", span_rank(left, exec), full));
    out.push_back(rank_law("cancellation_right", span_rank(right, exec), full));
  }

  out.push_back(basis_law("antipode_squared_identity", d, [&](int p) -> json {
    AlgElement l = h.S(h.S(h.basis(p)));
    return l == h.basis(p) ? json() : elem_witness(A, p, l, h.basis(p));
  }, false));
  out.push_back(basis_law("antipode_star_involutive", d, [&](int p) -> json {
    AlgElement l = h.S(h.S(h.basis(p).star()).star());
    return l == h.basis(p) ? json() : elem_witness(A, p, l, h.basis(p));
  }, false));

  return rep;
}

// ----------------------------------------------------------------- morphisms

AxiomReport check_hopf_morphism(const LinearMap& f, const HopfAlgebra& h1, const HopfAlgebra& h2,
                                MorphismKind require, Exec exec) {
  if (!f.source()->same_shape(*h1.algebra) || !f.target()->same_shape(*h2.algebra))
    fail(ErrorKind::DimensionMismatch, "morphism does not map H1 to H2");
  const AlgebraPtr& A = h1.algebra;
  const int d = A->dim();
  AxiomReport rep;
  auto& out = rep.results;

  {
    AxiomResult r{"multiplicative", true, true, nullptr};
    for (int p = 0; p < d && r.passed; ++p)
      for (int q = 0; q < d && r.passed; ++q) {
        AlgElement l = f.apply(h1.basis(p) * h1.basis(q));
        AlgElement rr = f.apply(h1.basis(p)) * f.apply(h1.basis(q));
        if (!(l == rr)) {
          r.passed = false;
          r.witness = pair_witness(A, p, q, l, rr);
        }
      }
    out.push_back(std::move(r));
  }
  {
    AlgElement l = f.apply(AlgElement::one(A)), r = AlgElement::one(h2.algebra);
    AxiomResult res{"unital", l == r, true, nullptr};
    if (!res.passed)
      res.witness = {{"lhs", l.str()}, {"rhs", r.str()}};
    out.push_back(std::move(res));
  }
  out.push_back(basis_law("star", d, [&](int p) -> json {
    AlgElement l = f.apply(h1.basis(p).star()), r = f.apply(h1.basis(p)).star();
    return l == r ? json() : elem_witness(A, p, l, r);
  }));
  out.push_back(basis_law("coproduct_intertwined", d, [&](int p) -> json {
    AlgElement l = apply_tensor(f, f, h1.delta(h1.basis(p)));
    AlgElement r = h2.delta(f.apply(h1.basis(p)));
    return l == r ? json() : elem_witness(A, p, l, r);
  }));
  out.push_back(basis_law("counit_intertwined", d, [&](int p) -> json {
    CycQ8 l = h2.eps(f.apply(h1.basis(p))), r = h1.eps(h1.basis(p));
    return l == r ? json() : json{{"basis", A->basis_name(p)}, {"lhs", l.str()}, {"rhs", r.str()}};
  }));

  if (require != MorphismKind::Hom) {
    const std::size_t rk = rank(f.matrix(), exec);
    out.push_back(rank_law("surjective", rk, static_cast<std::size_t>(h2.dim())));
    if (require == MorphismKind::Iso) {
      AxiomResult r{"bijective", rk == static_cast<std::size_t>(d) && d == h2.dim(), true, nullptr};
      if (!r.passed)
        r.witness = {{"rank", rk}, {"dim_source", d}, {"dim_target", h2.dim()}};
      out.push_back(std::move(r));
    }
  }
  return rep;
}

CommutativityFlags commutativity_flags(const HopfAlgebra& h) {
  const AlgebraPtr& A = h.algebra;
  const int d = A->dim();
  CommutativityFlags out;
  for (int p = 0; p < d && out.commutative; ++p)
    for (int q = p + 1; q < d && out.commutative; ++q) {
      AlgElement ab = h.basis(p) * h.basis(q), ba = h.basis(q) * h.basis(p);
      if (!(ab == ba)) {
        out.commutative = false;
        out.commutative_witness = pair_witness(A, p, q, ab, ba);
      }
    }
  const LinearMap flip = flip_map(A, A);
  for (int p = 0; p < d && out.cocommutative; ++p) {
    AlgElement dp = h.delta(h.basis(p));
    AlgElement fp = flip.apply(dp);
    if (!(dp == fp)) {
      out.cocommutative = false;
      out.cocommutative_witness = elem_witness(A, p, dp, fp);
    }
  }
  return out;
}

} // namespace hopfcheck
