#include "hopfcheck/group_twist.hpp"

#include <deque>

#include "hopfcheck/linalg.hpp"

namespace hopfcheck {

int FiniteMatrixGroup::index_of(const CMatrix& m) const {
  for (int k = 0; k < order(); ++k)
    if (elements[k] == m)
      return k;
  return -1;
}

int FiniteMatrixGroup::index_of(const std::string& name) const {
  for (int k = 0; k < order(); ++k)
    if (names[k] == name)
      return k;
  return -1;
}

CycQ8 determinant(const CMatrix& m) {
  if (m.rows() != m.cols())
    fail(ErrorKind::ShapeMismatch, "determinant of a non-square matrix");
  CMatrix a = m;
  const std::size_t n = a.rows();
  CycQ8 det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero())
      ++p;
    if (p == n)
      return 0;
    if (p != c) {
      a.swap_rows(p, c);
      det = -det;
    }
    det *= a(c, c);
    const CycQ8 inv = a(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero())
        continue;
      const CycQ8 f = a(r, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

FiniteMatrixGroup generate_group(const std::vector<CMatrix>& generators, int cap,
                                 const std::vector<NamedMatrix>& names) {
  if (generators.empty())
    fail(ErrorKind::ShapeMismatch, "at least one generator is required");
  const std::size_t n = generators.front().rows();
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n)
      fail(ErrorKind::ShapeMismatch, "generators must be square and of equal size");
    if (!is_unitary(g))
      fail(ErrorKind::NotUnitary, "generator is not unitary");
    if (!determinant(g).is_one())
      fail(ErrorKind::NotUnimodular, "generator does not have determinant 1");
  }

  FiniteMatrixGroup G;
  G.elements.push_back(CMatrix::identity(n));
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int k = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      CMatrix m = matmul_serial(G.elements[k], g);
      if (G.index_of(m) >= 0)
        continue;
      if (G.order() >= cap)
        fail(ErrorKind::CapExceeded, "group order exceeds cap " + std::to_string(cap));
      G.elements.push_back(std::move(m));
      queue.push_back(G.order() - 1);
    }
  }

  const int order = G.order();
  G.table.assign(order, std::vector<int>(order, -1));
  G.inverse.assign(order, -1);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      G.table[a][b] = G.index_of(matmul_serial(G.elements[a], G.elements[b]));
      if (G.table[a][b] < 0)
        fail(ErrorKind::NotClosed, "product left the enumerated group");
      if (G.table[a][b] == 0)
        G.inverse[a] = b;
    }

  G.names.resize(order);
  for (int k = 0; k < order; ++k) {
    G.names[k] = "h" + std::to_string(k);
    for (const auto& [m, name] : names)
      if (m == G.elements[k])
        G.names[k] = name;
  }
  return G;
}

HopfPtr function_algebra(const FiniteMatrixGroup& g) {
  const int n = g.order();
  AlgebraPtr A = make_algebra(std::vector<int>(n, 1), g.names);
  std::vector<AlgElement> images;
  images.reserve(n);
  for (int h = 0; h < n; ++h) {
    AlgElement d = AlgElement::zero(tensor(A, A));
    for (int k1 = 0; k1 < n; ++k1) {
      const int k2 = g.mul(g.inverse[k1], h);
      d += tensor(AlgElement::basis(A, k1), AlgElement::basis(A, k2));
    }
    images.push_back(std::move(d));
  }
  return make_hopf("C(G)", A, LinearMap::from_images(A, tensor(A, A), images));
}

// ------------------------------------------------------------------- actions

bool GroupAction2::trivial() const {
  for (std::size_t h = 0; h < perm.size(); ++h)
    if (perm[h] != static_cast<int>(h))
      return false;
  return true;
}

LinearMap GroupAction2::induced_map(const HopfAlgebra& fn) const {
  const int n = static_cast<int>(perm.size());
  if (fn.dim() != n)
    fail(ErrorKind::DimensionMismatch, "action and function algebra differ in size");
  CMatrix m(n, n);
  for (int h = 0; h < n; ++h)
    m(perm[h], h) = 1;
  return LinearMap(fn.algebra, fn.algebra, std::move(m));
}

GroupAction2 conjugation_action(const FiniteMatrixGroup& g, const CMatrix& u) {
  if (!is_unitary(u))
    fail(ErrorKind::NotUnitary, "action matrix is not unitary");
  GroupAction2 act;
  act.unitary = u;
  const CMatrix ustar = adjoint(u);
  for (int h = 0; h < g.order(); ++h) {
    const int k = g.index_of(matmul_serial(matmul_serial(u, g.elements[h]), ustar));
    if (k < 0)
      fail(ErrorKind::NotStable, "conjugate of " + g.names[h] + " is not in the group");
    act.perm.push_back(k);
  }
  for (int h = 0; h < g.order(); ++h)
    if (act.perm[act.perm[h]] != h)
      fail(ErrorKind::NotInvolutive, "conjugation does not square to the identity on " + g.names[h]);
  return act;
}

CentralGrading central_grading(const FiniteMatrixGroup& g, const CMatrix& z) {
  const int k = g.index_of(z);
  if (k < 0)
    fail(ErrorKind::NotCentral, "grading element is not in the group");
  if (g.mul(k, k) != g.identity)
    fail(ErrorKind::NotCentral, "grading element does not square to the identity");
  for (int h = 0; h < g.order(); ++h)
    if (g.mul(k, h) != g.mul(h, k))
      fail(ErrorKind::NotCentral, "grading element does not commute with " + g.names[h]);
  return {k};
}

// ------------------------------------------------------------------- smash

CMatrix SmashProduct::crossed_basis() const {
  std::vector<AlgElement> cols;
  for (int k = 0; k < 2; ++k)
    for (int h = 0; h < group->order(); ++h)
      cols.push_back(crossed(h, k));
  return coordinate_matrix(cols);
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok)
    fail(ErrorKind::AxiomFailure, what);
}

} // namespace

std::shared_ptr<const SmashProduct> smash_product(const FiniteMatrixGroup& g, const GroupAction2& theta) {
  const int n = g.order();
  {
    HopfPtr fn = function_algebra(g);
    AxiomReport rep = check_hopf_morphism(theta.induced_map(*fn), *fn, *fn, MorphismKind::Iso);
    if (const AxiomResult* f = rep.first_failure())
      fail(ErrorKind::AxiomFailure, "action is not a Hopf automorphism: " + f->name);
  }

  std::vector<int> fixed, free;
  for (int h = 0; h < n; ++h) {
    if (theta(h) == h)
      fixed.push_back(h);
    else if (h < theta(h))
      free.push_back(h);
  }
  std::vector<int> sizes;
  std::vector<std::string> labels;
  for (int x : fixed) {
    sizes.insert(sizes.end(), {1, 1});
    labels.push_back(g.names[x] + "+");
    labels.push_back(g.names[x] + "-");
  }
  for (int x : free) {
    sizes.push_back(2);
    labels.push_back(g.names[x] + "," + g.names[theta(x)]);
  }
  AlgebraPtr A = make_algebra(sizes, labels);

  auto sp = std::make_shared<SmashProduct>();
  sp->group = std::make_shared<const FiniteMatrixGroup>(g);
  sp->action = theta;
  sp->delta.assign(n, AlgElement::zero(A));
  std::vector<AlgElement> delta_lambda(n, AlgElement::zero(A));
  int block = 0;
  for (int x : fixed) {
    const AlgElement pp = AlgElement::matrix_unit(A, block, 0, 0);
    const AlgElement pm = AlgElement::matrix_unit(A, block + 1, 0, 0);
    sp->delta[x] = pp + pm;
    delta_lambda[x] = pp - pm;
    block += 2;
  }
  for (int x : free) {
    const int y = theta(x);
    sp->delta[x] = AlgElement::matrix_unit(A, block, 0, 0);
    sp->delta[y] = AlgElement::matrix_unit(A, block, 1, 1);
    delta_lambda[x] = AlgElement::matrix_unit(A, block, 0, 1);
    delta_lambda[y] = AlgElement::matrix_unit(A, block, 1, 0);
    ++block;
  }
  sp->lambda = AlgElement::zero(A);
  for (const auto& v : delta_lambda)
    sp->lambda += v;

  // The presentation must satisfy the defining relations of the crossed product.
  const AlgElement one = AlgElement::one(A);
  AlgElement sum = AlgElement::zero(A);
  for (int h = 0; h < n; ++h) {
    sum += sp->delta[h];
    for (int k = 0; k < n; ++k)
      require(sp->delta[h] * sp->delta[k] == (h == k ? sp->delta[h] : AlgElement::zero(A)),
              "delta functions are not orthogonal idempotents");
    require(sp->delta[h].star() == sp->delta[h], "delta functions are not self-adjoint");
    require(sp->lambda * sp->delta[h] == sp->delta[theta(h)] * sp->lambda, "lambda does not implement theta");
    require(sp->crossed(h, 1) == delta_lambda[h], "orbit matrix units disagree with delta_h lambda");
    require(sp->crossed(h, 1).star() == sp->delta[theta(h)] * sp->lambda, "star convention violated");
  }
  require(sum == one, "delta functions do not sum to 1");
  require(sp->lambda * sp->lambda == one, "lambda^2 != 1");
  require(sp->lambda.star() == sp->lambda, "lambda is not self-adjoint");

  const CMatrix C = sp->crossed_basis();
  auto inv = solve(C, CMatrix::identity(C.rows()));
  require(inv && inv->unique(), "delta_h lambda^k is not a basis");

  // D(delta_h lambda^k) = sum_{k1 k2 = h} delta_k1 lambda^k (x) delta_k2 lambda^k.
  const AlgebraPtr AA = tensor(A, A);
  CMatrix dc(AA->dim(), 2 * n);
  for (int k = 0; k < 2; ++k)
    for (int h = 0; h < n; ++h) {
      AlgElement d = AlgElement::zero(AA);
      for (int k1 = 0; k1 < n; ++k1)
        d += tensor(sp->crossed(k1, k), sp->crossed(g.mul(g.inverse[k1], h), k));
      for (int r = 0; r < AA->dim(); ++r)
        dc(r, k * n + h) = d[r];
    }
  LinearMap coproduct(A, AA, matmul(dc, inv->particular));
  sp->hopf = make_verified_hopf("C(G)#Z2", A, std::move(coproduct));
  return sp;
}

// ------------------------------------------------------------------- twist

AlgElement GradedTwist::pull_back(const AlgElement& x) const {
  CMatrix rhs(x.dim(), 1);
  for (int k = 0; k < x.dim(); ++k)
    rhs(k, 0) = x[k];
  auto sol = solve(embedding.matrix(), rhs, Exec::Serial);
  if (!sol)
    fail(ErrorKind::NotClosed, "element does not lie in the graded twist");
  AlgElement out = AlgElement::zero(hopf->algebra);
  for (int k = 0; k < out.dim(); ++k)
    out[k] = sol->particular(k, 0);
  return out;
}

AlgElement GradedTwist::even(int h) const {
  const int zh = smash->group->mul(grading.z, h);
  AlgElement e = smash->delta[h];
  if (zh != h)
    e += smash->delta[zh];
  return pull_back(e);
}

AlgElement GradedTwist::odd(int h) const {
  const int zh = smash->group->mul(grading.z, h);
  return pull_back((smash->delta[h] - smash->delta[zh]) * smash->lambda);
}

std::shared_ptr<const GradedTwist> graded_twist(const FiniteMatrixGroup& g, const CentralGrading& grading,
                                                const GroupAction2& theta) {
  if (theta(grading.z) != grading.z)
    fail(ErrorKind::NotStable, "the action moves the grading element");
  auto tw = std::make_shared<GradedTwist>();
  tw->grading = grading;
  tw->smash = smash_product(g, theta);
  const SmashProduct& sp = *tw->smash;
  const AlgebraPtr& S = sp.hopf->algebra;
  const int n = g.order();

  std::vector<int> coset(n, -1);
  for (int h = 0; h < n; ++h) {
    const int zh = g.mul(grading.z, h);
    if (coset[h] < 0) {
      coset[h] = coset[zh] = h;
      tw->coset_reps.push_back(h);
    }
  }
  auto e_of = [&](int c) {
    const int zc = g.mul(grading.z, c);
    return zc == c ? sp.delta[c] : sp.delta[c] + sp.delta[zc];
  };
  auto o_of = [&](int c) { return (sp.delta[c] - sp.delta[g.mul(grading.z, c)]) * sp.lambda; };

  // Each entry: block size and the smash images of its matrix units, row-major.
  struct Block {
    std::string label;
    std::vector<AlgElement> units;
  };
  std::vector<Block> ones, twos;
  const CycQ8 half = Rational(1, 2), i = CycQ8::i();
  for (int c : tw->coset_reps) {
    const int tc = coset[theta(c)];
    const std::string name = "[" + g.names[c] + "]";
    if (g.mul(grading.z, c) == c) {
      ones.push_back({name, {e_of(c)}});
    } else if (tc == c) {
      const AlgElement e = e_of(c), o = o_of(c);
      const AlgElement o2 = o * o;
      if (o2 == e) {
        ones.push_back({name + "+", {half * (e + o)}});
        ones.push_back({name + "-", {half * (e - o)}});
      } else if (o2 == -e) {
        ones.push_back({name + "-i", {half * (e - i * o)}});
        ones.push_back({name + "+i", {half * (e + i * o)}});
      } else {
        fail(ErrorKind::NotClosed, "odd element of coset " + name + " does not square to +-e");
      }
    } else if (c < tc) {
      const AlgElement o = o_of(c);
      twos.push_back({"[" + g.names[c] + "," + g.names[tc] + "]", {e_of(c), o, o.star(), e_of(tc)}});
    }
  }

  std::vector<int> sizes;
  std::vector<std::string> labels;
  std::vector<AlgElement> images;
  for (auto* list : {&ones, &twos})
    for (const Block& b : *list) {
      sizes.push_back(b.units.size() == 1 ? 1 : 2);
      labels.push_back(b.label);
      images.insert(images.end(), b.units.begin(), b.units.end());
    }
  AlgebraPtr T = make_algebra(sizes, labels);
  tw->embedding = LinearMap::from_images(T, S, images);

  // The embedding must be an injective unital *-homomorphism.
  if (rank(tw->embedding.matrix()) != static_cast<std::size_t>(T->dim()))
    fail(ErrorKind::NotClosed, "twist matrix units are linearly dependent");
  if (!(tw->embedding.apply(AlgElement::one(T)) == AlgElement::one(S)))
    fail(ErrorKind::NotClosed, "twist matrix units do not sum to 1");
  for (int p = 0; p < T->dim(); ++p) {
    const AlgElement ep = AlgElement::basis(T, p);
    if (!(tw->embedding.apply(ep.star()) == images[p].star()))
      fail(ErrorKind::NotClosed, "twist is not closed under the star");
    for (int q = 0; q < T->dim(); ++q)
      if (!(tw->embedding.apply(ep * AlgElement::basis(T, q)) == images[p] * images[q]))
        fail(ErrorKind::NotClosed, "twist matrix units violate the matrix-unit relations");
  }

  // Coproduct: solve (iota (x) iota) X = D_smash iota.
  const LinearMap ii = tensor_of_maps(tw->embedding, tw->embedding);
  const CMatrix rhs = matmul(sp.hopf->coproduct.matrix(), tw->embedding.matrix());
  auto sol = solve(ii.matrix(), rhs);
  if (!sol)
    fail(ErrorKind::NotClosed, "coproduct leaves the graded twist");
  LinearMap coproduct(T, tensor(T, T), std::move(sol->particular));
  tw->hopf = make_verified_hopf("C(G)^t", T, std::move(coproduct));
  return tw;
}

} // namespace hopfcheck
