#ifndef HOPFCHECK_TESTS_SUPPORT_HPP_
#define HOPFCHECK_TESTS_SUPPORT_HPP_

#include <complex>
#include <random>
#include <string>
#include <vector>

#include "hopfcheck/corep.hpp"
#include "hopfcheck/models.hpp"

namespace hopfcheck::testing {

// ---- values transcribed from the displays, kept apart from the library copies

inline CMatrix m2(CycQ8 a, CycQ8 b, CycQ8 c, CycQ8 d) { return make_matrix({{a, b}, {c, d}}); }

struct Displayed {
  CMatrix u_alpha = m2(0, CycQ8::i(), 1, 0);
  CMatrix u_beta = m2(0, 1, CycQ8::i(), 0);
  CMatrix u_gamma = m2(-1, 0, 0, 1);
  CMatrix w_alpha = m2(-1, 0, 0, 1);
  CMatrix w_beta = m2(0, 1, CycQ8::i(), 0);
  CMatrix w_gamma = m2(0, -CycQ8::i(), -1, 0);
  CMatrix v = m2(-1, 0, 0, CycQ8::i());
};

// u_i = (signs on eps, alpha, beta, gamma) + diag block
inline std::vector<AlgElement> displayed_one_dims(const HopfPtr& kp) {
  const int signs[4][4] = {{1, 1, 1, 1}, {1, -1, -1, 1}, {1, 1, 1, 1}, {1, -1, -1, 1}};
  const int diag[4][2] = {{1, 1}, {1, -1}, {-1, -1}, {-1, 1}};
  std::vector<AlgElement> out;
  for (int k = 0; k < 4; ++k) {
    std::vector<CycQ8> c(8);
    for (int j = 0; j < 4; ++j)
      c[j] = signs[k][j];
    c[4] = diag[k][0];
    c[7] = diag[k][1];
    out.emplace_back(kp->algebra, c);
  }
  return out;
}

inline std::vector<CMatrix> displayed_projections() {
  const CycQ8 h = Rational(1, 2), q = Rational(1, 4);
  return {h * make_matrix({{0, 0, 0, 0}, {0, 1, 1, 0}, {0, 1, 1, 0}, {0, 0, 0, 0}}),
          q * make_matrix({{1, 1, -1, 1}, {1, 1, -1, 1}, {-1, -1, 1, -1}, {1, 1, -1, 1}}),
          h * make_matrix({{1, 0, 0, -1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {-1, 0, 0, 1}}),
          q * make_matrix({{1, -1, 1, 1}, {-1, 1, -1, -1}, {1, -1, 1, 1}, {1, -1, 1, 1}})};
}

// ---- numeric oracle

inline std::complex<double> num(const CycQ8& x) {
  const std::complex<double> z = std::polar(1.0, std::acos(-1.0) / 4);
  std::complex<double> s = 0, p = 1;
  for (int k = 0; k < 4; ++k) {
    s += x.coeff(k).to_double() * p;
    p *= z;
  }
  return s;
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * (1 + std::abs(a) + std::abs(b));
}

// ---- random generators

class Rng {
public:
  explicit Rng(unsigned seed) : g_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(g_); }

  Rational rational(int span = 9) {
    int d = uniform(1, span);
    return Rational(uniform(-span, span), d);
  }
  // Occasionally huge, to exercise the multiprecision path.
  CycQ8 cyc(double zero_p = 0.2) {
    if (coin(zero_p))
      return CycQ8();
    auto r = [&] {
      if (coin(0.05))
        return Rational::parse(std::to_string(uniform(1, 9)) + "000000000000000000000/" +
                               std::to_string(uniform(1, 97)));
      return rational();
    };
    return CycQ8(r(), r(), r(), r());
  }
  AlgElement element(const AlgebraPtr& a, double zero_p = 0.3) {
    std::vector<CycQ8> c(a->dim());
    for (auto& x : c)
      x = cyc(zero_p);
    return AlgElement(a, c);
  }
  LinearMap map(const AlgebraPtr& s, const AlgebraPtr& t, double zero_p = 0.5) {
    CMatrix m(t->dim(), s->dim());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        m(r, c) = coin(zero_p) ? CycQ8() : CycQ8(rational(), rational(), 0, 0);
    return LinearMap(s, t, m);
  }

private:
  std::mt19937 g_;
};

// ---- property suites

struct PropertyResult {
  int cases = 0;
  int failures = 0;
  std::string first;

  bool ok() const { return failures == 0; }
  void record(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures++ == 0)
      first = what;
  }
};

inline PropertyResult field_axioms_property(int cases, unsigned seed = 1) {
  Rng rng(seed);
  PropertyResult r;
  for (int k = 0; k < cases; ++k) {
    CycQ8 a = rng.cyc(), b = rng.cyc(), c = rng.cyc();
    bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * b == b * a &&
              a * (b + c) == a * b + a * c && a + CycQ8() == a && a * CycQ8(1) == a && a - a == CycQ8() &&
              (a * b).conj() == a.conj() * b.conj() && a.conj().conj() == a;
    if (!a.is_zero())
      ok = ok && a * a.inverse() == CycQ8(1) && (b / a) * a == b;
    ok = ok && close(num(a * b), num(a) * num(b)) && close(num(a + b), num(a) + num(b)) &&
         close(num(a.conj()), std::conj(num(a)));
    r.record(ok, "a = " + a.str() + ", b = " + b.str() + ", c = " + c.str());
  }
  return r;
}

inline PropertyResult star_property(int cases, unsigned seed = 2) {
  Rng rng(seed);
  PropertyResult r;
  const AlgebraPtr A = make_algebra({1, 2, 3});
  for (int k = 0; k < cases; ++k) {
    AlgElement x = rng.element(A), y = rng.element(A);
    CycQ8 s = rng.cyc(0);
    bool ok = (x * y).star() == y.star() * x.star() && x.star().star() == x &&
              (x + y).star() == x.star() + y.star() && (s * x).star() == s.conj() * x.star();
    r.record(ok, "x = " + x.str() + ", y = " + y.str());
  }
  return r;
}

inline PropertyResult tensor_functoriality_property(int cases, unsigned seed = 3) {
  Rng rng(seed);
  PropertyResult r;
  const AlgebraPtr A = make_algebra({2});
  const AlgebraPtr C = make_algebra({1, 1});
  const AlgebraPtr B = make_algebra({1, 2});
  for (int k = 0; k < cases; ++k) {
    LinearMap f1 = rng.map(A, B), f2 = rng.map(A, A), g1 = rng.map(C, C), g2 = rng.map(C, C);
    bool ok = tensor_of_maps(f1, g1).after(tensor_of_maps(f2, g2)) == tensor_of_maps(f1.after(f2), g1.after(g2));
    AlgElement x = rng.element(A), y = rng.element(C);
    ok = ok && apply_tensor(f1, g1, tensor(x, y)) == tensor(f1.apply(x), g1.apply(y)) &&
         tensor_of_maps(f1, g1).apply(tensor(x, y)) == tensor(f1.apply(x), g1.apply(y));
    r.record(ok, "case " + std::to_string(k));
  }
  return r;
}

inline Corep direct_sum(const std::vector<Corep>& parts) {
  const HopfPtr& h = parts.front().hopf;
  int n = 0;
  for (const auto& p : parts)
    n += p.size;
  Corep out{h, n, std::vector<AlgElement>(static_cast<std::size_t>(n) * n, AlgElement::zero(h->algebra))};
  int off = 0;
  for (const auto& p : parts) {
    for (int i = 0; i < p.size; ++i)
      for (int j = 0; j < p.size; ++j)
        out.entries[static_cast<std::size_t>(off + i) * n + off + j] = p.at(i, j);
    off += p.size;
  }
  return out;
}

// Random direct sums of the five irreducibles, total size <= 4; the oracle
// is Schur's lemma, dim Hom(U, V) = sum_x m_x(U) m_x(V).
inline PropertyResult intertwiner_symmetry_property(int cases, unsigned seed = 4) {
  Rng rng(seed);
  PropertyResult r;
  const HopfPtr& kp = kp_model().hopf;
  std::vector<Corep> irr;
  for (const auto& u : displayed_one_dims(kp))
    irr.push_back(Corep::one_dim(kp, u));
  irr.push_back(kp_fundamental());
  auto draw = [&](std::vector<int>& mult) {
    std::vector<Corep> parts;
    int size = 0;
    const int target = rng.uniform(1, 4);
    while (size < target) {
      int x = rng.uniform(0, 4);
      if (size + irr[x].size > 4)
        continue;
      parts.push_back(irr[x]);
      ++mult[x];
      size += irr[x].size;
    }
    return direct_sum(parts);
  };
  for (int k = 0; k < cases; ++k) {
    std::vector<int> mu(5, 0), mv(5, 0);
    Corep U = draw(mu), V = draw(mv);
    int expect = 0;
    for (int x = 0; x < 5; ++x)
      expect += mu[x] * mv[x];
    const int uv = intertwiners(U, V).dim(), vu = intertwiners(V, U).dim();
    r.record(uv == vu && uv == expect,
             "case " + std::to_string(k) + ": " + std::to_string(uv) + " vs " + std::to_string(vu) + ", expected " +
                 std::to_string(expect));
  }
  return r;
}

} // namespace hopfcheck::testing

#endif
