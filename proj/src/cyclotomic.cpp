#include "hopfcheck/cyclotomic.hpp"

#include <cmath>
#include <sstream>

#include "hopfcheck/error.hpp"
#include "hopfcheck/linalg.hpp"

namespace hopfcheck {

CycQ8 CycQ8::zeta_pow(int k) {
  k %= 8;
  if (k < 0)
    k += 8;
  CycQ8 r;
  if (k < 4)
    r.c_[k] = 1;
  else
    r.c_[k - 4] = -1;
  return r;
}

CycQ8 CycQ8::conj() const { return CycQ8(c_[0], -c_[3], -c_[2], -c_[1]); }

CycQ8& CycQ8::operator+=(const CycQ8& o) {
  for (int k = 0; k < 4; ++k)
    c_[k] += o.c_[k];
  return *this;
}

CycQ8& CycQ8::operator-=(const CycQ8& o) {
  for (int k = 0; k < 4; ++k)
    c_[k] -= o.c_[k];
  return *this;
}

void CycQ8::add_product(const CycQ8& a, const CycQ8& b) {
  for (int p = 0; p < 4; ++p) {
    if (a.c_[p].is_zero())
      continue;
    for (int q = 0; q < 4; ++q) {
      if (b.c_[q].is_zero())
        continue;
      Rational t = a.c_[p] * b.c_[q];
      int k = p + q;
      if (k < 4)
        c_[k] += t;
      else
        c_[k - 4] -= t;
    }
  }
}

CycQ8 operator*(const CycQ8& a, const CycQ8& b) {
  CycQ8 r;
  r.add_product(a, b);
  return r;
}

CycQ8& CycQ8::operator*=(const CycQ8& o) {
  CycQ8 r;
  r.add_product(*this, o);
  *this = std::move(r);
  return *this;
}

std::array<std::array<Rational, 4>, 4> multiplication_matrix(const CycQ8& x) {
  std::array<std::array<Rational, 4>, 4> m{};
  for (int j = 0; j < 4; ++j) {
    CycQ8 col = x * CycQ8::zeta_pow(j);
    for (int r = 0; r < 4; ++r)
      m[r][j] = col.coeff(r);
  }
  return m;
}

CycQ8 CycQ8::inverse() const {
  if (is_zero())
    fail(ErrorKind::DivisionByZero, "inverse of zero in Q(zeta8)");
  if (is_rational())
    return CycQ8(c_[0].inverse());
  auto mm = multiplication_matrix(*this);
  Matrix<Rational> a(4, 4), rhs(4, 1);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      a(r, c) = mm[r][c];
  rhs(0, 0) = 1;
  auto sol = solve(a, rhs);
  // x != 0 in a field, so the system is nonsingular.
  const Matrix<Rational>& y = sol->particular;
  return CycQ8(y(0, 0), y(1, 0), y(2, 0), y(3, 0));
}

std::complex<double> CycQ8::to_complex() const {
  const double h = std::sqrt(0.5);
  const std::complex<double> z(h, h);
  std::complex<double> acc = 0, p = 1;
  for (int k = 0; k < 4; ++k) {
    acc += c_[k].to_double() * p;
    p *= z;
  }
  return acc;
}

std::string CycQ8::str() const {
  static const char* const names[] = {"", "z", "z^2", "z^3"};
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < 4; ++k) {
    const Rational& a = c_[k];
    if (a.is_zero())
      continue;
    Rational mag = a.sign() < 0 ? -a : a;
    if (first)
      os << (a.sign() < 0 ? "-" : "");
    else
      os << (a.sign() < 0 ? " - " : " + ");
    if (k == 0)
      os << mag.str();
    else if (mag.is_one())
      os << names[k];
    else
      os << mag.str() << "*" << names[k];
    first = false;
  }
  return first ? "0" : os.str();
}

} // namespace hopfcheck
