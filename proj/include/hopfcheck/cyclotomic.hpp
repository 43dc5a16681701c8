#ifndef HOPFCHECK_CYCLOTOMIC_HPP_
#define HOPFCHECK_CYCLOTOMIC_HPP_

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "hopfcheck/rational.hpp"

namespace hopfcheck {

// Element a0 + a1 z + a2 z^2 + a3 z^3 of Q(z), z a primitive 8th root of
// unity (z^4 = -1). The power basis is a Q-basis, so coefficients are the
// canonical form and equality is component-wise.
//
// Useful constants: i = z^2, sqrt(2) = z - z^3, 1/sqrt(2) = (z - z^3)/2.
class CycQ8 {
public:
  CycQ8() = default;
  CycQ8(long long n) : c_{Rational(n), {}, {}, {}} {}  // NOLINT
  CycQ8(Rational r) : c_{std::move(r), {}, {}, {}} {}  // NOLINT
  CycQ8(Rational a0, Rational a1, Rational a2, Rational a3)
      : c_{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {}

  static CycQ8 zeta() { return CycQ8(0, 1, 0, 0); }
  static CycQ8 i() { return CycQ8(0, 0, 1, 0); }
  static CycQ8 sqrt2() { return CycQ8(0, 1, 0, -1); }
  static CycQ8 inv_sqrt2() { return CycQ8(0, Rational(1, 2), 0, Rational(-1, 2)); }
  // z^k for any integer k.
  static CycQ8 zeta_pow(int k);

  const Rational& coeff(int k) const { return c_[k]; }
  const std::array<Rational, 4>& coeffs() const { return c_; }

  bool is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
  }
  bool is_one() const { return c_[0].is_one() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }
  bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

  // Complex conjugation, z -> z^-1 = -z^3.
  CycQ8 conj() const;
  // Multiplicative inverse by exact solve of the 4x4 multiplication-by-x system.
  CycQ8 inverse() const;
  // Embedding z -> exp(i pi/4). Display and debugging only.
  std::complex<double> to_complex() const;
  // Human-readable, e.g. "1/2 - z^2".
  std::string str() const;

  CycQ8 operator-() const { return CycQ8(-c_[0], -c_[1], -c_[2], -c_[3]); }
  CycQ8& operator+=(const CycQ8& o);
  CycQ8& operator-=(const CycQ8& o);
  CycQ8& operator*=(const CycQ8& o);
  CycQ8& operator/=(const CycQ8& o) { return *this *= o.inverse(); }
  // this += a * b without a temporary.
  void add_product(const CycQ8& a, const CycQ8& b);

  friend CycQ8 operator+(CycQ8 a, const CycQ8& b) { return a += b; }
  friend CycQ8 operator-(CycQ8 a, const CycQ8& b) { return a -= b; }
  friend CycQ8 operator*(const CycQ8& a, const CycQ8& b);
  friend CycQ8 operator/(CycQ8 a, const CycQ8& b) { return a /= b; }
  friend bool operator==(const CycQ8& a, const CycQ8& b) { return a.c_ == b.c_; }

private:
  std::array<Rational, 4> c_{};
};

// CycQ8 multiplication-by-x matrix over Q: column j holds x * z^j.
std::array<std::array<Rational, 4>, 4> multiplication_matrix(const CycQ8& x);

} // namespace hopfcheck

#endif
