#ifndef HOPFCHECK_RATIONAL_HPP_
#define HOPFCHECK_RATIONAL_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hopfcheck {

// Exact rational number in lowest terms with a positive denominator.
//
// Values whose numerator and denominator fit in int64 are stored inline;
// anything larger is promoted to a GMP rational. Results are demoted again
// whenever they fit, so the representation of a value is unique and
// equality can compare fields directly.
class Rational {
public:
  Rational() = default;
  Rational(long long n);  // NOLINT: implicit from integers is intended
  Rational(long long n, long long d);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& o);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  // Accepts "p", "-p", "p/q" with decimal digits of any length.
  static Rational parse(std::string_view s);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;
  bool is_big() const { return static_cast<bool>(big_); }

  mpq_class to_mpq() const;
  double to_double() const;
  // "p/q", or "p" when the denominator is 1.
  std::string str() const;

  Rational operator-() const;
  Rational inverse() const;  // throws Error(DivisionByZero) on zero

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b);

private:
  void assign_reduced(__int128 n, __int128 d);
  void assign_big(mpq_class q);

  int64_t num_ = 0;
  int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

} // namespace hopfcheck

#endif
