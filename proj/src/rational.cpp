#include "hopfcheck/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>

#include "hopfcheck/error.hpp"

namespace hopfcheck {

namespace {

using u128 = unsigned __int128;

constexpr int64_t kMax = std::numeric_limits<int64_t>::max();

u128 uabs(__int128 x) { return x < 0 ? static_cast<u128>(-x) : static_cast<u128>(x); }

u128 gcd128(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0)
    return std::gcd(static_cast<uint64_t>(a), static_cast<uint64_t>(b));
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(__int128 x) {
  bool neg = x < 0;
  u128 m = uabs(x);
  mpz_class hi(static_cast<unsigned long>(static_cast<uint64_t>(m >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<uint64_t>(m)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool fits(const mpz_class& z) {
  return z.fits_slong_p() && z != mpz_class(std::numeric_limits<long>::min());
}

} // namespace

Rational::Rational(long long n) : num_(n), den_(1) {
  if (n == std::numeric_limits<long long>::min())
    assign_reduced(n, 1);
}

Rational::Rational(long long n, long long d) {
  if (d == 0)
    fail(ErrorKind::DivisionByZero, "rational with zero denominator");
  assign_reduced(n, d);
}

Rational::Rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  assign_big(std::move(c));
}

Rational::Rational(const Rational& o)
    : num_(o.num_), den_(o.den_), big_(o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& o) {
  if (this != &o) {
    num_ = o.num_;
    den_ = o.den_;
    big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
  }
  return *this;
}

void Rational::assign_reduced(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  u128 g = gcd128(uabs(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<__int128>(g);
    d /= static_cast<__int128>(g);
  }
  if (n >= -kMax && n <= kMax && d <= kMax) {
    num_ = static_cast<int64_t>(n);
    den_ = static_cast<int64_t>(d);
    big_.reset();
    return;
  }
  mpq_class q(to_mpz(n), to_mpz(d));
  big_ = std::make_unique<mpq_class>(std::move(q));
  num_ = 0;
  den_ = 1;
}

void Rational::assign_big(mpq_class q) {
  if (fits(q.get_num()) && fits(q.get_den())) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
    return;
  }
  big_ = std::make_unique<mpq_class>(std::move(q));
  num_ = 0;
  den_ = 1;
}

Rational Rational::parse(std::string_view s) {
  auto digits = [](std::string_view t) {
    if (t.empty())
      return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        return false;
    return true;
  };
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+'))
    body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits(num) || !digits(den))
    fail(ErrorKind::Parse, "malformed rational '" + std::string(s) + "'");
  mpz_class n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0)
    fail(ErrorKind::DivisionByZero, "rational '" + std::string(s) + "' has zero denominator");
  if (!s.empty() && s.front() == '-')
    n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  Rational r;
  r.assign_big(std::move(q));
  return r;
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_)
    return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_)
    return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

double Rational::to_double() const {
  if (big_)
    return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
  if (big_)
    return big_->get_str();
  if (den_ == 1)
    return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  Rational r;
  if (big_)
    r.assign_big(-*big_);
  else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

Rational Rational::inverse() const {
  if (is_zero())
    fail(ErrorKind::DivisionByZero, "inverse of zero");
  Rational r;
  if (big_) {
    mpq_class q = 1 / *big_;
    r.assign_big(std::move(q));
  } else {
    r.assign_reduced(den_, num_);
  }
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (o.is_zero())
    return *this;
  if (!big_ && !o.big_) {
    if (den_ == o.den_)
      assign_reduced(static_cast<__int128>(num_) + o.num_, den_);
    else
      assign_reduced(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                     static_cast<__int128>(den_) * o.den_);
    return *this;
  }
  assign_big(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (o.is_zero())
    return *this;
  if (!big_ && !o.big_) {
    if (den_ == o.den_)
      assign_reduced(static_cast<__int128>(num_) - o.num_, den_);
    else
      assign_reduced(static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_,
                     static_cast<__int128>(den_) * o.den_);
    return *this;
  }
  assign_big(to_mpq() - o.to_mpq());
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (is_zero())
    return *this;
  if (o.is_zero()) {
    *this = Rational();
    return *this;
  }
  if (!big_ && !o.big_) {
    assign_reduced(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
    return *this;
  }
  assign_big(to_mpq() * o.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_)
    return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_)
    return *a.big_ == *b.big_;
  return false;  // canonical: big values never fit inline
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_)
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  return a.to_mpq() < b.to_mpq();
}

const char* to_string(ErrorKind k) {
  switch (k) {
  case ErrorKind::DivisionByZero: return "division-by-zero";
  case ErrorKind::ShapeMismatch: return "shape-mismatch";
  case ErrorKind::DimensionMismatch: return "dimension-mismatch";
  case ErrorKind::Parse: return "parse-error";
  case ErrorKind::NoSolution: return "no-solution";
  case ErrorKind::NonUnique: return "non-unique";
  case ErrorKind::CapExceeded: return "cap-exceeded";
  case ErrorKind::NotUnitary: return "not-unitary";
  case ErrorKind::NotUnimodular: return "not-unimodular";
  case ErrorKind::NotStable: return "not-stable";
  case ErrorKind::NotInvolutive: return "not-involutive";
  case ErrorKind::NotCentral: return "not-central";
  case ErrorKind::AxiomFailure: return "axiom-failure";
  case ErrorKind::NotClosed: return "not-closed";
  case ErrorKind::ModelMismatch: return "model-mismatch";
  case ErrorKind::Bicharacter: return "bicharacter-axiom-failure";
  case ErrorKind::IncompleteIrreducibles: return "incomplete-irreducible-list";
  case ErrorKind::NoBijection: return "no-bijection-found";
  case ErrorKind::NoneFound: return "none-found";
  case ErrorKind::UnknownCheck: return "unknown-check";
  case ErrorKind::ModelFormat: return "malformed-model";
  case ErrorKind::Io: return "io-error";
  }
  return "error";
}

} // namespace hopfcheck
