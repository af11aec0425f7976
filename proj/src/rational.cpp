#include "fihom/rational.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace fihom {

namespace {

using u128 = unsigned __int128;

constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();

u128 gcd128(u128 a, u128 b) {
  while (b) {
    if ((a >> 64) == 0 && (b >> 64) == 0) return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class wide_to_mpz(__int128 v) {
  const bool neg = v < 0;
  u128 u = neg ? -static_cast<u128>(v) : static_cast<u128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::domain_error("zero denominator");
  *this = reduce(n, d);
}

Rational::Rational(const mpq_class& q) { *this = demote(q); }

Rational Rational::reduce(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const u128 g = gcd128(n < 0 ? -static_cast<u128>(n) : static_cast<u128>(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<__int128>(g);
    d /= static_cast<__int128>(g);
  }
  Rational r;
  if (n <= kMax && n >= -kMax && d <= kMax) {
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
  } else {
    r.big_ = std::make_unique<mpq_class>(wide_to_mpz(n), wide_to_mpz(d));
  }
  return r;
}

Rational Rational::demote(mpq_class q) {
  q.canonicalize();
  Rational r;
  // keep the symmetric range so negation never leaves it
  if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t()) &&
      q.get_num() != mpz_class(std::numeric_limits<long>::min())) {
    r.num_ = q.get_num().get_si();
    r.den_ = q.get_den().get_si();
  } else {
    r.big_ = std::make_unique<mpq_class>(std::move(q));
  }
  return r;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t s;
      if (!__builtin_add_overflow(a.num_, b.num_, &s) && s != std::numeric_limits<std::int64_t>::min()) return Rational(s);
    }
    if (a.den_ == b.den_) return Rational::reduce(static_cast<__int128>(a.num_) + b.num_, a.den_);
    return Rational::reduce(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                            static_cast<__int128>(a.den_) * b.den_);
  }
  return Rational::demote(a.to_mpq() + b.to_mpq());
}

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t p;
      if (!__builtin_mul_overflow(a.num_, b.num_, &p) && p != std::numeric_limits<std::int64_t>::min()) return Rational(p);
    }
    return Rational::reduce(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  return Rational::demote(a.to_mpq() * b.to_mpq());
}

Rational Rational::operator-() const {
  if (!big_) {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  return demote(-*big_);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (!big_) return reduce(den_, num_);
  return demote(1 / *big_);
}

void Rational::addmul(const Rational& c, const Rational& x) {
  if (c.is_zero() || x.is_zero()) return;
  *this = *this + c * x;
}

}  // namespace fihom
