#pragma once

// Exact rationals stored as a reduced int64 fraction while they fit, with a
// GMP fallback. Almost every entry met in practice is small, and avoiding an
// allocation per entry is what makes Q usable at fuzz scale.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>

namespace fihom {

class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT: integers convert implicitly
  Rational(long long n, long long d);
  explicit Rational(const mpq_class& q);
  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  bool is_small() const { return !big_; }
  bool is_zero() const { return !big_ && num_ == 0; }
  int sign() const { return big_ ? sgn(*big_) : (num_ > 0) - (num_ < 0); }
  mpq_class to_mpq() const;
  std::string str() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    // values that fit are never stored big
    if (!a.big_ || !b.big_) return false;
    return *a.big_ == *b.big_;
  }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
  Rational operator-() const;
  Rational inverse() const;
  /// *this += c·x
  void addmul(const Rational& c, const Rational& x);

 private:
  static Rational reduce(__int128 n, __int128 d);
  static Rational demote(mpq_class q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace fihom
