#pragma once

// Exact coefficient fields: prime fields F_p and the rationals.
// Both expose the same static interface so the linear algebra and module
// code can be written once as templates.

#include "fihom/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fihom {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FieldSpec {
  enum class Kind { prime, rational };
  Kind kind = Kind::rational;
  std::uint32_t characteristic = 0;

  static FieldSpec prime(std::uint32_t p);
  static FieldSpec rational() { return {}; }
  bool operator==(const FieldSpec&) const = default;
  std::string name() const;
};

bool is_prime(std::uint64_t n);

class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  FieldSpec spec() const { return FieldSpec::prime(p_); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  Elem add(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} + b) % p_); }
  Elem sub(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} + p_ - b) % p_); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} * b) % p_); }
  Elem inv(Elem a) const;
  /// y += c * x
  void addmul(Elem& y, Elem c, Elem x) const {
    y = static_cast<Elem>((y + std::uint64_t{c} * x) % p_);
  }
  Elem from_int(long long v) const;
  std::string to_string(Elem a) const { return std::to_string(a); }
  Elem parse(std::string_view s) const;

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using Elem = Rational;

  std::uint32_t characteristic() const { return 0; }
  FieldSpec spec() const { return FieldSpec::rational(); }

  Elem zero() const { return Elem(); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const;
  void addmul(Elem& y, const Elem& c, const Elem& x) const { y.addmul(c, x); }
  Elem from_int(long long v) const { return Elem(v); }
  std::string to_string(const Elem& a) const { return a.str(); }
  Elem parse(std::string_view s) const;
};

/// Calls `fn(field)` with the concrete field type named by `spec`.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::prime) return fn(PrimeField(spec.characteristic));
  return fn(RationalField{});
}

}  // namespace fihom
