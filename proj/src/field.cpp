#include "fihom/field.hpp"

#include <charconv>
#include <limits>

#include "fihom/category.hpp"

namespace fihom {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p) || p > (1u << 31)) throw ContractViolation("field: characteristic must be a prime below 2^31");
  return {Kind::prime, p};
}

std::string FieldSpec::name() const {
  return kind == Kind::prime ? "F_" + std::to_string(characteristic) : "Q";
}

PrimeField::PrimeField(std::uint32_t p) : p_(FieldSpec::prime(p).characteristic) {}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw ContractViolation("division by zero in F_p");
  // Fermat: a^(p-2)
  std::uint64_t r = 1, b = a;
  std::uint32_t e = p_ - 2;
  while (e) {
    if (e & 1) r = r * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return static_cast<Elem>(r);
}

PrimeField::Elem PrimeField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

namespace {

bool parse_integer(std::string_view s, long long& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

}  // namespace

PrimeField::Elem PrimeField::parse(std::string_view s) const {
  const auto slash = s.find('/');
  long long num = 0, den = 1;
  if (!parse_integer(s.substr(0, slash), num) ||
      (slash != std::string_view::npos && !parse_integer(s.substr(slash + 1), den)))
    throw ParseError("invalid field element '" + std::string(s) + "'");
  if (from_int(den) == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  return mul(from_int(num), inv(from_int(den)));
}

RationalField::Elem RationalField::inv(const Elem& a) const {
  if (a.is_zero()) throw ContractViolation("division by zero in Q");
  return a.inverse();
}

RationalField::Elem RationalField::parse(std::string_view s) const {
  std::string str(s);
  if (!str.empty() && str.front() == '+') str.erase(0, 1);
  const auto slash = str.find('/');
  auto digits_ok = [](std::string_view t) {
    if (!t.empty() && t.front() == '-') t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  if (!digits_ok(std::string_view(str).substr(0, slash)) ||
      (slash != std::string::npos && !digits_ok(std::string_view(str).substr(slash + 1))))
    throw ParseError("invalid rational '" + str + "'");
  mpq_class q;
  q.set_str(str, 10);
  if (slash != std::string::npos && sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + str + "'");
  q.canonicalize();
  return Rational(q);
}

}  // namespace fihom
