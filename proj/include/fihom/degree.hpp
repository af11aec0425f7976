#pragma once

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace fihom {

/// Integer degrees extended by −∞ (the value of sup ∅).
inline constexpr int kNegInf = std::numeric_limits<int>::min();

constexpr bool is_neg_inf(int d) { return d == kNegInf; }
constexpr int dmax(int a, int b) { return std::max(a, b); }
/// a + b, absorbing −∞.
constexpr int dadd(int a, int b) { return (is_neg_inf(a) || is_neg_inf(b)) ? kNegInf : a + b; }
/// a ≤ b where −∞ is below every integer.
constexpr bool dle(int a, int b) { return is_neg_inf(a) || (!is_neg_inf(b) && a <= b); }
inline std::string degree_string(int d) { return is_neg_inf(d) ? "-inf" : std::to_string(d); }

struct DegreeValue {
  int value = kNegInf;
  bool certified = false;
  bool operator==(const DegreeValue&) const = default;
};

/// Upper bounds on generation degree and relation degree of some
/// presentation of a module. They drive window certification.
struct PresentationBounds {
  int gen = kNegInf;
  int rel = kNegInf;
  bool operator==(const PresentationBounds&) const = default;

  /// Window needed before the top of the socle is visible.
  int torsion_window() const { return dmax(gen, dadd(gen, rel)); }
  /// Upper bound on the torsion degree.
  int torsion_bound() const { return dadd(dadd(gen, rel), -1); }
  /// Window needed to see hd_s for s ≥ 1.
  int homology_window(int s) const { return dmax(gen, dadd(dadd(gen, rel), s - 1)); }
};

/// Raised when a truncation window is too small to certify an answer.
class WindowError : public std::runtime_error {
 public:
  WindowError(const std::string& what, int required, int available)
      : std::runtime_error(what + ": window " + std::to_string(available) + " is too small, need " +
                           std::to_string(required)),
        required_(required),
        available_(available) {}
  int required() const { return required_; }
  int available() const { return available_; }

 private:
  int required_;
  int available_;
};

/// A computed quantity contradicts a proven statement; signals a bug.
class PropertyViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fihom
