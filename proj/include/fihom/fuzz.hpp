#pragma once

// Property battery run on random presentations. Each trial compiles its
// presentation on a window large enough to certify every quantity a check
// uses; Tor is computed on the smaller window it needs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fihom/io.hpp"
#include "fihom/oracle.hpp"
#include "fihom/random.hpp"

namespace fihom {

/// Names of all checks, in report order.
const std::vector<std::string>& property_names();

enum class Outcome { pass, fail, skip };

struct CheckResult {
  std::string name;
  Outcome outcome = Outcome::skip;
  std::string detail;
};

struct BatteryOptions {
  int smax = 3;
  /// Empty means all.
  std::vector<std::string> checks;
  bool tor_fault = false;
  /// Also compare Tor against a resolution with a superfluous summand.
  bool redundant = true;
  /// Largest window a trial may grow to.
  int max_window = 20;
};

struct TrialResult {
  std::vector<CheckResult> checks;
  int window = 0;
  int tor_window = 0;
  /// Set when no window up to max_window sufficed.
  std::optional<std::string> window_error;
  Json invariants;
  Json complex;
  Json growth;
};

TrialResult run_battery(const Presentation& p, const BatteryOptions& opt);

struct Counterexample {
  std::uint64_t seed = 0;
  int trial = 0;
  std::string detail;
  Presentation presentation;
};

struct PropertyVerdict {
  std::string name;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  std::optional<Counterexample> first;
};

struct FuzzConfig {
  std::uint64_t seed = 42;
  int trials = 50;
  RandomProfile profile;
  BatteryOptions battery;
  /// 0: FIHOM_THREADS, else hardware concurrency.
  int threads = 0;
};

struct FuzzReport {
  FuzzConfig config;
  std::vector<PropertyVerdict> verdicts;
  int window_errors = 0;
  std::optional<Counterexample> first_window_error;
  int max_window = 0;

  bool passed() const;
};

/// Window needed by the profile's worst case: Tor and the filtered complex.
struct WindowDemand {
  int tor = 0;
  int complex = 0;
};
WindowDemand window_demand(const RandomProfile& profile, int smax);

int thread_count(int requested);

/// Runs `fn` on p compiled on its own window when it names one; otherwise the
/// window grows from `start` until `fn` stops raising WindowError.
template <class F, class Fn>
auto with_window(const F& f, const Presentation& p, int start, int max_window, Fn fn) {
  if (p.window > 0) return fn(compile(f, p, p.window));
  int w = std::max(start, 1);
  while (true) {
    if (w > max_window) throw WindowError("no window up to the limit suffices", w, max_window);
    try {
      return fn(compile(f, p, w));
    } catch (const WindowError& e) {
      w = std::max(w + 1, e.required());
    }
  }
}
FuzzReport run_fuzz(const FuzzConfig& cfg);

Json to_json(const FuzzReport& r);
Json to_json(const TrialResult& r);

}  // namespace fihom
