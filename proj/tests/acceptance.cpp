// End-to-end acceptance run: the fuzz corpus over F_101 and Q, the fixtures,
// the oracles and the command-line determinism contract. One line per
// criterion; exit status is the number of failed criteria.
//
// usage: acceptance <fihom> <fihom_faulty> <data-dir>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include "fihom/fuzz.hpp"
#include "fixtures.hpp"

using namespace fihom;
namespace fs = std::filesystem;

namespace {

struct Tally {
  int passed = 0, failed = 0, skipped = 0;
  std::string first;
};

std::map<std::string, Tally> tally;
int window_errors = 0;
int failures = 0;

void absorb(const FuzzReport& r, const std::string& label) {
  window_errors += r.window_errors;
  for (const auto& v : r.verdicts) {
    auto& t = tally[v.name];
    t.passed += v.passed;
    t.failed += v.failed;
    t.skipped += v.skipped;
    if (v.first && t.first.empty())
      t.first = label + " trial " + std::to_string(v.first->trial) + ": " + v.first->detail;
  }
}

/// Zero failures, no window errors, and at least `min_passed` trials that
/// actually exercised the property.
bool clean(const std::string& name, int min_passed, std::string& msg) {
  const auto& t = tally[name];
  msg += name + " " + std::to_string(t.passed) + " pass/" + std::to_string(t.failed) + " fail/" + std::to_string(t.skipped) +
         " skip";
  if (!t.first.empty()) msg += " [" + t.first + "]";
  msg += "; ";
  return t.failed == 0 && t.passed >= min_passed && window_errors == 0;
}

void report(const std::string& title, bool ok, const std::string& msg) {
  std::cout << (ok ? "PASS " : "FAIL ") << title << ": " << msg << std::endl;
  if (!ok) ++failures;
}

int run(const std::string& cmd) {
  const int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

}  // namespace

int main(int argc, char** argv) {
  if (argc != 4) {
    std::cerr << "usage: acceptance <fihom> <fihom_faulty> <data-dir>\n";
    return 2;
  }
  const std::string cli = argv[1], faulty = argv[2];
  const fs::path data = argv[3];
  const auto t0 = std::chrono::steady_clock::now();

  FuzzConfig fp;
  fp.seed = 42;
  fp.trials = 200;
  fp.profile.field = FieldSpec::prime(101);
  FuzzConfig fq = fp;
  fq.trials = 100;
  fq.profile.field = FieldSpec::rational();
  const auto rp = run_fuzz(fp);
  const auto rq = run_fuzz(fq);
  absorb(rp, "F_101");
  absorb(rq, "Q");
  const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << "corpus: 200 trials over F_101, 100 over Q, |G| <= 2, gmax 2, rmax 3, smax 3; max window "
            << std::max(rp.max_window, rq.max_window) << ", " << window_errors << " window errors, " << static_cast<int>(secs)
            << "s" << std::endl;

  const PrimeField f101(101);

  {
    std::string msg;
    bool ok = clean("torsion-regularity", 300, msg);
    const auto r = invariant_report(compile(f101, fixtures::k0(), 4), 1);
    const bool eq = r.td.value == 0 && r.gd.value == 0 && r.hd[1].value == 1 && r.td.certified && r.hd[1].certified;
    msg += std::string("k0: td ") + degree_string(r.td.value) + " = gd + hd1 - 1 = " +
           degree_string(dadd(dadd(r.gd.value, r.hd[1].value), -1));
    report("torsion degree bounded by gd + hd1 - 1", ok && eq, msg);
  }
  {
    std::string msg;
    const bool a = clean("homology-regularity", 300, msg);
    const bool b = clean("homology-max-bound", 300, msg);
    report("homological degrees bounded for s = 1..3", a && b, msg);
  }
  {
    std::string msg;
    report("derivative, kernel and four-term exactness", clean("derivative-kernel", 300, msg), msg);
  }
  {
    std::string msg;
    report("td(V) = td(K) = gd(K)", clean("socle-degree", 300, msg), msg);
  }
  {
    std::string msg;
    report("filtered complex homology and length", clean("complex-homology", 300, msg), msg);
  }
  {
    std::string msg;
    report("derived regularity bounded by max(td, 2gd - 2)", clean("derived-regularity", 300, msg), msg);
  }
  {
    std::string msg;
    report("large shifts are filtered with a structural witness", clean("shift-filtered", 300, msg), msg);
  }
  {
    std::string msg;
    bool ok = clean("hilbert-polynomial", 300, msg);
    const char* want[] = {"1", "X", "X^2 - X"};
    for (int m = 0; m <= 2; ++m) {
      const auto g = fit_polynomial(compile(f101, fixtures::free_on(m), 7));
      ok = ok && g.poly.to_string() == want[m];
      msg += "M(" + std::to_string(m) + ") -> " + g.poly.to_string() + (m < 2 ? ", " : "");
    }
    report("Hilbert polynomial past the stable range", ok, msg);
  }
  {
    std::string msg;
    bool ok = clean("filtered-acyclic", 50, msg);
    ok = clean("torsion-homology", 50, msg) && ok;
    ok = clean("finite-pd-filtered", 50, msg) && ok;
    // free modules over several groups, including a modular case
    int free_checked = 0;
    bool free_ok = true;
    for (int q = 1; q <= 3; ++q)
      for (int m = 0; m <= 2; ++m) {
        const auto p = fixtures::free_on(m, FieldSpec::prime(101), FiniteGroup::cyclic(q));
        const auto r = invariant_report(compile(f101, p, required_window(p.bounds(), 3)), 3);
        for (int s = 1; s <= 3; ++s) free_ok = free_ok && top_support(r.tor[s]) == kNegInf;
        ++free_checked;
      }
    const PrimeField f2(2);
    const auto p2 = fixtures::free_on(1, FieldSpec::prime(2), FiniteGroup::cyclic(2));
    const auto r2 = invariant_report(compile(f2, p2, required_window(p2.bounds(), 3)), 3);
    for (int s = 1; s <= 3; ++s) free_ok = free_ok && top_support(r2.tor[s]) == kNegInf;
    ++free_checked;
    msg += std::to_string(free_checked) + " free modules acyclic: " + (free_ok ? "yes" : "no");
    report("imported cross-checks", ok && free_ok, msg);
  }
  {
    std::string msg;
    bool ok = clean("resolution-independence", 50, msg);
    ok = clean("brute-force-oracle", 20, msg) && ok;
    report("oracle equivalence", ok, msg);
  }
  {
    const auto tmp = fs::temp_directory_path() / ("fihom-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(tmp);
    const auto a = tmp / "a.json", b = tmp / "b.json";
    const int ea = run(quote(cli) + " fuzz --seed 42 --out " + quote(a) + " 2>/dev/null");
    const int eb = run(quote(cli) + " fuzz --seed 42 --threads 2 --out " + quote(b) + " 2>/dev/null");
    const bool same = fs::exists(a) && slurp(a) == slurp(b) && !slurp(a).empty();
    const auto ce = (data / "counterexample.json").string();
    const int ef = run(quote(faulty) + " check --input " + quote(ce) + " >/dev/null 2>&1");
    const int en = run(quote(cli) + " check --input " + quote(ce) + " >/dev/null 2>&1");
    fs::remove_all(tmp);
    const std::string msg = "fuzz --seed 42 exits " + std::to_string(ea) + "/" + std::to_string(eb) + ", reports " +
                            (same ? "byte-identical" : "DIFFER") + "; counterexample exits " + std::to_string(ef) +
                            " (faulty build), " + std::to_string(en) + " (normal build)";
    report("determinism and published counterexample", ea == 0 && eb == 0 && same && ef == 1 && en == 0, msg);
  }
  return failures;
}
