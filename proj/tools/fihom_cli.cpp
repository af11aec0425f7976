// fihom: invariants, filtered complexes, growth and the property battery for
// finitely presented FI_G-modules.
//
// Exit codes: 0 success, 1 a property failed, 2 invalid input, 3 window too small.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "fihom/fuzz.hpp"

using namespace fihom;

namespace {

#ifdef FIHOM_TOR_FAULT
constexpr bool kTorFault = true;
#else
constexpr bool kTorFault = false;
#endif

enum Exit { ok = 0, falsified = 1, invalid = 2, window = 3 };

struct Output {
  std::string path;
  std::string format = "json";

  void emit(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError(path + ": cannot write");
    out << text;
  }
  bool csv() const { return format == "csv"; }
};

void add_output(CLI::App* cmd, Output& o) {
  cmd->add_option("--out", o.path, "Write the report here instead of stdout");
  cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
}

void note(const std::string& s) { std::cerr << "fihom: " << s << "\n"; }

FieldSpec parse_field(const std::string& s) {
  if (s == "p") return FieldSpec::prime(101);
  return field_from_json(Json(s), "--field");
}

std::vector<std::string> parse_checks(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    const auto& names = property_names();
    if (std::find(names.begin(), names.end(), item) == names.end()) throw ParseError("--checks: unknown property '" + item + "'");
    out.push_back(item);
  }
  return out;
}

Json module_json(Presentation p, int window) {
  p.window = window;
  return to_json(p);
}

std::string check_csv(const std::vector<CheckResult>& checks) {
  std::string out = "property,outcome,detail\n";
  for (const auto& c : checks) {
    const char* o = c.outcome == Outcome::pass ? "pass" : c.outcome == Outcome::fail ? "fail" : "skip";
    std::string d = c.detail;
    std::replace(d.begin(), d.end(), '"', '\'');
    out += c.name + "," + o + ",\"" + d + "\"\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homological invariants of finitely presented FI_G-modules"};
  app.require_subcommand(1);

  std::string input;
  int smax = 3;
  int max_window = 20;
  bool allow_uncertified = false;
  Output out;

  auto* inv = app.add_subcommand("invariants", "gd, td, hd_s and Tor dimensions");
  inv->add_option("--input", input, "Presentation JSON")->required();
  inv->add_option("--smax", smax, "Largest homological degree")->check(CLI::Range(0, 12));
  inv->add_flag("--allow-uncertified", allow_uncertified, "Report values the window cannot certify");
  add_output(inv, out);

  auto* cpx = app.add_subcommand("complex", "Finite complex of filtered modules");
  cpx->add_option("--input", input, "Presentation JSON")->required();
  cpx->add_option("--max-window", max_window, "Largest window tried when the file names none");
  add_output(cpx, out);

  auto* gro = app.add_subcommand("growth", "Hilbert polynomial and stable range");
  gro->add_option("--input", input, "Presentation JSON")->required();
  gro->add_option("--max-window", max_window, "Largest window tried when the file names none");
  add_output(gro, out);

  FuzzConfig fz;
  std::string field = "p", checks;
  auto* fuz = app.add_subcommand("fuzz", "Property battery on random presentations");
  fuz->add_option("--seed", fz.seed, "RNG seed");
  fuz->add_option("--trials", fz.trials, "Number of presentations")->check(CLI::NonNegativeNumber);
  fuz->add_option("--field", field, "p (F_101), q (Q), or F_<prime>");
  fuz->add_option("--group-order", fz.profile.max_group_order, "|G| is drawn from 1..K")->check(CLI::Range(1, 6));
  fuz->add_option("--gmax", fz.profile.gmax, "Largest generator degree")->check(CLI::Range(0, 6));
  fuz->add_option("--genmax", fz.profile.genmax, "Largest generator count")->check(CLI::Range(1, 6));
  fuz->add_option("--rmax", fz.profile.rmax, "Largest relation degree")->check(CLI::Range(0, 8));
  fuz->add_option("--relmax", fz.profile.relmax, "Largest relation count")->check(CLI::Range(0, 8));
  fuz->add_option("--smax", fz.battery.smax, "Largest homological degree")->check(CLI::Range(1, 6));
  fuz->add_option("--checks", checks, "Comma-separated property names (default all)");
  fuz->add_option("--threads", fz.threads, "Worker threads (default FIHOM_THREADS or all cores)");
  fuz->add_option("--max-window", fz.battery.max_window, "Largest window a trial may use");
  add_output(fuz, out);

  auto* chk = app.add_subcommand("check", "Property battery on one presentation");
  chk->add_option("--input", input, "Presentation JSON")->required();
  chk->add_option("--smax", smax, "Largest homological degree")->check(CLI::Range(1, 6));
  chk->add_option("--checks", checks, "Comma-separated property names (default all)");
  chk->add_option("--max-window", max_window, "Largest window tried");
  add_output(chk, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? ok : invalid;
  }

  try {
    if (inv->parsed()) {
      const auto p = read_presentation_file(input);
      const int need = required_window(p.bounds(), smax);
      const int w = p.window > 0 ? p.window : need;
      note("window demand " + std::to_string(need) + ", using " + std::to_string(w));
      return with_field(p.field, [&](const auto& f) {
        InvariantOptions io;
        io.allow_uncertified = allow_uncertified;
        io.tor_fault = kTorFault;
        const auto rep = invariant_report(compile(f, p, w), smax, io);
        if (out.csv())
          out.emit(dims_csv(rep.dims, rep.tor));
        else
          out.emit(dump(Json{{"module", module_json(p, w)}, {"invariants", to_json(rep)}}));
        return ok;
      });
    }

    if (cpx->parsed() || gro->parsed()) {
      const auto p = read_presentation_file(input);
      const auto b = p.bounds();
      const int tw = dmax(0, b.torsion_window());
      note("window demand " + std::to_string(complex_window_demand(b)) + " a priori" +
           (p.window > 0 ? ", using " + std::to_string(p.window) : ", growing from " + std::to_string(tw)));
      return with_field(p.field, [&](const auto& f) {
        if (cpx->parsed()) {
          const auto c = with_window(f, p, tw, max_window, [](const auto& v) { return filtered_complex(v); });
          if (out.csv()) {
            std::string s = "term,degree,dim\n";
            for (std::size_t k = 0; k < c.terms.size(); ++k)
              for (int n = 0; n <= c.terms[k].window; ++n)
                s += std::to_string(-static_cast<int>(k) - 1) + "," + std::to_string(n) + "," + std::to_string(c.terms[k].dims[n]) + "\n";
            out.emit(s);
          } else {
            out.emit(dump(Json{{"module", module_json(p, c.V.window)}, {"complex", to_json(c)}}));
          }
        } else {
          std::vector<int> dims;
          int used = 0;
          const auto g = with_window(f, p, tw, max_window, [&](const auto& v) {
            auto r = fit_polynomial(v);
            dims = v.dims;
            used = v.window;
            return r;
          });
          if (out.csv())
            out.emit(growth_csv(dims, g));
          else
            out.emit(dump(Json{{"module", module_json(p, used)}, {"growth", to_json(g)}}));
        }
        return ok;
      });
    }

    if (fuz->parsed()) {
      fz.profile.field = parse_field(field);
      fz.battery.checks = parse_checks(checks);
      fz.battery.tor_fault = kTorFault;
      const auto d = window_demand(fz.profile, fz.battery.smax);
      note("window demand: Tor " + std::to_string(d.tor) + ", complex " + std::to_string(d.complex) + " a priori; " +
           std::to_string(thread_count(fz.threads)) + " thread(s)");
      const auto r = run_fuzz(fz);
      if (out.csv()) {
        std::string s = "property,passed,failed,skipped\n";
        for (const auto& v : r.verdicts)
          s += v.name + "," + std::to_string(v.passed) + "," + std::to_string(v.failed) + "," + std::to_string(v.skipped) + "\n";
        out.emit(s);
      } else {
        out.emit(dump(to_json(r)));
      }
      for (const auto& v : r.verdicts)
        if (v.failed) {
          note(v.name + " failed on trial " + std::to_string(v.first->trial) + ": " + v.first->detail);
          return falsified;
        }
      if (r.window_errors) {
        note(std::to_string(r.window_errors) + " trial(s) exceeded --max-window");
        return window;
      }
      return ok;
    }

    if (chk->parsed()) {
      const auto p = read_presentation_file(input);
      BatteryOptions opt;
      opt.smax = smax;
      opt.checks = parse_checks(checks);
      opt.tor_fault = kTorFault;
      opt.max_window = max_window;
      const auto r = run_battery(p, opt);
      if (out.csv()) {
        out.emit(check_csv(r.checks));
      } else {
        auto j = to_json(r);
        Json report{{"module", module_json(p, r.window)}};
        for (auto it = j.begin(); it != j.end(); ++it) report[it.key()] = it.value();
        out.emit(dump(report));
      }
      if (r.window_error) {
        note(*r.window_error);
        return window;
      }
      for (const auto& c : r.checks)
        if (c.outcome == Outcome::fail) {
          note(c.name + ": " + c.detail);
          return falsified;
        }
      return ok;
    }
  } catch (const ParseError& e) {
    note(std::string("invalid input: ") + e.what());
    return invalid;
  } catch (const WindowError& e) {
    note(e.what());
    return window;
  } catch (const PropertyViolation& e) {
    note(e.what());
    return falsified;
  } catch (const ContractViolation& e) {
    note(std::string("invalid input: ") + e.what());
    return invalid;
  }
  return ok;
}
