#include "fihom/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <set>
#include <thread>

namespace fihom {

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = {
      "torsion-regularity",  "homology-regularity", "homology-max-bound", "relation-bound",
      "h0-consistency",      "derivative-kernel",   "socle-degree",       "complex-homology",
      "derived-regularity",  "shift-filtered",      "hilbert-polynomial", "torsion-homology",
      "finite-pd-filtered",  "filtered-acyclic",    "resolution-independence", "brute-force-oracle"};
  return names;
}

namespace {

std::string ds(int d) { return degree_string(d); }

class Recorder {
 public:
  Recorder(const BatteryOptions& opt, std::vector<CheckResult>& out) : opt_(opt), out_(out) {}

  bool enabled(const std::string& name) const {
    return opt_.checks.empty() || std::find(opt_.checks.begin(), opt_.checks.end(), name) != opt_.checks.end();
  }
  /// Records the first failure only; later calls for a failed check are ignored.
  void check(const std::string& name, bool ok, const std::string& detail) {
    auto& r = slot(name);
    if (r.outcome == Outcome::fail) return;
    if (!ok) {
      r.outcome = Outcome::fail;
      r.detail = detail;
    } else {
      r.outcome = Outcome::pass;
    }
  }
  void skip(const std::string& name, const std::string& why) {
    auto& r = slot(name);
    if (r.outcome == Outcome::skip) r.detail = why;
  }

 private:
  CheckResult& slot(const std::string& name) {
    for (auto& r : out_)
      if (r.name == name) return r;
    out_.push_back({name, Outcome::skip, ""});
    return out_.back();
  }
  const BatteryOptions& opt_;
  std::vector<CheckResult>& out_;
};

/// Everything that needs the large window, computed together so a window
/// error restarts the whole set.
template <class F>
struct Large {
  DegreewiseModule<F> V;
  DegreeValue gd, td;
  std::optional<FilteredComplex<F>> complex;
  std::string complex_error;
  std::optional<GrowthReport> growth;
  std::string growth_error;
  int shift = 0;
  FilteredVerdict<F> shifted;
};

template <class F>
Large<F> compute_large(const F& f, const Presentation& p, int w) {
  Large<F> L{compile(f, p, w), {}, {}, {}, {}, {}, {}, 0, {}};
  const auto& b = *L.V.bounds;
  const int tw = dmax(0, b.torsion_window());
  // socle checks look one degree past the torsion window
  if (w < tw + 1) throw WindowError("socle checks", tw + 1, w);
  L.gd = generating_degree(L.V);
  L.td = torsion_degree(L.V);
  try {
    L.complex = filtered_complex(L.V);
  } catch (const PropertyViolation& e) {
    L.complex_error = e.what();
  }
  try {
    L.growth = fit_polynomial(L.V);
  } catch (const PropertyViolation& e) {
    L.growth_error = e.what();
  }
  L.shift = stage_shift(L.td.value, L.gd.value);
  if (L.shift + tw > w) throw WindowError("shifted module", L.shift + tw, w);
  L.shifted = is_filtered(shift(L.V, L.shift));
  return L;
}

template <class F>
void check_large(const Large<F>& L, const Presentation& p, Recorder& rec) {
  const auto& f = L.V.field;
  const auto& V = L.V;
  const int gd = L.gd.value, td = L.td.value;

  if (rec.enabled("derivative-kernel")) {
    const auto D = derivative(V);
    const int gdd = generating_degree(D).value;
    if (dle(gd, 0))
      rec.check("derivative-kernel", D.is_zero(), "gd(V) = " + ds(gd) + " but DV ≠ 0");
    else
      rec.check("derivative-kernel", gdd == gd - 1, "gd(DV) = " + ds(gdd) + ", gd(V) = " + ds(gd));
    const auto K = torsion_kernel(V).module;
    for (int n = 0; n < V.window; ++n) {
      const int alt = K.dims[n] - V.dims[n] + V.dims[n + 1] - D.dims[n];
      rec.check("derivative-kernel", alt == 0, "0 -> K -> V -> ΣV -> DV -> 0 not exact at degree " + std::to_string(n));
      // every morphism n -> n+1 kills ker φ_n; the standard one is among them
      const auto ker = kernel_basis(f, V.structmaps[n].to_dense(f));
      if (ker.cols() == 0) continue;
      const auto total = hom_set_size(n, n + 1, V.group.order());
      Rng rng(0x50c1e + static_cast<std::uint64_t>(n));
      const std::int64_t samples = std::min<std::int64_t>(total, 64);
      for (std::int64_t i = 0; i < samples; ++i) {
        const auto rank = total <= 64 ? i : static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(total)));
        const auto alpha = hom_unrank(rank, n, n + 1, V.group.order());
        for (int c = 0; c < ker.cols(); ++c) {
          const auto img = V.apply_morphism(alpha, ker.column(c));
          const bool zero = std::all_of(img.begin(), img.end(), [&](const auto& x) { return f.is_zero(x); });
          rec.check("derivative-kernel", zero, "ker φ_" + std::to_string(n) + " not killed by every morphism");
        }
      }
    }
  }

  if (rec.enabled("socle-degree")) {
    const auto K = torsion_kernel(V).module;
    const int tdk = torsion_degree(K).value;
    const int gdk = generating_degree(K).value;
    rec.check("socle-degree", td == tdk && td == gdk, "td(V) = " + ds(td) + ", td(K) = " + ds(tdk) + ", gd(K) = " + ds(gdk));
  }

  if (rec.enabled("complex-homology") || rec.enabled("derived-regularity")) {
    if (!L.complex) {
      rec.check("complex-homology", false, L.complex_error);
    } else {
      const auto& c = *L.complex;
      const auto issues = complex_issues(c);
      rec.check("complex-homology", issues.empty(), issues.empty() ? "" : issues.front());
      rec.check("complex-homology", c.homologies.front().td.value == td,
                "td(H_-1) = " + ds(c.homologies.front().td.value) + " ≠ td(V) = " + ds(td));
      rec.check("complex-homology", c.length() == 0 || dle(c.length() - 1, gd),
                std::to_string(c.length()) + " filtered terms but gd(V) = " + ds(gd));
      for (std::size_t k = 1; k < c.homologies.size(); ++k) {
        const int i = c.homologies[k].index;
        const int bound = is_neg_inf(gd) ? kNegInf : 2 * gd + 2 * i + 2;
        rec.check("complex-homology", dle(c.homologies[k].td.value, bound),
                  "td(H_" + std::to_string(i) + ") = " + ds(c.homologies[k].td.value) + " > " + ds(bound));
      }
      for (std::size_t k = 0; k < c.stage_gd.size(); ++k)
        rec.check("complex-homology", dle(c.stage_gd[k].value, dadd(gd, -static_cast<int>(k))),
                  "gd(V^-" + std::to_string(k) + ") = " + ds(c.stage_gd[k].value));
      const int bound = dmax(td, is_neg_inf(gd) ? kNegInf : 2 * gd - 2);
      rec.check("derived-regularity", dle(c.derived_regularity.value, bound),
                "derived regularity " + ds(c.derived_regularity.value) + " > " + ds(bound));
    }
  }

  if (rec.enabled("shift-filtered"))
    rec.check("shift-filtered", L.shifted.filtered && L.shifted.certified,
              "Σ_" + std::to_string(L.shift) + " V: layer " + ds(L.shifted.layer_degree) + " breaks at degree " +
                  ds(L.shifted.failing_degree) + " (expected " + std::to_string(L.shifted.expected) + ", found " +
                  std::to_string(L.shifted.found) + ")");

  if (rec.enabled("hilbert-polynomial")) {
    if (!L.growth)
      rec.check("hilbert-polynomial", false, L.growth_error);
    else
      rec.check("hilbert-polynomial", dle(L.growth->poly.degree(), gd),
                "polynomial " + L.growth->poly.to_string() + " has degree above gd = " + ds(gd));
  }

  if (rec.enabled("brute-force-oracle")) {
    if (V.group.order() != 1) {
      rec.skip("brute-force-oracle", "nontrivial group");
    } else {
      const auto small = truncate(V, std::min(V.window, 6));
      rec.check("brute-force-oracle", brute_h0_dims(small) == h0_dims(small), "H_0 dimensions differ from enumeration");
      rec.check("brute-force-oracle", brute_socle_dims(small) == torsion_kernel(small).module.dims,
                "socle dimensions differ from enumeration");
    }
  }
  (void)p;
}

/// A resolution that stops at P_s on a truncation only shows H_{s+1} = 0 up to
/// the window; pd = s is certified once the window reaches the H_{s+1} window.
template <class F>
std::optional<int> certified_pd(const DegreewiseModule<F>& v, const InvariantReport& rep, int smax) {
  const auto& b = *v.bounds;
  auto pd = rep.projective_dimension;
  int w = rep.window;
  while (pd) {
    const int need = required_window(b, *pd + 1);
    if (need <= w) return pd;
    if (need > v.window) return std::nullopt;
    w = need;
    pd = projective_dimension(resolve(truncate(v, w), {std::max(smax, *pd) + 1, CoverMode::automatic, false}));
  }
  return std::nullopt;
}

template <class F>
void check_tor(const Large<F>& L, const Presentation& p, const BatteryOptions& opt, TrialResult& tr, Recorder& rec) {
  const auto& f = L.V.field;
  const int smax = opt.smax;
  const auto Vt = truncate(L.V, tr.tor_window);
  InvariantOptions io;
  io.tor_fault = opt.tor_fault;
  const auto rep = invariant_report(Vt, smax, io);
  tr.invariants = to_json(rep);
  const int gd = L.gd.value, td = L.td.value;
  const int hd1 = rep.hd[1].value;

  rec.check("h0-consistency", rep.hd[0].value == gd, "H_0 from the resolution tops out at " + ds(rep.hd[0].value) + ", gd = " + ds(gd));
  rec.check("torsion-regularity", dle(td, dadd(dadd(gd, hd1), -1)),
            "td = " + ds(td) + " > gd + hd1 - 1 = " + ds(dadd(dadd(gd, hd1), -1)));
  for (int s = 1; s <= smax; ++s) {
    const int hs = rep.hd[s].value;
    const int b1 = dadd(dadd(gd, hd1), s - 1);
    rec.check("homology-regularity", dle(hs, b1), "hd_" + std::to_string(s) + " = " + ds(hs) + " > " + ds(b1));
    const int b2 = dadd(dmax(td, is_neg_inf(gd) ? kNegInf : 2 * gd - 1), s);
    rec.check("homology-max-bound", dle(hs, b2), "hd_" + std::to_string(s) + " = " + ds(hs) + " > " + ds(b2));
  }
  rec.check("relation-bound", dle(hd1, p.bounds().rel), "hd1 = " + ds(hd1) + " above the top relation degree");

  if (rec.enabled("torsion-homology")) {
    if (L.complex && L.complex->terms.empty()) {
      for (int s = 1; s <= smax; ++s)
        rec.check("torsion-homology", dle(rep.hd[s].value, dadd(td, s)),
                  "torsion module with hd_" + std::to_string(s) + " = " + ds(rep.hd[s].value) + " > td + s");
    } else {
      rec.skip("torsion-homology", "module is not torsion");
    }
  }

  if (rec.enabled("finite-pd-filtered")) {
    if (const auto pd = certified_pd(L.V, rep, smax)) {
      const auto v = is_filtered(L.V);
      rec.check("finite-pd-filtered", v.filtered && v.certified, "pd = " + std::to_string(*pd) + " but not filtered");
    } else {
      rec.skip("finite-pd-filtered", "no certified finite projective dimension");
    }
  }

  if (rec.enabled("filtered-acyclic")) {
    std::vector<const Representation<F>*> layers;
    if (L.complex)
      for (const auto& fl : L.complex->filtrations)
        for (const auto& l : fl) layers.push_back(&l);
    if (L.shifted.filtered)
      for (const auto& l : L.shifted.layers) layers.push_back(&l);
    std::set<std::pair<int, int>> seen;
    for (const auto* l : layers) {
      if (!seen.insert({l->degree, l->dim}).second) continue;
      const int q = L.V.group.order();
      const PresentationBounds b{l->degree, semisimple_through(f.characteristic(), q, l->degree) ? kNegInf : l->degree};
      const int w = required_window(b, smax);
      auto basic = basic_filtered(f, L.V.group, *l, w);
      const auto res = resolve(basic, {smax + 1, CoverMode::automatic, false});
      const auto tor = tor_dims(res);
      for (int s = 1; s <= smax; ++s)
        rec.check("filtered-acyclic", top_support(tor[s]) == kNegInf,
                  "H_" + std::to_string(s) + " of a basic filtered module in degree " + std::to_string(l->degree) + " is nonzero");
    }
    if (layers.empty()) rec.skip("filtered-acyclic", "no filtered layers");
  }

  if (rec.enabled("resolution-independence") && opt.redundant) {
    const auto res = resolve(Vt, {smax + 1, CoverMode::automatic, true});
    auto tor = tor_dims(res);
    rec.check("resolution-independence", tor == rep.tor, "Tor differs between the minimal and a redundant resolution");
  }
}

template <class F>
TrialResult battery(const F& f, const Presentation& p0, const BatteryOptions& opt) {
  TrialResult tr;
  Recorder rec(opt, tr.checks);
  for (const auto& n : property_names())
    if (rec.enabled(n)) rec.skip(n, "");
  Presentation p = p0;
  const auto b = p.bounds();
  tr.tor_window = required_window(b, opt.smax);
  int w = std::max(tr.tor_window, 1);
  std::optional<Large<F>> L;
  while (!L) {
    if (w > opt.max_window) {
      tr.window_error = "needs window " + std::to_string(w) + " > " + std::to_string(opt.max_window);
      return tr;
    }
    try {
      p.window = w;
      L = compute_large(f, p, w);
    } catch (const WindowError& e) {
      w = std::max(w + 1, e.required());
    }
  }
  tr.window = w;
  if (L->complex) tr.complex = to_json(*L->complex);
  if (L->growth) tr.growth = to_json(*L->growth);
  check_large(*L, p, rec);
  check_tor(*L, p, opt, tr, rec);
  // a check that never ran stays skipped; drop disabled ones
  std::erase_if(tr.checks, [&](const CheckResult& c) { return !rec.enabled(c.name); });
  return tr;
}

}  // namespace

TrialResult run_battery(const Presentation& p, const BatteryOptions& opt) {
  return with_field(p.field, [&](const auto& f) { return battery(f, p, opt); });
}

bool FuzzReport::passed() const {
  if (window_errors) return false;
  return std::all_of(verdicts.begin(), verdicts.end(), [](const PropertyVerdict& v) { return v.failed == 0; });
}

WindowDemand window_demand(const RandomProfile& profile, int smax) {
  const PresentationBounds b{profile.gmax, profile.rmax};
  return {required_window(b, smax), std::max(dmax(0, b.torsion_window()) + 1, complex_window_demand(b))};
}

int thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("FIHOM_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

FuzzReport run_fuzz(const FuzzConfig& cfg) {
  std::vector<Presentation> inputs(cfg.trials);
  std::vector<TrialResult> results(cfg.trials);
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = Rng::for_trial(cfg.seed, static_cast<std::uint64_t>(t));
    inputs[t] = random_presentation(rng, cfg.profile);
  }
  // trials are independent; results land in their own slots so the merge
  // below does not depend on scheduling
  const int nthreads = std::min(thread_count(cfg.threads), std::max(cfg.trials, 1));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int t = next++; t < cfg.trials; t = next++) results[t] = run_battery(inputs[t], cfg.battery);
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  FuzzReport r;
  r.config = cfg;
  std::map<std::string, PropertyVerdict> by_name;
  for (int t = 0; t < cfg.trials; ++t) {
    auto p = inputs[t];
    p.window = results[t].window;
    r.max_window = std::max(r.max_window, results[t].window);
    if (results[t].window_error) {
      if (!r.window_errors++) r.first_window_error = Counterexample{cfg.seed, t, *results[t].window_error, inputs[t]};
      continue;
    }
    for (const auto& c : results[t].checks) {
      auto& v = by_name[c.name];
      v.name = c.name;
      if (c.outcome == Outcome::pass) ++v.passed;
      if (c.outcome == Outcome::skip) ++v.skipped;
      if (c.outcome == Outcome::fail && !v.failed++) v.first = Counterexample{cfg.seed, t, c.detail, p};
    }
  }
  for (const auto& n : property_names())
    if (by_name.count(n)) r.verdicts.push_back(by_name[n]);
  return r;
}

namespace {

Json counterexample_json(const Counterexample& c) {
  return Json{{"seed", c.seed}, {"trial", c.trial}, {"detail", c.detail}, {"presentation", to_json(c.presentation)}};
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    default: return "skip";
  }
}

}  // namespace

Json to_json(const FuzzReport& r) {
  const auto& c = r.config;
  const auto demand = window_demand(c.profile, c.battery.smax);
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) {
    Json j{{"property", v.name}, {"passed", v.passed}, {"failed", v.failed}, {"skipped", v.skipped}};
    j["counterexample"] = v.first ? counterexample_json(*v.first) : Json(nullptr);
    verdicts.push_back(j);
  }
  return Json{{"config",
               Json{{"seed", c.seed},
                    {"trials", c.trials},
                    {"field", field_json(c.profile.field)},
                    {"max_group_order", c.profile.max_group_order},
                    {"gmax", c.profile.gmax},
                    {"genmax", c.profile.genmax},
                    {"rmax", c.profile.rmax},
                    {"relmax", c.profile.relmax},
                    {"smax", c.battery.smax},
                    {"rng", "xoshiro256** seeded by splitmix64"}}},
              {"window_demand", Json{{"tor", demand.tor}, {"complex", demand.complex}, {"max_used", r.max_window}}},
              {"window_errors", r.window_errors},
              {"first_window_error", r.first_window_error ? counterexample_json(*r.first_window_error) : Json(nullptr)},
              {"verdicts", verdicts},
              {"passed", r.passed()}};
}

Json to_json(const TrialResult& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"property", c.name}, {"outcome", outcome_name(c.outcome)}, {"detail", c.detail}});
  return Json{{"window", r.window},     {"tor_window", r.tor_window}, {"window_error", r.window_error ? Json(*r.window_error) : Json(nullptr)},
              {"invariants", r.invariants}, {"complex", r.complex},     {"growth", r.growth},
              {"verdicts", checks}};
}

}  // namespace fihom
