// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "experiments.hpp"
#include "mixmod/gabor.hpp"
#include "mixmod/rng.hpp"
#include "mixmod/tf_core.hpp"
#include "mixmod/wilson.hpp"
#include "report.hpp"

using namespace mixmod;
using namespace verify;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

struct Tally {
  std::size_t asserted = 0;
  std::size_t failed = 0;
  double worst = 0.0;  // largest violation / tolerance (violation itself when tolerance is 0)
};

// Tally over asserted records whose label starts with `prefix`.
Tally tally(const Report& r, const std::string& prefix = "") {
  Tally t;
  for (const auto& rec : r.trials) {
    if (!rec.asserted || rec.label.rfind(prefix, 0) != 0) continue;
    ++t.asserted;
    t.failed += !rec.ok();
    t.worst = std::max(t.worst, rec.tolerance > 0 ? rec.violation / rec.tolerance : rec.violation);
  }
  return t;
}

std::size_t count_label(const Report& r, const std::string& prefix) {
  return std::count_if(r.trials.begin(), r.trials.end(),
                       [&](const TrialRecord& t) { return t.label.rfind(prefix, 0) == 0; });
}

double max_violation(const Report& r, const std::string& prefix) {
  double v = 0;
  for (const auto& t : r.trials)
    if (t.asserted && t.label.rfind(prefix, 0) == 0) v = std::max(v, t.violation);
  return v;
}

Report run(const std::string& name, std::function<void(ExperimentConfig&)> tweak = {}) {
  auto c = default_config(name);
  if (tweak) tweak(c);
  return run_experiment(c);
}

// 1
Outcome stft_inversion() {
  const auto t0 = Clock::now();
  CounterRng rng(101);
  double worst = 0;
  std::size_t count = 0;
  for (std::size_t n : {8u, 16u, 32u}) {
    const auto gauss = gaussian_window(n);
    for (int i = 0; i < 100; ++i) {
      const auto f = random_signal(rng, n);
      const auto g = i % 2 == 0 ? gauss : Window::unit(random_signal(rng, n));
      const auto back = istft_full(stft_full(f, g), g, g);
      worst = std::max(worst, max_abs_diff(back, f) / f.norm());
      ++count;
    }
  }
  const double secs = seconds_since(t0);
  return {worst <= 1e-10 && count == 300 && secs < 5.0,
          "300 signals, max relative error " + fmt("%.2e", worst) + ", " + fmt("%.3f", secs) + " s"};
}

// 2
Outcome tight_window() {
  const GaborSystem seed(GaborLattice(16, 2, 2), gaussian_window(16));
  const auto tight = canonical_system(seed, CanonicalKind::Tight);
  const auto b = frame_bounds(tight);
  // Independent check from the frame operator itself.
  const auto s = frame_operator(tight);
  const double op_dev = (s - ComplexMatrix::Identity(16, 16)).cwiseAbs().maxCoeff();
  const double dev = std::max(std::abs(b.lower - 1), std::abs(b.upper - 1));
  return {dev <= 1e-10 && op_dev <= 1e-10,
          "A-1, B-1 within " + fmt("%.2e", dev) + ", |S-I| " + fmt("%.2e", op_dev)};
}

// 3
Outcome wilson_gate() {
  const auto basis = build_wilson_basis(32, 4);
  const auto& w = basis.matrix();
  const double gram = (w.adjoint() * w - ComplexMatrix::Identity(32, 32)).cwiseAbs().maxCoeff();
  CounterRng rng(103);
  double energy = 0;
  for (int i = 0; i < 100; ++i) {
    const auto f = random_signal(rng, 32);
    energy = std::max(energy, std::abs(wilson_coefficients(basis, f).energy() - f.norm_squared()) / f.norm_squared());
  }
  return {gram <= 1e-10 && basis.gram_deviation() <= 1e-10 && energy <= 1e-10,
          "Gram deviation " + fmt("%.2e", gram) + ", energy error " + fmt("%.2e", energy) + " over 100 signals"};
}

// 4
Outcome schatten_bound() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  for (std::size_t n : {8u, 16u}) {
    const auto r = run("schatten-bound", [n](ExperimentConfig& c) {
      c.n = n;
      c.trials = 200;
      c.p_grid = {1, 1.25, 1.5, 1.75, 2};
    });
    const auto bound = tally(r, "bound");
    const auto eq = tally(r, "equality");
    ok = ok && r.pass() && bound.failed == 0 && bound.asserted == 200 * 5 && eq.failed == 0 && eq.asserted == 200;
    detail += "N=" + std::to_string(n) + ": " + std::to_string(bound.asserted) + " bounds, p=2 gap " +
              fmt("%.1e", max_violation(r, "equality")) + "; ";
  }
  const double secs = seconds_since(t0);
  return {ok && secs < 30.0, detail + fmt("%.2f", secs) + " s"};
}

// 5
Outcome lemma31() {
  const auto r = run("lemma31", [](ExperimentConfig& c) {
    c.trials = 200;
    c.p_grid = {1, 1.5, 2};
  });
  const auto t = tally(r);
  return {r.pass() && t.asserted == 600,
          std::to_string(t.asserted) + " comparisons, max excess " + fmt("%.2e", r.max_violation())};
}

// 6
Outcome kn_quantization() {
  const auto r = run("kn-roundtrip");
  bool ok = r.pass();
  for (const char* label : {"kernel->symbol->kernel", "symbol->kernel->symbol", "constant symbol -> identity",
                            "multiplier symbol -> diagonal", "phase symbol -> cyclic shift"})
    ok = ok && count_label(r, label) > 0 && tally(r, label).failed == 0;
  return {ok, "round trip " + fmt("%.1e", max_violation(r, "kernel->symbol")) + ", identity " +
                  fmt("%.1e", max_violation(r, "constant symbol")) + ", closed forms within 1e-12"};
}

// 7
Outcome kn_magnitude() {
  const auto r = run("kn-magnitude", [](ExperimentConfig& c) { c.n = 8; });
  const bool ok = r.pass() && count_label(r, "exhaustive N=4 tuples=256") == 1 &&
                  count_label(r, "sampled N=8 tuples=4096") == r.config.trials;
  return {ok, "N=4 exhaustive and " + std::to_string(r.config.trials) + "x4096 samples at N=8, max deviation " +
                  fmt("%.2e", r.max_violation())};
}

// 8
Outcome norm_equivalence() {
  const auto r = run("norm-equivalence", [](ExperimentConfig& c) {
    c.n = 8;
    c.trials = 50;
    c.p_grid = {1, 2};
  });
  bool ok = r.pass();
  std::string detail;
  for (const char* p : {"1", "2"}) {
    const auto it = r.observed.find(std::string("C p=") + p);
    if (it == r.observed.end() || !std::isfinite(it->second)) {
      ok = false;
      continue;
    }
    const double c = it->second;
    // Every ratio must sit inside [1/C, C].
    for (const auto& t : r.trials)
      if (t.label == std::string("ratio p=") + p) ok = ok && t.rhs / t.lhs <= c * (1 + 1e-15) && t.lhs / t.rhs <= c * (1 + 1e-15);
    ok = ok && count_label(r, std::string("ratio p=") + p) == 50;
    detail += std::string("C(p=") + p + ") = " + fmt("%.6f", c) + " ";
  }
  return {ok, detail + "over 50 kernels"};
}

// 9
Outcome embedding() {
  const auto r = run("embedding", [](ExperimentConfig& c) {
    c.s = 1;
    c.p_grid = {1.5};
    c.trials = 500;
  });
  const auto holder = tally(r, "holder");
  const auto growth = tally(r, "witness growth");
  const auto incr = tally(r, "witness increment ratio");
  const auto boundary = tally(r, "boundary");
  const bool ok = r.pass() && holder.asserted == 500 && holder.failed == 0 && growth.asserted >= 3 &&
                  growth.failed == 0 && incr.asserted >= 2 && incr.failed == 0 && boundary.asserted == 1 &&
                  boundary.failed == 0;
  return {ok, "C = " + fmt("%.6f", r.observed.at("C p=1.5")) + ", 500 arrays, boundary refused, " +
                  std::to_string(growth.asserted) + " doublings grow, increments shrink"};
}

// 10
Outcome counterexample() {
  bool ok = true;
  std::string detail;
  for (std::size_t n : {16u, 32u}) {
    const auto r = run("counterexample", [n](ExperimentConfig& c) { c.n = n; });
    ok = ok && r.pass() && tally(r).asserted == r.config.trials + 1;
    detail += "N=" + std::to_string(n) + " spectrum " + fmt("%.1e", r.max_violation()) + "; ";
    if (r.tables.empty() || r.tables.front().rows.size() < 2) {
      ok = false;
      continue;
    }
    const auto& rows = r.tables.front().rows;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      ok = ok && rows[i][2] > rows[i - 1][2];
      ok = ok && std::abs(rows[i][3] / rows[0][3] - 1) <= 0.05;
    }
    if (n == 32)
      detail += "S1 " + fmt("%.2f", rows.front()[2]) + " -> " + fmt("%.2f", rows.back()[2]) + ", relaxed norm spread " +
                fmt("%.1e", r.observed.at("relaxed_norm_spread"));
  }
  return {ok, detail};
}

// 11
Outcome monotonicity() {
  const auto r = run("monotonicity", [](ExperimentConfig& c) { c.trials = 500; });
  bool ok = r.pass();
  for (const char* label :
       {"exponent monotonicity", "weight monotonicity", "permutation invariance", "schatten monotonicity"})
    ok = ok && tally(r, label).asserted == 500 && tally(r, label).failed == 0;
  return {ok, "4 x 500 instances, max violation " + fmt("%.1e", r.max_violation())};
}

// 12
Outcome cli_end_to_end() {
  const auto t0 = Clock::now();
  std::vector<std::string> first;
  bool ok = true;
  for (const auto& name : experiment_names()) {
    const auto text = emit_json(run(name));
    const auto problems = validate_report_json(nlohmann::json::parse(text));
    ok = ok && problems.empty() && nlohmann::json::parse(text)["aggregate"]["pass"] == true;
    first.push_back(text);
  }
  const double secs = seconds_since(t0);
  ok = ok && secs < 60.0;

  // Reruns with equal seeds, and with a different worker count, must match exactly.
  const char* saved = std::getenv("VERIFY_THREADS");
  const std::string restore = saved ? saved : "";
  setenv("VERIFY_THREADS", "1", 1);
  std::size_t identical = 0;
  for (std::size_t i = 0; i < first.size(); ++i) identical += emit_json(run(experiment_names()[i])) == first[i];
  if (saved)
    setenv("VERIFY_THREADS", restore.c_str(), 1);
  else
    unsetenv("VERIFY_THREADS");
  ok = ok && identical == first.size();
  return {ok, std::to_string(first.size()) + " defaults in " + fmt("%.2f", secs) + " s, schema valid, " +
                  std::to_string(identical) + " reruns identical"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
      {"STFT inversion", stft_inversion},
      {"canonical tight window", tight_window},
      {"Wilson basis gate", wilson_gate},
      {"Schatten bound", schatten_bound},
      {"frame/orthonormal transfer", lemma31},
      {"KN quantization", kn_quantization},
      {"KN magnitude identity", kn_magnitude},
      {"KN norm equivalence", norm_equivalence},
      {"weighted embedding", embedding},
      {"Wilson counterexample", counterexample},
      {"monotonicity suites", monotonicity},
      {"CLI end to end", cli_end_to_end},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.ok;
    std::printf("[%s] %2zu %-28s %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
