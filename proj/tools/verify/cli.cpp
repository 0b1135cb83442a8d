#include "cli.hpp"

#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "config.hpp"
#include "experiments.hpp"
#include "report.hpp"

namespace verify {

int cli_main(int argc, const char* const* argv, std::ostream& err) {
  CLI::App app{"Run a named numerical check and emit a JSON or CSV report."};
  app.name("verify");

  std::string name;
  std::optional<std::size_t> dim, trials, a, b, channels;
  std::optional<double> s;
  std::optional<std::uint64_t> seed;
  std::vector<double> p_grid;
  std::string out, format = "json";

  std::string names;
  for (const auto& n : experiment_names()) names += (names.empty() ? "" : ", ") + n;
  app.add_option("experiment", name, "One of: " + names)->required();
  app.add_option("--dim", dim, "Dimension N (per-axis extent for embedding)");
  app.add_option("--trials", trials, "Number of random trials");
  app.add_option("--p", p_grid, "Exponent grid, comma separated")->delimiter(',');
  app.add_option("--s", s, "Weight exponent");
  app.add_option("--a", a, "Lattice time step");
  app.add_option("--b", b, "Lattice frequency step");
  app.add_option("--channels", channels, "Wilson channel count M");
  app.add_option("--seed", seed, "Random seed");
  app.add_option("--out", out, "Output path (default: standard output)");
  app.add_option("--format", format, "json or csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream os;
    app.exit(e, os, err);
    err << os.str();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "verify: " << e.what() << '\n';
    return kExitConfig;
  }

  ExperimentConfig cfg;
  try {
    cfg = default_config(name);
    if (dim) cfg.n = *dim;
    if (trials) cfg.trials = *trials;
    if (!p_grid.empty()) cfg.p_grid = p_grid;
    if (s) cfg.s = *s;
    if (a) cfg.a = *a;
    if (b) cfg.b = *b;
    if (channels) cfg.channels = *channels;
    if (seed) cfg.seed = *seed;
    cfg.out = out;
    cfg.format = format_from_string(format);
    validate(cfg);
  } catch (const ConfigError& e) {
    err << "verify: " << e.what() << '\n';
    return kExitConfig;
  }

  Report report;
  try {
    report = run_experiment(cfg);
  } catch (const std::exception& e) {
    err << "verify: " << name << ": " << e.what() << '\n';
    return kExitAssertion;
  }

  try {
    write_report(report, cfg.format, cfg.out);
  } catch (const std::exception& e) {
    err << "verify: " << e.what() << '\n';
    return kExitConfig;
  }

  std::size_t failed = 0;
  for (const auto& t : report.trials) failed += !t.ok();
  err << name << ": " << (report.pass() ? "pass" : "FAIL") << " (" << report.trials.size() << " records, " << failed
      << " failed, max violation " << format_double(report.max_violation()) << ")\n";
  return report.pass() ? kExitPass : kExitAssertion;
}

}  // namespace verify
