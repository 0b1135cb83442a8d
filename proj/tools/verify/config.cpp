#include "config.hpp"

#include <algorithm>
#include <cmath>

#include "mixmod/serialize.hpp"

namespace verify {

namespace {

bool uses_lattice(const std::string& name) {
  return name == "schatten-bound" || name == "lemma31" || name == "frame-suite";
}

bool uses_wilson(const std::string& name) { return name == "counterexample" || name == "wilson-suite"; }

// Experiments that materialize N^4-sized coefficient arrays.
bool full_grid_kernel(const std::string& name) {
  return name == "schatten-bound" || name == "kn-magnitude" || name == "norm-equivalence";
}

bool needs_p_in_unit_interval(const std::string& name) {
  return name == "schatten-bound" || name == "lemma31" || name == "norm-equivalence" || name == "embedding";
}

}  // namespace

const char* to_string(Format f) { return f == Format::Json ? "json" : "csv"; }

Format format_from_string(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw ConfigError("unknown format '" + s + "' (expected json or csv)");
}

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {"schatten-bound", "lemma31",        "kn-roundtrip", "kn-magnitude",
                                                 "norm-equivalence", "counterexample", "embedding",    "frame-suite",
                                                 "wilson-suite",     "monotonicity"};
  return names;
}

ExperimentConfig default_config(const std::string& name) {
  ExperimentConfig c;
  c.name = name;
  if (name == "schatten-bound") {
    c.n = 8;
    c.trials = 200;
    c.p_grid = {1.0, 1.25, 1.5, 1.75, 2.0};
  } else if (name == "lemma31") {
    c.n = 8;
    c.trials = 200;
    c.p_grid = {1.0, 1.5, 2.0};
  } else if (name == "kn-roundtrip") {
    c.n = 16;
    c.trials = 5;
  } else if (name == "kn-magnitude") {
    c.n = 8;
    c.trials = 3;
  } else if (name == "norm-equivalence") {
    c.n = 8;
    c.trials = 50;
    c.p_grid = {1.0, 2.0};
  } else if (name == "counterexample") {
    c.n = 32;
    c.trials = 10;
  } else if (name == "embedding") {
    c.n = 5;
    c.trials = 500;
    c.p_grid = {1.5};
  } else if (name == "frame-suite") {
    c.n = 16;
    c.trials = 100;
    c.p_grid = {1.0, 2.0};
  } else if (name == "wilson-suite") {
    c.n = 32;
    c.trials = 100;
    c.p_grid = {1.0, 1.5, 2.0};
  } else if (name == "monotonicity") {
    c.n = 8;
    c.trials = 500;
  } else {
    throw ConfigError("unknown experiment '" + name + "'");
  }
  return c;
}

void validate(const ExperimentConfig& c) {
  const auto& names = experiment_names();
  if (std::find(names.begin(), names.end(), c.name) == names.end())
    throw ConfigError("unknown experiment '" + c.name + "'");
  if (c.n < 2) throw ConfigError("--dim must be at least 2");
  if (c.n > 64) throw ConfigError("--dim " + std::to_string(c.n) + " exceeds 64");
  if (full_grid_kernel(c.name) && c.n > 32)
    throw ConfigError(c.name + " builds N^4 coefficient arrays; --dim must be at most 32");
  for (double p : c.p_grid) {
    if (!(p >= 1.0)) throw ConfigError("exponents in --p must be >= 1");
    if (needs_p_in_unit_interval(c.name) && p > 2.0) throw ConfigError(c.name + " requires exponents in [1, 2]");
  }
  if (!(c.s >= 0.0) || !std::isfinite(c.s)) throw ConfigError("--s must be a finite number >= 0");
  if (uses_lattice(c.name)) {
    if (c.a == 0 || c.b == 0 || c.n % c.a != 0 || c.n % c.b != 0)
      throw ConfigError("--a and --b must divide --dim");
    if (c.a * c.b > c.n) throw ConfigError("lattice is undersampled (a*b > N); no frame exists");
  }
  if (uses_wilson(c.name)) {
    if (c.channels < 2) throw ConfigError("--channels must be at least 2");
    if (c.n % (2 * c.channels) != 0) throw ConfigError("2 * --channels must divide --dim");
  }
}

nlohmann::json config_to_json(const ExperimentConfig& c) {
  nlohmann::json p = nlohmann::json::array();
  for (double v : c.p_grid) p.push_back(mixmod::real_to_json(v));
  return {{"name", c.name},  {"N", c.n}, {"trials", c.trials}, {"p", std::move(p)},
          {"s", c.s},        {"seed", c.seed}, {"a", c.a},      {"b", c.b},
          {"M", c.channels}, {"format", to_string(c.format)}};
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
  ExperimentConfig c;
  c.name = j.at("name").get<std::string>();
  c.n = j.at("N").get<std::size_t>();
  c.trials = j.at("trials").get<std::size_t>();
  for (const auto& v : j.at("p")) c.p_grid.push_back(mixmod::real_from_json(v));
  c.s = j.at("s").get<double>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.a = j.at("a").get<std::size_t>();
  c.b = j.at("b").get<std::size_t>();
  c.channels = j.at("M").get<std::size_t>();
  c.format = format_from_string(j.at("format").get<std::string>());
  return c;
}

}  // namespace verify
