#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace verify {

/// Invalid experiment configuration; maps to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Format { Json, Csv };

const char* to_string(Format f);
Format format_from_string(const std::string& s);

struct ExperimentConfig {
  std::string name;
  std::size_t n = 8;
  std::size_t trials = 0;
  std::vector<double> p_grid;
  double s = 1.0;
  std::uint64_t seed = 1;
  std::size_t a = 2;
  std::size_t b = 2;
  std::size_t channels = 4;
  std::string out;  // empty: standard output
  Format format = Format::Json;
};

const std::vector<std::string>& experiment_names();

/// Defaults for a named experiment; throws ConfigError for unknown names.
ExperimentConfig default_config(const std::string& name);

/// Throws ConfigError describing the first violated constraint.
void validate(const ExperimentConfig& cfg);

/// Echo written into reports. The output path is left out so that two runs
/// written to different files stay byte-identical.
nlohmann::json config_to_json(const ExperimentConfig& cfg);
ExperimentConfig config_from_json(const nlohmann::json& j);

}  // namespace verify
