#pragma once

#include <cstddef>
#include <stdexcept>

#include "config.hpp"
#include "report.hpp"

namespace verify {

/// A numerical failure inside one trial, tagged with its index.
class TrialFailure : public std::runtime_error {
 public:
  TrialFailure(std::size_t trial, const std::string& what)
      : std::runtime_error("trial " + std::to_string(trial) + ": " + what), trial_(trial) {}
  std::size_t trial() const { return trial_; }

 private:
  std::size_t trial_;
};

/// Validates the config, then runs the named experiment. Identical configs
/// give identical reports regardless of thread count.
Report run_experiment(const ExperimentConfig& cfg);

/// Worker count: VERIFY_THREADS if set to a positive integer, else the
/// hardware concurrency; never more than `jobs`.
std::size_t worker_count(std::size_t jobs);

}  // namespace verify
