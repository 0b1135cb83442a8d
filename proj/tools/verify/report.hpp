#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "config.hpp"
#include "mixmod/kernel.hpp"
#include "mixmod/types.hpp"

namespace verify {

/// One measured quantity. Records with asserted = false are informational and
/// never affect the pass flag.
struct TrialRecord {
  std::size_t index = 0;
  std::string label;
  std::string digest;  // hash of the randomly drawn inputs
  double lhs = 0.0;
  double rhs = 0.0;
  double violation = 0.0;
  double tolerance = 0.0;
  bool asserted = true;

  bool ok() const { return !asserted || violation <= tolerance; }
  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  friend bool operator==(const Table&, const Table&) = default;
};

struct Report {
  ExperimentConfig config;
  std::vector<TrialRecord> trials;
  std::map<std::string, double> observed;
  std::vector<Table> tables;

  /// Largest violation among asserted records (0 when there are none).
  double max_violation() const;
  /// Every asserted record within its own tolerance.
  bool pass() const;
};

/// 64-bit FNV-1a over the raw bytes, as 16 hex digits.
std::string digest(std::span<const mixmod::Complex> values);
std::string digest(const mixmod::ComplexMatrix& m);

nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

/// Schema problems, empty when the document is a valid report.
std::vector<std::string> validate_report_json(const nlohmann::json& j);

/// JSON text with every floating-point number printed to 17 significant digits.
std::string emit_json(const Report& r);
/// Header plus one row per trial record.
std::string emit_csv(const Report& r);

/// Writes to `path`, or standard output when empty. Throws std::runtime_error on I/O failure.
void write_report(const Report& r, Format format, const std::string& path);

/// Formats a double with 17 significant digits ("inf"/"-inf"/"nan" for non-finite values).
std::string format_double(double v);

}  // namespace verify
