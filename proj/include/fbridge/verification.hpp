#pragma once

#include <optional>
#include <string>
#include <vector>

namespace fbridge {

enum class Status { pass, fail, discrepancy_documented };
enum class Provenance { paper, trivial, derived };

const char* to_string(Status status);
const char* to_string(Provenance provenance);

struct Check {
  std::string check_id;
  Status status = Status::pass;
  double measured = 0.0;
  std::optional<double> expected;  // empty: reported only
  double tolerance = 0.0;
  Provenance provenance = Provenance::derived;
  std::string note;
};

// pass iff |measured - expected| <= tolerance * max(1, |expected|).
bool within(double measured, double expected, double tolerance);

struct SuiteConfig {
  int nodes = 0;                    // 0: per-check defaults
  std::optional<double> grid_step;  // painleve finite-difference step
  std::optional<double> s_max;      // upper end of the asymptotic fit window
  double tolerance_floor = 0.0;     // tolerances are raised to at least this
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;  // sorted by check_id

  bool passed() const;
};

const std::vector<std::string>& suite_names();
const std::vector<std::string>& sweep_targets();

// Throws UsageError for an unknown suite name.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config = {});

struct SweepConfig {
  int nodes = 0;
  std::optional<double> grid_step;
  std::optional<double> s_max;
};

struct SweepTable {
  std::string target;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// Throws UsageError for an unknown target.
SweepTable run_sweep(const std::string& target, const SweepConfig& config = {});

// 17 significant digits, '.' decimal point, independent of the locale.
std::string format_double(double value);

std::string report_csv(const SuiteReport& report);
// timestamp is written only when given.
std::string report_json(const SuiteReport& report, const std::optional<std::string>& timestamp = std::nullopt);
std::string sweep_csv(const SweepTable& table);
std::string sweep_json(const SweepTable& table, const std::optional<std::string>& timestamp = std::nullopt);

}  // namespace fbridge
