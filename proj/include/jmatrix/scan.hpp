#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "jmatrix/phase_analytic.hpp"
#include "jmatrix/phase_numeric.hpp"

namespace jmatrix {

/// Uniform grid (points >= 1 between eps_min and eps_max inclusive) or an
/// explicit strictly increasing list.
struct EnergyGrid {
  double eps_min = 0.0;
  double eps_max = 0.0;
  int points = 0;
  std::vector<double> list;

  std::vector<double> values() const;  // validates, throws DomainError
};

enum class RunMethod { Analytic, Numeric, Both };
enum class OutputFormat { Csv, Json };

struct RunConfig {
  ChannelConfig channel;
  SeparablePotential potential;
  EnergyGrid grid;
  RunMethod method = RunMethod::Analytic;
  int n_size = 0;  // Numeric/Both truncation
  std::string output_path;  // empty = stdout
  OutputFormat format = OutputFormat::Csv;

  void validate() const;  // throws DomainError with actionable messages
};

RunConfig parse_run_config(const std::string& json_text);
std::string serialize_run_config(const RunConfig& cfg);

enum class RowStatus { Ok, NotScattering, SingularInner, NearSingularFormula };

const char* to_string(RowStatus status);

/// One grid point. Value fields are meaningful when has_values() is true:
/// always for ok rows, and for near_singular_formula rows (where the
/// closed form degenerated and the numeric fallback produced the value).
struct ScanRow {
  double epsilon = 0.0;
  RowStatus status = RowStatus::Ok;
  double k = 0.0;
  double eta = 0.0;
  double tau_principal = 0.0;
  double tau_unwrapped = 0.0;
  std::complex<double> s{1.0, 0.0};
  std::string method;
  int n_size = 0;       // 0 for analytic rows
  double s_diff = -1.0;  // |S_analytic - S_numeric| in Both mode; < 0 = n/a

  bool has_values() const {
    return status == RowStatus::Ok || status == RowStatus::NearSingularFormula;
  }
};

struct ScanResult {
  std::vector<ScanRow> rows;
  int computed_count = 0;
  double max_s_diff = -1.0;
  bool with_diff = false;

  std::string to_csv() const;
  std::string to_json() const;
};

/// Evaluate all grid points (optionally with `jobs` worker threads; output
/// order and content are independent of jobs).
ScanResult run_scan_rows(const RunConfig& cfg, int jobs = 1);

/// Full scan: compute rows, write the output file (or stdout), print a
/// one-line summary to `err`. Returns the process exit status (0 = at
/// least one point computed, 2 = none).
int run_scan(const RunConfig& cfg, int jobs, std::ostream& err);

/// JSON dump of H0 / Omega / Jmat(eps) bands and s, c, T, R^+ through
/// index n_max for one channel at one energy.
std::string emit_table_json(const ChannelConfig& cfg, double epsilon, int n_max);

}  // namespace jmatrix
