#include "jmatrix/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "config_json.hpp"
#include "jmatrix/errors.hpp"

namespace jmatrix {

using nlohmann::json;

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Basis parse_basis(const std::string& s) {
  if (s == "laguerre") return Basis::Laguerre;
  if (s == "oscillator") return Basis::Oscillator;
  fail(ErrorKind::DomainError, "config: basis must be \"laguerre\" or \"oscillator\"");
}

CRule parse_c_rule(const json& j) {
  if (!j.is_object() || !j.contains("type")) {
    fail(ErrorKind::DomainError, "config: c_rule must be an object with a type");
  }
  std::string type = j.at("type").get<std::string>();
  if (type == "balance") return CRule::balance();
  if (type == "nonrel_limit") return CRule::nonrel_limit();
  if (type == "fixed") {
    if (!j.contains("value")) {
      fail(ErrorKind::DomainError, "config: c_rule type \"fixed\" needs a value");
    }
    return CRule::fixed(j.at("value").get<double>());
  }
  fail(ErrorKind::DomainError,
       "config: c_rule type must be balance, fixed or nonrel_limit, got \"" + type + "\"");
}

json c_rule_json(const CRule& rule) {
  switch (rule.kind) {
    case CRuleKind::Balance: return {{"type", "balance"}};
    case CRuleKind::NonRelLimit: return {{"type", "nonrel_limit"}};
    case CRuleKind::Fixed: return {{"type", "fixed"}, {"value", rule.value}};
  }
  return {};
}

}  // namespace

ChannelConfig channel_from_json(const json& j) {
  ChannelConfig ch;
  ch.basis = parse_basis(j.at("basis").get<std::string>());
  ch.kappa = j.at("kappa").get<int>();
  ch.lambda = j.at("lambda").get<double>();
  ch.alpha = j.at("alpha").get<double>();
  ch.c_rule = parse_c_rule(j.at("c_rule"));
  ch.validate();
  return ch;
}

json channel_to_json(const ChannelConfig& ch) {
  return {{"basis", to_string(ch.basis)},
          {"kappa", ch.kappa},
          {"lambda", ch.lambda},
          {"alpha", ch.alpha},
          {"c_rule", c_rule_json(ch.c_rule)}};
}

std::vector<double> EnergyGrid::values() const {
  if (!list.empty()) {
    for (size_t i = 1; i < list.size(); ++i) {
      if (!(list[i] > list[i - 1])) {
        fail(ErrorKind::DomainError, "grid: explicit list must be strictly increasing");
      }
    }
    return list;
  }
  if (points < 1) fail(ErrorKind::DomainError, "grid: needs points >= 1 or a list");
  if (points > 1 && !(eps_max > eps_min)) {
    fail(ErrorKind::DomainError, "grid: eps_max must exceed eps_min");
  }
  std::vector<double> out(points);
  if (points == 1) {
    out[0] = eps_min;
    return out;
  }
  double step = (eps_max - eps_min) / (points - 1);
  for (int i = 0; i < points; ++i) out[i] = eps_min + step * i;
  out.back() = eps_max;
  return out;
}

void RunConfig::validate() const {
  channel.validate();
  potential.validate();
  (void)grid.values();
  if (method == RunMethod::Analytic || method == RunMethod::Both) {
    if (potential.m > 3) {
      fail(ErrorKind::DomainError,
           "config: analytic method requires M <= 3, got M = " +
               std::to_string(potential.m));
    }
  }
  if (method == RunMethod::Numeric || method == RunMethod::Both) {
    if (n_size < potential.m) {
      fail(ErrorKind::DomainError, "config: numeric method requires N >= M, got N = " +
                                       std::to_string(n_size));
    }
  }
}

RunConfig parse_run_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    fail(ErrorKind::DomainError, std::string("config: invalid JSON: ") + e.what());
  }
  RunConfig cfg;
  try {
    cfg.channel = channel_from_json(j);

    const json& pot = j.at("potential");
    int m = pot.at("M").get<int>();
    auto rows = pot.at("V").get<std::vector<std::vector<double>>>();
    if (static_cast<int>(rows.size()) != m) {
      fail(ErrorKind::DomainError, "config: potential.V must have M rows");
    }
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != m) {
        fail(ErrorKind::DomainError, "config: potential.V must have M columns per row");
      }
    }
    cfg.potential = SeparablePotential::from_rows(rows);

    const json& grid = j.at("grid");
    if (grid.contains("list")) {
      cfg.grid.list = grid.at("list").get<std::vector<double>>();
      if (cfg.grid.list.empty()) fail(ErrorKind::DomainError, "config: grid.list is empty");
    } else {
      cfg.grid.eps_min = grid.at("eps_min").get<double>();
      cfg.grid.eps_max = grid.at("eps_max").get<double>();
      cfg.grid.points = grid.at("points").get<int>();
    }

    const json& method = j.at("method");
    std::string mtype = method.at("type").get<std::string>();
    if (mtype == "analytic") {
      cfg.method = RunMethod::Analytic;
    } else if (mtype == "numeric") {
      cfg.method = RunMethod::Numeric;
    } else if (mtype == "both") {
      cfg.method = RunMethod::Both;
    } else {
      fail(ErrorKind::DomainError,
           "config: method.type must be analytic, numeric or both, got \"" + mtype + "\"");
    }
    if (cfg.method != RunMethod::Analytic) {
      cfg.n_size = method.value("N", cfg.potential.m + 3);
    }

    if (j.contains("output")) {
      const json& out = j.at("output");
      cfg.output_path = out.value("path", std::string());
      std::string format = out.value("format", std::string("csv"));
      if (format == "csv") {
        cfg.format = OutputFormat::Csv;
      } else if (format == "json") {
        cfg.format = OutputFormat::Json;
      } else {
        fail(ErrorKind::DomainError, "config: output.format must be csv or json");
      }
    }
  } catch (const json::exception& e) {
    fail(ErrorKind::DomainError, std::string("config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

std::string serialize_run_config(const RunConfig& cfg) {
  json j = channel_to_json(cfg.channel);
  std::vector<std::vector<double>> rows(cfg.potential.m,
                                        std::vector<double>(cfg.potential.m));
  for (int i = 0; i < cfg.potential.m; ++i) {
    for (int k = 0; k < cfg.potential.m; ++k) rows[i][k] = cfg.potential.at(i, k);
  }
  j["potential"] = {{"M", cfg.potential.m}, {"V", rows}};
  if (!cfg.grid.list.empty()) {
    j["grid"] = {{"list", cfg.grid.list}};
  } else {
    j["grid"] = {{"eps_min", cfg.grid.eps_min},
                 {"eps_max", cfg.grid.eps_max},
                 {"points", cfg.grid.points}};
  }
  switch (cfg.method) {
    case RunMethod::Analytic: j["method"] = {{"type", "analytic"}}; break;
    case RunMethod::Numeric: j["method"] = {{"type", "numeric"}, {"N", cfg.n_size}}; break;
    case RunMethod::Both: j["method"] = {{"type", "both"}, {"N", cfg.n_size}}; break;
  }
  j["output"] = {{"path", cfg.output_path},
                 {"format", cfg.format == OutputFormat::Csv ? "csv" : "json"}};
  return j.dump(2);
}

const char* to_string(RowStatus status) {
  switch (status) {
    case RowStatus::Ok: return "ok";
    case RowStatus::NotScattering: return "not_scattering";
    case RowStatus::SingularInner: return "singular_inner";
    case RowStatus::NearSingularFormula: return "near_singular_formula";
  }
  return "unknown";
}

namespace {

ScanRow evaluate_row(const RunConfig& cfg, double eps) {
  ScanRow row;
  row.epsilon = eps;
  KinematicState state;
  try {
    state = kinematic_state(eps, cfg.channel);
  } catch (const Error&) {
    row.status = RowStatus::NotScattering;
    return row;
  }

  auto fill = [&](const SMatrixPoint& pt, int n_size) {
    row.k = state.k;
    row.eta = state.eta;
    row.s = pt.s_value;
    row.tau_principal = pt.tau;
    row.tau_unwrapped = pt.tau;
    row.method = to_string(pt.method.kind);
    row.n_size = n_size;
  };

  auto numeric_at = [&](int n) { return s_matrix_numeric(eps, cfg.potential, n, cfg.channel); };

  try {
    switch (cfg.method) {
      case RunMethod::Analytic: {
        try {
          fill(s_matrix_analytic(eps, cfg.potential, cfg.channel), 0);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NearSingularFormula) throw;
          // closed form degenerated at this energy; the exact numeric path
          // with N = M + 3 supplies the value and the row records that.
          fill(numeric_at(cfg.potential.m + 3), cfg.potential.m + 3);
          row.status = RowStatus::NearSingularFormula;
        }
        break;
      }
      case RunMethod::Numeric: {
        fill(numeric_at(cfg.n_size), cfg.n_size);
        break;
      }
      case RunMethod::Both: {
        SMatrixPoint numeric = numeric_at(cfg.n_size);
        try {
          SMatrixPoint analytic = s_matrix_analytic(eps, cfg.potential, cfg.channel);
          fill(analytic, 0);
          row.s_diff = std::abs(analytic.s_value - numeric.s_value);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NearSingularFormula) throw;
          fill(numeric, cfg.n_size);
          row.status = RowStatus::NearSingularFormula;
        }
        break;
      }
    }
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::NotScatteringEnergy:
      case ErrorKind::KinematicPole:
        row.status = RowStatus::NotScattering;
        break;
      default:
        row.status = RowStatus::SingularInner;
        break;
    }
  }
  return row;
}

// Unwrap tau over each contiguous run of rows that carry values, same
// rule as unwrap_phase but tolerant: an exactly ambiguous step falls back
// to the principal value instead of aborting the whole scan.
void unwrap_rows(std::vector<ScanRow>& rows) {
  constexpr double pi = std::numbers::pi;
  size_t i = 0;
  while (i < rows.size()) {
    if (!rows[i].has_values()) {
      ++i;
      continue;
    }
    size_t begin = i;
    double prev = rows[begin].tau_principal;
    rows[begin].tau_unwrapped = prev;
    for (++i; i < rows.size() && rows[i].has_values(); ++i) {
      double d = rows[i].tau_principal - prev;
      double adj = d - pi * std::round(d / pi);
      if (std::abs(std::abs(adj) - 0.5 * pi) < 1e-9) adj = d;
      prev += adj;
      rows[i].tau_unwrapped = prev;
    }
  }
}

}  // namespace

ScanResult run_scan_rows(const RunConfig& cfg, int jobs) {
  cfg.validate();
  std::vector<double> grid = cfg.grid.values();
  ScanResult result;
  result.rows.resize(grid.size());
  result.with_diff = cfg.method == RunMethod::Both;

  jobs = std::max(1, jobs);
  if (jobs == 1 || grid.size() < 2) {
    for (size_t i = 0; i < grid.size(); ++i) result.rows[i] = evaluate_row(cfg, grid[i]);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      try {
        for (size_t i = next.fetch_add(1); i < grid.size(); i = next.fetch_add(1)) {
          result.rows[i] = evaluate_row(cfg, grid[i]);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    };
    int n_threads = std::min<int>(jobs, static_cast<int>(grid.size()));
    pool.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  unwrap_rows(result.rows);
  for (const auto& row : result.rows) {
    if (row.has_values()) ++result.computed_count;
    if (row.s_diff >= 0.0) result.max_s_diff = std::max(result.max_s_diff, row.s_diff);
  }
  return result;
}

std::string ScanResult::to_csv() const {
  std::ostringstream out;
  out << "epsilon,K,eta,tau_principal,tau_unwrapped,re_S,im_S,method,N,status";
  if (with_diff) out << ",s_diff";
  out << "\n";
  for (const auto& row : rows) {
    out << fmt17(row.epsilon) << ',';
    if (row.has_values()) {
      out << fmt17(row.k) << ',' << fmt17(row.eta) << ',' << fmt17(row.tau_principal)
          << ',' << fmt17(row.tau_unwrapped) << ',' << fmt17(row.s.real()) << ','
          << fmt17(row.s.imag()) << ',' << row.method << ',';
      if (row.n_size > 0) out << row.n_size;
    } else {
      out << ",,,,,,,";
    }
    out << ',' << to_string(row.status);
    if (with_diff) {
      out << ',';
      if (row.s_diff >= 0.0) out << fmt17(row.s_diff);
    }
    out << "\n";
  }
  return out.str();
}

std::string ScanResult::to_json() const {
  json arr = json::array();
  for (const auto& row : rows) {
    json r;
    r["epsilon"] = row.epsilon;
    r["status"] = to_string(row.status);
    if (row.has_values()) {
      r["K"] = row.k;
      r["eta"] = row.eta;
      r["tau_principal"] = row.tau_principal;
      r["tau_unwrapped"] = row.tau_unwrapped;
      r["re_S"] = row.s.real();
      r["im_S"] = row.s.imag();
      r["method"] = row.method;
      if (row.n_size > 0) r["N"] = row.n_size;
    }
    if (with_diff && row.s_diff >= 0.0) r["s_diff"] = row.s_diff;
    arr.push_back(std::move(r));
  }
  return arr.dump(2);
}

int run_scan(const RunConfig& cfg, int jobs, std::ostream& err) {
  ScanResult result = run_scan_rows(cfg, jobs);
  std::string text = cfg.format == OutputFormat::Csv ? result.to_csv() : result.to_json();
  if (cfg.output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) {
      err << "error: cannot open output file " << cfg.output_path << "\n";
      return 1;
    }
    out << text;
  }
  err << "scan: " << result.computed_count << "/" << result.rows.size()
      << " grid points computed";
  if (result.max_s_diff >= 0.0) err << ", max |S_analytic - S_numeric| = " << result.max_s_diff;
  err << "\n";
  return result.computed_count > 0 ? 0 : 2;
}

std::string emit_table_json(const ChannelConfig& cfg, double epsilon, int n_max) {
  cfg.validate();
  if (n_max < 1) fail(ErrorKind::DomainError, "emit-table: n_max must be >= 1");
  // The matrix bands exist at any energy where C resolves; the scattering
  // coefficients only inside the continuum.
  bool scattering = true;
  KinematicState state;
  try {
    state = kinematic_state(epsilon, cfg);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotScatteringEnergy && e.kind() != ErrorKind::KinematicPole) {
      throw;
    }
    scattering = false;
    state.epsilon = epsilon;
    state.c_value = resolve_c(epsilon, cfg.c_rule, cfg.alpha);
  }

  auto band = [&](auto diag_fn, auto off_fn) {
    json j;
    std::vector<double> diag(n_max + 1), off(n_max);
    for (int n = 0; n <= n_max; ++n) diag[n] = diag_fn(n);
    for (int n = 0; n < n_max; ++n) off[n] = off_fn(n);
    j["diag"] = diag;
    j["offdiag"] = off;
    return j;
  };

  json j;
  j["channel"] = channel_to_json(cfg);
  j["epsilon"] = epsilon;
  j["n_max"] = n_max;
  j["status"] = scattering ? "ok" : "not_scattering";
  j["kinematics"] = {{"C", state.c_value}};
  if (scattering) {
    j["kinematics"]["K"] = state.k;
    j["kinematics"]["eta"] = state.eta;
    if (state.omega) j["kinematics"]["omega"] = *state.omega;
  }
  j["h0"] = band([&](int n) { return h0_diag(n, cfg, state.c_value); },
                 [&](int n) { return h0_offdiag(n, cfg, state.c_value); });
  j["omega"] = band([&](int n) { return omega_diag(n, cfg, state.c_value); },
                    [&](int n) { return omega_offdiag(n, cfg, state.c_value); });
  j["jmat"] = band([&](int n) { return j_diag(n, epsilon, cfg, state.c_value); },
                   [&](int n) { return j_offdiag(n, epsilon, cfg, state.c_value); });
  if (scattering) {
    CoefficientPair pair = coefficient_pair(n_max, state, cfg);
    Kinematical kin = kinematical(pair);
    std::vector<double> s(pair.s.begin(), pair.s.begin() + n_max + 1);
    std::vector<double> c(pair.c.begin(), pair.c.begin() + n_max + 1);
    j["s"] = s;
    j["c"] = c;
    json t = json::array(), rp = json::array();
    for (int n = 0; n <= n_max; ++n) {
      t.push_back({{"re", kin.t[n].real()}, {"im", kin.t[n].imag()}});
    }
    for (int n = 1; n <= n_max; ++n) {
      rp.push_back({{"re", kin.r_plus[n - 1].real()}, {"im", kin.r_plus[n - 1].imag()}});
    }
    j["t"] = t;
    j["r_plus"] = rp;  // R_n^+ for n = 1..n_max
  }
  return j.dump(2);
}

}  // namespace jmatrix
