#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include <json.hpp>

#include "jmatrix/check.hpp"
#include "jmatrix/errors.hpp"
#include "jmatrix/scan.hpp"

using namespace jmatrix;
using nlohmann::json;

namespace {

std::string base_config_text(const std::string& method = "analytic",
                             const std::string& grid =
                                 R"({"eps_min": 1.05, "eps_max": 2.5, "points": 8})") {
  return std::string(R"({
    "basis": "laguerre",
    "kappa": 1,
    "lambda": 1.0,
    "alpha": 1.0,
    "c_rule": {"type": "balance"},
    "potential": {"M": 2, "V": [[2.0, 0.5], [0.5, -1.0]]},
    "grid": )") +
         grid + R"(,
    "method": {"type": ")" +
         method + R"(", "N": 6},
    "output": {"path": "", "format": "csv"}
  })";
}

int count_lines(const std::string& text) {
  int n = 0;
  for (char ch : text) n += ch == '\n';
  return n;
}

}  // namespace

TEST_CASE("config: parse -> serialize -> parse is the identity") {
  RunConfig cfg = parse_run_config(base_config_text("both"));
  std::string text = serialize_run_config(cfg);
  RunConfig cfg2 = parse_run_config(text);
  CHECK(serialize_run_config(cfg2) == text);
  CHECK(cfg2.channel.kappa == cfg.channel.kappa);
  CHECK(cfg2.channel.lambda == cfg.channel.lambda);
  CHECK(cfg2.potential.v == cfg.potential.v);
  CHECK(cfg2.method == RunMethod::Both);
  CHECK(cfg2.n_size == cfg.n_size);
}

TEST_CASE("config: validation failures carry actionable messages") {
  auto expect_error = [](const std::string& text, const std::string& needle) {
    try {
      parse_run_config(text);
      FAIL("expected config error for: ", needle);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DomainError);
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  std::string asym = base_config_text();
  asym.replace(asym.find("[[2.0, 0.5], [0.5, -1.0]]"), 25, "[[2.0, 0.7], [0.5, -1.0]]");
  expect_error(asym, "V[0][1]");

  std::string big_m = base_config_text();
  big_m.replace(big_m.find(R"("potential": {"M": 2, "V": [[2.0, 0.5], [0.5, -1.0]]})"), 53,
                R"("potential": {"M": 4, "V": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]})");
  expect_error(big_m, "analytic method requires M <= 3");

  std::string small_n = base_config_text("numeric");
  small_n.replace(small_n.find("\"N\": 6"), 6, "\"N\": 1");
  expect_error(small_n, "N >= M");

  expect_error(base_config_text("analytic", R"({"eps_min": 2.0, "eps_max": 1.0, "points": 5})"),
               "eps_max");
  expect_error(base_config_text("analytic", R"({"list": [1.2, 1.1]})"),
               "strictly increasing");
  expect_error("{not json", "invalid JSON");

  std::string bad_basis = base_config_text();
  bad_basis.replace(bad_basis.find("laguerre"), 8, "fourier");
  expect_error(bad_basis, "basis");
}

TEST_CASE("energy grid values") {
  EnergyGrid g;
  g.eps_min = 1.0;
  g.eps_max = 2.0;
  g.points = 5;
  auto v = g.values();
  REQUIRE(v.size() == 5);
  CHECK(v.front() == 1.0);
  CHECK(v.back() == 2.0);
  CHECK(v[2] == doctest::Approx(1.5).epsilon(1e-15));

  EnergyGrid single;
  single.eps_min = 1.3;
  single.points = 1;
  CHECK(single.values() == std::vector<double>{1.3});

  EnergyGrid list;
  list.list = {1.1, 1.4, 2.0};
  CHECK(list.values().size() == 3);
}

TEST_CASE("scan: statuses across the threshold and determinism") {
  RunConfig cfg = parse_run_config(
      base_config_text("analytic", R"({"eps_min": 0.5, "eps_max": 2.5, "points": 21})"));
  ScanResult result = run_scan_rows(cfg);
  REQUIRE(result.rows.size() == 21);
  for (const auto& row : result.rows) {
    if (row.epsilon <= 1.0) {
      CHECK(row.status == RowStatus::NotScattering);
      CHECK_FALSE(row.has_values());
    } else {
      CHECK(row.status == RowStatus::Ok);
      CHECK(std::abs(std::abs(row.s) - 1.0) < 1e-10);
      CHECK(row.method == "analytic_m2");
      CHECK(row.n_size == 0);
    }
  }
  CHECK(result.computed_count == 15);

  CHECK(run_scan_rows(cfg).to_csv() == result.to_csv());
  CHECK(run_scan_rows(cfg, 3).to_csv() == result.to_csv());
  CHECK(run_scan_rows(cfg, 7).to_csv() == result.to_csv());

  int lines = count_lines(result.to_csv());
  CHECK(lines == 22);  // header + one row per grid point
  CHECK(result.to_csv().rfind("epsilon,K,eta,tau_principal,tau_unwrapped,re_S,im_S,"
                              "method,N,status",
                              0) == 0);
}

TEST_CASE("scan: both mode reports the analytic-numeric gap") {
  RunConfig cfg = parse_run_config(
      base_config_text("both", R"({"eps_min": 1.1, "eps_max": 2.4, "points": 9})"));
  ScanResult result = run_scan_rows(cfg);
  CHECK(result.with_diff);
  CHECK(result.max_s_diff >= 0.0);
  CHECK(result.max_s_diff < 1e-8);
  for (const auto& row : result.rows) {
    CHECK(row.status == RowStatus::Ok);
    CHECK(row.s_diff >= 0.0);
  }
  CHECK(result.to_csv().find(",s_diff") != std::string::npos);
}

TEST_CASE("scan: near-singular formula rows fall back to the numeric path") {
  // place one grid point exactly where J01 + a^2 V01 = 0
  ChannelConfig ch;
  ch.kappa = 1;
  ch.lambda = 1.0;
  ch.alpha = 1.0;
  ch.c_rule = CRule::balance();
  ch.basis = Basis::Laguerre;
  double eps = 1.6;
  double c_value = resolve_c(eps, ch.c_rule, ch.alpha);
  double v01 = -j_offdiag(0, eps, ch, c_value);

  json j = json::parse(base_config_text("analytic", R"({"list": [1.3, 1.6, 1.9]})"));
  j["potential"]["V"] = {{1.0, v01}, {v01, 0.5}};
  RunConfig cfg = parse_run_config(j.dump());
  ScanResult result = run_scan_rows(cfg);
  REQUIRE(result.rows.size() == 3);
  CHECK(result.rows[0].status == RowStatus::Ok);
  CHECK(result.rows[0].method == "analytic_m2");
  CHECK(result.rows[1].status == RowStatus::NearSingularFormula);
  CHECK(result.rows[1].has_values());
  CHECK(result.rows[1].method == "numeric");
  CHECK(result.rows[1].n_size == 5);  // M + 3
  CHECK(result.rows[2].status == RowStatus::Ok);
  // the fallback value is the true S there
  SMatrixPoint oracle = s_matrix_numeric(eps, cfg.potential, 6, ch);
  CHECK(std::abs(result.rows[1].s - oracle.s_value) < 1e-9);
}

TEST_CASE("scan: singular inner system row is flagged and left empty") {
  ChannelConfig ch;
  ch.kappa = 1;
  ch.lambda = 1.0;
  ch.alpha = 1.0;
  ch.c_rule = CRule::balance();
  ch.basis = Basis::Laguerre;
  double eps = 1.5;
  double v00 = -j_diag(0, eps, ch, resolve_c(eps, ch.c_rule, ch.alpha));

  json j = json::parse(base_config_text("numeric", R"({"list": [1.5]})"));
  j["potential"] = {{"M", 1}, {"V", {{v00}}}};
  j["method"] = {{"type", "numeric"}, {"N", 1}};
  RunConfig cfg = parse_run_config(j.dump());
  ScanResult result = run_scan_rows(cfg);
  REQUIRE(result.rows.size() == 1);
  CHECK(result.rows[0].status == RowStatus::SingularInner);
  CHECK_FALSE(result.rows[0].has_values());
  CHECK(result.computed_count == 0);

  std::ostringstream err;
  RunConfig quiet = cfg;
  quiet.output_path = "/tmp/jmatrix_test_singular.csv";
  CHECK(run_scan(quiet, 1, err) == 2);  // no computable grid point
}

TEST_CASE("scan: unwrapped tau is continuous across a fast phase change") {
  json j = json::parse(base_config_text("numeric", R"({"eps_min": 1.05, "eps_max": 2.8, "points": 160})"));
  j["potential"] = {{"M", 1}, {"V", {{-12.0}}}};
  j["method"] = {{"type", "numeric"}, {"N", 4}};
  RunConfig cfg = parse_run_config(j.dump());
  ScanResult result = run_scan_rows(cfg);
  double max_step = 0.0;
  for (size_t i = 1; i < result.rows.size(); ++i) {
    max_step = std::max(max_step, std::abs(result.rows[i].tau_unwrapped -
                                           result.rows[i - 1].tau_unwrapped));
  }
  CHECK(max_step < 1.4);  // raw principal values jump by ~pi at the wrap
}

TEST_CASE("scan: json output carries the same rows") {
  RunConfig cfg = parse_run_config(
      base_config_text("analytic", R"({"eps_min": 0.9, "eps_max": 1.8, "points": 5})"));
  cfg.format = OutputFormat::Json;
  ScanResult result = run_scan_rows(cfg);
  json rows = json::parse(result.to_json());
  REQUIRE(rows.size() == 5);
  CHECK(rows[0]["status"] == "not_scattering");
  CHECK_FALSE(rows[0].contains("re_S"));
  CHECK(rows[4]["status"] == "ok");
  CHECK(rows[4]["method"] == "analytic_m2");
  double re = rows[4]["re_S"].get<double>();
  double im = rows[4]["im_S"].get<double>();
  CHECK(std::abs(std::hypot(re, im) - 1.0) < 1e-10);
}

TEST_CASE("emit-table: shape contract and jmat = h0 at eps = 0") {
  ChannelConfig ch;
  ch.kappa = 2;
  ch.lambda = 1.4;
  ch.alpha = 1.0;
  ch.c_rule = CRule::balance();
  ch.basis = Basis::Oscillator;

  json t = json::parse(emit_table_json(ch, 1.8, 3));
  CHECK(t["status"] == "ok");
  CHECK(t["s"].size() == 4);
  CHECK(t["c"].size() == 4);
  CHECK(t["t"].size() == 4);
  CHECK(t["r_plus"].size() == 3);
  CHECK(t["jmat"]["diag"].size() == 4);
  CHECK(t["jmat"]["offdiag"].size() == 3);

  json t0 = json::parse(emit_table_json(ch, 0.0, 3));
  CHECK(t0["status"] == "not_scattering");
  CHECK_FALSE(t0.contains("s"));
  for (int i = 0; i <= 3; ++i) {
    CHECK(t0["jmat"]["diag"][i] == t0["h0"]["diag"][i]);
  }
}

TEST_CASE("check: default suites pass, corrupted Omega fails the recursion suite") {
  CheckOptions opt;
  std::ostringstream out;
  CHECK(run_check_report(opt, out) == 0);
  CHECK(out.str().find("[FAIL]") == std::string::npos);

  CheckOptions bad;
  bad.omega_offdiag_perturbation = 1e-6;
  std::ostringstream out2;
  CHECK(run_check_report(bad, out2) == 3);
  CHECK(out2.str().find("[FAIL] recursion_residual") != std::string::npos);
  CHECK(out2.str().find("[PASS] specfun_oracles") != std::string::npos);
}

TEST_CASE("check: emit-table output re-ingests identically") {
  ChannelConfig ch;
  ch.kappa = 1;
  ch.lambda = 0.9;
  ch.alpha = 1.0;
  ch.c_rule = CRule::balance();
  ch.basis = Basis::Laguerre;
  std::string table = emit_table_json(ch, 1.7, 12);
  std::ostringstream out;
  CHECK(run_check_from_table(table, out) == 0);
  CHECK(out.str().find("[FAIL]") == std::string::npos);

  // tamper with one stored coefficient: reproduction must fail
  json doc = json::parse(table);
  doc["s"][3] = doc["s"][3].get<double>() * (1.0 + 1e-7);
  std::ostringstream out2;
  CHECK(run_check_from_table(doc.dump(), out2) == 3);
}
