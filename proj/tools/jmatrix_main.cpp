// Command line front end: energy-grid scans, invariant checks, and raw
// table dumps for the separable-potential phase-shift library.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "config_json.hpp"
#include "jmatrix/check.hpp"
#include "jmatrix/errors.hpp"
#include "jmatrix/scan.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    jmatrix::fail(jmatrix::ErrorKind::DomainError, "cannot read file: " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct ScanArgs {
  std::string config_path;
  std::string out_path;
  std::string format;
  int jobs = 1;
};

int do_scan(const ScanArgs& args, bool force_both) {
  jmatrix::RunConfig cfg = jmatrix::parse_run_config(read_file(args.config_path));
  if (force_both) {
    cfg.method = jmatrix::RunMethod::Both;
    if (cfg.n_size < cfg.potential.m) cfg.n_size = cfg.potential.m + 3;
  }
  if (!args.out_path.empty()) cfg.output_path = args.out_path;
  if (!args.format.empty()) {
    cfg.format = args.format == "json" ? jmatrix::OutputFormat::Json
                                       : jmatrix::OutputFormat::Csv;
  }
  cfg.validate();
  return jmatrix::run_scan(cfg, args.jobs, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relativistic J-matrix phase shifts for separable potentials"};
  app.require_subcommand(1);

  ScanArgs scan_args;
  auto add_scan_flags = [&](CLI::App* cmd) {
    cmd->add_option("--config", scan_args.config_path, "JSON run configuration")
        ->required();
    cmd->add_option("--out", scan_args.out_path, "output path (overrides config)");
    cmd->add_option("--format", scan_args.format, "csv or json (overrides config)")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--jobs", scan_args.jobs, "worker threads for grid points")
        ->check(CLI::PositiveNumber);
  };
  CLI::App* scan = app.add_subcommand("scan", "sweep an energy grid and write tau(eps)");
  add_scan_flags(scan);
  CLI::App* compare =
      app.add_subcommand("compare", "scan with both analytic and numeric methods");
  add_scan_flags(compare);

  std::string check_config, from_table;
  double inject_omega = 0.0;
  CLI::App* check = app.add_subcommand("check", "run the built-in invariant suites");
  check->add_option("--config", check_config,
                    "JSON file with one channel object or an array of them");
  check->add_option("--from-table", from_table,
                    "re-verify a document produced by emit-table");
  check->add_option("--inject-omega-error", inject_omega,
                    "perturb Omega off-diagonals inside the recursion suite")
      ->group("");  // test hook, hidden from help

  std::string table_config, table_out;
  double table_eps = 0.0;
  int table_nmax = 8;
  CLI::App* emit = app.add_subcommand("emit-table", "dump matrices and coefficients");
  emit->add_option("--config", table_config, "JSON config (channel part is used)")
      ->required();
  emit->add_option("--epsilon", table_eps, "energy at which to evaluate")->required();
  emit->add_option("--n-max", table_nmax, "largest index to emit");
  emit->add_option("--out", table_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (scan->parsed()) return do_scan(scan_args, false);
    if (compare->parsed()) return do_scan(scan_args, true);
    if (check->parsed()) {
      if (!from_table.empty()) {
        return jmatrix::run_check_from_table(read_file(from_table), std::cout);
      }
      jmatrix::CheckOptions opt;
      opt.omega_offdiag_perturbation = inject_omega;
      if (!check_config.empty()) {
        nlohmann::json doc = nlohmann::json::parse(read_file(check_config));
        if (doc.is_array()) {
          for (const auto& item : doc) {
            opt.channels.push_back(jmatrix::channel_from_json(item));
          }
        } else {
          opt.channels.push_back(jmatrix::channel_from_json(doc));
        }
      }
      return jmatrix::run_check_report(opt, std::cout);
    }
    if (emit->parsed()) {
      nlohmann::json doc = nlohmann::json::parse(read_file(table_config));
      jmatrix::ChannelConfig ch = jmatrix::channel_from_json(doc);
      std::string text = jmatrix::emit_table_json(ch, table_eps, table_nmax);
      if (table_out.empty()) {
        std::cout << text << "\n";
      } else {
        std::ofstream out(table_out, std::ios::binary);
        out << text << "\n";
      }
      return 0;
    }
  } catch (const jmatrix::Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
