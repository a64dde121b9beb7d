#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <new>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fbridge/errors.hpp"
#include "fbridge/verification.hpp"

namespace {

enum Exit { ok = 0, verification_failed = 1, usage = 2, numerical = 3 };

struct Options {
  int nodes = 0;
  std::optional<double> grid_step;
  std::optional<double> s_max;
  double tolerance = 0.0;
  std::string format = "csv";
  std::string out;
  bool timestamps = false;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--nodes", o.nodes, "quadrature nodes (0: per-check default)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--grid-step", o.grid_step, "finite-difference / sweep step")->check(CLI::PositiveNumber);
  cmd->add_option("--s-max", o.s_max, "upper end of the parameter range");
  cmd->add_option("--tolerance", o.tolerance, "lower bound applied to every check tolerance")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out, "output file (default stdout)");
  cmd->add_flag("--with-timestamps", o.timestamps, "add a UTC timestamp to JSON output");
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw fbridge::IoError("cannot open '" + path + "' for writing");
  f << text;
  f.close();
  if (!f) throw fbridge::IoError("write to '" + path + "' failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Identity checks and parameter sweeps for Fredholm and zeta-regularized determinants"};
  app.require_subcommand(1);

  Options opt;
  std::string suite;
  std::string target;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "combinatorics | kernels | fredholm | zeta | painleve | all")->required();
  add_common(verify, opt);
  CLI::App* sweep = app.add_subcommand("sweep", "tabulate a curve");
  sweep->add_option("target", target, "sine_det | selector_det | det_ratio")->required();
  add_common(sweep, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  const auto stamp = opt.timestamps ? std::optional<std::string>(utc_now()) : std::nullopt;
  try {
    if (verify->parsed()) {
      fbridge::SuiteConfig cfg;
      cfg.nodes = opt.nodes;
      cfg.grid_step = opt.grid_step;
      cfg.s_max = opt.s_max;
      cfg.tolerance_floor = opt.tolerance;
      const fbridge::SuiteReport report = fbridge::run_suite(suite, cfg);
      emit(opt.format == "json" ? fbridge::report_json(report, stamp) : fbridge::report_csv(report), opt.out);
      return report.passed() ? ok : verification_failed;
    }
    fbridge::SweepConfig cfg;
    cfg.nodes = opt.nodes;
    cfg.grid_step = opt.grid_step;
    cfg.s_max = opt.s_max;
    const fbridge::SweepTable table = fbridge::run_sweep(target, cfg);
    emit(opt.format == "json" ? fbridge::sweep_json(table, stamp) : fbridge::sweep_csv(table), opt.out);
    return ok;
  } catch (const fbridge::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return usage;
  } catch (const fbridge::DomainError& e) {
    std::cerr << "invalid parameters: " << e.what() << '\n';
    return usage;
  } catch (const std::bad_alloc&) {
    std::cerr << "out of memory\n";
    return numerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return numerical;
  }
}
