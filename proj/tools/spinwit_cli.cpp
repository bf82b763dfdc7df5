// spinwit: thermal entanglement witnesses for spin-1/2 chains.
//
//   spinwit sweep    --model ising --n 10 --out ising.csv
//   spinwit crossing --model ising --lambda 1 --n 12 --quantity r
//   spinwit witness  --model heisenberg --n 4 --beta ground
//
// Exit codes: 0 success, 2 invalid configuration, 3 numerical or I/O failure.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinwit/sweep.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

// Model and grid options shared by every subcommand. Values stay strings so
// that they can be merged over a config file before validation.
struct CommonOptions {
  std::string config;
  std::map<std::string, std::string> flags;

  void attach(CLI::App& cmd) {
    // "--h" is the field flag, so help is long-form only.
    cmd.set_help_flag("--help", "print this help message and exit");
    cmd.add_option("--config", config, "key = value config file; flags override it");
    add(cmd, "--model", "model", "heisenberg | ising | xyz | general");
    add(cmd, "--n", "n", "number of spins (2..12)");
    add(cmd, "--boundary", "boundary", "periodic | open");
    add(cmd, "--beta-min", "beta_min", "lower end of the beta grid");
    add(cmd, "--beta-max", "beta_max", "upper end of the beta grid");
    add(cmd, "--steps", "steps", "number of beta grid points");
    add(cmd, "--grid", "grid", "linear | log");
    add(cmd, "--lambda", "lambda", "ising: comma-separated lambda values");
    add(cmd, "--j", "j", "coupling scale J (heisenberg, ising)");
    add(cmd, "--jx", "jx", "xx exchange (xyz, general)");
    add(cmd, "--jy", "jy", "yy exchange (xyz, general)");
    add(cmd, "--jz", "jz", "zz exchange (xyz, general)");
    add(cmd, "--jxy", "jxy", "xy exchange (xyz)");
    add(cmd, "--jyx", "jyx", "yx exchange (xyz)");
    add(cmd, "--h", "h", "z field coefficient h (xyz)");
    add(cmd, "--field", "field", "magnetic field B as bx,by,bz (general)");
    add(cmd, "--dm", "dm", "Dzyaloshinskii-Moriya vector A as ax,ay,az (general)");
    add(cmd, "--cvec", "cvec", "vector C as cx,cy,cz (general)");
    add(cmd, "--theta", "theta", "uniform site rotation exp(i theta.sigma) (xyz, general)");
    add(cmd, "--out", "out", "output file (default: standard output)");
  }

  void add(CLI::App& cmd, const std::string& flag, const std::string& key, const std::string& help) {
    cmd.add_option_function<std::string>(
        flag, [this, key](const std::string& v) { flags[key] = v; }, help);
  }

  [[nodiscard]] spinwit::ConfigValues merged() const {
    spinwit::ConfigValues values;
    if (!config.empty()) {
      values = spinwit::read_config_file(config);
    }
    for (const auto& [key, value] : flags) {
      values[key] = value;
    }
    return values;
  }
};

template <typename Write>
void write_output(const std::string& path, Write&& write) {
  if (path.empty()) {
    write(std::cout);
    std::cout.flush();
    if (!std::cout) {
      throw spinwit::IoError("write to standard output failed");
    }
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw spinwit::IoError("cannot open " + path + " for writing");
  }
  write(file);
  file.flush();
  if (!file) {
    throw spinwit::IoError("write to " + path + " failed");
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement witnesses for thermal spin-1/2 chains"};
  app.require_subcommand(1);

  CommonOptions sweep_opts;
  auto* sweep_cmd = app.add_subcommand("sweep", "witness values over a beta grid, as CSV");
  sweep_opts.attach(*sweep_cmd);

  CommonOptions crossing_opts;
  std::string quantity_text = "r";
  double tolerance = 1e-4;
  auto* crossing_cmd = app.add_subcommand("crossing", "entanglement-separability crossing in beta");
  crossing_opts.attach(*crossing_cmd);
  crossing_cmd->add_option("--quantity", quantity_text, "negativity | r | w")->capture_default_str();
  crossing_cmd->add_option("--tol", tolerance, "bracket width in beta")->capture_default_str();

  CommonOptions witness_opts;
  std::string beta_text = "ground";
  bool header = false;
  auto* witness_cmd = app.add_subcommand("witness", "single-point evaluation, one CSV row");
  witness_opts.attach(*witness_cmd);
  witness_cmd->add_option("--beta", beta_text, "inverse temperature or 'ground'")
      ->capture_default_str();
  witness_cmd->add_flag("--header", header, "print the CSV header first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*sweep_cmd) {
      const spinwit::SweepConfig cfg = spinwit::config_from_values(sweep_opts.merged());
      const auto rows = spinwit::sweep(cfg);
      write_output(cfg.out, [&](std::ostream& os) { spinwit::emit_csv(os, rows); });
    } else if (*crossing_cmd) {
      const spinwit::SweepConfig cfg = spinwit::config_from_values(crossing_opts.merged());
      const auto quantity = spinwit::parse_quantity(quantity_text);
      const auto results = spinwit::find_crossings(cfg, quantity, tolerance);
      write_output(cfg.out, [&](std::ostream& os) {
        os << spinwit::crossing_header() << '\n';
        for (const auto& r : results) {
          os << spinwit::format_crossing(r) << '\n';
        }
      });
    } else if (*witness_cmd) {
      const spinwit::SweepConfig cfg = spinwit::config_from_values(witness_opts.merged());
      const auto beta = spinwit::parse_beta(beta_text);
      const auto models = spinwit::resolve_models(cfg);
      if (models.size() != 1) {
        throw spinwit::ConfigError("witness evaluates one model; give exactly one lambda");
      }
      const spinwit::PointEvaluator evaluator(models.front());
      const auto row = spinwit::evaluate_row(evaluator, beta);
      write_output(cfg.out, [&](std::ostream& os) {
        if (header) {
          os << spinwit::csv_header() << '\n';
        }
        os << spinwit::format_row(row) << '\n';
      });
    }
  } catch (const spinwit::InvalidInput& e) {
    std::cerr << "spinwit: " << e.what() << '\n';
    return kExitConfig;
  } catch (const spinwit::Error& e) {
    std::cerr << "spinwit: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "spinwit: " << e.what() << '\n';
    return kExitRuntime;
  }
  return 0;
}
