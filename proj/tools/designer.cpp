// designer: command-line front end emitting deterministic CSV/JSON datasets
// for the coupling/error/volume/feasibility analyses and the cross-talk and
// scheduling simulations.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qmem/params_io.hpp"
#include "qmem/reports.hpp"
#include "qmem/schedule.hpp"

namespace {

constexpr int kExitConfig = 2;   // bad arguments, files, schema, ranges
constexpr int kExitCompute = 3;  // failures inside the analyses

struct CommonOptions {
  std::string params_path;
  std::string out_path;
  std::string regime = "mechanical";
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--params", opts.params_path, "JSON parameter file")
      ->required();
  cmd->add_option("--out", opts.out_path, "output file path")->required();
  cmd->add_option("--regime", opts.regime,
                  "mechanical | microwave | custom (microwave substitutes "
                  "gamma_r = gamma_q)")
      ->check(CLI::IsMember({"mechanical", "microwave", "custom"}));
}

qmem::LoadedParams load(const CommonOptions& opts) {
  qmem::LoadedParams loaded = qmem::load_params_file(opts.params_path);
  if (opts.regime == "microwave") {
    loaded.system = qmem::SystemParams::from_rates(
        loaded.system.omega0, loaded.system.gamma_q, loaded.system.gamma_q,
        loaded.system.crosstalk_a, loaded.system.n_resonators);
  }
  for (const std::string& w : loaded.system.warnings())
    std::cerr << "warning: " << w << '\n';
  return loaded;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << content;
  if (!out) throw std::runtime_error("failed writing output file: " + path);
}

// Loading and range validation are config errors; everything after is a
// computation error. Output goes to a string first so a failed run never
// leaves a partial file.
int run(const CommonOptions& opts,
        const std::function<std::string(const qmem::LoadedParams&)>& compute) {
  qmem::LoadedParams loaded;
  try {
    loaded = load(opts);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  std::string content;
  try {
    content = compute(loaded);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "computation error: " << e.what() << '\n';
    return kExitCompute;
  }
  try {
    write_file(opts.out_path, content);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "computation error: " << e.what() << '\n';
    return kExitCompute;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Design analysis for a superconducting processor with "
      "phononic-crystal resonator storage"};
  app.require_subcommand(1);

  CommonOptions optimize_opts, volume_opts, feasibility_opts, simulate_opts,
      schedule_opts;
  int opt_n_min = 2, opt_n_max = 100;
  int feas_n_min = 2, feas_n_max = 500;
  double vol_n_min = 2.0, vol_n_max = 500.0;
  std::string pulse = "both";

  CLI::App* optimize = app.add_subcommand(
      "optimize", "per-N optimal coupling and error (CSV)");
  add_common(optimize, optimize_opts);
  optimize->add_option("--n-min", opt_n_min, "smallest N");
  optimize->add_option("--n-max", opt_n_max, "largest N");

  CLI::App* volume =
      app.add_subcommand("volume", "quantum-volume balance report (JSON)");
  add_common(volume, volume_opts);
  volume->add_option("--n-min", vol_n_min, "lower end of the balance range");
  volume->add_option("--n-max", vol_n_max, "upper end of the balance range");

  CLI::App* feasibility = app.add_subcommand(
      "feasibility", "capacitance bound curves (CSV) + closure on stdout");
  add_common(feasibility, feasibility_opts);
  feasibility->add_option("--n-min", feas_n_min, "smallest N");
  feasibility->add_option("--n-max", feas_n_max, "largest N");

  CLI::App* simulate = app.add_subcommand(
      "simulate", "cross-talk sweep over pulse shapes and g/delta (CSV)");
  add_common(simulate, simulate_opts);
  simulate->add_option("--pulse", pulse, "rect | cosine | both")
      ->check(CLI::IsMember({"rect", "cosine", "both"}));

  CLI::App* schedule = app.add_subcommand(
      "schedule", "sequential-layer timeline at the optimal coupling (JSON)");
  add_common(schedule, schedule_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  if (optimize->parsed()) {
    return run(optimize_opts, [&](const qmem::LoadedParams& loaded) {
      return qmem::reports::optimize_csv(loaded.system, opt_n_min, opt_n_max);
    });
  }
  if (volume->parsed()) {
    return run(volume_opts, [&](const qmem::LoadedParams& loaded) {
      return qmem::reports::volume_report(loaded.system, vol_n_min, vol_n_max)
                 .dump(2) +
             '\n';
    });
  }
  if (feasibility->parsed()) {
    return run(feasibility_opts, [&](const qmem::LoadedParams& loaded) {
      const qmem::FeasibilityScan scan = qmem::feasibility_scan(
          loaded.hardware, loaded.system, feas_n_min, feas_n_max);
      std::cout << qmem::reports::feasibility_closure_report(scan).dump(2)
                << '\n';
      return qmem::reports::feasibility_csv(scan);
    });
  }
  if (simulate->parsed()) {
    return run(simulate_opts, [&](const qmem::LoadedParams& loaded) {
      std::vector<qmem::PulseShape> shapes;
      if (pulse == "rect" || pulse == "both")
        shapes.push_back(qmem::PulseShape::Rectangular);
      if (pulse == "cosine" || pulse == "both")
        shapes.push_back(qmem::PulseShape::CosineRamp);
      return qmem::reports::simulate_csv(loaded.system, shapes,
                                         {10.0, 20.0, 50.0});
    });
  }
  if (schedule->parsed()) {
    return run(schedule_opts, [&](const qmem::LoadedParams& loaded) {
      const double g = qmem::optimal_coupling(loaded.system);
      return qmem::reports::schedule_report(loaded.system, g).dump(2) + '\n';
    });
  }
  return kExitConfig;
}
