#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mceif/experiments.hpp"

namespace {

using mceif::ExperimentSpec;
using mceif::Index;

// key=value config file; flags given on the command line win.
void apply_config_file(const std::string& path, ExperimentSpec& spec, const CLI::App& cmd) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + path);

  const auto flag_given = [&](const std::string& name) {
    const CLI::Option* opt = cmd.get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  const auto parse_grid = [](const std::string& s) {
    std::vector<Index> grid;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) grid.push_back(std::stoll(cell));
    return grid;
  };

  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--config", "expected key=value, got: " + line);
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    try {
      if (key == "seed" && !flag_given("--seed")) spec.seed = std::stoull(value);
      else if (key == "m" && !flag_given("--m")) spec.monte_carlo_samples = std::stoll(value);
      else if (key == "n" && !flag_given("--n")) spec.data_points = std::stoll(value);
      else if (key == "f" && !flag_given("--f")) spec.confounders = std::stoll(value);
      else if (key == "d" && !flag_given("--d")) spec.assets = std::stoll(value);
      else if (key == "replicates" && !flag_given("--replicates"))
        spec.replicates = std::stoll(value);
      else if (key == "m-grid" && !flag_given("--m-grid")) spec.m_grid = parse_grid(value);
      else if (key == "p-grid" && !flag_given("--p-grid")) spec.p_grid = parse_grid(value);
      else if (key == "out" && !flag_given("--out")) spec.output_dir = value;
      else if (key != "seed" && key != "m" && key != "n" && key != "f" && key != "d" &&
               key != "replicates" && key != "m-grid" && key != "p-grid" && key != "out")
        throw CLI::ValidationError("--config", "unknown key: " + key);
    } catch (const std::invalid_argument&) {
      throw CLI::ValidationError("--config", "bad value for " + key + ": " + value);
    }
  }
}

void add_experiment(CLI::App& app, ExperimentSpec& spec, std::string& config_path,
                    const std::string& name, const std::string& description,
                    std::vector<CLI::App*>& cmds) {
  CLI::App* cmd = app.add_subcommand(name, description);
  cmd->add_option("--seed", spec.seed, "base random seed");
  cmd->add_option("--m", spec.monte_carlo_samples, "Monte Carlo sample budget M");
  cmd->add_option("--n", spec.data_points, "observed data points N");
  if (name == "estimator-parity" || name == "estimator-mse")
    cmd->add_option("--f", spec.confounders, "confounder count F");
  if (name == "markowitz") cmd->add_option("--d", spec.assets, "asset count D");
  if (name != "density-compare")
    cmd->add_option("--replicates", spec.replicates, "replicate count");
  if (name == "mc-decay" || name == "density-compare")
    cmd->add_option("--m-grid", spec.m_grid, "comma-separated M grid")->delimiter(',');
  if (name == "dim-scaling")
    cmd->add_option("--p-grid", spec.p_grid, "comma-separated parameter-dimension grid")
        ->delimiter(',');
  cmd->add_option("--out", spec.output_dir, "output directory for csv/json files");
  cmd->add_option("--config", config_path, "key=value config file (flags win)");
  cmd->callback([&spec, cmd, name]() { spec.name = name; });
  cmds.push_back(cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo efficient-influence-function experiment runner"};
  app.require_subcommand(1);

  ExperimentSpec spec;
  std::string config_path;
  std::vector<CLI::App*> cmds;
  add_experiment(app, spec, config_path, "density-compare",
                 "empirical Gateaux sensitivity vs MC-EIF for the expected density", cmds);
  add_experiment(app, spec, config_path, "mc-decay",
                 "MC-EIF error decay across the Monte Carlo budget grid", cmds);
  add_experiment(app, spec, config_path, "dim-scaling",
                 "MC-EIF error vs parameter dimension at fixed budget", cmds);
  add_experiment(app, spec, config_path, "estimator-parity",
                 "one-step/DML/TMLE with MC-EIF vs the analytic influence function", cmds);
  add_experiment(app, spec, config_path, "estimator-mse",
                 "MSE of corrected estimators vs the plug-in on the causal GLM", cmds);
  add_experiment(app, spec, config_path, "markowitz",
                 "minimum-variance portfolio weights from an estimated covariance", cmds);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << '\n';
    return 1;
  }

  if (!config_path.empty()) {
    CLI::App* active = nullptr;
    for (CLI::App* c : cmds)
      if (c->parsed()) active = c;
    try {
      apply_config_file(config_path, spec, *active);
    } catch (const CLI::Error& e) {
      std::cerr << e.what() << '\n';
      return 1;
    }
  }

  try {
    const mceif::ExperimentResult result = mceif::run_experiment(spec);
    std::cout << result.summary.dump(2) << '\n';
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid spec: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
