#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace prudent;

int main(int argc, char** argv) {
  CLI::App app{"Prudent walk simulations, acceptance suite, plots and benchmarks", "prudent"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  io::RunConfig flags;
  app.add_option("--config", config_path, "key = value run configuration; flags override it");
  app.add_option("--seed", flags.seed, "Master seed");
  app.add_option("--replicas", flags.replicas, "Number of replicas")->check(CLI::PositiveNumber);
  app.add_option("--threads", flags.threads, "Worker threads (0 = all cores)");
  app.add_option("--out", flags.out, "Output path (- for stdout)");
  app.add_flag("--quick", flags.quick, "Reduced scale");
  app.add_flag("--svg", flags.svg, "Also write an SVG");

  auto* simulate = app.add_subcommand("simulate", "Simulate replicas and write trajectories");
  simulate->add_option("--variant", flags.variant, "prudent2d | corner | walk3d | effective | zprocess");
  simulate->add_option("-n,--n", flags.n, "Steps per replica (grid intervals for zprocess)");
  simulate->add_option("--checkpoints", flags.checkpoints, "walk3d: endpoint-norm checkpoints")
      ->delimiter(',');
  simulate->add_flag("--free-first-step", flags.free_first_step, "2D: first step uniform among four");

  double tamper = -1.0;
  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--tamper-stay", tamper)->group("")->check(CLI::Range(0.0, 0.999));

  cli::PlotOptions plot_opt;
  auto* plot = app.add_subcommand("plot", "Plot-ready CSV and optional SVG");
  plot->add_option("--input", plot_opt.input, "Input file")->required();
  plot->add_option("--kind", plot_opt.kind, "trajectory | angle | norm");
  plot->add_option("--index", plot_opt.index, "Trajectory record to draw");

  auto* bench = app.add_subcommand("bench", "Indexed vs naive stepping throughput");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? cli::kOk : cli::kUsageError;
  }

  try {
    io::RunConfig config;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw cli::UsageError("cannot read " + config_path);
      try {
        config = io::parse_config(in);
      } catch (const io::ParseError& e) {
        throw cli::UsageError(config_path + ": " + e.what());
      }
    }
    auto given = [&](const char* name) { return app.count(name) > 0; };
    if (given("--seed")) config.seed = flags.seed;
    if (given("--replicas")) config.replicas = flags.replicas;
    if (given("--threads")) config.threads = flags.threads;
    if (given("--out")) config.out = flags.out;
    if (given("--quick")) config.quick = true;
    if (given("--svg")) config.svg = true;
    if (simulate->parsed()) {
      if (simulate->count("--variant")) config.variant = flags.variant;
      if (simulate->count("--n")) config.n = flags.n;
      if (simulate->count("--checkpoints")) config.checkpoints = flags.checkpoints;
      if (simulate->count("--free-first-step")) config.free_first_step = true;
    }
    config.command = app.get_subcommands().front()->get_name();

    if (simulate->parsed()) return cli::cmd_simulate(config);
    if (verify->parsed()) return cli::cmd_verify(config, tamper);
    if (plot->parsed()) return cli::cmd_plot(config, plot_opt);
    if (bench->parsed()) return cli::cmd_bench(config);
  } catch (const cli::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kUsageError;
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << plot_opt.input << ": " << e.what() << '\n';
    return cli::kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kUsageError;
  }
  return cli::kUsageError;
}
