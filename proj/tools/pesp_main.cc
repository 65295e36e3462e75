#include <iostream>

#include "CLI11.hpp"
#include "pesp/commands.h"
#include "pesp/generators.h"

int main(int argc, char** argv) {
  CLI::App app{"Periodic timetabling with brake-traction overlap"};
  app.require_subcommand(1);
  pesp::Command cmd;

  std::string objective = "min-travel";
  double time_limit = 600.0;
  std::string mode = "bounded";

  auto add_io = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) sub->add_option("input", cmd.input, "Instance file")->required()->check(CLI::ExistingFile);
    sub->add_option("-o,--output", cmd.output, "Output file (default stdout)");
  };
  auto add_solver_flags = [&](CLI::App* sub) {
    sub->add_option("--objective", objective, "min-travel or max-overlap")
        ->check(CLI::IsMember({"min-travel", "max-overlap"}));
    sub->add_option("--min-overlap", cmd.min_overlap, "Overlap floor for min-travel")->check(CLI::NonNegativeNumber);
    sub->add_option("--time-limit", time_limit, "Seconds per solve (0 = unlimited)")->check(CLI::NonNegativeNumber);
  };

  auto* validate = app.add_subcommand("validate", "Check an instance");
  add_io(validate, true);

  auto* solve = app.add_subcommand("solve", "Optimize one objective");
  add_io(solve, true);
  add_solver_flags(solve);
  solve->add_option("--method", cmd.method, "Algorithm")
      ->check(CLI::IsMember({"auto", "exact", "dp", "free", "uniform", "large-period", "merge", "hamiltonian"}));

  auto* energy = app.add_subcommand("energy", "Maximize overlap on a one-station network");
  add_io(energy, true);

  auto* pareto = app.add_subcommand("pareto", "Pareto front of overlap vs. travel time (CSV)");
  add_io(pareto, true);
  pareto->add_option("--witnesses", cmd.witnesses, "JSON file receiving one solution per point");
  pareto->add_option("--time-limit", time_limit, "Seconds per solve (0 = unlimited)")->check(CLI::NonNegativeNumber);
  pareto->add_option("--threads", cmd.threads, "Parallel solves")->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("gen", "Write a generated instance");
  add_io(gen, false);
  gen->add_option("generator", cmd.generator, "artificial4, example-hp or random")
      ->check(CLI::IsMember({"artificial4", "example-hp", "random"}));
  gen->add_option("--seed", cmd.random.seed, "Random seed");
  gen->add_option("--lines", cmd.random.n, "Number of lines")->check(CLI::PositiveNumber);
  gen->add_option("--period", cmd.random.period, "Period T")->check(CLI::PositiveNumber);
  gen->add_option("--time-min", cmd.random.time_range.first);
  gen->add_option("--time-max", cmd.random.time_range.second);
  gen->add_option("--wait-min", cmd.random.wait_range.first);
  gen->add_option("--wait-max", cmd.random.wait_range.second);
  gen->add_option("--mode", mode, "free, bounded, equalTimes or uniformAc")
      ->check(CLI::IsMember({"free", "bounded", "equalTimes", "uniformAc"}));

  auto* lp = app.add_subcommand("export-lp", "Write the MIP in LP format");
  add_io(lp, true);
  lp->add_option("--min-overlap", cmd.min_overlap, "Overlap floor")->check(CLI::NonNegativeNumber);

  auto* oracle = app.add_subcommand("oracle", "Brute-force optimum (small instances only)");
  add_io(oracle, true);
  add_solver_flags(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : pesp::kExitInvalid;
  }
  cmd.verb = app.get_subcommands().front()->get_name();
  cmd.objective = objective == "max-overlap" ? pesp::Objective::kMaxOverlap : pesp::Objective::kMinTravel;
  cmd.time_limit = time_limit > 0 ? std::optional<double>(time_limit) : std::nullopt;
  cmd.random.mode = *pesp::ParseRandomMode(mode);
  return pesp::Run(cmd, std::cout, std::cerr);
}
