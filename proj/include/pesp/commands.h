#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "pesp/exact_solver.h"
#include "pesp/generators.h"

namespace pesp {

enum ExitCode : int { kExitOk = 0, kExitInvalid = 1, kExitInfeasible = 2, kExitLimit = 3 };

struct Command {
  // validate | solve | energy | pareto | gen | export-lp | oracle
  std::string verb;
  std::string input;
  std::string output;  // empty: stdout
  std::string witnesses;  // pareto: optional JSON file with one solution per point

  Objective objective = Objective::kMinTravel;
  std::int64_t min_overlap = 0;
  // auto | exact | dp | free | uniform | large-period | merge | hamiltonian
  std::string method = "auto";
  std::optional<double> time_limit = 600.0;
  int threads = 1;

  // gen: artificial4 | example-hp | random
  std::string generator = "artificial4";
  RandomSpec random;
};

// Executes one command. Messages go to err, results to `output` or out.
int Run(const Command& command, std::ostream& out, std::ostream& err);

// Solution as JSON text (ids instead of indices).
std::string SolutionJson(const Instance& instance, const Solution& solution, const std::string& status,
                         const std::string& method, std::optional<std::pair<std::string, std::string>> bounds);

}  // namespace pesp
