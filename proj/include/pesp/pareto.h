#pragma once

#include <cstdint>
#include <chrono>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pesp/exact_solver.h"

namespace pesp {

struct ParetoPoint {
  std::int64_t overlap = 0;
  Rational travel_time{0};
  Solution witness;
};

struct ParetoFront {
  // Ascending overlap, ascending travel time.
  std::vector<ParetoPoint> points;
};

using SolveHandle = std::function<SolveResult(const SolveRequest&)>;

// Thrown when a subordinate solve does not end with kOptimal.
class FrontError : public std::runtime_error {
 public:
  FrontError(std::int64_t epsilon, SolveStatus status, const std::string& what)
      : std::runtime_error(what), epsilon_(epsilon), status_(status) {}
  std::int64_t epsilon() const { return epsilon_; }  // -1 for the overlap maximization
  SolveStatus status() const { return status_; }

 private:
  std::int64_t epsilon_;
  SolveStatus status_;
};

struct FrontOptions {
  int threads = 1;
  std::optional<std::chrono::duration<double>> time_limit;  // per solve
};

// ε-constraint sweep: maximizes overlap once, then minimizes travel time
// for every floor 0..O_max and filters dominated points. Raw per-ε results
// are available through `raw` when non-null.
ParetoFront EnumerateFront(const Instance& instance, const SolveHandle& solve, const FrontOptions& options = {},
                           std::vector<ParetoPoint>* raw = nullptr);

// Keeps the nondominated points, sorted by overlap. Among points with the
// same objective pair the one with the lexicographically smallest
// timetable survives.
ParetoFront DominanceFilter(std::vector<ParetoPoint> points);

}  // namespace pesp
