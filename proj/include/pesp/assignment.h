#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pesp/model.h"

namespace pesp {

// Maximum-weight assignment on a square matrix with nonnegative entries
// (Hungarian method with potentials, O(n^3)). Buffers are reused between
// calls, so one instance per thread is the intended use.
class AssignmentSolver {
 public:
  explicit AssignmentSolver(int size);

  int size() const { return n_; }

  // weights is row-major n*n. Fills row_to_col and returns the optimal sum.
  std::int64_t Solve(std::span<const std::int64_t> weights, std::vector<int>& row_to_col);

 private:
  int n_;
  std::vector<std::int64_t> u_, v_, min_slack_;
  std::vector<int> col_match_, way_;
  std::vector<char> used_;
};

struct EnergyMatching {
  Matching matching;
  std::int64_t weight = 0;
};

// Maximum-weight matching on the bipartite graph (departures, arrivals,
// energy activities). arc_weight is indexed by activity index; only energy
// activities are read. Arcs of weight 0 are never selected.
EnergyMatching MaxWeightEnergyMatching(const Instance& instance, std::span<const std::int64_t> arc_weight);

// Maximum-weight matching w.r.t. t^min: an upper bound on the total overlap
// of every solution.
EnergyMatching MaxMinTimeMatching(const Instance& instance);

}  // namespace pesp
