#include "pesp/assignment.h"

#include <algorithm>
#include <limits>
#include <map>

namespace pesp {

AssignmentSolver::AssignmentSolver(int size)
    : n_(size), u_(size + 1), v_(size + 1), min_slack_(size + 1), col_match_(size + 1), way_(size + 1),
      used_(size + 1) {}

std::int64_t AssignmentSolver::Solve(std::span<const std::int64_t> weights, std::vector<int>& row_to_col) {
  const int n = n_;
  row_to_col.assign(n, -1);
  if (n == 0) return 0;
  std::int64_t top = 0;
  for (std::int64_t w : weights) top = std::max(top, w);
  // Minimize top - w; rows and columns are 1-based, column 0 is the sentinel.
  auto cost = [&](int row, int col) { return top - weights[(row - 1) * n + (col - 1)]; };
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::fill(u_.begin(), u_.end(), 0);
  std::fill(v_.begin(), v_.end(), 0);
  std::fill(col_match_.begin(), col_match_.end(), 0);
  for (int row = 1; row <= n; ++row) {
    col_match_[0] = row;
    int col0 = 0;
    std::fill(min_slack_.begin(), min_slack_.end(), kInf);
    std::fill(used_.begin(), used_.end(), 0);
    do {
      used_[col0] = 1;
      const int row0 = col_match_[col0];
      std::int64_t delta = kInf;
      int col1 = 0;
      for (int col = 1; col <= n; ++col) {
        if (used_[col]) continue;
        const std::int64_t cur = cost(row0, col) - u_[row0] - v_[col];
        if (cur < min_slack_[col]) {
          min_slack_[col] = cur;
          way_[col] = col0;
        }
        if (min_slack_[col] < delta) {
          delta = min_slack_[col];
          col1 = col;
        }
      }
      for (int col = 0; col <= n; ++col) {
        if (used_[col]) {
          u_[col_match_[col]] += delta;
          v_[col] -= delta;
        } else {
          min_slack_[col] -= delta;
        }
      }
      col0 = col1;
    } while (col_match_[col0] != 0);
    do {
      const int col1 = way_[col0];
      col_match_[col0] = col_match_[col1];
      col0 = col1;
    } while (col0 != 0);
  }
  std::int64_t total = 0;
  for (int col = 1; col <= n; ++col) {
    const int row = col_match_[col];
    row_to_col[row - 1] = col - 1;
    total += weights[(row - 1) * n + (col - 1)];
  }
  return total;
}

EnergyMatching MaxWeightEnergyMatching(const Instance& instance, std::span<const std::int64_t> arc_weight) {
  std::map<std::size_t, int> dep_index, arr_index;
  for (std::size_t i = 0; i < instance.events.size(); ++i) {
    auto& index = instance.events[i].kind == EventKind::kDeparture ? dep_index : arr_index;
    const int next = static_cast<int>(index.size());
    index.emplace(i, next);
  }
  const int n = static_cast<int>(std::max(dep_index.size(), arr_index.size()));
  std::vector<std::int64_t> weights(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::size_t> arc_at(static_cast<std::size_t>(n) * n, std::numeric_limits<std::size_t>::max());
  for (std::size_t k = 0; k < instance.activities.size(); ++k) {
    const Activity& a = instance.activities[k];
    if (a.kind != ActivityKind::kEnergy) continue;
    const std::size_t cell = static_cast<std::size_t>(dep_index.at(a.tail)) * n + arr_index.at(a.head);
    if (arc_at[cell] == std::numeric_limits<std::size_t>::max() || arc_weight[k] > weights[cell]) {
      weights[cell] = arc_weight[k];
      arc_at[cell] = k;
    }
  }
  AssignmentSolver solver(n);
  std::vector<int> row_to_col;
  EnergyMatching result;
  result.weight = solver.Solve(weights, row_to_col);
  std::vector<std::size_t> chosen;
  for (int row = 0; row < n; ++row) {
    const std::size_t cell = static_cast<std::size_t>(row) * n + row_to_col[row];
    if (weights[cell] > 0) chosen.push_back(arc_at[cell]);
  }
  result.matching = MakeMatching(std::move(chosen));
  return result;
}

EnergyMatching MaxMinTimeMatching(const Instance& instance) {
  std::vector<std::int64_t> w(instance.activities.size(), 0);
  for (std::size_t k = 0; k < instance.activities.size(); ++k) {
    const Activity& a = instance.activities[k];
    if (a.kind == ActivityKind::kEnergy) w[k] = EnergyMinTime(instance, a);
  }
  return MaxWeightEnergyMatching(instance, w);
}

}  // namespace pesp
