#include "pesp/assignment.h"
#include "pesp/exact_solver.h"
#include "pesp/one_station.h"

namespace pesp {
namespace {

DispatchResult Exact(Solution solution, const char* method) {
  DispatchResult out;
  out.lower_bound = out.upper_bound = solution.total_overlap;
  out.solution = std::move(solution);
  out.method = method;
  out.optimal = true;
  return out;
}

}  // namespace

DispatchResult Dispatch(const Instance& instance) {
  const OneStationView view = ViewOf(instance);
  if (HasFreeWaits(instance)) return Exact(SolveFreeWaiting(instance), "free");
  if (HasUniformTimes(instance)) return Exact(SolveUniformTimes(instance), "uniform");
  if (HasEqualTimes(instance)) return Exact(SolveEqualTimesDP(instance).solution, "dp");
  if (HasLargePeriod(instance) && view.n <= kMaxExactHamiltonianLines) {
    return Exact(SolveLargePeriod(instance), "large-period");
  }

  const std::int64_t upper = MaxWeightMatching(instance).weight;
  if (instance.events.size() <= kDispatchMaxExactEvents && instance.period <= kDispatchMaxExactPeriod) {
    SolveRequest request;
    request.instance = instance;
    request.objective = Objective::kMaxOverlap;
    SolveResult result = SolveExact(request);
    if (result.status == SolveStatus::kOptimal) return Exact(std::move(*result.solution), "exact");
  }

  DispatchResult out;
  out.upper_bound = upper;
  if (view.all_energy) {
    out.solution = SolveForMatching(instance, MergeHeuristic(instance).cycle.report.matching);
    out.method = "merge";
  } else {
    // No Hamiltonian machinery without all pairs: keep the bound matching
    // and accept whatever each cycle loses.
    out.solution = SolveForMatching(instance, MaxWeightMatching(instance).matching);
    out.method = "matching";
  }
  out.lower_bound = out.solution.total_overlap;
  out.optimal = out.lower_bound == out.upper_bound;
  return out;
}

}  // namespace pesp
