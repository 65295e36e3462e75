// Acceptance run: one PASS/FAIL line per criterion, exit 1 on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "oracles.h"
#include "pesp/brute_force.h"
#include "pesp/cycles.h"
#include "pesp/evaluate.h"
#include "pesp/exact_solver.h"
#include "pesp/generators.h"
#include "pesp/one_station.h"
#include "pesp/pareto.h"
#include "pesp/periodic.h"

namespace {

using namespace pesp;
using Clock = std::chrono::steady_clock;

int failures = 0;

double Seconds(Clock::time_point since) { return std::chrono::duration<double>(Clock::now() - since).count(); }

void Report(int id, bool ok, const std::string& detail) {
  std::printf("criterion %d: %s  %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  failures += !ok;
}

SolveRequest Request(const Instance& inst, Objective obj, std::int64_t floor = 0) {
  SolveRequest r;
  r.instance = inst;
  r.objective = obj;
  r.overlap_floor = floor;
  return r;
}

// Same status and objective value; timetables may differ on ties.
bool SameOutcome(const SolveResult& a, const SolveResult& b, Objective obj) {
  if (a.status != b.status) return false;
  if (a.status != SolveStatus::kOptimal) return true;
  return ObjectiveValue(*a.solution, obj) == ObjectiveValue(*b.solution, obj);
}

void FourTrainFront() {
  const auto start = Clock::now();
  std::vector<ParetoPoint> raw;
  const ParetoFront front = EnumerateFront(GenArtificial4(), SolveExact, {}, &raw);
  const double secs = Seconds(start);
  auto travel_at = [&](std::int64_t eps) { return raw.at(eps).travel_time; };
  const bool ok = raw.size() == 21 && travel_at(0) == Rational(500) && travel_at(16) == Rational(720) &&
                  travel_at(20) == Rational(1010) &&
                  front.points.back().overlap == 20 && secs < 60.0;
  char buf[200];
  std::snprintf(buf, sizeof buf, "eps 0/16/20 -> %s/%s/%s, max overlap %lld, %zu front points, %.2f s",
                FormatRational(travel_at(0)).c_str(), FormatRational(travel_at(16)).c_str(),
                FormatRational(travel_at(20)).c_str(), static_cast<long long>(raw.size() - 1), front.points.size(),
                secs);
  Report(1, ok, buf);
}

void SixTrain() {
  const Instance inst = GenExampleHP();
  auto t0 = Clock::now();
  const std::int64_t greedy = GreedyMatching(inst).weight;
  const double s_greedy = Seconds(t0);
  t0 = Clock::now();
  const SolveResult exact = SolveExact(Request(inst, Objective::kMaxOverlap));
  const double s_exact = Seconds(t0);
  t0 = Clock::now();
  const std::int64_t single = SolveSingleCycleVariant(inst).total_overlap;
  const double s_single = Seconds(t0);
  const std::int64_t best = exact.status == SolveStatus::kOptimal ? exact.solution->total_overlap : -1;
  const bool ok = greedy == 38 && best == 35 && single == 34 && s_greedy < 10 && s_exact < 10 && s_single < 10;
  char buf[200];
  std::snprintf(buf, sizeof buf, "greedy %lld (%.3f s), exact %lld (%.3f s), single cycle %lld (%.3f s)",
                static_cast<long long>(greedy), s_greedy, static_cast<long long>(best), s_exact,
                static_cast<long long>(single), s_single);
  Report(2, ok, buf);
}

void OracleEquivalence() {
  std::mt19937_64 rng(20240601);
  int mismatches = 0, solves = 0;
  for (int k = 0; k < 200; ++k) {
    RandomSpec spec;
    spec.seed = rng();
    spec.n = 1 + k % 3;
    spec.mode = static_cast<RandomMode>((k / 3) % 4);
    spec.period = 5 + static_cast<int>(rng() % 6);
    spec.time_range = {1, std::min(3, (spec.period - 1) / 2)};
    const int wl = static_cast<int>(rng() % 3);
    spec.wait_range = {wl, std::min(spec.period - 1, wl + static_cast<int>(rng() % 4))};
    const Instance inst = GenRandom(spec);

    const SolveResult bm = BruteForce(Request(inst, Objective::kMaxOverlap));
    const SolveResult em = SolveExact(Request(inst, Objective::kMaxOverlap));
    ++solves;
    if (!SameOutcome(bm, em, Objective::kMaxOverlap)) {
      ++mismatches;
      std::printf("  mismatch: seed %llu max overlap\n", static_cast<unsigned long long>(spec.seed));
      continue;
    }
    const std::int64_t top = bm.status == SolveStatus::kOptimal ? bm.solution->total_overlap : -1;
    for (std::int64_t eps = 0; eps <= top + 1; ++eps) {
      ++solves;
      const SolveResult b = BruteForce(Request(inst, Objective::kMinTravel, eps));
      const SolveResult e = SolveExact(Request(inst, Objective::kMinTravel, eps));
      if (!SameOutcome(b, e, Objective::kMinTravel) || (e.solution && !CheckSolution(inst, *e.solution).empty())) {
        ++mismatches;
        std::printf("  mismatch: seed %llu eps %lld\n", static_cast<unsigned long long>(spec.seed),
                    static_cast<long long>(eps));
      }
    }
  }
  Report(3, mismatches == 0,
         "200 instances, " + std::to_string(solves) + " paired solves, " + std::to_string(mismatches) + " mismatches");
}

void OverlapFormula() {
  long long tuples = 0, mismatches = 0, cell_mismatches = 0;
  for (int T = 1; T <= 15; ++T) {
    for (int ac = 1; ac < T; ++ac) {
      for (int br = 1; ac + br < T; ++br) {
        for (int dep = 0; dep < T; ++dep) {
          for (int arr = 0; arr < T; ++arr) {
            ++tuples;
            const int x = PeriodicTension(dep, arr, 0, T);
            const int formula = OverlapOfTension(x, std::min(ac, br), std::max(ac, br));
            const int oracle = OverlapOracle(dep, arr, ac, br, T);
            mismatches += formula != oracle;
            cell_mismatches += formula != testing::OverlapByCells(dep, arr, ac, br, T);
          }
        }
      }
    }
  }
  Report(4, mismatches == 0 && cell_mismatches == 0,
         std::to_string(tuples) + " tuples (T <= 15), " + std::to_string(mismatches) + " mismatches vs interval oracle, " +
             std::to_string(cell_mismatches) + " vs cell count");
}

void CycleConstruction() {
  std::mt19937_64 rng(777);
  int mismatches = 0;
  for (int k = 0; k < 100; ++k) {
    const testing::CycleCase c = testing::RandomCycle(rng, 3, 12);
    const auto comps = Decompose(c.instance, c.matching);
    const std::int64_t want = testing::CycleOracleEnumerate(c.instance, comps.at(0));
    std::int64_t got = -1;
    try {
      got = Evaluate(c.instance, c.matching, BuildCycleTimetable(c.instance, c.matching, comps.at(0))).total_overlap;
    } catch (const std::exception& e) {
      std::printf("  cycle %d: %s\n", k, e.what());
    }
    if (got != want) {
      ++mismatches;
      std::printf("  cycle %d: built %lld, enumeration %lld\n", k, static_cast<long long>(got),
                  static_cast<long long>(want));
    }
  }
  Report(5, mismatches == 0, "100 cycles (<= 3 energy arcs, T <= 12), " + std::to_string(mismatches) + " mismatches");
}

void EqualTimesDP() {
  std::mt19937_64 rng(4242);
  int mismatches = 0, crossing = 0, brute = 0, oracle = 0;
  for (int k = 0; k < 100; ++k) {
    RandomSpec spec;
    spec.seed = rng();
    spec.n = 1 + k % 6;
    spec.period = 3 + static_cast<int>(rng() % 10);
    spec.time_range = {1, std::max(1, std::min(5, (spec.period - 1) / 2))};
    spec.wait_range = {0, std::min(spec.period - 1, static_cast<int>(rng() % 4))};
    spec.mode = RandomMode::kEqualTimes;
    spec.transfers = k % 2 == 0;
    const Instance inst = GenRandom(spec);
    const EqualTimesResult dp = SolveEqualTimesDP(inst);
    std::int64_t want;
    if (inst.events.size() <= kBruteForceMaxEvents && inst.period <= kBruteForceMaxPeriod) {
      want = BruteForce(Request(inst, Objective::kMaxOverlap)).solution->total_overlap;
      ++brute;
    } else {
      want = testing::MatchingOracleMaxOverlap(inst);
      ++oracle;
    }
    if (dp.optimum != want || dp.solution.total_overlap != want || !CheckSolution(inst, dp.solution).empty()) {
      ++mismatches;
      std::printf("  seed %llu: dp %lld, reference %lld\n", static_cast<unsigned long long>(spec.seed),
                  static_cast<long long>(dp.optimum), static_cast<long long>(want));
    }
    crossing += HasCrossingCycles(inst, dp.solution.matching);
  }
  Report(6, mismatches == 0 && crossing == 0,
         "100 instances (" + std::to_string(brute) + " brute force, " + std::to_string(oracle) +
             " matching oracle for n = 5..6), " + std::to_string(mismatches) + " mismatches, " +
             std::to_string(crossing) + " with crossing cycles");
}

void MergeBound() {
  std::mt19937_64 rng(31337);
  int violations = 0, not_hamiltonian = 0;
  std::int64_t worst_gap = 0;
  for (int k = 0; k < 50; ++k) {
    RandomSpec spec;
    spec.seed = rng();
    spec.n = 2 + k % 7;
    spec.period = 50;
    spec.time_range = {1, 24};
    spec.mode = static_cast<RandomMode>(k % 4);
    const Instance inst = GenRandom(spec);
    const OneStationView v = ViewOf(inst);
    const MergeTrace t = MergeHeuristic(inst);
    const int bound = std::min(*std::max_element(v.accel.begin(), v.accel.end()),
                               *std::max_element(v.brake.begin(), v.brake.end()));
    const std::int64_t gap = t.greedy_weight - t.cycle.PathWeight();
    worst_gap = std::max(worst_gap, gap - bound);
    violations += gap > bound;
    const auto comps = Decompose(inst, t.cycle.report.matching);
    not_hamiltonian += comps.size() != 1 || !comps[0].is_cycle;
  }
  Report(7, violations == 0 && not_hamiltonian == 0,
         "50 specs (n <= 8), " + std::to_string(violations) + " violations, max(gap - bound) = " +
             std::to_string(worst_gap));
}

void SpecialCases() {
  struct Case {
    const char* name;
    std::function<bool(const Instance&)> qualifies;
    std::function<Solution(const Instance&)> solve;
    RandomMode mode;
    int max_lines, min_period, max_period;
    std::pair<int, int> times, waits;
  };
  const Case cases[] = {
      {"free", HasFreeWaits, SolveFreeWaiting, RandomMode::kFree, 3, 7, 10, {1, 3}, {0, 3}},
      {"uniform", HasUniformTimes, SolveUniformTimes, RandomMode::kUniformAc, 4, 7, 10, {1, 3}, {0, 3}},
      {"large-period", HasLargePeriod, SolveLargePeriod, RandomMode::kBounded, 3, 8, 12, {1, 2}, {0, 1}},
  };
  bool ok = true;
  std::string detail;
  std::mt19937_64 rng(8080);
  for (const Case& c : cases) {
    int found = 0, tries = 0, mismatches = 0;
    while (found < 50 && tries < 20000) {
      ++tries;
      RandomSpec spec;
      spec.seed = rng();
      spec.n = 1 + static_cast<int>(rng() % c.max_lines);
      spec.period = c.min_period + static_cast<int>(rng() % (c.max_period - c.min_period + 1));
      spec.time_range = c.times;
      spec.wait_range = c.waits;
      spec.mode = c.mode;
      const Instance inst = GenRandom(spec);
      if (!c.qualifies(inst)) continue;
      ++found;
      const Solution s = c.solve(inst);
      const std::int64_t want = BruteForce(Request(inst, Objective::kMaxOverlap)).solution->total_overlap;
      if (s.total_overlap != want || !CheckSolution(inst, s).empty()) {
        ++mismatches;
        std::printf("  %s seed %llu: %lld vs brute force %lld\n", c.name, static_cast<unsigned long long>(spec.seed),
                    static_cast<long long>(s.total_overlap), static_cast<long long>(want));
      }
    }
    ok = ok && found == 50 && mismatches == 0;
    detail += std::string(c.name) + " " + std::to_string(found) + " instances/" + std::to_string(mismatches) +
              " mismatches; ";
  }
  Report(8, ok, detail);
}

void OstkreuzBound() {
  OneStationSpec spec;
  spec.n = 14;
  spec.accel_times.assign(14, 4);
  spec.brake_times.assign(14, 5);
  spec.wait_bounds.assign(14, {5, 60});
  const Instance inst = BuildOneStation(spec, 300);
  const std::int64_t w = MaxWeightMatching(inst).weight;
  Report(9, w == 56,
         "max-weight matching bound " + std::to_string(w) +
             " (= 14 * 4); the published travel time and solver runtimes for the full station are not reproduced");
}

}  // namespace

int main() {
  FourTrainFront();
  SixTrain();
  OracleEquivalence();
  OverlapFormula();
  CycleConstruction();
  EqualTimesDP();
  MergeBound();
  SpecialCases();
  OstkreuzBound();
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
