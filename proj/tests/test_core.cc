#include <gtest/gtest.h>

#include <random>

#include "oracles.h"
#include "pesp/cycles.h"
#include "pesp/errors.h"
#include "pesp/evaluate.h"
#include "pesp/instance_io.h"
#include "pesp/periodic.h"

namespace pesp {
namespace {

// Hand-built copies of the two worked instances; core does not link the
// generators.
Instance FourTrain() {
  Instance inst;
  inst.period = 20;
  const char* names[] = {"A", "B", "C", "D"};
  for (const char* n : names) {
    inst.events.push_back({std::string(n) + "_arr", EventKind::kArrival, n, "S", 6, std::nullopt});
    inst.events.push_back({std::string(n) + "_dep", EventKind::kDeparture, n, "S", std::nullopt, 5});
  }
  const int wait_w[] = {40, 40, 20, 20};
  for (int k = 0; k < 4; ++k) {
    inst.activities.push_back({std::string("w_") + names[k], ActivityKind::kWait, std::size_t(2 * k),
                               std::size_t(2 * k + 1), 1, 4, Rational(wait_w[k])});
  }
  const int transfers[][3] = {{1, 3, 5}, {3, 1, 10}, {3, 0, 5}, {0, 2, 10}, {0, 3, 10}, {2, 1, 10}, {2, 0, 5}, {1, 2, 5}};
  for (const auto& t : transfers) {
    inst.activities.push_back({std::string("t_") + names[t[0]] + "_" + names[t[1]], ActivityKind::kTransfer,
                               std::size_t(2 * t[0]), std::size_t(2 * t[1] + 1), 3, 22, Rational(t[2])});
  }
  for (int j = 0; j < 4; ++j) {
    for (int i = 0; i < 4; ++i) {
      inst.activities.push_back({std::string("e_") + names[j] + "_" + names[i], ActivityKind::kEnergy,
                                 std::size_t(2 * j + 1), std::size_t(2 * i), 0, 19, Rational(0)});
    }
  }
  return inst;
}

Instance SixTrain() {
  Instance inst;
  inst.period = 15;
  const int ac[] = {12, 8, 6, 7, 5, 2};
  const int br[] = {8, 12, 7, 6, 2, 3};
  for (int k = 0; k < 6; ++k) {
    const std::string l = "L" + std::to_string(k + 1);
    inst.events.push_back({l + "_arr", EventKind::kArrival, l, "S", br[k], std::nullopt});
    inst.events.push_back({l + "_dep", EventKind::kDeparture, l, "S", std::nullopt, ac[k]});
    inst.activities.push_back({"w_" + l, ActivityKind::kWait, std::size_t(2 * k), std::size_t(2 * k + 1), 5, 5, Rational(0)});
  }
  for (int j = 0; j < 6; ++j) {
    for (int i = 0; i < 6; ++i) {
      inst.activities.push_back({"e_L" + std::to_string(j + 1) + "_L" + std::to_string(i + 1), ActivityKind::kEnergy,
                                 std::size_t(2 * j + 1), std::size_t(2 * i), 0, 14, Rational(0)});
    }
  }
  return inst;
}

Matching ById(const Instance& inst, std::initializer_list<const char*> ids) {
  std::vector<std::size_t> arcs;
  for (const char* id : ids) arcs.push_back(*inst.FindActivity(id));
  return MakeMatching(std::move(arcs));
}

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(ParseRational("12"), Rational(12));
  EXPECT_EQ(ParseRational("12.5"), Rational(25, 2));
  EXPECT_EQ(ParseRational("-0.25"), Rational(-1, 4));
  EXPECT_EQ(ParseRational("3/7"), Rational(3, 7));
  EXPECT_EQ(FormatRational(Rational(25, 2)), "12.5");
  EXPECT_EQ(FormatRational(Rational(1, 3)), "1/3");
  for (const Rational r : {Rational(7), Rational(-3, 8), Rational(2, 3), Rational(0)}) {
    EXPECT_EQ(ParseRational(FormatRational(r)), r);
  }
  EXPECT_THROW(ParseRational("1e3"), ParseError);
  EXPECT_THROW(ParseRational("1/0"), ParseError);
  EXPECT_THROW(ParseRational(""), ParseError);
}

TEST(Periodic, TensionExamples) {
  EXPECT_EQ(PeriodicTension(5, 6, 1, 20), 1);
  // (5 - 6 - 1) mod 20 + 1 = 18 + 1
  EXPECT_EQ(PeriodicTension(6, 5, 1, 20), 19);
  EXPECT_EQ(PeriodicTension(6, 6, 1, 20), 20);
  EXPECT_EQ(FloorMod(-7, 5), 3);
  EXPECT_EQ(FloorDiv(-7, 5), -2);
}

TEST(Periodic, OverlapExamples) {
  EXPECT_EQ(OverlapOfTension(0, 5, 6), 0);
  EXPECT_EQ(OverlapOfTension(5, 5, 6), 5);
  EXPECT_EQ(OverlapOfTension(11, 5, 6), 0);
  EXPECT_EQ(OverlapOfTension(2, 5, 6), 2);
  EXPECT_EQ(OverlapOracle(0, 0, 5, 6, 20), 0);
  EXPECT_EQ(OverlapOracle(0, 5, 5, 6, 20), 5);
}

TEST(Periodic, OverlapAgreesWithCellCount) {
  for (int T = 2; T <= 10; ++T) {
    for (int ac = 1; ac < T; ++ac) {
      for (int br = 1; ac + br < T; ++br) {
        for (int dep = 0; dep < T; ++dep) {
          for (int arr = 0; arr < T; ++arr) {
            const int want = testing::OverlapByCells(dep, arr, ac, br, T);
            ASSERT_EQ(OverlapOracle(dep, arr, ac, br, T), want);
            ASSERT_EQ(OverlapOfTension(PeriodicTension(dep, arr, 0, T), std::min(ac, br), std::max(ac, br)), want);
          }
        }
      }
    }
  }
}

TEST(Periodic, DistanceToMultiple) {
  EXPECT_EQ(DistanceToMultiple(24, 40, 20).distance, 0);
  EXPECT_EQ(DistanceToMultiple(24, 40, 20).side, DeltaSide::kNone);
  EXPECT_EQ(DistanceToMultiple(3, 3, 10).distance, 3);
  EXPECT_EQ(DistanceToMultiple(3, 3, 10).side, DeltaSide::kLower);
  EXPECT_EQ(DistanceToMultiple(3, 6, 7).distance, 1);
  EXPECT_EQ(DistanceToMultiple(3, 6, 7).side, DeltaSide::kUpper);
  EXPECT_EQ(DistanceToMultiple(5, 5, 10).side, DeltaSide::kLower);  // tie
  EXPECT_EQ(DistanceToMultiple(24, 40, 60).distance, 20);
}

TEST(Validate, FourTrainIsClean) { EXPECT_TRUE(ValidateInstance(FourTrain()).empty()); }

TEST(Validate, WideEnergyWindow) {
  Instance inst = FourTrain();
  inst.events[0].brake_time = 15;  // 5 + 15 = T
  const auto v = ValidateInstance(inst);
  ASSERT_EQ(v.size(), 4u);  // every energy arc into A_arr
  for (const auto& x : v) EXPECT_FALSE(x.blocking);
  EXPECT_TRUE(BlockingViolations(inst).empty());

  inst.events[0].brake_time = 20;
  EXPECT_EQ(BlockingViolations(inst).size(), 4u);
}

TEST(Validate, SingleEnergyWindowViolation) {
  Instance inst;
  inst.period = 10;
  inst.events.push_back({"a", EventKind::kArrival, "L", "S", 4, std::nullopt});
  inst.events.push_back({"d", EventKind::kDeparture, "L", "S", std::nullopt, 6});
  inst.activities.push_back({"w", ActivityKind::kWait, 0, 1, 0, 2, Rational(1)});
  inst.activities.push_back({"e", ActivityKind::kEnergy, 1, 0, 0, 9, Rational(0)});
  const auto v = ValidateInstance(inst);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].element, "e");
}

TEST(Validate, TransferMustBeFree) {
  Instance inst = FourTrain();
  inst.activities[*inst.FindActivity("t_B_D")].upper = 21;
  const auto v = ValidateInstance(inst);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].element, "t_B_D");
}

TEST(Validate, StructuralRules) {
  Instance inst = FourTrain();
  inst.activities[0].lower = 20;
  inst.activities[1].weight = Rational(-1);
  inst.events[2].accel_time = 3;
  const auto v = ValidateInstance(inst);
  // lower 20 breaks both the lower and the upper bound rule
  ASSERT_EQ(v.size(), 4u);
  EXPECT_EQ(v[0].element, "B_arr");  // events are checked first
  EXPECT_EQ(v[1].element, "w_A");
  EXPECT_EQ(v[2].element, "w_A");
  EXPECT_EQ(v[3].element, "w_B");
}

TEST(Evaluate, EmptyMatchingHasNoOverlap) {
  const Instance inst = FourTrain();
  const Solution s = Evaluate(inst, Matching{}, BuildBaselTimetable(inst, 0));
  EXPECT_EQ(s.total_overlap, 0);
  EXPECT_TRUE(s.overlaps.empty());
}

TEST(Evaluate, SixTrainDepictedOptimum) {
  // Known optimum; every matched arc reaches full overlap except e_L6_L5.
  const Instance inst = SixTrain();
  Timetable tt = Timetable::Unscheduled(12);
  const int arr[] = {10, 12, 2, 5, 10, 10};
  const int dep[] = {0, 2, 7, 10, 0, 0};
  for (int k = 0; k < 6; ++k) {
    tt.times[2 * k] = arr[k];
    tt.times[2 * k + 1] = dep[k];
  }
  const Matching m = ById(inst, {"e_L1_L2", "e_L2_L1", "e_L5_L4", "e_L4_L3", "e_L3_L6", "e_L6_L5"});
  const Solution s = Evaluate(inst, m, tt);
  EXPECT_EQ(s.total_overlap, 35);
  EXPECT_EQ(s.overlaps.at(*inst.FindActivity("e_L1_L2")), 12);
  EXPECT_EQ(s.overlaps.at(*inst.FindActivity("e_L6_L5")), 0);
  EXPECT_TRUE(CheckSolution(inst, s).empty());
}

TEST(Evaluate, InfeasibleNamesActivity) {
  const Instance inst = FourTrain();
  Timetable tt = BuildBaselTimetable(inst, 0);
  tt.times[1] = 10;  // A waits 10 > 4
  try {
    Evaluate(inst, Matching{}, tt);
    FAIL() << "expected InfeasibleTimetable";
  } catch (const InfeasibleTimetable& e) {
    EXPECT_EQ(e.activity_id(), "w_A");
  }
}

TEST(Evaluate, MalformedInputs) {
  const Instance inst = FourTrain();
  Timetable tt = BuildBaselTimetable(inst, 0);
  EXPECT_THROW(Evaluate(inst, ById(inst, {"e_A_B", "e_A_C"}), tt), PreconditionError);
  EXPECT_THROW(Evaluate(inst, ById(inst, {"w_A"}), tt), PreconditionError);
  tt.times[3] = kUnscheduled;
  EXPECT_THROW(Evaluate(inst, Matching{}, tt), PreconditionError);
}

TEST(Evaluate, CheckSolutionFindsTampering) {
  const Instance inst = FourTrain();
  Solution s = Evaluate(inst, Matching{}, BuildBaselTimetable(inst, 0));
  s.travel_time += 1;
  s.total_overlap = 3;
  EXPECT_EQ(CheckSolution(inst, s).size(), 2u);
}

TEST(Evaluate, ShiftInvariance) {
  const Instance inst = SixTrain();
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 50; ++rep) {
    Timetable tt = Timetable::Unscheduled(12);
    for (int k = 0; k < 6; ++k) {
      tt.times[2 * k] = static_cast<int>(rng() % 15);
      tt.times[2 * k + 1] = (tt.times[2 * k] + 5) % 15;
    }
    const Matching m = ById(inst, {"e_L1_L2", "e_L2_L3", "e_L3_L1", "e_L4_L4"});
    const Solution a = Evaluate(inst, m, tt);
    const int c = static_cast<int>(rng() % 15);
    for (int& t : tt.times) t = (t + c) % 15;
    const Solution b = Evaluate(inst, m, tt);
    EXPECT_EQ(a.tensions, b.tensions);
    EXPECT_EQ(a.total_overlap, b.total_overlap);
    EXPECT_EQ(a.travel_time, b.travel_time);
  }
}

TEST(Basel, UniformLowerBounds) {
  Instance inst = FourTrain();
  for (Activity& a : inst.activities) {
    if (a.kind == ActivityKind::kWait) a.lower = 2;
    if (a.kind == ActivityKind::kTransfer) {
      a.lower = 2;
      a.upper = 21;
    }
  }
  const Timetable tt = BuildBaselTimetable(inst, 0);
  for (std::size_t v = 0; v < inst.events.size(); ++v) {
    EXPECT_EQ(tt.times[v], inst.events[v].kind == EventKind::kArrival ? 0 : 2);
  }
  const Solution s = Evaluate(inst, Matching{}, tt);
  for (std::size_t k = 0; k < inst.activities.size(); ++k) {
    if (inst.activities[k].kind != ActivityKind::kEnergy) {
      EXPECT_EQ(s.tensions[k], 2);
    }
  }
  // Σ w · l^max with Σ w = 120 + 60.
  EXPECT_EQ(s.travel_time, Rational(360));
}

TEST(Basel, FourTrainHasNoOverlap) {
  // Lower bounds differ (1 and 3), so the Basel timetable is not
  // passenger-optimal: 3 · 180 = 540 against the optimum 500.
  const Instance inst = FourTrain();
  const Timetable tt = BuildBaselTimetable(inst, 7);
  const Solution s = Evaluate(inst, Matching{}, tt);
  EXPECT_EQ(s.travel_time, Rational(540));
  for (std::size_t k = 0; k < inst.activities.size(); ++k) {
    const Activity& a = inst.activities[k];
    if (a.kind == ActivityKind::kEnergy) {
      EXPECT_EQ(OverlapOfTension(s.tensions[k], 5, 6), 0);
    }
  }
}

TEST(Basel, WaitTooShort) {
  Instance inst = FourTrain();
  inst.activities[0].upper = 2;
  EXPECT_THROW(BuildBaselTimetable(inst, 0), PreconditionError);
}

TEST(Cycles, SelfPairsGiveTwoCycles) {
  const Instance inst = SixTrain();
  const Matching m = ById(inst, {"e_L1_L1", "e_L2_L2", "e_L3_L3", "e_L4_L4", "e_L5_L5", "e_L6_L6"});
  const auto comps = Decompose(inst, m);
  ASSERT_EQ(comps.size(), 6u);
  for (const auto& c : comps) {
    EXPECT_TRUE(c.is_cycle);
    EXPECT_EQ(c.arcs.size(), 2u);
  }
}

TEST(Cycles, EmptyMatchingGivesPaths) {
  const auto comps = Decompose(SixTrain(), Matching{});
  ASSERT_EQ(comps.size(), 6u);
  for (const auto& c : comps) {
    EXPECT_FALSE(c.is_cycle);
    EXPECT_EQ(c.arcs.size(), 1u);
  }
}

TEST(Cycles, SixTrainGreedyHasThreeCycles) {
  // Rank pairing of ac (2,5,6,7,8,12) with br (2,3,6,7,8,12).
  const Instance inst = SixTrain();
  const Matching m = ById(inst, {"e_L6_L5", "e_L5_L6", "e_L3_L4", "e_L4_L3", "e_L2_L1", "e_L1_L2"});
  const auto comps = Decompose(inst, m);
  EXPECT_EQ(comps.size(), 3u);
  for (const auto& c : comps) EXPECT_TRUE(c.is_cycle);
}

TEST(Cycles, FourTrainHamiltonianStats) {
  const Instance inst = FourTrain();
  const Matching m = ById(inst, {"e_A_B", "e_B_C", "e_C_D", "e_D_A"});
  const auto comps = Decompose(inst, m);
  ASSERT_EQ(comps.size(), 1u);
  const CycleStats st = CycleStatsOf(inst, comps[0]);
  EXPECT_EQ(st.low_sum, 24);
  EXPECT_EQ(st.high_sum, 40);
  EXPECT_EQ(st.delta, 0);
  EXPECT_EQ(st.weight, 20);
  EXPECT_EQ(BestCycleOverlap(inst, st), 20);
  const Solution s = Evaluate(inst, m, TimetableForMatching(inst, m));
  EXPECT_EQ(s.total_overlap, 20);
  for (auto [k, o] : s.overlaps) EXPECT_EQ(o, 5);
}

TEST(Cycles, LoneTrainCycleHasNoOverlap) {
  Instance inst;
  inst.period = 10;
  inst.events.push_back({"a", EventKind::kArrival, "L", "S", 3, std::nullopt});
  inst.events.push_back({"d", EventKind::kDeparture, "L", "S", std::nullopt, 3});
  inst.activities.push_back({"w", ActivityKind::kWait, 0, 1, 0, 0, Rational(0)});
  inst.activities.push_back({"e", ActivityKind::kEnergy, 1, 0, 0, 9, Rational(0)});
  const Matching m = MakeMatching({1});
  const auto comps = Decompose(inst, m);
  ASSERT_EQ(comps.size(), 1u);
  const CycleStats st = CycleStatsOf(inst, comps[0]);
  EXPECT_EQ(st.delta, 3);
  EXPECT_EQ(BestCycleOverlap(inst, st), 0);
  EXPECT_EQ(testing::CycleOracleEnumerate(inst, comps[0]), 0);
}

TEST(Cycles, PathsGetFullOverlap) {
  const Instance inst = SixTrain();
  const Matching m = ById(inst, {"e_L1_L2", "e_L2_L3", "e_L3_L4"});
  const auto comps = Decompose(inst, m);
  const Solution s = Evaluate(inst, m, TimetableForMatching(inst, m));
  // min(12,12) + min(8,7) + min(6,6)
  EXPECT_EQ(s.total_overlap, 12 + 7 + 6);
  EXPECT_THROW(CycleStatsOf(inst, comps.front().is_cycle ? comps.back() : comps.front()), PreconditionError);
}

TEST(Cycles, RandomCyclesMatchBothOracles) {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 40; ++rep) {
    const auto c = testing::RandomCycle(rng, 3, 9);
    const auto comps = Decompose(c.instance, c.matching);
    ASSERT_EQ(comps.size(), 1u);
    const std::int64_t want = testing::CycleOracleEnumerate(c.instance, comps[0]);
    EXPECT_EQ(testing::CycleOracleResidue(c.instance, comps[0]), want);
    EXPECT_EQ(BestCycleOverlap(c.instance, CycleStatsOf(c.instance, comps[0])), want);
    EXPECT_EQ(Evaluate(c.instance, c.matching, TimetableForMatching(c.instance, c.matching)).total_overlap, want);
  }
}

TEST(InstanceIo, RoundTrip) {
  const Instance inst = FourTrain();
  const std::string text = SerializeInstance(inst);
  EXPECT_EQ(SerializeInstance(ParseInstance(text)), text);
  EXPECT_EQ(text.back(), '\n');
  const Instance back = ParseInstance(text);
  EXPECT_EQ(back.period, 20);
  EXPECT_EQ(back.activities.size(), inst.activities.size());
  EXPECT_EQ(back.activities[0].weight, Rational(40));
}

TEST(InstanceIo, Errors) {
  const std::string text = SerializeInstance(FourTrain());
  EXPECT_THROW(ParseInstance(text.substr(0, text.size() / 2)), ParseError);
  EXPECT_THROW(ParseInstance("{}"), ParseError);
  std::string dangling = text;
  dangling.replace(dangling.find("\"tail\": \"A_arr\""), 15, "\"tail\": \"Z_arr\"");
  EXPECT_THROW(ParseInstance(dangling), ParseError);
  std::string kind = text;
  kind.replace(kind.find("\"wait\""), 6, "\"walk\"");
  EXPECT_THROW(ParseInstance(kind), ParseError);
}

}  // namespace
}  // namespace pesp
