#pragma once

#include <cstdint>

namespace pesp {

// Mathematical modulo: result in [0, period).
constexpr std::int64_t FloorMod(std::int64_t value, std::int64_t period) {
  std::int64_t r = value % period;
  return r < 0 ? r + period : r;
}

constexpr std::int64_t FloorDiv(std::int64_t value, std::int64_t period) {
  return (value - FloorMod(value, period)) / period;
}

// Periodic tension (head - tail - lower) mod T + lower, in [lower, lower+T-1].
constexpr int PeriodicTension(int tail_time, int head_time, int lower, int period) {
  return static_cast<int>(FloorMod(head_time - tail_time - lower, period)) + lower;
}

// Brake-traction overlap on an energy activity with tension x:
// max{min{x, t_min, t_max + t_min - x}, 0}. Requires 0 < t_min <= t_max.
int OverlapOfTension(int tension, int t_min, int t_max);

// Same quantity computed from first principles: the length of the
// intersection of the periodic intervals [dep, dep + t_ac]_T and
// [arr - t_br, arr]_T. Requires t_ac + t_br < T.
int OverlapOracle(int dep_time, int arr_time, int accel_time, int brake_time, int period);

enum class DeltaSide { kNone, kLower, kUpper };

struct MultipleDistance {
  std::int64_t distance = 0;
  // Which end of the interval realizes the distance; kNone when the
  // interval contains a multiple of the period. Ties go to kLower.
  DeltaSide side = DeltaSide::kNone;
};

// d([low, high], T*Z) for low <= high.
MultipleDistance DistanceToMultiple(std::int64_t low, std::int64_t high, std::int64_t period);

}  // namespace pesp
