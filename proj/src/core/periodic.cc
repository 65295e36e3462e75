#include "pesp/periodic.h"

#include <algorithm>
#include <array>
#include <string>

#include "pesp/errors.h"

namespace pesp {
namespace {

struct Piece {
  std::int64_t lo;
  std::int64_t hi;
};

// Splits [a, b]_T into at most two ordinary intervals inside [0, T].
int SplitPeriodic(std::int64_t a, std::int64_t b, std::int64_t period, std::array<Piece, 2>& out) {
  const std::int64_t lo = FloorMod(a, period);
  const std::int64_t hi = FloorMod(b, period);
  if (lo <= hi) {
    out[0] = {lo, hi};
    return 1;
  }
  out[0] = {0, hi};
  out[1] = {lo, period};
  return 2;
}

}  // namespace

int OverlapOfTension(int tension, int t_min, int t_max) {
  if (t_min <= 0 || t_min > t_max) {
    throw PreconditionError("overlap requires 0 < t_min <= t_max, got t_min=" + std::to_string(t_min) +
                            " t_max=" + std::to_string(t_max));
  }
  if (tension < 0) throw PreconditionError("energy tension must be nonnegative");
  return std::max(std::min({tension, t_min, t_max + t_min - tension}), 0);
}

int OverlapOracle(int dep_time, int arr_time, int accel_time, int brake_time, int period) {
  if (accel_time <= 0 || brake_time <= 0 || accel_time + brake_time >= period) {
    throw PreconditionError("overlap oracle requires 0 < t_ac, 0 < t_br, t_ac + t_br < T");
  }
  std::array<Piece, 2> accel{}, brake{};
  const int na = SplitPeriodic(dep_time, std::int64_t{dep_time} + accel_time, period, accel);
  const int nb = SplitPeriodic(std::int64_t{arr_time} - brake_time, arr_time, period, brake);
  std::int64_t length = 0;
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < nb; ++j) {
      length += std::max<std::int64_t>(0, std::min(accel[i].hi, brake[j].hi) - std::max(accel[i].lo, brake[j].lo));
    }
  }
  return static_cast<int>(length);
}

MultipleDistance DistanceToMultiple(std::int64_t low, std::int64_t high, std::int64_t period) {
  const std::int64_t below = FloorDiv(low, period) * period;
  const std::int64_t above = below == low ? low : below + period;
  if (above <= high) return {0, DeltaSide::kNone};
  const std::int64_t from_low = low - below;
  const std::int64_t from_high = above - high;
  if (from_low <= from_high) return {from_low, DeltaSide::kLower};
  return {from_high, DeltaSide::kUpper};
}

}  // namespace pesp
