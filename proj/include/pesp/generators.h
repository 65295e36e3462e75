#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "pesp/model.h"

namespace pesp {

// Four lines A..D at one station, T = 20, waits [1, 4], transfers with
// lower bound 3, t^ac = 5, t^br = 6 and all 16 energy pairs.
Instance GenArtificial4();

// Six lines, T = 15, waits fixed at 5, all energy pairs; (t^ac, t^br) per
// line: (12,8) (8,12) (6,7) (7,6) (5,2) (2,3). Several pairs have
// t^ac + t^br >= T, which ValidateInstance reports as non-blocking.
Instance GenExampleHP();

enum class RandomMode { kFree, kBounded, kEqualTimes, kUniformAc };

std::optional<RandomMode> ParseRandomMode(std::string_view text);
std::string_view ToString(RandomMode mode);

struct RandomSpec {
  std::uint64_t seed = 0;
  int n = 3;
  int period = 10;
  std::pair<int, int> time_range{1, 3};  // t^ac, t^br
  std::pair<int, int> wait_range{0, 2};  // wait lower and upper bounds
  RandomMode mode = RandomMode::kBounded;
  bool transfers = true;  // random transfers and passenger weights
};

// Deterministic per spec. Throws PreconditionError unless
// T > 2 * max time and the wait range lies in [0, T-1].
Instance GenRandom(const RandomSpec& spec);

}  // namespace pesp
