#include "pesp/generators.h"

#include <random>

#include "pesp/errors.h"
#include "pesp/one_station.h"

namespace pesp {

Instance GenArtificial4() {
  OneStationSpec spec;
  spec.n = 4;
  spec.line_names = {"A", "B", "C", "D"};
  spec.accel_times.assign(4, 5);
  spec.brake_times.assign(4, 6);
  spec.wait_bounds.assign(4, {1, 4});
  spec.wait_weights = {Rational(40), Rational(40), Rational(20), Rational(20)};
  enum { A, B, C, D };
  // (from, to, passengers)
  const int transfers[][3] = {{B, D, 5}, {D, B, 10}, {D, A, 5}, {A, C, 10}, {A, D, 10}, {C, B, 10}, {C, A, 5}, {B, C, 5}};
  spec.transfers.emplace();
  for (const auto& t : transfers) spec.transfers->push_back({t[0], t[1], 3, Rational(t[2])});
  return BuildOneStation(spec, 20);
}

Instance GenExampleHP() {
  OneStationSpec spec;
  spec.n = 6;
  spec.accel_times = {12, 8, 6, 7, 5, 2};
  spec.brake_times = {8, 12, 7, 6, 2, 3};
  spec.wait_bounds.assign(6, {5, 5});
  spec.allow_wide_windows = true;
  return BuildOneStation(spec, 15);
}

std::optional<RandomMode> ParseRandomMode(std::string_view text) {
  if (text == "free") return RandomMode::kFree;
  if (text == "bounded") return RandomMode::kBounded;
  if (text == "equalTimes" || text == "equal-times") return RandomMode::kEqualTimes;
  if (text == "uniformAc" || text == "uniform-ac") return RandomMode::kUniformAc;
  return std::nullopt;
}

std::string_view ToString(RandomMode mode) {
  switch (mode) {
    case RandomMode::kFree: return "free";
    case RandomMode::kBounded: return "bounded";
    case RandomMode::kEqualTimes: return "equalTimes";
    case RandomMode::kUniformAc: return "uniformAc";
  }
  return "bounded";
}

Instance GenRandom(const RandomSpec& spec) {
  const int T = spec.period;
  const auto [t_lo, t_hi] = spec.time_range;
  const auto [w_lo, w_hi] = spec.wait_range;
  if (spec.n < 1 || T < 1) throw PreconditionError("need n >= 1 and T >= 1");
  if (t_lo < 1 || t_hi < t_lo || T <= 2 * t_hi) throw PreconditionError("time range must satisfy 1 <= lo <= hi and T > 2*hi");
  if (w_lo < 0 || w_hi < w_lo || w_hi > T - 1) throw PreconditionError("wait range must lie in [0, T-1]");

  std::mt19937_64 rng(spec.seed);
  auto draw = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  OneStationSpec os;
  os.n = spec.n;
  const int common_ac = draw(t_lo, t_hi);
  for (int k = 0; k < spec.n; ++k) {
    int ac = draw(t_lo, t_hi);
    const int br = draw(t_lo, t_hi);
    if (spec.mode == RandomMode::kEqualTimes) ac = br;
    if (spec.mode == RandomMode::kUniformAc) ac = common_ac;
    os.accel_times.push_back(ac);
    os.brake_times.push_back(br);
    int l = draw(w_lo, w_hi);
    int u = spec.mode == RandomMode::kFree ? l + T - 1 : draw(l, w_hi);
    os.wait_bounds.emplace_back(l, u);
  }
  if (spec.transfers) {
    os.transfers.emplace();
    for (int k = 0; k < spec.n; ++k) os.wait_weights.emplace_back(draw(0, 5));
    for (int from = 0; from < spec.n; ++from) {
      for (int to = 0; to < spec.n; ++to) {
        if (from == to || draw(0, 1) == 0) continue;
        os.transfers->push_back({from, to, draw(w_lo, w_hi), Rational(draw(1, 5))});
      }
    }
  }
  return BuildOneStation(os, T);
}

}  // namespace pesp
