#pragma once

#include <cstdint>
#include <string>

#include "pesp/model.h"

namespace pesp {

struct ModelExport {
  std::string text;
  // Big-M of the overlap constraints; 0 without energy activities.
  int gamma = 0;
};

// Writes the bicriteria MIP in CPLEX-LP format: travel time is minimized,
// total overlap enters as the constraint sum(o) >= overlap_floor. Variables
// are pi_<event>, p_<act>, x_<act>, o_<act>, alpha_<act>, with ids reduced
// to LP-safe characters and emitted in sorted id order.
// Throws PreconditionError for an invalid instance.
ModelExport ExportLp(const Instance& instance, std::int64_t overlap_floor);

}  // namespace pesp
