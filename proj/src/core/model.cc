#include "pesp/model.h"

#include <algorithm>

namespace pesp {

std::optional<std::size_t> Instance::FindEvent(std::string_view id) const {
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (events[i].id == id) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Instance::FindActivity(std::string_view id) const {
  for (std::size_t i = 0; i < activities.size(); ++i) {
    if (activities[i].id == id) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> Instance::ActivitiesOfKind(ActivityKind kind) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < activities.size(); ++i) {
    if (activities[i].kind == kind) out.push_back(i);
  }
  return out;
}

int EnergyMinTime(const Instance& instance, const Activity& energy) {
  return std::min(instance.events[energy.tail].accel_time.value_or(0),
                  instance.events[energy.head].brake_time.value_or(0));
}

int EnergyMaxTime(const Instance& instance, const Activity& energy) {
  return std::max(instance.events[energy.tail].accel_time.value_or(0),
                  instance.events[energy.head].brake_time.value_or(0));
}

bool Timetable::IsComplete() const {
  return std::none_of(times.begin(), times.end(), [](int t) { return t == kUnscheduled; });
}

bool Matching::Contains(std::size_t activity) const {
  return std::binary_search(selected.begin(), selected.end(), activity);
}

Matching MakeMatching(std::vector<std::size_t> activities) {
  std::sort(activities.begin(), activities.end());
  activities.erase(std::unique(activities.begin(), activities.end()), activities.end());
  return Matching{std::move(activities)};
}

std::string_view ToString(EventKind kind) {
  return kind == EventKind::kArrival ? "arrival" : "departure";
}

std::string_view ToString(ActivityKind kind) {
  switch (kind) {
    case ActivityKind::kWait: return "wait";
    case ActivityKind::kDrive: return "drive";
    case ActivityKind::kTransfer: return "transfer";
    case ActivityKind::kEnergy: return "energy";
    case ActivityKind::kHeadway: return "headway";
  }
  return "unknown";
}

std::optional<EventKind> ParseEventKind(std::string_view text) {
  if (text == "arrival") return EventKind::kArrival;
  if (text == "departure") return EventKind::kDeparture;
  return std::nullopt;
}

std::optional<ActivityKind> ParseActivityKind(std::string_view text) {
  for (ActivityKind kind : {ActivityKind::kWait, ActivityKind::kDrive, ActivityKind::kTransfer,
                            ActivityKind::kEnergy, ActivityKind::kHeadway}) {
    if (ToString(kind) == text) return kind;
  }
  return std::nullopt;
}

}  // namespace pesp
