#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pesp/rational.h"

namespace pesp {

// Event-activity network (EAN) data model. Events and activities are
// addressed by their position in the instance; the string ids are the
// external, opaque names used in files.

enum class EventKind { kArrival, kDeparture };

struct Event {
  std::string id;
  EventKind kind = EventKind::kArrival;
  std::string line;
  std::string station;
  // Braking time before an arrival; present iff kind == kArrival.
  std::optional<int> brake_time;
  // Acceleration time after a departure; present iff kind == kDeparture.
  std::optional<int> accel_time;
};

enum class ActivityKind { kWait, kDrive, kTransfer, kEnergy, kHeadway };

struct Activity {
  std::string id;
  ActivityKind kind = ActivityKind::kWait;
  std::size_t tail = 0;
  std::size_t head = 0;
  int lower = 0;
  int upper = 0;
  Rational weight{0};
};

struct Instance {
  int period = 0;
  std::vector<Event> events;
  std::vector<Activity> activities;

  std::optional<std::size_t> FindEvent(std::string_view id) const;
  std::optional<std::size_t> FindActivity(std::string_view id) const;

  // Indices of all activities of the given kind, in instance order.
  std::vector<std::size_t> ActivitiesOfKind(ActivityKind kind) const;
};

// t^min and t^max of an energy activity (departure tail, arrival head).
int EnergyMinTime(const Instance& instance, const Activity& energy);
int EnergyMaxTime(const Instance& instance, const Activity& energy);

inline constexpr int kUnscheduled = -1;

// Event time per event index; kUnscheduled marks events a partial
// timetable leaves open.
struct Timetable {
  std::vector<int> times;

  static Timetable Unscheduled(std::size_t num_events) {
    return Timetable{std::vector<int>(num_events, kUnscheduled)};
  }
  bool IsComplete() const;
  friend bool operator==(const Timetable&, const Timetable&) = default;
};

// Selected energy activities, sorted ascending by activity index.
struct Matching {
  std::vector<std::size_t> selected;

  bool Contains(std::size_t activity) const;
  friend bool operator==(const Matching&, const Matching&) = default;
};

Matching MakeMatching(std::vector<std::size_t> activities);

struct Solution {
  Matching matching;
  Timetable timetable;
  // Periodic tension per activity index.
  std::vector<int> tensions;
  // Realized overlap per selected energy activity.
  std::map<std::size_t, int> overlaps;
  Rational travel_time{0};
  std::int64_t total_overlap = 0;
};

std::string_view ToString(EventKind kind);
std::string_view ToString(ActivityKind kind);
std::optional<EventKind> ParseEventKind(std::string_view text);
std::optional<ActivityKind> ParseActivityKind(std::string_view text);

}  // namespace pesp
