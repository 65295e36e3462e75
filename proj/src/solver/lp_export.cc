#include "pesp/lp_export.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "pesp/errors.h"
#include "pesp/evaluate.h"

namespace pesp {
namespace {

std::string Sanitize(const std::string& id) {
  std::string out;
  for (char c : id) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '.';
    out += ok ? c : '_';
  }
  return out.empty() ? "_" : out;
}

// Sanitized names, made unique by a numeric suffix where needed.
template <typename Items>
std::vector<std::string> NamesOf(const Items& items) {
  std::vector<std::string> names(items.size());
  std::set<std::string> used;
  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return items[a].id < items[b].id; });
  for (std::size_t i : order) {
    std::string name = Sanitize(items[i].id);
    for (int k = 2; used.count(name); ++k) name = Sanitize(items[i].id) + "_" + std::to_string(k);
    used.insert(name);
    names[i] = name;
  }
  return names;
}

std::vector<std::size_t> SortedById(const std::vector<std::string>& names) {
  std::vector<std::size_t> order(names.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return names[a] < names[b]; });
  return order;
}

std::string Coefficient(const Rational& r) {
  std::string s = FormatRational(r);
  if (s.find('/') == std::string::npos) return s;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", ToDouble(r));
  return buf;
}

}  // namespace

ModelExport ExportLp(const Instance& instance, std::int64_t overlap_floor) {
  if (const auto v = BlockingViolations(instance); !v.empty()) {
    throw PreconditionError("instance is invalid: " + v.front().element + ": " + v.front().rule);
  }
  const int T = instance.period;
  const auto ev = NamesOf(instance.events);
  const auto act = NamesOf(instance.activities);
  const auto ev_order = SortedById(ev);
  const auto act_order = SortedById(act);

  std::vector<std::size_t> energy;
  for (std::size_t k : act_order) {
    if (instance.activities[k].kind == ActivityKind::kEnergy) energy.push_back(k);
  }
  ModelExport out;
  for (std::size_t k : energy) {
    const Activity& a = instance.activities[k];
    out.gamma = std::max(out.gamma, T - (EnergyMaxTime(instance, a) + EnergyMinTime(instance, a)));
  }

  std::ostringstream lp;
  lp << "\\ PESP-Passenger-Energy, period " << T << "\n";
  lp << "Minimize\n travel:";
  bool any = false;
  for (std::size_t k : act_order) {
    const Rational& w = instance.activities[k].weight;
    if (w.numerator() == 0) continue;
    lp << " + " << Coefficient(w) << " x_" << act[k];
    any = true;
  }
  if (!any) lp << " 0 x_" << (act.empty() ? std::string("none") : act[act_order.front()]);
  lp << "\nSubject To\n";

  for (std::size_t k : act_order) {
    const Activity& a = instance.activities[k];
    lp << " tension_" << act[k] << ": x_" << act[k] << " - pi_" << ev[a.head] << " + pi_" << ev[a.tail] << " - " << T
       << " p_" << act[k] << " = 0\n";
  }
  for (std::size_t k : energy) {
    const Activity& a = instance.activities[k];
    const int t_min = EnergyMinTime(instance, a);
    const int t_max = EnergyMaxTime(instance, a);
    const std::string& n = act[k];
    lp << " ovl_x_" << n << ": o_" << n << " - x_" << n << " <= 0\n";
    lp << " ovl_alpha_" << n << ": o_" << n << " - " << t_min << " alpha_" << n << " <= 0\n";
    lp << " ovl_tail_" << n << ": o_" << n << " + x_" << n << " + " << out.gamma << " alpha_" << n
       << " <= " << (t_max + t_min + out.gamma) << "\n";
  }
  // Matching rows: one per arrival and departure with energy arcs.
  std::map<std::size_t, std::vector<std::size_t>> by_arrival, by_departure;
  for (std::size_t k : energy) {
    by_arrival[instance.activities[k].head].push_back(k);
    by_departure[instance.activities[k].tail].push_back(k);
  }
  auto matching_rows = [&](const char* prefix, const std::map<std::size_t, std::vector<std::size_t>>& groups) {
    for (std::size_t e : ev_order) {
      auto it = groups.find(e);
      if (it == groups.end()) continue;
      lp << " " << prefix << ev[e] << ":";
      for (std::size_t k : it->second) lp << " + alpha_" << act[k];
      lp << " <= 1\n";
    }
  };
  matching_rows("match_arr_", by_arrival);
  matching_rows("match_dep_", by_departure);
  if (!energy.empty()) {
    lp << " overlap_floor:";
    for (std::size_t k : energy) lp << " + o_" << act[k];
    lp << " >= " << overlap_floor << "\n";
  }

  lp << "Bounds\n";
  for (std::size_t e : ev_order) lp << " 0 <= pi_" << ev[e] << " <= " << (T - 1) << "\n";
  for (std::size_t k : act_order) {
    const Activity& a = instance.activities[k];
    lp << " " << a.lower << " <= x_" << act[k] << " <= " << a.upper << "\n";
    lp << " p_" << act[k] << " free\n";
  }

  lp << "Generals\n";
  for (std::size_t e : ev_order) lp << " pi_" << ev[e] << "\n";
  for (std::size_t k : act_order) lp << " p_" << act[k] << "\n";
  if (!energy.empty()) {
    lp << "Binaries\n";
    for (std::size_t k : energy) lp << " alpha_" << act[k] << "\n";
  }
  lp << "End\n";
  out.text = lp.str();
  return out;
}

}  // namespace pesp
