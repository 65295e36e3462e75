#include "pesp/commands.h"

#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "pesp/brute_force.h"
#include "pesp/errors.h"
#include "pesp/evaluate.h"
#include "pesp/instance_io.h"
#include "pesp/lp_export.h"
#include "pesp/one_station.h"
#include "pesp/pareto.h"

namespace pesp {
namespace {

using Json = nlohmann::ordered_json;

class CommandError : public std::runtime_error {
 public:
  CommandError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

void Emit(std::ostream& out, const std::string& text, const std::string& path) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw CommandError(kExitInvalid, "cannot write '" + path + "'");
  file << text;
}

Json SolutionObject(const Instance& inst, const Solution& sol) {
  Json j;
  j["total_overlap"] = sol.total_overlap;
  j["travel_time"] = FormatRational(sol.travel_time);
  Json timetable = Json::object();
  for (std::size_t v = 0; v < inst.events.size(); ++v) timetable[inst.events[v].id] = sol.timetable.times[v];
  j["timetable"] = std::move(timetable);
  Json matching = Json::array();
  for (std::size_t k : sol.matching.selected) matching.push_back(inst.activities[k].id);
  j["matching"] = std::move(matching);
  Json tensions = Json::object();
  for (std::size_t k = 0; k < inst.activities.size(); ++k) tensions[inst.activities[k].id] = sol.tensions[k];
  j["tensions"] = std::move(tensions);
  Json overlaps = Json::object();
  for (auto [k, o] : sol.overlaps) overlaps[inst.activities[k].id] = o;
  j["overlaps"] = std::move(overlaps);
  return j;
}

SolveRequest MakeRequest(const Command& cmd, const Instance& inst) {
  SolveRequest r;
  r.instance = inst;
  r.objective = cmd.objective;
  r.overlap_floor = cmd.min_overlap;
  if (cmd.time_limit) r.time_limit = std::chrono::duration<double>(*cmd.time_limit);
  return r;
}

int ReportResult(const Command& cmd, std::ostream& out, std::ostream& err, const Instance& inst,
                 const SolveResult& result, const std::string& method) {
  if (!result.solution) {
    err << "no solution: " << ToString(result.status) << "\n";
    return result.status == SolveStatus::kInfeasible ? kExitInfeasible : kExitLimit;
  }
  std::optional<std::pair<std::string, std::string>> bounds;
  if (result.status == SolveStatus::kLimitReached) {
    const std::string incumbent = FormatRational(ObjectiveValue(*result.solution, cmd.objective));
    const std::string bound = FormatRational(result.bound);
    bounds = cmd.objective == Objective::kMinTravel ? std::pair{bound, incumbent} : std::pair{incumbent, bound};
  }
  Emit(out, SolutionJson(inst, *result.solution, std::string(ToString(result.status)), method, bounds), cmd.output);
  if (result.status == SolveStatus::kLimitReached) {
    err << "limit reached, reporting the incumbent\n";
    return kExitLimit;
  }
  return kExitOk;
}

int EmitDispatch(const Command& cmd, std::ostream& out, const Instance& inst, const DispatchResult& d) {
  const auto bounds = std::pair{std::to_string(d.lower_bound), std::to_string(d.upper_bound)};
  Emit(out, SolutionJson(inst, d.solution, d.optimal ? "optimal" : "heuristic", d.method, bounds), cmd.output);
  return kExitOk;
}

int Validate(const Command& cmd, std::ostream& out) {
  const Instance inst = LoadInstance(cmd.input);
  const auto violations = ValidateInstance(inst);
  std::ostringstream text;
  for (const Violation& v : violations) {
    text << (v.element.empty() ? "instance" : v.element) << ": " << v.rule << (v.blocking ? "" : " (non-blocking)")
         << "\n";
  }
  if (violations.empty()) text << "ok\n";
  Emit(out, text.str(), cmd.output);
  return violations.empty() ? kExitOk : kExitInvalid;
}

int Solve(const Command& cmd, std::ostream& out, std::ostream& err) {
  const Instance inst = LoadInstance(cmd.input);
  const std::string& m = cmd.method;
  if (m == "exact" || (m == "auto" && !(cmd.objective == Objective::kMaxOverlap && IsOneStation(inst)))) {
    return ReportResult(cmd, out, err, inst, SolveExact(MakeRequest(cmd, inst)), "exact");
  }
  if (cmd.objective != Objective::kMaxOverlap || cmd.min_overlap != 0) {
    throw CommandError(kExitInvalid, "method '" + m + "' only maximizes overlap");
  }
  if (m == "auto") return EmitDispatch(cmd, out, inst, Dispatch(inst));

  Solution sol;
  bool optimal = true;
  if (m == "dp") {
    sol = SolveEqualTimesDP(inst).solution;
  } else if (m == "free") {
    sol = SolveFreeWaiting(inst);
  } else if (m == "uniform") {
    sol = SolveUniformTimes(inst);
  } else if (m == "large-period") {
    sol = SolveLargePeriod(inst);
  } else if (m == "merge") {
    sol = SolveForMatching(inst, MergeHeuristic(inst).cycle.report.matching);
    optimal = false;
  } else if (m == "hamiltonian") {
    sol = SolveSingleCycleVariant(inst);
    optimal = false;  // optimal only among single-cycle matchings
  } else {
    throw CommandError(kExitInvalid, "unknown method '" + m + "'");
  }
  std::optional<std::pair<std::string, std::string>> bounds;
  if (!optimal) bounds = std::pair{std::to_string(sol.total_overlap), std::to_string(MaxWeightMatching(inst).weight)};
  Emit(out, SolutionJson(inst, sol, optimal ? "optimal" : "heuristic", m, bounds), cmd.output);
  return kExitOk;
}

int Pareto(const Command& cmd, std::ostream& out, std::ostream& err) {
  const Instance inst = LoadInstance(cmd.input);
  FrontOptions options;
  options.threads = cmd.threads;
  if (cmd.time_limit) options.time_limit = std::chrono::duration<double>(*cmd.time_limit);
  ParetoFront front;
  try {
    front = EnumerateFront(inst, SolveExact, options);
  } catch (const FrontError& e) {
    err << e.what() << "\n";
    return e.status() == SolveStatus::kInfeasible ? kExitInfeasible : kExitLimit;
  }
  std::ostringstream csv;
  csv << "overlap,travel_time,timetable_id\n";
  Json witnesses = Json::array();
  for (std::size_t k = 0; k < front.points.size(); ++k) {
    const ParetoPoint& p = front.points[k];
    csv << p.overlap << "," << FormatRational(p.travel_time) << "," << k << "\n";
    Json w = SolutionObject(inst, p.witness);
    w["timetable_id"] = k;
    w["overlap_floor"] = p.overlap;
    witnesses.push_back(std::move(w));
  }
  Emit(out, csv.str(), cmd.output);
  if (!cmd.witnesses.empty()) Emit(out, witnesses.dump(2) + "\n", cmd.witnesses);
  return kExitOk;
}

int Generate(const Command& cmd, std::ostream& out) {
  Instance inst;
  if (cmd.generator == "artificial4") {
    inst = GenArtificial4();
  } else if (cmd.generator == "example-hp") {
    inst = GenExampleHP();
  } else if (cmd.generator == "random") {
    inst = GenRandom(cmd.random);
  } else {
    throw CommandError(kExitInvalid, "unknown generator '" + cmd.generator + "'");
  }
  Emit(out, SerializeInstance(inst), cmd.output);
  return kExitOk;
}

int ExportModel(const Command& cmd, std::ostream& out, std::ostream& err) {
  const Instance inst = LoadInstance(cmd.input);
  const ModelExport model = ExportLp(inst, cmd.min_overlap);
  Emit(out, model.text, cmd.output);
  err << "Gamma = " << model.gamma << "\n";
  return kExitOk;
}

int Oracle(const Command& cmd, std::ostream& out, std::ostream& err) {
  const Instance inst = LoadInstance(cmd.input);
  return ReportResult(cmd, out, err, inst, BruteForce(MakeRequest(cmd, inst)), "brute-force");
}

}  // namespace

std::string SolutionJson(const Instance& instance, const Solution& solution, const std::string& status,
                         const std::string& method, std::optional<std::pair<std::string, std::string>> bounds) {
  Json j;
  j["status"] = status;
  j["method"] = method;
  const Json body = SolutionObject(instance, solution);
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = *it;
  if (bounds) j["bounds"] = {{"lower", bounds->first}, {"upper", bounds->second}};
  return j.dump(2) + "\n";
}

int Run(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    if (cmd.verb == "validate") return Validate(cmd, out);
    if (cmd.verb == "solve") return Solve(cmd, out, err);
    if (cmd.verb == "energy") {
      const Instance inst = LoadInstance(cmd.input);
      return EmitDispatch(cmd, out, inst, Dispatch(inst));
    }
    if (cmd.verb == "pareto") return Pareto(cmd, out, err);
    if (cmd.verb == "gen") return Generate(cmd, out);
    if (cmd.verb == "export-lp") return ExportModel(cmd, out, err);
    if (cmd.verb == "oracle") return Oracle(cmd, out, err);
    err << "unknown command '" << cmd.verb << "'\n";
    return kExitInvalid;
  } catch (const CommandError& e) {
    err << "error: " << e.what() << "\n";
    return e.code();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const InfeasibleTimetable& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  }
}

}  // namespace pesp
