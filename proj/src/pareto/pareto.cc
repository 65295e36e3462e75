#include "pesp/pareto.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace pesp {

ParetoFront DominanceFilter(std::vector<ParetoPoint> points) {
  // Overlap descending, then travel ascending, then timetable ascending: a
  // point survives iff its travel beats everything with at least its overlap.
  std::sort(points.begin(), points.end(), [](const ParetoPoint& a, const ParetoPoint& b) {
    if (a.overlap != b.overlap) return a.overlap > b.overlap;
    if (a.travel_time != b.travel_time) return a.travel_time < b.travel_time;
    return a.witness.timetable.times < b.witness.timetable.times;
  });
  ParetoFront front;
  for (ParetoPoint& p : points) {
    if (!front.points.empty() && front.points.back().travel_time <= p.travel_time) continue;
    front.points.push_back(std::move(p));
  }
  std::reverse(front.points.begin(), front.points.end());
  return front;
}

ParetoFront EnumerateFront(const Instance& instance, const SolveHandle& solve, const FrontOptions& options,
                           std::vector<ParetoPoint>* raw) {
  SolveRequest request;
  request.instance = instance;
  request.time_limit = options.time_limit;
  request.objective = Objective::kMaxOverlap;
  const SolveResult top = solve(request);
  if (top.status != SolveStatus::kOptimal) {
    throw FrontError(-1, top.status, std::string("overlap maximization ended ") + std::string(ToString(top.status)));
  }
  const std::int64_t max_overlap = top.solution->total_overlap;

  const std::size_t count = static_cast<std::size_t>(max_overlap) + 1;
  std::vector<SolveResult> results(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t eps; (eps = next.fetch_add(1)) < count;) {
      try {
        SolveRequest r = request;
        r.objective = Objective::kMinTravel;
        r.overlap_floor = static_cast<std::int64_t>(eps);
        results[eps] = solve(r);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(count)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<ParetoPoint> points;
  for (std::size_t eps = 0; eps < count; ++eps) {
    const SolveResult& r = results[eps];
    if (r.status != SolveStatus::kOptimal) {
      throw FrontError(static_cast<std::int64_t>(eps), r.status,
                       "min travel at overlap floor " + std::to_string(eps) + " ended " + std::string(ToString(r.status)));
    }
    points.push_back({static_cast<std::int64_t>(eps), r.solution->travel_time, *r.solution});
  }
  if (raw) *raw = points;
  return DominanceFilter(std::move(points));
}

}  // namespace pesp
