#include "ccsched/list_lpt.hpp"

#include <algorithm>
#include <utility>

namespace ccs {

namespace {

void require_permutation(const Instance& instance, const Permutation& sigma) {
  if (!sigma.is_bijection(instance.num_jobs()))
    throw DimensionMismatch("permutation " + sigma.to_string() + " is not a bijection on " +
                            std::to_string(instance.num_jobs()) + " jobs");
}

// Earliest start >= earliest on a machine whose busy intervals are sorted by start.
Rational first_fit(const std::vector<std::pair<Rational, Rational>>& busy, const Rational& earliest,
                   const Rational& duration) {
  Rational candidate = earliest;
  for (const auto& [start, end] : busy) {
    if (end <= candidate) continue;
    if (start >= candidate + duration) break;
    candidate = end;
  }
  return candidate;
}

// Calls place(job, task, machine, start, end) for every task in List-LPT order.
template <class Place>
void run_list_lpt(const Instance& instance, std::size_t cluster, const Permutation& sigma, bool fill_gaps,
                  Place&& place) {
  const auto& speeds = instance.clusters.at(cluster).speeds;
  const std::size_t machines = speeds.size();
  std::vector<Rational> frontier(machines, Rational(0));
  std::vector<std::vector<std::pair<Rational, Rational>>> busy(fill_gaps ? machines : 0);
  Rational barrier = 0;

  for (std::size_t job : sigma) {
    const auto& sub = instance.subjob(job, cluster);
    if (sub.empty()) continue;
    barrier = std::max(barrier, sub.release);
    for (std::size_t t = 0; t < sub.tasks.size(); ++t) {
      std::size_t best = 0;
      Rational best_start, best_end;
      for (std::size_t l = 0; l < machines; ++l) {
        Rational duration = sub.tasks[t] / speeds[l];
        Rational start = fill_gaps ? first_fit(busy[l], barrier, duration) : std::max(barrier, frontier[l]);
        Rational end = start + duration;
        if (l == 0 || end < best_end) {
          best = l;
          best_start = std::move(start);
          best_end = std::move(end);
        }
      }
      if (fill_gaps) {
        auto& intervals = busy[best];
        auto at = std::lower_bound(intervals.begin(), intervals.end(), std::make_pair(best_start, best_end));
        intervals.insert(at, {best_start, best_end});
      }
      frontier[best] = std::max(frontier[best], best_end);
      place(job, t, best, best_start, best_end);
    }
  }
}

}  // namespace

ClusterSchedule list_lpt_cluster(const Instance& instance, std::size_t cluster, const Permutation& sigma,
                                 const ListLptOptions& options) {
  require_permutation(instance, sigma);
  ClusterSchedule out;
  out.cluster = cluster;
  out.subjob_completion.assign(instance.num_jobs(), Rational(0));
  run_list_lpt(instance, cluster, sigma, options.fill_gaps,
               [&](std::size_t job, std::size_t task, std::size_t machine, const Rational& start, const Rational& end) {
                 out.assignments.push_back({job, cluster, machine, task, start, end});
                 out.subjob_completion[job] = std::max(out.subjob_completion[job], end);
               });
  return out;
}

std::vector<Rational> list_lpt_completions(const Instance& instance, std::size_t cluster, const Permutation& sigma) {
  std::vector<Rational> completion(instance.num_jobs(), Rational(0));
  run_list_lpt(instance, cluster, sigma, false,
               [&](std::size_t job, std::size_t, std::size_t, const Rational&, const Rational& end) {
                 if (completion[job] < end) completion[job] = end;
               });
  return completion;
}

Schedule list_lpt(const Instance& instance, const std::vector<Permutation>& sigmas, const ListLptOptions& options) {
  if (sigmas.size() != instance.num_clusters())
    throw DimensionMismatch("expected one permutation per cluster (" + std::to_string(instance.num_clusters()) +
                            "), got " + std::to_string(sigmas.size()));
  Schedule schedule;
  schedule.completion.assign(instance.num_jobs(), Rational(0));
  for (std::size_t i = 0; i < instance.num_clusters(); ++i) {
    auto part = list_lpt_cluster(instance, i, sigmas[i], options);
    for (std::size_t j = 0; j < instance.num_jobs(); ++j)
      schedule.completion[j] = std::max(schedule.completion[j], part.subjob_completion[j]);
    std::move(part.assignments.begin(), part.assignments.end(), std::back_inserter(schedule.assignments));
  }
  schedule.objective = weighted_sum(instance, schedule.completion);
  return schedule;
}

Schedule list_lpt(const Instance& instance, const Permutation& sigma, const ListLptOptions& options) {
  return list_lpt(instance, std::vector<Permutation>(instance.num_clusters(), sigma), options);
}

}  // namespace ccs
