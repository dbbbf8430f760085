#include "ccsched/model.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

namespace ccs {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += "; ";
    out += item;
  }
  return out;
}

std::vector<std::string> describe(const std::vector<Violation>& violations) {
  std::vector<std::string> out;
  out.reserve(violations.size());
  for (const auto& v : violations) out.push_back(v.to_string());
  return out;
}

template <class Range>
bool non_increasing(const Range& values) {
  return std::is_sorted(values.begin(), values.end(), std::greater<>());
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : InputError("invalid instance: " + join(violations)), violations_(std::move(violations)) {}

std::vector<Violation> validate(const Instance& instance) {
  std::vector<Violation> out;
  if (instance.clusters.empty()) out.push_back({"clusters", "at least one cluster required"});

  for (std::size_t i = 0; i < instance.clusters.size(); ++i) {
    const auto& speeds = instance.clusters[i].speeds;
    const std::string path = "clusters[" + std::to_string(i) + "].speeds";
    if (speeds.empty()) out.push_back({path, "cluster has no machines"});
    for (std::size_t l = 0; l < speeds.size(); ++l)
      if (speeds[l] < 1)
        out.push_back({path + "[" + std::to_string(l) + "]", "speed below 1"});
    if (!non_increasing(speeds)) out.push_back({path, "speeds not non-increasing"});
  }

  for (std::size_t j = 0; j < instance.jobs.size(); ++j) {
    const auto& job = instance.jobs[j];
    const std::string path = "jobs[" + std::to_string(j) + "]";
    if (job.weight <= 0) out.push_back({path + ".weight", "weight must be positive"});
    if (job.subjobs.size() != instance.clusters.size()) {
      out.push_back({path + ".subjobs", "expected " + std::to_string(instance.clusters.size()) +
                                            " subjobs, found " + std::to_string(job.subjobs.size())});
      continue;
    }
    for (std::size_t i = 0; i < job.subjobs.size(); ++i) {
      const auto& sub = job.subjobs[i];
      const std::string sub_path = path + ".subjobs[" + std::to_string(i) + "]";
      for (std::size_t t = 0; t < sub.tasks.size(); ++t)
        if (sub.tasks[t] <= 0)
          out.push_back({sub_path + ".tasks[" + std::to_string(t) + "]", "processing time must be positive"});
      if (!non_increasing(sub.tasks)) out.push_back({sub_path + ".tasks", "tasks not non-increasing"});
      if (sub.release < 0) out.push_back({sub_path + ".release", "release must be nonnegative"});
      if (sub.empty() && sub.release != 0)
        out.push_back({sub_path + ".release", "empty subjob must have release 0"});
    }
  }
  return out;
}

Instance normalize(Instance instance) {
  for (auto& cluster : instance.clusters)
    std::sort(cluster.speeds.begin(), cluster.speeds.end(), std::greater<>());
  for (auto& job : instance.jobs)
    for (auto& sub : job.subjobs) {
      std::sort(sub.tasks.begin(), sub.tasks.end(), std::greater<>());
      if (sub.empty()) sub.release = 0;
    }
  return instance;
}

void require_valid(const Instance& instance) {
  auto violations = validate(instance);
  if (!violations.empty()) throw ValidationError(describe(violations));
}

DerivedConstants derive(const Instance& instance) {
  DerivedConstants d;
  d.clusters.reserve(instance.num_clusters());
  d.max_speed_ratio = 0;
  for (const auto& cluster : instance.clusters) {
    DerivedConstants::ClusterConstants c;
    c.machines = cluster.machines();
    c.total_speed = 0;
    for (const auto& v : cluster.speeds) c.total_speed += v;
    c.fastest_speed = cluster.speeds.front();
    c.average_speed = c.total_speed / Rational(c.machines);
    c.speed_ratio = c.fastest_speed / c.average_speed;
    d.max_speed_ratio = std::max(d.max_speed_ratio, c.speed_ratio);
    d.clusters.push_back(std::move(c));
  }

  d.subjobs.resize(instance.num_jobs());
  for (std::size_t j = 0; j < instance.num_jobs(); ++j) {
    auto& row = d.subjobs[j];
    row.resize(instance.num_clusters());
    for (std::size_t i = 0; i < instance.num_clusters(); ++i) {
      const auto& tasks = instance.subjob(j, i).tasks;
      const auto& speeds = instance.clusters[i].speeds;
      auto& s = row[i];
      s.machine_cap = std::min(tasks.size(), speeds.size());
      s.usable_speed = 0;
      for (std::size_t l = 0; l < s.machine_cap; ++l) s.usable_speed += speeds[l];
      s.work = 0;
      for (const auto& p : tasks) s.work += p;
      s.longest_task = tasks.empty() ? Rational(0) : tasks.front();
    }
  }
  return d;
}

Rational DerivedConstants::completion_lower_bound(const Instance& instance, std::size_t job) const {
  Rational bound = 0;
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    const auto& s = subjobs[job][i];
    if (s.work == 0) continue;
    const Rational& release = instance.subjob(job, i).release;
    bound = std::max(bound, s.longest_task / clusters[i].fastest_speed + release);
    bound = std::max(bound, s.work / s.usable_speed + release);
  }
  return bound;
}

Evaluation evaluate(const Instance& instance, const Schedule& schedule) {
  const std::size_t n = instance.num_jobs();
  const std::size_t m = instance.num_clusters();
  auto fail = [](const Assignment& a, const std::string& what) {
    throw InfeasibleSchedule("task (job " + std::to_string(a.job) + ", cluster " + std::to_string(a.cluster) +
                             ", task " + std::to_string(a.task) + "): " + what);
  };

  std::vector<std::vector<std::vector<bool>>> seen(n);
  for (std::size_t j = 0; j < n; ++j) {
    seen[j].resize(m);
    for (std::size_t i = 0; i < m; ++i) seen[j][i].assign(instance.subjob(j, i).tasks.size(), false);
  }

  Evaluation result;
  result.completion.assign(n, Rational(0));
  std::map<std::pair<std::size_t, std::size_t>, std::vector<const Assignment*>> per_machine;

  for (const auto& a : schedule.assignments) {
    if (a.job >= n || a.cluster >= m) fail(a, "job or cluster index out of range");
    const auto& cluster = instance.clusters[a.cluster];
    const auto& sub = instance.subjob(a.job, a.cluster);
    if (a.machine >= cluster.machines()) fail(a, "machine index out of range");
    if (a.task >= sub.tasks.size()) fail(a, "task index out of range");
    if (seen[a.job][a.cluster][a.task]) fail(a, "assigned more than once");
    seen[a.job][a.cluster][a.task] = true;
    if (a.start < sub.release) fail(a, "starts before its release time");
    if (a.end - a.start != sub.tasks[a.task] / cluster.speeds[a.machine])
      fail(a, "duration differs from processing time over machine speed");
    result.completion[a.job] = std::max(result.completion[a.job], a.end);
    per_machine[{a.cluster, a.machine}].push_back(&a);
  }

  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t t = 0; t < seen[j][i].size(); ++t)
        if (!seen[j][i][t])
          throw InfeasibleSchedule("task (job " + std::to_string(j) + ", cluster " + std::to_string(i) +
                                   ", task " + std::to_string(t) + ") is not scheduled");

  for (auto& [machine, tasks] : per_machine) {
    std::sort(tasks.begin(), tasks.end(), [](const Assignment* a, const Assignment* b) {
      return std::tie(a->start, a->end) < std::tie(b->start, b->end);
    });
    for (std::size_t k = 1; k < tasks.size(); ++k)
      if (tasks[k]->start < tasks[k - 1]->end)
        fail(*tasks[k], "overlaps another task on machine " + std::to_string(machine.second) + " of cluster " +
                            std::to_string(machine.first));
  }

  result.objective = weighted_sum(instance, result.completion);
  return result;
}

Rational weighted_sum(const Instance& instance, const std::vector<Rational>& completion) {
  if (completion.size() != instance.num_jobs())
    throw DimensionMismatch("completion vector has " + std::to_string(completion.size()) + " entries, expected " +
                            std::to_string(instance.num_jobs()));
  Rational total = 0;
  for (std::size_t j = 0; j < completion.size(); ++j) total += instance.jobs[j].weight * completion[j];
  return total;
}

}  // namespace ccs
