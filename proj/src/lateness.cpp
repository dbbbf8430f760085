#include "ccsched/lateness.hpp"

#include <algorithm>

#include "ccsched/list_lpt.hpp"

namespace ccs {

namespace {

void require_valid(const LatenessInstance& instance) {
  auto violations = validate(instance);
  if (violations.empty()) return;
  std::vector<std::string> text;
  for (const auto& v : violations) text.push_back(v.to_string());
  throw ValidationError(std::move(text));
}

// Cluster 0 of the reduction on its own.
Instance machine_bank(const LatenessInstance& instance) {
  Instance bank;
  bank.clusters.push_back(Cluster{std::vector<Rational>(instance.machines, Rational(1))});
  for (std::size_t j = 0; j < instance.num_jobs(); ++j)
    bank.jobs.push_back(Job{instance.weight[j], {Subjob{{instance.processing[j]}, Rational(0)}}});
  return bank;
}

}  // namespace

std::vector<Violation> validate(const LatenessInstance& instance) {
  std::vector<Violation> out;
  const std::size_t n = instance.num_jobs();
  if (instance.machines < 1) out.push_back({"machines", "at least one machine required"});
  if (instance.deadline.size() != n || instance.weight.size() != n)
    out.push_back({"jobs", "processing, deadline and weight lists differ in length"});
  for (std::size_t j = 0; j < n; ++j) {
    const std::string path = "jobs[" + std::to_string(j) + "]";
    if (instance.processing[j] <= 0) out.push_back({path + ".p", "processing time must be positive"});
    if (j < instance.deadline.size() && instance.deadline[j] < 0)
      out.push_back({path + ".d", "deadline must be nonnegative"});
    if (j < instance.weight.size() && instance.weight[j] <= 0)
      out.push_back({path + ".w", "weight must be positive"});
  }
  return out;
}

Instance reduce_lateness(const LatenessInstance& instance) {
  require_valid(instance);
  const std::size_t n = instance.num_jobs();
  Instance out;
  out.name = instance.name.empty() ? "lateness-reduction" : instance.name + "-reduced";
  out.clusters.push_back(Cluster{std::vector<Rational>(instance.machines, Rational(1))});
  for (std::size_t j = 0; j < n; ++j) out.clusters.push_back(Cluster{{Rational(1)}});
  for (std::size_t j = 0; j < n; ++j) {
    Job job;
    job.weight = instance.weight[j];
    job.subjobs.resize(n + 1);
    job.subjobs[0].tasks = {instance.processing[j]};
    if (instance.deadline[j] > 0) job.subjobs[j + 1].tasks = {instance.deadline[j]};
    out.jobs.push_back(std::move(job));
  }
  return out;
}

std::vector<Rational> lateness_completions(const LatenessInstance& instance, const Permutation& sigma) {
  require_valid(instance);
  return list_lpt_cluster(machine_bank(instance), 0, sigma).subjob_completion;
}

Rational lateness_objective(const LatenessInstance& instance, const Permutation& sigma) {
  const auto completion = lateness_completions(instance, sigma);
  Rational total = 0;
  for (std::size_t j = 0; j < completion.size(); ++j)
    if (completion[j] > instance.deadline[j]) total += instance.weight[j] * (completion[j] - instance.deadline[j]);
  return total;
}

}  // namespace ccs
