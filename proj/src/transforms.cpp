#include "ccsched/transforms.hpp"

#include <algorithm>

#include "ccsched/cclp.hpp"
#include "ccsched/relaxation.hpp"

namespace ccs {

namespace {

void require_no_releases(const Instance& instance) {
  for (std::size_t j = 0; j < instance.num_jobs(); ++j)
    for (std::size_t i = 0; i < instance.num_clusters(); ++i)
      if (instance.subjob(j, i).release != 0)
        throw ReleaseTimesUnsupported("job " + std::to_string(j) + " has a positive release on cluster " +
                                      std::to_string(i) + "; the open-shop reductions require r = 0");
}

CombinatorialResult run(const Instance& instance, const TransformRecord& record, const std::string& name,
                        const CombinatorialOptions& options) {
  CombinatorialResult out;
  out.sigma = mussq(record.image);
  out.schedule = list_lpt(instance, out.sigma);
  if (options.certify) {
    Rational bound = options.lower_bound ? *options.lower_bound : solve_lp1<Rational>(instance).objective;
    out.certificate = make_certificate(name, out.schedule.objective, std::move(bound), tspt_guarantee(instance),
                                       to_string(classify(instance)), options.lower_bound_source);
  }
  return out;
}

}  // namespace

TransformRecord tspt(const Instance& instance) {
  require_valid(instance);
  require_no_releases(instance);
  const auto derived = derive(instance);
  const auto n = static_cast<Eigen::Index>(instance.num_jobs());
  const auto m = static_cast<Eigen::Index>(instance.num_clusters());
  TransformRecord rec;
  rec.source = instance;
  rec.kind = TransformKind::Tspt;
  rec.image.x.resize(n, m);
  rec.image.weights.resize(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    rec.image.weights(j) = instance.jobs[ju].weight;
    for (Eigen::Index i = 0; i < m; ++i) {
      const auto iu = static_cast<std::size_t>(i);
      rec.image.x(j, i) = derived.at(ju, iu).work / derived.clusters[iu].total_speed;
    }
  }
  return rec;
}

TransformRecord atspt(const Instance& instance) {
  TransformRecord rec = tspt(instance);
  rec.kind = TransformKind::Atspt;
  const auto derived = derive(instance);
  const auto n = rec.image.jobs();
  const auto m = rec.image.machines();
  rec.image.x.conservativeResize(Eigen::NoChange, m + n);
  rec.image.x.rightCols(n).setZero();
  rec.lower_bounds.resize(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    rec.lower_bounds[ju] = derived.completion_lower_bound(instance, ju);
    rec.image.x(j, m + j) = rec.lower_bounds[ju];
  }
  return rec;
}

CombinatorialResult cc_tspt(const Instance& instance, const CombinatorialOptions& options) {
  return run(instance, tspt(instance), "cctspt", options);
}

CombinatorialResult cc_atspt(const Instance& instance, const CombinatorialOptions& options) {
  return run(instance, atspt(instance), "ccatspt", options);
}

bool is_fps(const Instance& instance) {
  for (const auto& cluster : instance.clusters)
    for (const auto& v : cluster.speeds)
      if (v != 1) return false;
  for (const auto& job : instance.jobs)
    for (const auto& sub : job.subjobs)
      for (const auto& p : sub.tasks)
        if (p != 1) return false;
  return true;
}

std::size_t time_resolution(const Instance& instance) {
  if (!is_fps(instance)) throw NotFps("time resolution needs unit speeds and unit tasks");
  std::size_t rho = 0;
  for (const auto& job : instance.jobs)
    for (std::size_t i = 0; i < instance.num_clusters(); ++i) {
      const std::size_t tasks = job.subjobs[i].tasks.size();
      if (tasks == 0) continue;
      const std::size_t machines = instance.clusters[i].machines();
      const std::size_t r = (tasks + machines - 1) / machines;
      if (rho == 0 || r < rho) rho = r;
    }
  if (rho == 0) throw NotFps("time resolution is undefined without any work");
  return rho;
}

Rational tspt_guarantee(const Instance& instance) {
  Rational g = 2 + derive(instance).max_speed_ratio;
  if (is_fps(instance)) {
    bool any_work = std::any_of(instance.jobs.begin(), instance.jobs.end(), [](const Job& job) {
      return std::any_of(job.subjobs.begin(), job.subjobs.end(), [](const Subjob& s) { return !s.empty(); });
    });
    if (any_work) g = std::min(g, 2 + Rational(1, time_resolution(instance)));
  }
  return g;
}

}  // namespace ccs
