#include "ccsched/openshop.hpp"

namespace ccs {

Instance to_cc(const PdInstance<Rational>& pd, std::string name) {
  validate_pd(pd);
  Instance out;
  out.name = std::move(name);
  out.clusters.assign(static_cast<std::size_t>(pd.machines()), Cluster{{Rational(1)}});
  for (Eigen::Index j = 0; j < pd.jobs(); ++j) {
    Job job;
    job.weight = pd.weights(j);
    for (Eigen::Index i = 0; i < pd.machines(); ++i) {
      Subjob sub;
      if (pd.x(j, i) > 0) sub.tasks.push_back(pd.x(j, i));
      job.subjobs.push_back(std::move(sub));
    }
    out.jobs.push_back(std::move(job));
  }
  return out;
}

bool is_pd(const Instance& instance) {
  for (const auto& cluster : instance.clusters)
    if (cluster.machines() != 1) return false;
  return true;
}

PdInstance<Rational> as_pd(const Instance& instance) {
  if (!is_pd(instance)) throw UnsupportedInstance("instance has a cluster with more than one machine");
  PdInstance<Rational> pd;
  const auto n = static_cast<Eigen::Index>(instance.num_jobs());
  const auto m = static_cast<Eigen::Index>(instance.num_clusters());
  pd.x.resize(n, m);
  pd.weights.resize(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    pd.weights(j) = instance.jobs[static_cast<std::size_t>(j)].weight;
    for (Eigen::Index i = 0; i < m; ++i) {
      Rational work = 0;
      for (const auto& p : instance.subjob(static_cast<std::size_t>(j), static_cast<std::size_t>(i)).tasks) work += p;
      pd.x(j, i) = work / instance.clusters[static_cast<std::size_t>(i)].speeds.front();
    }
  }
  return pd;
}

}  // namespace ccs
