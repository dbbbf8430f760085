#pragma once

#include <vector>

#include "ccsched/generators.hpp"
#include "ccsched/model.hpp"

namespace support {

using ccs::Instance;
using ccs::Rational;
using Tasks = std::vector<Rational>;

inline ccs::Job job(Rational weight, std::vector<Tasks> tasks, std::vector<Rational> releases = {}) {
  ccs::Job j;
  j.weight = weight;
  for (std::size_t i = 0; i < tasks.size(); ++i)
    j.subjobs.push_back(ccs::Subjob{tasks[i], i < releases.size() ? releases[i] : Rational(0)});
  return j;
}

inline Instance instance(std::vector<std::vector<Rational>> speeds, std::vector<ccs::Job> jobs) {
  Instance in;
  for (auto& s : speeds) in.clusters.push_back(ccs::Cluster{std::move(s)});
  in.jobs = std::move(jobs);
  return in;
}

// Small random instance with r = 0 unless releases are asked for.
inline Instance random_small(ccs::Rng& rng, std::int64_t max_jobs, std::int64_t max_clusters, bool releases = false,
                             bool uniform = false) {
  ccs::RandomCcParams p;
  p.jobs = {1, max_jobs};
  p.clusters = {1, max_clusters};
  p.machines = {1, 3};
  p.tasks = {0, 4};
  p.processing = {1, 9};
  p.weight = {1, 6};
  if (uniform) p.speed = {1, 4};
  if (releases) p.release = {0, 12};
  return ccs::random_cc(p, rng);
}

// Fisher-Yates with the library's deterministic draws.
inline std::vector<std::size_t> shuffled(std::size_t n, ccs::Rng& rng) {
  std::vector<std::size_t> o(n);
  for (std::size_t k = 0; k < n; ++k) o[k] = k;
  for (std::size_t a = n; a > 1; --a)
    std::swap(o[a - 1], o[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(a) - 1))]);
  return o;
}

}  // namespace support
