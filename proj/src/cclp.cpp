#include "ccsched/cclp.hpp"

#include <algorithm>
#include <numeric>

namespace ccs {

ClassFlags class_flags(const Instance& instance) {
  ClassFlags f{true, true, true};
  for (const auto& cluster : instance.clusters)
    if (std::adjacent_find(cluster.speeds.begin(), cluster.speeds.end(), std::not_equal_to<>()) !=
        cluster.speeds.end())
      f.identical = false;
  for (const auto& job : instance.jobs)
    for (const auto& sub : job.subjobs) {
      if (sub.release != 0) f.no_releases = false;
      if (std::adjacent_find(sub.tasks.begin(), sub.tasks.end(), std::not_equal_to<>()) != sub.tasks.end())
        f.equal_tasks = false;
    }
  return f;
}

InstanceClass classify(const Instance& instance) {
  const auto f = class_flags(instance);
  if (!f.identical) return f.no_releases ? InstanceClass::NotIdA : InstanceClass::NotIdNotA;
  if (f.equal_tasks) return f.no_releases ? InstanceClass::IdAB : InstanceClass::IdNotAB;
  return f.no_releases ? InstanceClass::IdANotB : InstanceClass::IdNotANotB;
}

std::string to_string(InstanceClass cls) {
  switch (cls) {
    case InstanceClass::IdAB: return "Id,A,B";
    case InstanceClass::IdNotAB: return "Id,!A,B";
    case InstanceClass::IdANotB: return "Id,A,!B";
    case InstanceClass::IdNotANotB: return "Id,!A,!B";
    case InstanceClass::NotIdA: return "!Id,A";
    case InstanceClass::NotIdNotA: return "!Id,!A";
  }
  return "?";
}

Rational cclp_guarantee(InstanceClass cls, const Rational& max_speed_ratio) {
  switch (cls) {
    case InstanceClass::IdAB: return 2;
    case InstanceClass::IdNotAB: return 3;
    case InstanceClass::IdANotB: return 3;
    case InstanceClass::IdNotANotB: return 4;
    case InstanceClass::NotIdA: return 2 + max_speed_ratio;
    case InstanceClass::NotIdNotA: return 3 + max_speed_ratio;
  }
  return 0;
}

std::vector<Permutation> lp_orders(const Instance& instance, const DerivedConstants& derived,
                                   const std::vector<Rational>& completion) {
  const std::size_t n = instance.num_jobs();
  std::vector<Permutation> sigmas;
  sigmas.reserve(instance.num_clusters());
  for (std::size_t i = 0; i < instance.num_clusters(); ++i) {
    std::vector<std::size_t> with_work, idle;
    std::vector<Rational> key(n);
    for (std::size_t j = 0; j < n; ++j) {
      const auto& s = derived.at(j, i);
      if (s.work == 0) {
        idle.push_back(j);
        continue;
      }
      key[j] = completion[j] - s.work / (2 * s.usable_speed);
      with_work.push_back(j);
    }
    std::stable_sort(with_work.begin(), with_work.end(),
                     [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
    with_work.insert(with_work.end(), idle.begin(), idle.end());
    sigmas.emplace_back(std::move(with_work));
  }
  return sigmas;
}

CcLpResult cc_lp(const Instance& instance) { return cc_lp(instance, solve_lp1<Rational>(instance)); }

CcLpResult cc_lp(const Instance& instance, LpSolution<Rational> lp) {
  CcLpResult out;
  out.lp = std::move(lp);
  const auto derived = derive(instance);
  out.sigmas = lp_orders(instance, derived, out.lp.completion);
  out.schedule = list_lpt(instance, out.sigmas);
  const auto cls = classify(instance);
  out.certificate = make_certificate("cclp", out.schedule.objective, out.lp.objective,
                                     cclp_guarantee(cls, derived.max_speed_ratio), to_string(cls));
  return out;
}

}  // namespace ccs
