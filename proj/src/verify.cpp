#include "ccsched/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ccsched/cclp.hpp"
#include "ccsched/generators.hpp"
#include "ccsched/openshop.hpp"
#include "ccsched/swag.hpp"
#include "ccsched/transforms.hpp"

namespace ccs {

namespace {

void check_size(std::size_t value, std::size_t cap, const char* what) {
  if (value > cap)
    throw InstanceTooLarge(std::string("enumeration is capped at ") + std::to_string(cap) + " " + what + ", got " +
                           std::to_string(value));
}

struct FrontEntry {
  std::vector<Rational> completion;
  Permutation sigma;
  Rational objective;  // weighted sum of this cluster alone
};

bool dominates(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] > b[j]) return false;
  return true;
}

// Non-dominated completion vectors of one cluster, best objective first.
std::vector<FrontEntry> cluster_front(const Instance& instance, std::size_t cluster) {
  const std::size_t n = instance.num_jobs();
  std::vector<FrontEntry> all;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    Permutation sigma(order);
    auto c = list_lpt_completions(instance, cluster, sigma);
    Rational obj = weighted_sum(instance, c);
    all.push_back({std::move(c), std::move(sigma), std::move(obj)});
  } while (std::next_permutation(order.begin(), order.end()));
  std::stable_sort(all.begin(), all.end(),
                   [](const FrontEntry& a, const FrontEntry& b) { return a.objective < b.objective; });

  // An entry can only be dominated by one with objective no larger, so one
  // pass in sorted order suffices. Equal vectors keep the first permutation.
  std::vector<FrontEntry> front;
  for (auto& e : all) {
    bool dominated = std::any_of(front.begin(), front.end(),
                                 [&](const FrontEntry& f) { return dominates(f.completion, e.completion); });
    if (!dominated) front.push_back(std::move(e));
  }
  return front;
}

class MultiSearch {
 public:
  MultiSearch(const Instance& instance) : instance_(instance) {
    const std::size_t m = instance.num_clusters();
    const std::size_t n = instance.num_jobs();
    for (std::size_t i = 0; i < m; ++i) fronts_.push_back(cluster_front(instance, i));
    // floor_[i][j]: smallest completion job j can have on clusters i..m-1.
    floor_.assign(m + 1, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = m; i-- > 0;)
      for (std::size_t j = 0; j < n; ++j) {
        Rational low = fronts_[i].front().completion[j];
        for (const auto& e : fronts_[i]) low = std::min(low, e.completion[j]);
        floor_[i][j] = std::max(floor_[i + 1][j], low);
      }
    chosen_.resize(m);
  }

  MultiSigmaSearch run() {
    std::vector<Rational> current(instance_.num_jobs(), Rational(0));
    descend(0, current);
    MultiSigmaSearch out;
    out.objective = *best_;
    for (std::size_t i = 0; i < best_choice_.size(); ++i) out.sigmas.push_back(fronts_[i][best_choice_[i]].sigma);
    return out;
  }

 private:
  void descend(std::size_t cluster, const std::vector<Rational>& current) {
    if (cluster == fronts_.size()) {
      Rational obj = weighted_sum(instance_, current);
      if (!best_ || obj < *best_) {
        best_ = obj;
        best_choice_ = chosen_;
      }
      return;
    }
    for (std::size_t k = 0; k < fronts_[cluster].size(); ++k) {
      const auto& entry = fronts_[cluster][k];
      std::vector<Rational> next(current.size());
      Rational bound = 0;
      for (std::size_t j = 0; j < current.size(); ++j) {
        next[j] = std::max(current[j], entry.completion[j]);
        bound += instance_.jobs[j].weight * std::max(next[j], floor_[cluster + 1][j]);
      }
      if (best_ && bound >= *best_) continue;
      chosen_[cluster] = k;
      descend(cluster + 1, next);
    }
  }

  const Instance& instance_;
  std::vector<std::vector<FrontEntry>> fronts_;
  std::vector<std::vector<Rational>> floor_;
  std::vector<std::size_t> chosen_, best_choice_;
  std::optional<Rational> best_;
};

Instance gap_candidate(const GapSearchParams& params, Rng& rng) {
  Instance out;
  const auto n = static_cast<std::size_t>(
      rng.uniform(static_cast<std::int64_t>(params.min_jobs), static_cast<std::int64_t>(params.max_jobs)));
  for (std::size_t i = 0; i < params.clusters; ++i) {
    const auto k = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(params.max_machines)));
    out.clusters.push_back(Cluster{std::vector<Rational>(k, Rational(1))});
  }
  for (std::size_t j = 0; j < n; ++j) {
    Job job;
    for (std::size_t i = 0; i < params.clusters; ++i) {
      Subjob s;
      const auto k = rng.uniform(0, static_cast<std::int64_t>(params.max_tasks));
      for (std::int64_t t = 0; t < k; ++t) s.tasks.push_back(Rational(rng.uniform(1, params.max_processing)));
      std::sort(s.tasks.begin(), s.tasks.end(), std::greater<>());
      job.subjobs.push_back(std::move(s));
    }
    out.jobs.push_back(std::move(job));
  }
  return out;
}

}  // namespace

SigmaSearch best_single_sigma(const Instance& instance, std::size_t max_jobs) {
  require_valid(instance);
  const std::size_t n = instance.num_jobs();
  check_size(n, max_jobs, "jobs");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  SigmaSearch best;
  bool found = false;
  do {
    Permutation sigma(order);
    std::vector<Rational> completion(n, Rational(0));
    for (std::size_t i = 0; i < instance.num_clusters(); ++i) {
      const auto c = list_lpt_completions(instance, i, sigma);
      for (std::size_t j = 0; j < n; ++j) completion[j] = std::max(completion[j], c[j]);
    }
    Rational obj = weighted_sum(instance, completion);
    if (!found || obj < best.objective) {
      best = {std::move(sigma), std::move(obj)};
      found = true;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

MultiSigmaSearch best_multi_sigma(const Instance& instance, std::size_t max_jobs, std::size_t max_clusters) {
  require_valid(instance);
  check_size(instance.num_jobs(), max_jobs, "jobs");
  check_size(instance.num_clusters(), max_clusters, "clusters");
  return MultiSearch(instance).run();
}

std::string to_string(Algorithm alg) {
  switch (alg) {
    case Algorithm::CcLp: return "cclp";
    case Algorithm::CcTspt: return "cctspt";
    case Algorithm::CcAtspt: return "ccatspt";
    case Algorithm::Swag: return "swag";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& name) {
  for (Algorithm alg : {Algorithm::CcLp, Algorithm::CcTspt, Algorithm::CcAtspt, Algorithm::Swag})
    if (to_string(alg) == name) return alg;
  throw BadParams("unknown algorithm '" + name + "' (expected cclp, cctspt, ccatspt or swag)");
}

LowerBound certified_lower_bound(const Instance& instance, std::size_t exact_cap) {
  LowerBound out;
  out.lp = solve_lp1<Rational>(instance);
  out.value = out.lp.objective;
  out.source = "lp1";
  if (is_pd(instance) && class_flags(instance).no_releases && instance.num_jobs() <= exact_cap) {
    auto exact = exact_pd(as_pd(instance), exact_cap);
    if (exact.objective > out.value) {
      out.value = exact.objective;
      out.source = "exact";
    }
  }
  return out;
}

AlgorithmRun run_algorithm(const Instance& instance, Algorithm alg, const LowerBound& bound) {
  const std::string cls = to_string(classify(instance));
  switch (alg) {
    case Algorithm::CcLp: {
      auto res = cc_lp(instance, bound.lp);
      auto cert = make_certificate("cclp", res.schedule.objective, bound.value, res.certificate.guaranteed, cls,
                                   bound.source);
      return {std::move(res.schedule), std::move(cert)};
    }
    case Algorithm::CcTspt:
    case Algorithm::CcAtspt: {
      CombinatorialOptions opts;
      opts.lower_bound = bound.value;
      opts.lower_bound_source = bound.source;
      auto res = alg == Algorithm::CcTspt ? cc_tspt(instance, opts) : cc_atspt(instance, opts);
      return {std::move(res.schedule), std::move(*res.certificate)};
    }
    case Algorithm::Swag: {
      auto schedule = swag_schedule(instance);
      auto cert = make_certificate("swag", schedule.objective, bound.value, std::nullopt, cls, bound.source);
      return {std::move(schedule), std::move(cert)};
    }
  }
  throw BadParams("unknown algorithm");
}

RatioCertificate certify(const Instance& instance, Algorithm alg) {
  require_valid(instance);
  return run_algorithm(instance, alg, certified_lower_bound(instance)).certificate;
}

std::optional<GapWitness> gap_search(const GapSearchParams& params) {
  if (params.min_jobs < 1 || params.min_jobs > params.max_jobs || params.clusters < 1 || params.max_machines < 1 ||
      params.max_processing < 1)
    throw BadParams("gap search needs nonempty job, cluster, machine and processing ranges");
  Rng rng(params.seed);
  for (std::size_t tries = 1; tries <= params.max_tries; ++tries) {
    Instance candidate = gap_candidate(params, rng);
    auto multi = best_multi_sigma(candidate, params.max_jobs, params.clusters);
    if (multi.objective == 0) continue;
    auto single = best_single_sigma(candidate, params.max_jobs);
    if (single.objective >= params.target * multi.objective) {
      GapWitness w;
      w.ratio = single.objective / multi.objective;
      w.instance = std::move(candidate);
      w.instance.name = "gap-s" + std::to_string(params.seed) + "-t" + std::to_string(tries);
      w.single = std::move(single);
      w.multi = std::move(multi);
      w.tries = tries;
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace ccs
