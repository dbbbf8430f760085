#pragma once

#include <utility>
#include <vector>

#include "ccsched/list_lpt.hpp"

namespace ccs {

struct SwagTrace {
  Permutation order;
  /// Queue lengths q_i after each selection.
  std::vector<std::vector<Rational>> queue_history;
  /// Candidate (job, potential makespan) pairs evaluated in each round.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> makespan_history;
};

/// Greedy baseline: each round computes, for every unscheduled job,
/// max_i (q_i + p_ji) / m_i and appends the job with the smallest value
/// (lowest index on ties), then adds its work to every queue. Machine speeds
/// are ignored. O(n^2 m).
SwagTrace swag(const Instance& instance);

/// SWAG's order list-scheduled on every cluster.
Schedule swag_schedule(const Instance& instance);

/// m single-machine clusters; jobs 0..m-1 have time p on their own cluster
/// only, jobs m..m+L-1 have p(1 - eps) on every cluster. Unit weights.
/// Throws BadEpsilon unless 0 < eps < 1/L, BadParams on m, L < 1 or p <= 0.
Instance gen_adversarial(std::size_t clusters, std::size_t long_jobs, const Rational& p, const Rational& eps);

struct AdversarialObjectives {
  Rational swag;         // p(1-eps)L(L+1)/2 + p(1-eps)Lm + pm
  Rational alternative;  // p(1-eps)L(L+1)/2 + pL + pm
};

AdversarialObjectives adversarial_objectives(std::size_t clusters, std::size_t long_jobs, const Rational& p,
                                             const Rational& eps);

/// The order with the single-cluster jobs first, used for the alternative value.
Permutation adversarial_alternative_order(std::size_t clusters, std::size_t long_jobs);

}  // namespace ccs
