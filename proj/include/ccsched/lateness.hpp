#pragma once

#include <string>
#include <vector>

#include "ccsched/model.hpp"
#include "ccsched/permutation.hpp"

namespace ccs {

/// Total weighted lateness on m identical machines.
struct LatenessInstance {
  std::string name;
  std::vector<Rational> processing;  // p_j > 0
  std::vector<Rational> deadline;    // d_j >= 0
  std::vector<Rational> weight;      // w_j > 0
  std::size_t machines = 1;

  std::size_t num_jobs() const { return processing.size(); }
  bool operator==(const LatenessInstance&) const = default;
};

std::vector<Violation> validate(const LatenessInstance& instance);

/// n + 1 clusters: cluster 0 holds m unit machines and job j's single task
/// p_j; cluster j (1..n) is one unit machine carrying only job j's task d_j
/// (an empty subjob when d_j = 0). Weights are copied.
Instance reduce_lateness(const LatenessInstance& instance);

/// Completion times of list scheduling by sigma on the m identical machines.
std::vector<Rational> lateness_completions(const LatenessInstance& instance, const Permutation& sigma);

/// sum_j w_j max(C_j - d_j, 0) under list scheduling by sigma.
Rational lateness_objective(const LatenessInstance& instance, const Permutation& sigma);

}  // namespace ccs
