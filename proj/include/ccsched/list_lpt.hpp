#pragma once

#include <vector>

#include "ccsched/model.hpp"
#include "ccsched/permutation.hpp"

namespace ccs {

struct ListLptOptions {
  /// Let a task start inside an idle gap left by an earlier release barrier.
  /// The default appends at machine frontiers, which is the placement the
  /// per-subjob completion bound is proven for.
  bool fill_gaps = false;
};

/// Placement of one cluster's tasks.
struct ClusterSchedule {
  std::size_t cluster = 0;
  std::vector<Assignment> assignments;
  std::vector<Rational> subjob_completion;  // per job; 0 for empty subjobs
};

/// Places the cluster's tasks in the order List(sigma(1)) + ... + List(sigma(n)),
/// longest task first within a subjob. Each task goes to the machine that
/// finishes it earliest (lowest index on ties), never starting before the
/// largest release seen so far in sigma.
ClusterSchedule list_lpt_cluster(const Instance& instance, std::size_t cluster, const Permutation& sigma,
                                 const ListLptOptions& options = {});

/// One permutation per cluster.
Schedule list_lpt(const Instance& instance, const std::vector<Permutation>& sigmas,
                  const ListLptOptions& options = {});

/// The same permutation on every cluster (a single-sigma schedule).
Schedule list_lpt(const Instance& instance, const Permutation& sigma, const ListLptOptions& options = {});

/// Completion times only; skips building assignments. Used by the enumeration oracles.
std::vector<Rational> list_lpt_completions(const Instance& instance, std::size_t cluster, const Permutation& sigma);

}  // namespace ccs
