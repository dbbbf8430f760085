#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "ccsched/model.hpp"

namespace ccs {

/// Polyhedral constraint for cluster i and job subset S:
///   sum_{j in S} p_ji C_j >= 1/2 [ (sum_S p_ji)^2 / mu_i + sum_S p_ji^2 / mu_ji ].
struct Cut {
  std::size_t cluster = 0;
  std::vector<std::size_t> subset;  // ascending job indices, all with p_ji > 0
  Rational rhs;

  bool operator==(const Cut&) const = default;
};

/// Right-hand side of the cut for (cluster, subset). Jobs without work on the
/// cluster contribute nothing.
Rational cut_rhs(const Instance& instance, const DerivedConstants& derived, std::size_t cluster,
                 std::span<const std::size_t> subset);

Cut make_cut(const Instance& instance, const DerivedConstants& derived, std::size_t cluster,
             std::vector<std::size_t> subset);

/// rhs minus sum_S p_ji C_j; positive means the cut is violated at C.
/// Throws EmptySubset.
template <class Scalar>
Scalar violation(const Instance& instance, const DerivedConstants& derived, std::size_t cluster,
                 std::span<const std::size_t> subset, std::span<const Scalar> completion);

Rational violation(const Instance& instance, std::size_t cluster, std::span<const std::size_t> subset,
                   std::span<const Rational> completion);

/// lhs - rhs of a stored cut at C (nonnegative iff satisfied).
Rational cut_slack(const Instance& instance, const DerivedConstants& derived, const Cut& cut,
                   std::span<const Rational> completion);

enum class BoundKind {
  LongestTask,  // C_j >= p_ji1 / v_1i + r_ji
  Parallel,     // C_j >= p_ji / mu_ji + r_ji
};

template <class Scalar>
struct BoundViolation {
  std::size_t job = 0;
  std::size_t cluster = 0;
  BoundKind kind = BoundKind::LongestTask;
  Scalar amount{};  // bound minus C_j, > 0
};

/// Best prefix found for one cluster.
template <class Scalar>
struct ClusterMaximum {
  std::size_t cluster = 0;
  std::vector<std::size_t> subset;  // ascending job indices
  Scalar violation{};
};

template <class Scalar>
struct Separation {
  /// One entry per cluster that carries any work, whether violated or not.
  std::vector<ClusterMaximum<Scalar>> maxima;
  /// Cuts whose violation exceeds the tolerance, at most one per cluster.
  std::vector<Cut> violated;
  /// Most violated completion-time lower bound, if any.
  std::optional<BoundViolation<Scalar>> bound;

  bool feasible() const { return violated.empty() && !bound; }
};

/// Separation oracle. Per cluster, sorts jobs with work by
/// C_j - p_ji / (2 mu_ji) (ties by job index) and scans the n prefix sets; the
/// maximizing prefix is the most violated cut of that cluster. Bounds on
/// single completion times are checked directly. O(m n log n).
template <class Scalar>
Separation<Scalar> separate(const Instance& instance, const DerivedConstants& derived,
                            std::span<const Scalar> completion);

template <class Scalar>
Separation<Scalar> separate(const Instance& instance, std::span<const Scalar> completion) {
  return separate<Scalar>(instance, derive(instance), completion);
}

template <class Scalar>
struct LpSolution {
  std::vector<Scalar> completion;  // C_j
  Scalar objective{};
  std::vector<Cut> cuts;           // generated (1A) constraints in insertion order
  std::vector<Scalar> objective_history;  // after each cutting round
  std::size_t rounds = 0;
  std::size_t pivots = 0;
};

struct LpOptions {
  /// Cut budget; 0 selects 50 * n * m.
  std::size_t max_cuts = 0;
  std::size_t max_pivots = 1000000;
};

/// Cutting-plane solve of the relaxation. Completion lower bounds are folded
/// into variable bounds; polyhedral cuts are generated by `separate` until
/// none is violated beyond the scalar's tolerance (exact zero for Rational).
/// Throws SubsolverFailure or IterationLimit.
template <class Scalar>
LpSolution<Scalar> solve_lp1(const Instance& instance, const LpOptions& options = {});

/// Writes the relaxation restricted to `cuts` in CPLEX LP text format. Cut rows
/// and lower bounds are scaled to integer coefficients so the file is exact.
void write_lp(std::ostream& out, const Instance& instance, const std::vector<Cut>& cuts);

/// Both sides of sum a_i^2 / b_i >= (sum a_i)^2 / (b_1 + ... + b_k), where
/// k is the number of positive a_i.
struct SumOfSquares {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs >= rhs; }
};

/// a nonnegative, b positive and non-increasing, equal lengths. Throws
/// DimensionMismatch on length mismatch and BadParams on sign/order violations.
SumOfSquares lemma1_check(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace ccs
