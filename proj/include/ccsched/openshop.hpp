#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ccsched/errors.hpp"
#include "ccsched/model.hpp"
#include "ccsched/permutation.hpp"
#include "ccsched/rational.hpp"

namespace ccs {

/// Concurrent open shop instance: one machine per column, x(j, i) is the
/// processing job j needs on machine i.
template <class Scalar>
struct PdInstance {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Matrix x;
  Vector weights;

  Eigen::Index jobs() const { return x.rows(); }
  Eigen::Index machines() const { return x.cols(); }

  template <class Other>
  PdInstance<Other> cast() const {
    PdInstance<Other> out;
    out.x.resize(x.rows(), x.cols());
    out.weights.resize(weights.size());
    for (Eigen::Index j = 0; j < x.rows(); ++j) {
      for (Eigen::Index i = 0; i < x.cols(); ++i) out.x(j, i) = convert<Other>(x(j, i));
      out.weights(j) = convert<Other>(weights(j));
    }
    return out;
  }

 private:
  template <class Other>
  static Other convert(const Scalar& v) {
    if constexpr (std::is_same_v<Other, Scalar>) return v;
    else if constexpr (std::is_same_v<Scalar, Rational>) return scalar_cast<Other>(v);
    else return Other(v);
  }
};

template <class Scalar>
void validate_pd(const PdInstance<Scalar>& pd) {
  if (pd.machines() < 1) throw BadParams("open shop instance needs at least one machine");
  if (pd.weights.size() != pd.jobs()) throw DimensionMismatch("one weight per job required");
  for (Eigen::Index j = 0; j < pd.jobs(); ++j) {
    if (!(pd.weights(j) > Scalar(0))) throw BadParams("weights must be positive");
    for (Eigen::Index i = 0; i < pd.machines(); ++i) {
      const Scalar& v = pd.x(j, i);
      if (!(v >= Scalar(0))) throw BadParams("processing times must be finite and nonnegative");
      if constexpr (!ScalarTraits<Scalar>::exact) {
        if (!std::isfinite(v)) throw BadParams("processing times must be finite and nonnegative");
      }
    }
  }
}

/// Elementary-operation counters for MUSSQ.
struct MussqStats {
  std::size_t machine_scans = 0;  // load comparisons for the bottleneck machine
  std::size_t job_scans = 0;      // ratio comparisons
  std::size_t weight_updates = 0;
  std::size_t load_updates = 0;

  std::size_t total() const { return machine_scans + job_scans + weight_updates + load_updates; }
};

/// Primal-dual order for concurrent open shop. Builds the permutation back to
/// front: the machine with the largest remaining load is the bottleneck, the
/// remaining job with the smallest residual weight per unit of bottleneck work
/// goes in the last open slot, and every residual weight is charged
/// theta * x(j, bottleneck). Jobs with an all-zero row are placed first in
/// index order. Ties go to the lowest index. O(n^2 + n m).
template <class Scalar>
Permutation mussq(const PdInstance<Scalar>& pd, MussqStats* stats = nullptr) {
  validate_pd(pd);
  const Eigen::Index n = pd.jobs();
  const Eigen::Index m = pd.machines();
  MussqStats local;
  MussqStats& st = stats ? *stats : local;

  std::vector<std::size_t> order(static_cast<std::size_t>(n));
  std::vector<Eigen::Index> active;
  std::size_t front = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    if ((pd.x.row(j).array() == Scalar(0)).all()) order[front++] = static_cast<std::size_t>(j);
    else active.push_back(j);
  }

  Eigen::Matrix<Scalar, 1, Eigen::Dynamic> load = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>::Zero(m);
  for (Eigen::Index j : active) load += pd.x.row(j);
  st.load_updates += active.size() * static_cast<std::size_t>(m);

  std::vector<Scalar> residual(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) residual[static_cast<std::size_t>(j)] = pd.weights(j);

  std::size_t slot = static_cast<std::size_t>(n);
  while (!active.empty()) {
    Eigen::Index bottleneck = 0;
    for (Eigen::Index i = 1; i < m; ++i)
      if (load(i) > load(bottleneck)) bottleneck = i;
    st.machine_scans += static_cast<std::size_t>(m);

    // Ties take the highest index for the back slot, so tied jobs keep index order in sigma.
    std::size_t pick = active.size();
    Scalar best_ratio{};
    for (std::size_t k = 0; k < active.size(); ++k) {
      const Eigen::Index j = active[k];
      const Scalar& xj = pd.x(j, bottleneck);
      if (!(xj > Scalar(0))) continue;
      Scalar ratio = residual[static_cast<std::size_t>(j)] / xj;
      if (pick == active.size() || ratio < best_ratio || (ratio == best_ratio && j > active[pick])) {
        pick = k;
        best_ratio = std::move(ratio);
      }
    }
    st.job_scans += active.size();
    if (pick == active.size()) throw SolverError("mussq: bottleneck machine carries no remaining work");

    const Eigen::Index chosen = active[pick];
    const Scalar theta = best_ratio;
    for (Eigen::Index j : active) {
      auto& w = residual[static_cast<std::size_t>(j)];
      w -= theta * pd.x(j, bottleneck);
      if constexpr (ScalarTraits<Scalar>::exact) {
        if (w < Scalar(0)) throw SolverError("mussq: residual weight became negative");
      } else {
        // Rounding only; anything larger is a logic error.
        if (w < -1e-9 * std::max(1.0, std::abs(double(pd.weights(j)))))
          throw SolverError("mussq: residual weight became negative");
        if (w < 0) w = 0;
      }
    }
    residual[static_cast<std::size_t>(chosen)] = Scalar(0);
    st.weight_updates += active.size();

    order[--slot] = static_cast<std::size_t>(chosen);
    load -= pd.x.row(chosen);
    st.load_updates += static_cast<std::size_t>(m);
    active[pick] = active.back();
    active.pop_back();
  }
  return Permutation(std::move(order));
}

/// Largest entry of `load` over the machines where `row` is positive; 0 for a zero row.
template <class Scalar, class Load, class Row>
Scalar busy_max(const Load& load, const Row& row) {
  Scalar out(0);
  for (Eigen::Index i = 0; i < row.size(); ++i)
    if (row(i) > Scalar(0) && load(i) > out) out = load(i);
  return out;
}

/// Serial completion: C_{sigma(k)} = max over machines with x(sigma(k), i) > 0
/// of sum_{l <= k} x(sigma(l), i). A job with an all-zero row completes at 0.
template <class Scalar>
std::vector<Scalar> pd_completions(const PdInstance<Scalar>& pd, const Permutation& sigma) {
  if (!sigma.is_bijection(static_cast<std::size_t>(pd.jobs())))
    throw DimensionMismatch("permutation " + sigma.to_string() + " does not match the instance");
  Eigen::Matrix<Scalar, 1, Eigen::Dynamic> prefix = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>::Zero(pd.machines());
  std::vector<Scalar> completion(static_cast<std::size_t>(pd.jobs()));
  for (std::size_t j : sigma) {
    prefix += pd.x.row(static_cast<Eigen::Index>(j));
    completion[j] = busy_max<Scalar>(prefix, pd.x.row(static_cast<Eigen::Index>(j)));
  }
  return completion;
}

template <class Scalar>
Scalar pd_objective(const PdInstance<Scalar>& pd, const Permutation& sigma) {
  const auto completion = pd_completions(pd, sigma);
  Scalar total = 0;
  for (std::size_t j = 0; j < completion.size(); ++j)
    total += pd.weights(static_cast<Eigen::Index>(j)) * completion[j];
  return total;
}

template <class Scalar>
struct ExactPd {
  Permutation sigma;
  Scalar objective{};
};

/// Exhaustive minimum of pd_objective over all orders (depth-first with
/// partial-sum pruning). Returns the lexicographically first optimal order.
/// Throws InstanceTooLarge above `max_jobs`.
template <class Scalar>
ExactPd<Scalar> exact_pd(const PdInstance<Scalar>& pd, std::size_t max_jobs = 9) {
  validate_pd(pd);
  const auto n = static_cast<std::size_t>(pd.jobs());
  if (n > max_jobs)
    throw InstanceTooLarge("exact open shop enumeration is capped at " + std::to_string(max_jobs) + " jobs, got " +
                           std::to_string(n));
  using Row = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;
  ExactPd<Scalar> best;
  bool found = false;
  std::vector<std::size_t> prefix;
  std::vector<bool> used(n, false);
  std::vector<Row> loads(n + 1, Row::Zero(pd.machines()));

  auto dfs = [&](auto& self, const Scalar& partial) -> void {
    const std::size_t depth = prefix.size();
    if (found && !(partial < best.objective)) return;
    if (depth == n) {
      best.objective = partial;
      best.sigma = Permutation(prefix);
      found = true;
      return;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      loads[depth + 1] = loads[depth] + pd.x.row(static_cast<Eigen::Index>(j));
      used[j] = true;
      prefix.push_back(j);
      const Scalar c = busy_max<Scalar>(loads[depth + 1], pd.x.row(static_cast<Eigen::Index>(j)));
      self(self, Scalar(partial + pd.weights(static_cast<Eigen::Index>(j)) * c));
      prefix.pop_back();
      used[j] = false;
    }
  };
  dfs(dfs, Scalar(0));
  return best;
}

/// Every column becomes a unit-speed single-machine cluster; x(j, i) > 0
/// becomes a single task.
Instance to_cc(const PdInstance<Rational>& pd, std::string name = "pd");

/// True when every cluster has exactly one machine.
bool is_pd(const Instance& instance);

/// x(j, i) = p_ji / v_1i for an instance with one machine per cluster.
/// Throws UnsupportedInstance otherwise.
PdInstance<Rational> as_pd(const Instance& instance);

}  // namespace ccs
