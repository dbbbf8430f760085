#pragma once

// Straight-line reimplementations used as ground truth. Nothing here calls the
// library's algorithms; only the data types are shared.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "ccsched/generators.hpp"
#include "ccsched/model.hpp"
#include "ccsched/permutation.hpp"

namespace oracle {

using ccs::Instance;
using ccs::Rational;

inline Rational sum(const std::vector<Rational>& xs) {
  Rational s = 0;
  for (const auto& x : xs) s += x;
  return s;
}

inline Rational work(const Instance& in, std::size_t j, std::size_t i) { return sum(in.jobs[j].subjobs[i].tasks); }

// Sum of the k fastest speeds.
inline Rational top_speeds(const Instance& in, std::size_t i, std::size_t k) {
  auto v = in.clusters[i].speeds;
  std::sort(v.begin(), v.end(), std::greater<>());
  Rational s = 0;
  for (std::size_t l = 0; l < std::min(k, v.size()); ++l) s += v[l];
  return s;
}

inline Rational mu(const Instance& in, std::size_t i) { return sum(in.clusters[i].speeds); }

inline Rational mu_job(const Instance& in, std::size_t j, std::size_t i) {
  return top_speeds(in, i, in.jobs[j].subjobs[i].tasks.size());
}

inline Rational violation(const Instance& in, std::size_t i, const std::vector<std::size_t>& subset,
                          const std::vector<Rational>& c) {
  Rational total = 0, squares = 0, lhs = 0;
  for (std::size_t j : subset) {
    const Rational p = work(in, j, i);
    if (p == 0) continue;
    total += p;
    squares += p * p / mu_job(in, j, i);
    lhs += p * c[j];
  }
  return (total * total / mu(in, i) + squares) / 2 - lhs;
}

// Maximum violation over every nonempty subset of jobs that have work on cluster i.
inline std::optional<Rational> max_violation(const Instance& in, std::size_t i, const std::vector<Rational>& c) {
  std::vector<std::size_t> busy;
  for (std::size_t j = 0; j < in.num_jobs(); ++j)
    if (work(in, j, i) > 0) busy.push_back(j);
  if (busy.empty()) return std::nullopt;
  std::optional<Rational> best;
  for (std::size_t mask = 1; mask < (std::size_t{1} << busy.size()); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t b = 0; b < busy.size(); ++b)
      if (mask >> b & 1) s.push_back(busy[b]);
    Rational v = violation(in, i, s, c);
    if (!best || v > *best) best = v;
  }
  return best;
}

// Frontier list scheduling with a release barrier, written from the rule text.
inline std::vector<Rational> list_schedule(const Instance& in, std::size_t i, const std::vector<std::size_t>& sigma) {
  const auto& speeds = in.clusters[i].speeds;
  std::vector<Rational> frontier(speeds.size(), Rational(0));
  std::vector<Rational> done(in.num_jobs(), Rational(0));
  Rational barrier = 0;
  for (std::size_t j : sigma) {
    const auto& sub = in.jobs[j].subjobs[i];
    if (sub.tasks.empty()) continue;
    barrier = std::max(barrier, sub.release);
    auto tasks = sub.tasks;
    std::sort(tasks.begin(), tasks.end(), std::greater<>());
    for (const auto& p : tasks) {
      std::size_t pick = 0;
      Rational best_end;
      for (std::size_t l = 0; l < speeds.size(); ++l) {
        Rational end = std::max(barrier, frontier[l]) + p / speeds[l];
        if (l == 0 || end < best_end) {
          best_end = end;
          pick = l;
        }
      }
      frontier[pick] = best_end;
      done[j] = std::max(done[j], best_end);
    }
  }
  return done;
}

inline Rational objective(const Instance& in, const std::vector<std::vector<std::size_t>>& sigmas) {
  std::vector<Rational> c(in.num_jobs(), Rational(0));
  for (std::size_t i = 0; i < in.num_clusters(); ++i) {
    auto ci = list_schedule(in, i, sigmas[i]);
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = std::max(c[j], ci[j]);
  }
  Rational total = 0;
  for (std::size_t j = 0; j < c.size(); ++j) total += in.jobs[j].weight * c[j];
  return total;
}

// Smith's rule on one machine of speed v: nondecreasing p/w is optimal.
inline Rational smith(const std::vector<Rational>& p, const std::vector<Rational>& w, const Rational& v = 1) {
  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return p[a] * w[b] < p[b] * w[a]; });
  Rational t = 0, total = 0;
  for (std::size_t j : order) {
    t += p[j] / v;
    total += w[j] * t;
  }
  return total;
}

// Minimum over all permutations of sum w_j max_{i: x_ji > 0} prefix_i(j) for an open-shop matrix.
inline Rational open_shop_optimum(const std::vector<std::vector<Rational>>& x, const std::vector<Rational>& w) {
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::optional<Rational> best;
  do {
    std::vector<Rational> load(n ? x[0].size() : 0, Rational(0));
    Rational total = 0;
    for (std::size_t j : order) {
      Rational c = 0;
      for (std::size_t i = 0; i < load.size(); ++i) {
        load[i] += x[j][i];
        if (x[j][i] > 0) c = std::max(c, load[i]);
      }
      total += w[j] * c;
    }
    if (!best || total < *best) best = total;
  } while (std::next_permutation(order.begin(), order.end()));
  return best.value_or(Rational(0));
}

inline std::vector<std::vector<std::size_t>> all_permutations(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do out.push_back(order);
  while (std::next_permutation(order.begin(), order.end()));
  return out;
}

}  // namespace oracle
