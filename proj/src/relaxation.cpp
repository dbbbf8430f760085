#include "ccsched/relaxation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ccsched/simplex.hpp"

namespace ccs {

namespace {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

template <class Scalar>
Scalar half(const Scalar& x) {
  return x / Scalar(2);
}


std::string lp_number(const Rational& q) {
  std::string text = format_rational(q);
  if (text.find('/') == std::string::npos) return text;
  return format_significant(q, 17);
}

}  // namespace

Rational cut_rhs(const Instance& instance, const DerivedConstants& derived, std::size_t cluster,
                 std::span<const std::size_t> subset) {
  (void)instance;
  Rational total = 0, squares = 0;
  for (std::size_t j : subset) {
    const auto& s = derived.at(j, cluster);
    if (s.work == 0) continue;
    total += s.work;
    squares += s.work * s.work / s.usable_speed;
  }
  return half(total * total / derived.clusters[cluster].total_speed + squares);
}

Cut make_cut(const Instance& instance, const DerivedConstants& derived, std::size_t cluster,
             std::vector<std::size_t> subset) {
  std::sort(subset.begin(), subset.end());
  Cut cut{cluster, std::move(subset), Rational(0)};
  cut.rhs = cut_rhs(instance, derived, cluster, cut.subset);
  return cut;
}

template <class Scalar>
Scalar violation(const Instance& instance, const DerivedConstants& derived, std::size_t cluster,
                 std::span<const std::size_t> subset, std::span<const Scalar> completion) {
  if (subset.empty()) throw EmptySubset("violation requires a nonempty job subset");
  if (completion.size() != instance.num_jobs()) throw DimensionMismatch("completion vector length");
  Scalar lhs = 0;
  for (std::size_t j : subset) lhs += scalar_cast<Scalar>(derived.at(j, cluster).work) * completion[j];
  return scalar_cast<Scalar>(cut_rhs(instance, derived, cluster, subset)) - lhs;
}

Rational violation(const Instance& instance, std::size_t cluster, std::span<const std::size_t> subset,
                   std::span<const Rational> completion) {
  return violation<Rational>(instance, derive(instance), cluster, subset, completion);
}

Rational cut_slack(const Instance& instance, const DerivedConstants& derived, const Cut& cut,
                   std::span<const Rational> completion) {
  return -violation<Rational>(instance, derived, cut.cluster, cut.subset, completion);
}

template <class Scalar>
Separation<Scalar> separate(const Instance& instance, const DerivedConstants& derived,
                            std::span<const Scalar> completion) {
  const std::size_t n = instance.num_jobs();
  if (completion.size() != n) throw DimensionMismatch("completion vector length");
  const Scalar tol = ScalarTraits<Scalar>::feasibility();
  Separation<Scalar> out;

  struct Entry {
    Scalar key;
    std::size_t job;
  };
  std::vector<Entry> order;
  for (std::size_t i = 0; i < instance.num_clusters(); ++i) {
    const Scalar mu = scalar_cast<Scalar>(derived.clusters[i].total_speed);
    order.clear();
    for (std::size_t j = 0; j < n; ++j) {
      const auto& s = derived.at(j, i);
      if (s.work == 0) continue;
      order.push_back({completion[j] - scalar_cast<Scalar>(s.work / (2 * s.usable_speed)), j});
    }
    if (order.empty()) continue;
    std::sort(order.begin(), order.end(),
              [](const Entry& a, const Entry& b) { return a.key < b.key || (a.key == b.key && a.job < b.job); });

    Scalar total = 0, squares = 0, weighted = 0;
    Scalar best{};
    std::size_t best_len = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
      const auto& s = derived.at(order[k].job, i);
      const Scalar p = scalar_cast<Scalar>(s.work);
      total += p;
      squares += scalar_cast<Scalar>(s.work * s.work / s.usable_speed);
      weighted += p * completion[order[k].job];
      Scalar v = half(total * total / mu + squares) - weighted;
      if (best_len == 0 || v > best) {
        best = v;
        best_len = k + 1;
      }
    }
    ClusterMaximum<Scalar> max{i, {}, best};
    for (std::size_t k = 0; k < best_len; ++k) max.subset.push_back(order[k].job);
    std::sort(max.subset.begin(), max.subset.end());
    if (best > tol) out.violated.push_back(make_cut(instance, derived, i, max.subset));
    out.maxima.push_back(std::move(max));
  }

  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < instance.num_clusters(); ++i) {
      const auto& s = derived.at(j, i);
      if (s.work == 0) continue;
      const Rational& release = instance.subjob(j, i).release;
      const Scalar bounds[] = {
          scalar_cast<Scalar>(s.longest_task / derived.clusters[i].fastest_speed + release),
          scalar_cast<Scalar>(s.work / s.usable_speed + release),
      };
      for (int b = 0; b < 2; ++b) {
        Scalar amount = bounds[b] - completion[j];
        if (amount > tol && (!out.bound || amount > out.bound->amount))
          out.bound = BoundViolation<Scalar>{j, i, b == 0 ? BoundKind::LongestTask : BoundKind::Parallel, amount};
      }
    }
  return out;
}

template <class Scalar>
LpSolution<Scalar> solve_lp1(const Instance& instance, const LpOptions& options) {
  require_valid(instance);
  const auto derived = derive(instance);
  const std::size_t n = instance.num_jobs();
  const std::size_t m = instance.num_clusters();
  const std::size_t max_cuts = options.max_cuts ? options.max_cuts : 50 * n * m;

  // C = floor + y with y >= 0 absorbs every single-job completion bound.
  std::vector<Rational> floor(n);
  typename PackingSimplex<Scalar>::Vector capacity(static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j) {
    floor[j] = derived.completion_lower_bound(instance, j);
    capacity(static_cast<Eigen::Index>(j)) = scalar_cast<Scalar>(instance.jobs[j].weight);
  }
  PackingSimplex<Scalar> dual(capacity);

  LpSolution<Scalar> sol;
  sol.completion.resize(n);
  for (std::size_t j = 0; j < n; ++j) sol.completion[j] = scalar_cast<Scalar>(floor[j]);
  auto objective_of = [&](const std::vector<Scalar>& c) {
    Scalar total = 0;
    for (std::size_t j = 0; j < n; ++j) total += scalar_cast<Scalar>(instance.jobs[j].weight) * c[j];
    return total;
  };
  sol.objective = objective_of(sol.completion);
  sol.objective_history.push_back(sol.objective);

  for (;;) {
    auto sep = separate<Scalar>(instance, derived, std::span<const Scalar>(sol.completion));
    std::size_t added = 0;
    for (auto& cut : sep.violated) {
      if (std::find(sol.cuts.begin(), sol.cuts.end(), cut) != sol.cuts.end()) continue;
      if (sol.cuts.size() >= max_cuts) {
        std::vector<double> best(n);
        for (std::size_t j = 0; j < n; ++j) best[j] = to_double(sol.completion[j]);
        throw IterationLimit("cutting-plane loop exceeded " + std::to_string(max_cuts) + " cuts", std::move(best),
                             to_double(sol.objective));
      }
      typename PackingSimplex<Scalar>::Vector column =
          PackingSimplex<Scalar>::Vector::Zero(static_cast<Eigen::Index>(n));
      Rational profit = cut.rhs;
      for (std::size_t j : cut.subset) {
        const Rational& p = derived.at(j, cut.cluster).work;
        column(static_cast<Eigen::Index>(j)) = scalar_cast<Scalar>(p);
        profit -= p * floor[j];
      }
      dual.add_column(column, scalar_cast<Scalar>(profit));
      sol.cuts.push_back(std::move(cut));
      ++added;
    }
    if (added == 0) break;

    switch (dual.solve(options.max_pivots)) {
      case SimplexStatus::Optimal:
        break;
      case SimplexStatus::Unbounded:
        throw SubsolverFailure("relaxation reported infeasible (dual unbounded)");
      case SimplexStatus::PivotLimit:
        throw SubsolverFailure("simplex pivot limit reached");
    }
    const auto y = dual.duals();
    for (std::size_t j = 0; j < n; ++j) {
      Scalar extra = y(static_cast<Eigen::Index>(j));
      if constexpr (!ScalarTraits<Scalar>::exact) extra = std::max(extra, 0.0);
      sol.completion[j] = scalar_cast<Scalar>(floor[j]) + extra;
    }
    sol.objective = objective_of(sol.completion);
    sol.objective_history.push_back(sol.objective);
    ++sol.rounds;
  }
  sol.pivots = dual.pivots();
  return sol;
}

void write_lp(std::ostream& out, const Instance& instance, const std::vector<Cut>& cuts) {
  const auto derived = derive(instance);
  const std::size_t n = instance.num_jobs();
  out << "\\ concurrent cluster scheduling relaxation";
  if (!instance.name.empty()) out << ": " << instance.name;
  out << "\n\\ " << cuts.size() << " generated cuts\nMinimize\n obj:";
  for (std::size_t j = 0; j < n; ++j)
    out << (j ? " + " : " ") << lp_number(instance.jobs[j].weight) << " C" << j;
  out << "\nSubject To\n";

  // Scales a row sum coeffs_j C_j >= rhs to integer data.
  auto write_row = [&](const std::string& label, const std::vector<std::pair<std::size_t, Rational>>& coeffs,
                       const Rational& rhs) {
    Integer scale = boost::multiprecision::denominator(rhs);
    for (const auto& [j, c] : coeffs) scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(c));
    out << " " << label << ":";
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      out << (k ? " + " : " ") << format_rational(coeffs[k].second * Rational(scale)) << " C" << coeffs[k].first;
    out << " >= " << format_rational(rhs * Rational(scale)) << "\n";
  };

  for (std::size_t j = 0; j < n; ++j) {
    Rational lb = derived.completion_lower_bound(instance, j);
    if (lb > 0) write_row("lb" + std::to_string(j), {{j, Rational(1)}}, lb);
  }
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    std::vector<std::pair<std::size_t, Rational>> coeffs;
    for (std::size_t j : cuts[k].subset) coeffs.emplace_back(j, derived.at(j, cuts[k].cluster).work);
    write_row("cut" + std::to_string(k) + "_k" + std::to_string(cuts[k].cluster), coeffs, cuts[k].rhs);
  }
  out << "End\n";
}

SumOfSquares lemma1_check(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size())
    throw DimensionMismatch("lemma1_check: |a| = " + std::to_string(a.size()) + " but |b| = " +
                            std::to_string(b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0) throw BadParams("lemma1_check: a must be nonnegative");
    if (b[i] <= 0) throw BadParams("lemma1_check: b must be positive");
    if (i > 0 && b[i] > b[i - 1]) throw BadParams("lemma1_check: b must be non-increasing");
  }
  SumOfSquares out{Rational(0), Rational(0)};
  Rational total = 0;
  std::size_t positive = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.lhs += a[i] * a[i] / b[i];
    total += a[i];
    if (a[i] > 0) ++positive;
  }
  if (positive > 0) {
    Rational capacity = 0;
    for (std::size_t i = 0; i < positive; ++i) capacity += b[i];
    out.rhs = total * total / capacity;
  }
  return out;
}

template Rational violation<Rational>(const Instance&, const DerivedConstants&, std::size_t,
                                      std::span<const std::size_t>, std::span<const Rational>);
template double violation<double>(const Instance&, const DerivedConstants&, std::size_t, std::span<const std::size_t>,
                                  std::span<const double>);
template Separation<Rational> separate<Rational>(const Instance&, const DerivedConstants&, std::span<const Rational>);
template Separation<double> separate<double>(const Instance&, const DerivedConstants&, std::span<const double>);
template LpSolution<Rational> solve_lp1<Rational>(const Instance&, const LpOptions&);
template LpSolution<double> solve_lp1<double>(const Instance&, const LpOptions&);

}  // namespace ccs
