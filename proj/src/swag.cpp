#include "ccsched/swag.hpp"

namespace ccs {

namespace {

void check_adversarial(std::size_t clusters, std::size_t long_jobs, const Rational& p, const Rational& eps) {
  if (clusters < 1 || long_jobs < 1) throw BadParams("adversarial family needs m >= 1 and L >= 1");
  if (p <= 0) throw BadParams("adversarial family needs p > 0");
  if (eps <= 0 || eps >= Rational(1, long_jobs))
    throw BadEpsilon("eps must satisfy 0 < eps < 1/L, got " + format_rational(eps));
}

}  // namespace

SwagTrace swag(const Instance& instance) {
  require_valid(instance);
  const std::size_t n = instance.num_jobs();
  const std::size_t m = instance.num_clusters();

  std::vector<std::vector<Rational>> work(n, std::vector<Rational>(m, Rational(0)));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i)
      for (const auto& p : instance.subjob(j, i).tasks) work[j][i] += p;

  SwagTrace trace;
  std::vector<Rational> queue(m, Rational(0));
  std::vector<bool> done(n, false);
  std::vector<std::size_t> order;
  while (order.size() < n) {
    std::vector<std::pair<std::size_t, Rational>> round;
    std::size_t pick = n;
    Rational best;
    for (std::size_t j = 0; j < n; ++j) {
      if (done[j]) continue;
      Rational makespan = 0;
      for (std::size_t i = 0; i < m; ++i) {
        Rational candidate = (queue[i] + work[j][i]) / Rational(instance.clusters[i].machines());
        if (candidate > makespan) makespan = std::move(candidate);
      }
      if (pick == n || makespan < best) {
        pick = j;
        best = makespan;
      }
      round.emplace_back(j, std::move(makespan));
    }
    done[pick] = true;
    order.push_back(pick);
    for (std::size_t i = 0; i < m; ++i) queue[i] += work[pick][i];
    trace.queue_history.push_back(queue);
    trace.makespan_history.push_back(std::move(round));
  }
  trace.order = Permutation(std::move(order));
  return trace;
}

Schedule swag_schedule(const Instance& instance) { return list_lpt(instance, swag(instance).order); }

Instance gen_adversarial(std::size_t clusters, std::size_t long_jobs, const Rational& p, const Rational& eps) {
  check_adversarial(clusters, long_jobs, p, eps);
  Instance out;
  out.name = "swag-adversarial-m" + std::to_string(clusters) + "-L" + std::to_string(long_jobs);
  out.clusters.assign(clusters, Cluster{{Rational(1)}});
  for (std::size_t j = 0; j < clusters; ++j) {
    Job job;
    job.subjobs.resize(clusters);
    job.subjobs[j].tasks = {p};
    out.jobs.push_back(std::move(job));
  }
  const Rational shorter = p * (1 - eps);
  for (std::size_t k = 0; k < long_jobs; ++k) {
    Job job;
    job.subjobs.assign(clusters, Subjob{{shorter}, Rational(0)});
    out.jobs.push_back(std::move(job));
  }
  return out;
}

AdversarialObjectives adversarial_objectives(std::size_t clusters, std::size_t long_jobs, const Rational& p,
                                             const Rational& eps) {
  check_adversarial(clusters, long_jobs, p, eps);
  const Rational m(clusters), L(long_jobs);
  const Rational shared = p * (1 - eps) * L * (L + 1) / 2;
  return {shared + p * (1 - eps) * L * m + p * m, shared + p * L + p * m};
}

Permutation adversarial_alternative_order(std::size_t clusters, std::size_t long_jobs) {
  return Permutation::identity(clusters + long_jobs);
}

}  // namespace ccs
