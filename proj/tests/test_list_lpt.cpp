#include <doctest.h>

#include "ccsched/list_lpt.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace ccs;
using support::instance;
using support::job;

TEST_CASE("list-lpt hand examples") {
  auto serial = instance({{1}}, {job(1, {{2}}), job(1, {{3}})});
  auto c = list_lpt_cluster(serial, 0, Permutation{0, 1});
  CHECK(c.subjob_completion == std::vector<Rational>{2, 5});

  auto split = instance({{1, 1}}, {job(1, {{3, 2, 2}})});
  c = list_lpt_cluster(split, 0, Permutation{0});
  REQUIRE(c.assignments.size() == 3);
  CHECK(c.assignments[0].end == 3);
  CHECK(c.assignments[1].end == 2);
  CHECK(c.assignments[2].end == 4);
  CHECK(c.subjob_completion[0] == 4);

  auto released = instance({{1}}, {job(1, {{2}}, {5})});
  c = list_lpt_cluster(released, 0, Permutation{0});
  CHECK(c.assignments[0].start == 5);
  CHECK(c.subjob_completion[0] == 7);
}

TEST_CASE("ties go to the lowest machine index") {
  auto in = instance({{1, 1, 1}}, {job(1, {{2}}), job(1, {{2}})});
  auto c = list_lpt_cluster(in, 0, Permutation{1, 0});
  CHECK(c.assignments[0].job == 1);
  CHECK(c.assignments[0].machine == 0);
  CHECK(c.assignments[1].machine == 1);
}

TEST_CASE("faster machine wins when it finishes first") {
  auto in = instance({{2, 1}}, {job(1, {{4, 1}})});
  auto c = list_lpt_cluster(in, 0, Permutation{0});
  CHECK(c.assignments[0].machine == 0);
  CHECK(c.assignments[0].end == 2);
  CHECK(c.assignments[1].machine == 1);
  CHECK(c.assignments[1].end == 1);
}

TEST_CASE("barrier holds later subjobs behind an earlier release") {
  auto in = instance({{1, 1}}, {job(1, {{1}}, {6}), job(1, {{1}})});
  auto c = list_lpt_cluster(in, 0, Permutation{0, 1});
  CHECK(c.subjob_completion == std::vector<Rational>{7, 7});
  auto gaps = list_lpt_cluster(in, 0, Permutation{0, 1}, ListLptOptions{true});
  CHECK(gaps.subjob_completion[0] == 7);
}

TEST_CASE("empty subjobs everywhere give completion zero") {
  auto in = instance({{1}, {1, 1}}, {job(2, {{}, {}}), job(1, {{3}, {1}})});
  auto s = list_lpt(in, Permutation{0, 1});
  CHECK(s.completion[0] == 0);
  CHECK(s.completion[1] == 3);
  CHECK(s.objective == 3);
}

TEST_CASE("single-machine clusters give serial prefix sums") {
  Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    RandomPdParams p;
    p.jobs = {1, 7};
    p.machines = {1, 4};
    auto in = random_pd(p, rng);
    const std::size_t n = in.num_jobs();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::reverse(order.begin(), order.end());
    auto s = list_lpt(in, Permutation(order));
    std::vector<Rational> prefix(in.num_clusters(), Rational(0));
    for (std::size_t j : order) {
      Rational c = 0;
      for (std::size_t i = 0; i < in.num_clusters(); ++i) {
        prefix[i] += oracle::work(in, j, i);
        if (oracle::work(in, j, i) > 0) c = std::max(c, prefix[i]);
      }
      CHECK(s.completion[j] == c);
    }
  }
}

TEST_CASE("list-lpt agrees with the straight-line simulator and evaluates cleanly") {
  Rng rng(17);
  for (int k = 0; k < 300; ++k) {
    auto in = support::random_small(rng, 7, 3, k % 2 == 1, k % 3 != 0);
    std::vector<Permutation> sigmas;
    std::vector<std::vector<std::size_t>> orders;
    for (std::size_t i = 0; i < in.num_clusters(); ++i) {
      auto o = support::shuffled(in.num_jobs(), rng);
      orders.push_back(o);
      sigmas.emplace_back(o);
    }
    auto s = list_lpt(in, sigmas);
    CHECK(s.objective == oracle::objective(in, orders));
    CHECK_NOTHROW(evaluate(in, s));
    for (std::size_t i = 0; i < in.num_clusters(); ++i)
      CHECK(list_lpt_completions(in, i, sigmas[i]) == oracle::list_schedule(in, i, orders[i]));
    auto gaps = list_lpt(in, sigmas, ListLptOptions{true});
    CHECK_NOTHROW(evaluate(in, gaps));
  }
}

TEST_CASE("per-subjob completion bound on random instances") {
  Rng rng(2024);
  int checked = 0;
  for (int k = 0; k < 1000; ++k) {
    auto in = support::random_small(rng, 8, 3, k % 2 == 0, k % 4 < 2);
    const auto n = in.num_jobs();
    const auto order = support::shuffled(n, rng);
    for (std::size_t i = 0; i < in.num_clusters(); ++i) {
      const auto c = list_lpt_cluster(in, i, Permutation(order)).subjob_completion;
      const Rational mu = oracle::mu(in, i);
      const Rational vbar = mu / Rational(in.clusters[i].machines());
      Rational released = 0, prefix = 0;
      for (std::size_t pos = 0; pos < n; ++pos) {
        const std::size_t j = order[pos];
        const auto& sub = in.subjob(j, i);
        if (sub.empty()) continue;
        released = std::max(released, sub.release);
        prefix += oracle::work(in, j, i);
        const Rational longest = sub.tasks.front();
        CHECK(c[j] <= released + longest / vbar + (prefix - longest) / mu);
        ++checked;
      }
    }
  }
  CHECK(checked > 1000);
}
