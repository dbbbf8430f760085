#include <doctest.h>

#include "ccsched/openshop.hpp"
#include "ccsched/swag.hpp"
#include "support.hpp"

using namespace ccs;
using support::instance;
using support::job;

TEST_CASE("swag basic orders") {
  auto one = instance({{1}}, {job(1, {{4}})});
  CHECK(swag(one).order == Permutation{0});

  auto dominated = instance({{1}, {1, 1}}, {job(1, {{5}, {4, 2}}), job(1, {{1}, {1}})});
  auto t = swag(dominated);
  CHECK(t.order == Permutation{1, 0});
  // Round one: job 0 -> max(5, 6/2) = 5; job 1 -> max(1, 1/2) = 1.
  REQUIRE(t.makespan_history.size() == 2);
  CHECK(t.makespan_history[0][0].second == 5);
  CHECK(t.makespan_history[0][1].second == 1);
  CHECK(t.queue_history[1] == std::vector<Rational>{6, 7});
}

TEST_CASE("swag queues never shrink") {
  Rng rng(89);
  for (int k = 0; k < 100; ++k) {
    auto in = support::random_small(rng, 7, 3);
    auto t = swag(in);
    CHECK(t.order.is_bijection(in.num_jobs()));
    for (std::size_t r = 1; r < t.queue_history.size(); ++r)
      for (std::size_t i = 0; i < in.num_clusters(); ++i) CHECK(t.queue_history[r - 1][i] <= t.queue_history[r][i]);
  }
}

TEST_CASE("adversarial family construction") {
  auto in = gen_adversarial(3, 2, 1, Rational(1, 4));
  CHECK(in.num_jobs() == 5);
  CHECK(in.num_clusters() == 3);
  for (std::size_t j = 3; j < 5; ++j)
    for (std::size_t i = 0; i < 3; ++i) CHECK(in.subjob(j, i).tasks == std::vector<Rational>{Rational(3, 4)});
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 3; ++i) CHECK(in.subjob(j, i).empty() == (i != j));

  auto tiny = gen_adversarial(1, 1, 1, Rational(1, 2) - Rational(1, 100));
  CHECK(tiny.num_jobs() == 2);
  CHECK(tiny.num_clusters() == 1);

  CHECK_THROWS_AS(gen_adversarial(3, 2, 1, Rational(1, 2)), BadEpsilon);
  CHECK_THROWS_AS(gen_adversarial(3, 2, 1, 0), BadEpsilon);
  CHECK_THROWS_AS(gen_adversarial(0, 2, 1, Rational(1, 4)), BadParams);
  CHECK_THROWS_AS(adversarial_objectives(3, 4, 1, Rational(1, 4)), BadEpsilon);
}

TEST_CASE("adversarial closed forms and simulation") {
  auto v = adversarial_objectives(3, 2, 1, Rational(1, 4));
  CHECK(v.swag == Rational(39, 4));
  CHECK(v.alternative == Rational(29, 4));

  for (std::size_t m : {1, 2, 3, 7, 10}) {
    for (std::size_t L : {1, 2, 3}) {
      const Rational eps = Rational(1, 2 * L + 1);
      auto in = gen_adversarial(m, L, 2, eps);
      auto t = swag(in);
      for (std::size_t pos = 0; pos < L; ++pos) CHECK(t.order[pos] >= m);
      auto closed = adversarial_objectives(m, L, 2, eps);
      CHECK(swag_schedule(in).objective == closed.swag);
      CHECK(list_lpt(in, adversarial_alternative_order(m, L)).objective == closed.alternative);
    }
  }
}

TEST_CASE("swag ratio eventually exceeds L") {
  for (std::size_t L : {2, 3}) {
    const Rational eps = Rational(1, 4 * L);
    std::optional<std::size_t> crossed;
    Rational previous = 0;
    for (std::size_t m = 1; m <= 400 && !crossed; ++m) {
      auto v = adversarial_objectives(m, L, 1, eps);
      const Rational ratio = v.swag / v.alternative;
      CHECK(ratio >= previous);
      previous = ratio;
      if (ratio > Rational(L)) crossed = m;
    }
    CHECK(crossed);
  }
}

TEST_CASE("swag on open-shop instances is never below the optimum") {
  Rng rng(97);
  for (int k = 0; k < 60; ++k) {
    RandomPdParams p;
    p.jobs = {1, 6};
    auto in = random_pd(p, rng);
    CHECK(swag_schedule(in).objective >= exact_pd(as_pd(in)).objective);
  }
}
