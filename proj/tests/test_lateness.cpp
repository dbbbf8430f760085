#include <doctest.h>

#include "ccsched/lateness.hpp"
#include "ccsched/list_lpt.hpp"
#include "oracles.hpp"

using namespace ccs;

namespace {

LatenessInstance li(std::vector<Rational> p, std::vector<Rational> d, std::vector<Rational> w, std::size_t m) {
  return LatenessInstance{"", std::move(p), std::move(d), std::move(w), m};
}

}  // namespace

TEST_CASE("reduction shape") {
  auto one = reduce_lateness(li({2}, {3}, {1}, 1));
  REQUIRE(one.num_clusters() == 2);
  CHECK(one.subjob(0, 0).tasks == std::vector<Rational>{2});
  CHECK(one.subjob(0, 1).tasks == std::vector<Rational>{3});

  auto three = reduce_lateness(li({1, 2, 3}, {4, 5, 6}, {1, 1, 2}, 2));
  REQUIRE(three.num_clusters() == 4);
  CHECK(three.clusters[0].machines() == 2);
  for (std::size_t i = 1; i <= 3; ++i) {
    CHECK(three.clusters[i].machines() == 1);
    std::size_t busy = 0;
    for (std::size_t j = 0; j < 3; ++j) busy += !three.subjob(j, i).empty();
    CHECK(busy == 1);
    CHECK(!three.subjob(i - 1, i).empty());
  }
  CHECK(three.jobs[2].weight == 2);

  auto zero = reduce_lateness(li({2}, {0}, {1}, 1));
  CHECK(zero.subjob(0, 1).empty());
  CHECK(validate(zero).empty());

  CHECK_THROWS_AS(reduce_lateness(li({0}, {1}, {1}, 1)), ValidationError);
  CHECK_THROWS_AS(reduce_lateness(li({1}, {1}, {1}, 0)), ValidationError);
}

TEST_CASE("lateness objective by hand") {
  auto in = li({2, 2}, {2, 4}, {1, 1}, 1);
  CHECK(lateness_completions(in, Permutation{0, 1}) == std::vector<Rational>{2, 4});
  CHECK(lateness_objective(in, Permutation{0, 1}) == 0);
  CHECK(lateness_completions(in, Permutation{1, 0}) == std::vector<Rational>{4, 2});
  CHECK(lateness_objective(in, Permutation{1, 0}) == 2);
}

TEST_CASE("objective identity and optimal order transfer") {
  Rng rng(113);
  for (int k = 0; k < 40; ++k) {
    LatenessParams p;
    p.jobs = {1, 6};
    auto in = random_lateness(p, rng);
    auto cc = reduce_lateness(in);
    Rational weighted_deadlines = 0;
    for (std::size_t j = 0; j < in.num_jobs(); ++j) weighted_deadlines += in.weight[j] * in.deadline[j];

    std::optional<Rational> best_cc, best_late;
    std::vector<std::pair<Rational, Rational>> values;
    for (const auto& order : oracle::all_permutations(in.num_jobs())) {
      Permutation sigma(order);
      const Rational a = list_lpt(cc, sigma).objective;
      const Rational b = lateness_objective(in, sigma);
      CHECK(a == weighted_deadlines + b);
      values.emplace_back(a, b);
      if (!best_cc || a < *best_cc) best_cc = a;
      if (!best_late || b < *best_late) best_late = b;
    }
    for (const auto& [a, b] : values)
      if (a == *best_cc) CHECK(b == *best_late);
  }
}
