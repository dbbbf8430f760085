#include <doctest.h>

#include "ccsched/list_lpt.hpp"
#include "ccsched/rational.hpp"
#include "support.hpp"

using namespace ccs;
using support::instance;
using support::job;

TEST_CASE("rational text round trip") {
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("0.8") == Rational(4, 5));
  CHECK(parse_rational("08/010") == Rational(4, 5));
  CHECK(parse_rational("1e-3") == Rational(1, 1000));
  CHECK(parse_rational(" 2.5E2 ") == 250);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("0x5"), ParseError);

  CHECK(format_rational(Rational(1, 8)) == "0.125");
  CHECK(format_rational(Rational(-5, 4)) == "-1.25");
  CHECK(format_rational(Rational(1, 3)) == "1/3");
  CHECK(format_rational(Rational(42)) == "42");
  for (int num = -40; num <= 40; ++num)
    for (int den = 1; den <= 30; ++den) CHECK(parse_rational(format_rational(Rational(num, den))) == Rational(num, den));

  CHECK(format_significant(Rational(2, 3)) == "0.666666666667");
  CHECK(format_significant(Rational(3)) == "3");
}

TEST_CASE("validate reports violations") {
  auto ok = instance({{2, 1}, {1}}, {job(1, {{3, 2}, {}}), job(2, {{1}, {4}})});
  CHECK(validate(ok).empty());

  auto bad_speeds = instance({{1, 2}}, {job(1, {{1}})});
  auto v = validate(bad_speeds);
  REQUIRE(v.size() == 1);
  CHECK(v[0].message == "speeds not non-increasing");

  auto zero_weight = instance({{1}}, {job(0, {{1}})});
  CHECK(validate(zero_weight).size() == 1);

  auto slow = instance({{Rational(1, 2)}}, {job(1, {{1}})});
  CHECK(validate(slow).size() == 1);

  auto ascending = instance({{1}}, {job(1, {{1, 2}})});
  CHECK(validate(ascending).size() == 1);
  CHECK(validate(normalize(ascending)).empty());
  CHECK(normalize(ascending).jobs[0].subjobs[0].tasks == std::vector<Rational>{2, 1});

  auto released_empty = instance({{1}, {1}}, {job(1, {{1}, {}}, {0, 3})});
  CHECK(validate(released_empty).size() == 1);
  CHECK(normalize(released_empty).jobs[0].subjobs[1].release == 0);

  auto short_job = instance({{1}, {1}}, {job(1, {{1}})});
  CHECK(validate(short_job).size() == 1);
  CHECK_THROWS_AS(require_valid(short_job), ValidationError);

  auto no_cluster = instance({}, {});
  CHECK(validate(no_cluster).size() >= 1);
}

TEST_CASE("derived constants") {
  auto a = instance({{2, 1}}, {job(1, {{1, 1, 1}})});
  auto d = derive(a);
  CHECK(d.clusters[0].total_speed == 3);
  CHECK(d.at(0, 0).machine_cap == 2);
  CHECK(d.at(0, 0).usable_speed == 3);

  auto b = instance({{3, 1, 1}}, {job(1, {{1, 1}})});
  d = derive(b);
  CHECK(d.at(0, 0).machine_cap == 2);
  CHECK(d.at(0, 0).usable_speed == 4);
  CHECK(d.clusters[0].average_speed == Rational(5, 3));
  CHECK(d.clusters[0].speed_ratio == Rational(9, 5));
  CHECK(d.max_speed_ratio == Rational(9, 5));

  auto c = instance({{1}}, {job(1, {{5}})});
  d = derive(c);
  CHECK(d.clusters[0].total_speed == 1);
  CHECK(d.at(0, 0).usable_speed == 1);
  CHECK(d.at(0, 0).machine_cap == 1);
  CHECK(d.at(0, 0).work == 5);
  CHECK(d.clusters[0].speed_ratio == 1);
}

TEST_CASE("evaluate checks feasibility") {
  auto one = instance({{1}}, {job(3, {{2}})});
  Schedule s;
  s.assignments = {{0, 0, 0, 0, 0, 2}};
  auto e = evaluate(one, s);
  CHECK(e.objective == 6);
  CHECK(e.completion == std::vector<Rational>{2});

  auto two = instance({{1}}, {job(1, {{2}}), job(1, {{2}})});
  Schedule overlap;
  overlap.assignments = {{0, 0, 0, 0, 0, 2}, {1, 0, 0, 0, 1, 3}};
  CHECK_THROWS_AS(evaluate(two, overlap), InfeasibleSchedule);

  Schedule wrong_length;
  wrong_length.assignments = {{0, 0, 0, 0, 0, 1}};
  CHECK_THROWS_AS(evaluate(one, wrong_length), InfeasibleSchedule);

  Schedule missing;
  CHECK_THROWS_AS(evaluate(one, missing), InfeasibleSchedule);

  auto released = instance({{1}}, {job(1, {{2}}, {5})});
  Schedule early;
  early.assignments = {{0, 0, 0, 0, 4, 6}};
  CHECK_THROWS_AS(evaluate(released, early), InfeasibleSchedule);

  Schedule twice;
  twice.assignments = {{0, 0, 0, 0, 0, 2}, {0, 0, 0, 0, 2, 4}};
  CHECK_THROWS_AS(evaluate(one, twice), InfeasibleSchedule);

  auto empty = instance({{1}, {1}}, {job(4, {{}, {}})});
  auto ee = evaluate(empty, Schedule{});
  CHECK(ee.completion == std::vector<Rational>{0});
  CHECK(ee.objective == 0);
}

TEST_CASE("feasible schedules satisfy the completion lower bounds") {
  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    auto in = support::random_small(rng, 6, 3, k % 2 == 0, k % 3 == 0);
    auto s = list_lpt(in, Permutation::identity(in.num_jobs()));
    auto d = derive(in);
    for (std::size_t j = 0; j < in.num_jobs(); ++j)
      for (std::size_t i = 0; i < in.num_clusters(); ++i) {
        const auto& sub = in.subjob(j, i);
        if (sub.empty()) continue;
        CHECK(s.completion[j] >= d.at(j, i).work / d.at(j, i).usable_speed + sub.release);
        CHECK(s.completion[j] >= sub.tasks.front() / in.clusters[i].speeds.front() + sub.release);
      }
  }
}
