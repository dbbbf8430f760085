#pragma once

#include <string>
#include <vector>

#include "ccsched/certificate.hpp"
#include "ccsched/list_lpt.hpp"
#include "ccsched/relaxation.hpp"

namespace ccs {

/// Which row of the guarantee table applies.
///   Id: speeds constant within every cluster
///   A:  every release is 0
///   B:  task times constant within every subjob
enum class InstanceClass { IdAB, IdNotAB, IdANotB, IdNotANotB, NotIdA, NotIdNotA };

struct ClassFlags {
  bool identical = false;
  bool no_releases = false;
  bool equal_tasks = false;
};

ClassFlags class_flags(const Instance& instance);
InstanceClass classify(const Instance& instance);
std::string to_string(InstanceClass cls);

/// CC-LP guarantee: 2, 3, 3, 4, 2+R, 3+R.
Rational cclp_guarantee(InstanceClass cls, const Rational& max_speed_ratio);

struct CcLpResult {
  LpSolution<Rational> lp;
  std::vector<Permutation> sigmas;
  Schedule schedule;
  RatioCertificate certificate;
};

/// Per-cluster orders by C_j - p_ji / (2 mu_ji), ties by job index; jobs with
/// no work on the cluster go last in index order.
std::vector<Permutation> lp_orders(const Instance& instance, const DerivedConstants& derived,
                                   const std::vector<Rational>& completion);

/// Solves the relaxation exactly, orders each cluster by the LP keys and
/// list-schedules. The certificate compares against the LP value.
CcLpResult cc_lp(const Instance& instance);

/// Same, reusing an already solved relaxation.
CcLpResult cc_lp(const Instance& instance, LpSolution<Rational> lp);

}  // namespace ccs
