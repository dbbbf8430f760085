#pragma once

#include <optional>
#include <string>

#include "ccsched/rational.hpp"

namespace ccs {

/// Observed approximation ratio of one algorithm run against a lower bound.
struct RatioCertificate {
  std::string algorithm;
  Rational objective;
  Rational lower_bound;
  std::string lower_bound_source = "lp1";  // "lp1" or "exact"
  std::optional<Rational> guaranteed;      // nullopt: no constant guarantee
  Rational observed;                       // objective / lower_bound
  std::string instance_class;

  /// observed <= guaranteed + 1e-9 (always true without a guarantee).
  bool passes() const;
  /// observed >= 1 - 1e-9; false means a broken bound or schedule.
  bool consistent() const;
};

RatioCertificate make_certificate(std::string algorithm, Rational objective, Rational lower_bound,
                                  std::optional<Rational> guaranteed, std::string instance_class,
                                  std::string lower_bound_source = "lp1");

/// 1e-9 as an exact rational.
const Rational& ratio_tolerance();

}  // namespace ccs
