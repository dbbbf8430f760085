#include "ccsched/certificate.hpp"

#include <stdexcept>

namespace ccs {

const Rational& ratio_tolerance() {
  static const Rational tol(1, 1000000000);
  return tol;
}

bool RatioCertificate::passes() const { return !guaranteed || observed <= *guaranteed + ratio_tolerance(); }

bool RatioCertificate::consistent() const { return observed >= 1 - ratio_tolerance(); }

RatioCertificate make_certificate(std::string algorithm, Rational objective, Rational lower_bound,
                                  std::optional<Rational> guaranteed, std::string instance_class,
                                  std::string lower_bound_source) {
  RatioCertificate c;
  c.algorithm = std::move(algorithm);
  c.objective = std::move(objective);
  c.lower_bound = std::move(lower_bound);
  c.lower_bound_source = std::move(lower_bound_source);
  c.guaranteed = std::move(guaranteed);
  c.instance_class = std::move(instance_class);
  if (c.lower_bound > 0) {
    c.observed = c.objective / c.lower_bound;
  } else if (c.objective == 0) {
    c.observed = 1;
  } else {
    throw std::logic_error("zero lower bound with positive objective");
  }
  return c;
}

}  // namespace ccs
