#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccsched/certificate.hpp"
#include "ccsched/list_lpt.hpp"
#include "ccsched/openshop.hpp"

namespace ccs {

enum class TransformKind { Tspt, Atspt };

/// A concurrent-cluster instance and its open-shop image.
struct TransformRecord {
  Instance source;
  PdInstance<Rational> image;
  TransformKind kind = TransformKind::Tspt;
  std::vector<Rational> lower_bounds;  // diagonal of the extra block (ATSPT only)
};

/// x_ji = p_ji / mu_i. Throws ReleaseTimesUnsupported when any release is positive.
TransformRecord tspt(const Instance& instance);

/// TSPT columns followed by an n x n diagonal block with
/// d_jj = max over clusters with work of max(p_ji / mu_ji, p_ji1 / v_1i).
TransformRecord atspt(const Instance& instance);

struct CombinatorialOptions {
  bool certify = true;
  /// Lower bound for the certificate; solved from the relaxation when absent.
  std::optional<Rational> lower_bound;
  std::string lower_bound_source = "lp1";
};

struct CombinatorialResult {
  Permutation sigma;
  Schedule schedule;
  std::optional<RatioCertificate> certificate;
};

/// MUSSQ on the TSPT image, then List-LPT with that single order on every cluster.
CombinatorialResult cc_tspt(const Instance& instance, const CombinatorialOptions& options = {});

/// MUSSQ on the ATSPT image; the imaginary columns only steer the order.
CombinatorialResult cc_atspt(const Instance& instance, const CombinatorialOptions& options = {});

/// Unit speeds and unit tasks everywhere.
bool is_fps(const Instance& instance);

/// min over subjobs with work of ceil(|T_ji| / m_i). Throws NotFps.
std::size_t time_resolution(const Instance& instance);

/// Best guarantee that applies: 2 + R in general, 2 + 1/rho on fps instances.
Rational tspt_guarantee(const Instance& instance);

}  // namespace ccs
