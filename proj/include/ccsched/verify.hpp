#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccsched/certificate.hpp"
#include "ccsched/list_lpt.hpp"
#include "ccsched/relaxation.hpp"

namespace ccs {

struct SigmaSearch {
  Permutation sigma;
  Rational objective;
};

/// Best single permutation for List-LPT on every cluster, by enumeration.
/// Ties keep the lexicographically first permutation. Throws InstanceTooLarge
/// above max_jobs.
SigmaSearch best_single_sigma(const Instance& instance, std::size_t max_jobs = 8);

struct MultiSigmaSearch {
  std::vector<Permutation> sigmas;
  Rational objective;
};

/// Best choice of one permutation per cluster. Each cluster's completion
/// vectors are Pareto-filtered before the clusters are combined, which keeps
/// the search far below (n!)^m.
MultiSigmaSearch best_multi_sigma(const Instance& instance, std::size_t max_jobs = 6, std::size_t max_clusters = 3);

enum class Algorithm { CcLp, CcTspt, CcAtspt, Swag };

std::string to_string(Algorithm alg);
/// "cclp", "cctspt", "ccatspt", "swag"; throws BadParams otherwise.
Algorithm parse_algorithm(const std::string& name);

struct LowerBound {
  Rational value;
  std::string source;  // "lp1" or "exact"
  LpSolution<Rational> lp;
};

/// The relaxation value; on single-machine clusters without releases and at
/// most exact_cap jobs, the exact open-shop optimum when that is larger.
LowerBound certified_lower_bound(const Instance& instance, std::size_t exact_cap = 9);

struct AlgorithmRun {
  Schedule schedule;
  RatioCertificate certificate;
};

/// Runs one algorithm and certifies it against `bound`. SWAG carries no guarantee.
AlgorithmRun run_algorithm(const Instance& instance, Algorithm alg, const LowerBound& bound);

RatioCertificate certify(const Instance& instance, Algorithm alg);

struct GapSearchParams {
  std::uint64_t seed = 1;
  std::size_t max_tries = 200000;
  std::size_t min_jobs = 2, max_jobs = 4;
  std::size_t clusters = 2;
  std::size_t max_machines = 3;
  std::size_t max_tasks = 3;
  std::int64_t max_processing = 3;
  Rational target = Rational(6, 5);
};

struct GapWitness {
  Instance instance;
  SigmaSearch single;
  MultiSigmaSearch multi;
  Rational ratio;  // single / multi
  std::size_t tries = 0;
};

/// Random search over small unit-speed, unit-weight instances for one where the
/// best single permutation is at least `target` times the best per-cluster choice.
std::optional<GapWitness> gap_search(const GapSearchParams& params);

}  // namespace ccs
