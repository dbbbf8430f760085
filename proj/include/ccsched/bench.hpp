#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ccsched/verify.hpp"

namespace ccs {

struct AlgorithmOutcome {
  Algorithm algorithm = Algorithm::CcLp;
  std::optional<RatioCertificate> certificate;
  double seconds = 0;
  std::string skipped;  // reason when the algorithm does not apply
};

struct BenchRecord {
  std::string instance;
  std::string instance_class;
  Rational lp1;
  Rational lower_bound;
  std::string lower_bound_source;
  double lp_seconds = 0;
  std::vector<AlgorithmOutcome> outcomes;  // cclp, cctspt, ccatspt, swag
};

/// Solves the relaxation once and runs every algorithm against it.
BenchRecord bench_instance(const Instance& instance);

/// Records come back in input order regardless of `threads`.
std::vector<BenchRecord> run_bench(const std::vector<Instance>& instances, std::size_t threads = 1);

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

/// A directory of instance files (sorted by name; lateness files are reduced)
/// or "family:count:seed[:key=value,...]", which draws count instances with
/// seeds seed, seed+1, ...
std::vector<Instance> load_suite(const std::string& suite);

}  // namespace ccs
