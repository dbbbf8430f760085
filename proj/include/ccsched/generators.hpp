#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <variant>

#include "ccsched/lateness.hpp"
#include "ccsched/model.hpp"

namespace ccs {

/// mt19937_64 with bounded draws done by rejection, so a seed yields the same
/// instance on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// True with probability num / den.
  bool chance(std::uint64_t num, std::uint64_t den);

 private:
  std::mt19937_64 engine_;
};

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  bool operator==(const Range&) const = default;
};

/// Parses "v" or "lo..hi".
Range parse_range(const std::string& text);

struct RandomCcParams {
  Range jobs{2, 6};
  Range clusters{1, 3};
  Range machines{1, 3};
  Range tasks{0, 3};        // tasks per subjob
  Range processing{1, 9};
  Range weight{1, 5};
  Range speed{1, 1};        // integer speeds, sorted non-increasing
  Range release{0, 0};
  std::int64_t release_percent = 50;  // share of subjobs that draw a release
  bool equal_tasks = false;           // one time per subjob
};

Instance random_cc(const RandomCcParams& params, Rng& rng);

struct RandomPdParams {
  Range jobs{2, 6};
  Range machines{1, 3};
  Range processing{0, 9};
  Range weight{1, 5};
};

Instance random_pd(const RandomPdParams& params, Rng& rng);

struct FpsParams {
  Range jobs{2, 6};
  Range clusters{1, 3};
  Range machines{1, 3};
  Range tasks{1, 6};
  Range weight{1, 5};
  /// When positive, the instance is redrawn until its time resolution equals rho.
  std::int64_t rho = 0;
};

Instance random_fps(const FpsParams& params, Rng& rng);

struct LatenessParams {
  Range jobs{2, 6};
  Range machines{1, 2};
  Range processing{1, 9};
  Range deadline{0, 20};
  Range weight{1, 5};
};

LatenessInstance random_lateness(const LatenessParams& params, Rng& rng);

using Document = std::variant<Instance, LatenessInstance>;

/// Families: random-cc, random-pd, fps, swag-adversarial, lateness. Params are
/// key=value strings; unknown keys throw BadParams.
Document generate(const std::string& family, const std::map<std::string, std::string>& params,
                  std::uint64_t seed);

}  // namespace ccs
