#include "ccsched/generators.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>

#include "ccsched/errors.hpp"
#include "ccsched/swag.hpp"
#include "ccsched/transforms.hpp"

namespace ccs {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw BadParams("empty range " + std::to_string(lo) + ".." + std::to_string(hi));
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % span + 1) % span;
  std::uint64_t x;
  do x = next();
  while (x > limit);
  return lo + static_cast<std::int64_t>(x % span);
}

bool Rng::chance(std::uint64_t num, std::uint64_t den) {
  return static_cast<std::uint64_t>(uniform(0, static_cast<std::int64_t>(den) - 1)) < num;
}

Range parse_range(const std::string& text) {
  try {
    std::size_t used = 0;
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      const std::int64_t v = std::stoll(text, &used);
      if (used != text.size()) throw BadParams("");
      return {v, v};
    }
    const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
    Range r{std::stoll(lo, &used), 0};
    if (used != lo.size()) throw BadParams("");
    r.hi = std::stoll(hi, &used);
    if (used != hi.size() || r.lo > r.hi) throw BadParams("");
    return r;
  } catch (const std::exception&) {
    throw BadParams("bad range '" + text + "', expected N or LO..HI");
  }
}

namespace {

std::size_t count(Rng& rng, Range r, const char* what) {
  if (r.lo < 1) throw BadParams(std::string(what) + " must be at least 1");
  return static_cast<std::size_t>(rng.uniform(r.lo, r.hi));
}

Rational draw(Rng& rng, Range r) { return Rational(rng.uniform(r.lo, r.hi)); }

void require_positive(Range r, const char* what) {
  if (r.lo < 1) throw BadParams(std::string(what) + " must be positive");
}

std::vector<Rational> draw_tasks(Rng& rng, std::size_t k, Range processing, bool equal) {
  std::vector<Rational> tasks;
  if (equal) tasks.assign(k, draw(rng, processing));
  else
    for (std::size_t t = 0; t < k; ++t) tasks.push_back(draw(rng, processing));
  std::sort(tasks.begin(), tasks.end(), std::greater<>());
  return tasks;
}

}  // namespace

Instance random_cc(const RandomCcParams& params, Rng& rng) {
  require_positive(params.processing, "processing times");
  require_positive(params.weight, "weights");
  require_positive(params.speed, "speeds");
  if (params.tasks.lo < 0 || params.release.lo < 0) throw BadParams("task counts and releases must be nonnegative");
  Instance out;
  const std::size_t n = count(rng, params.jobs, "job count");
  const std::size_t m = count(rng, params.clusters, "cluster count");
  for (std::size_t i = 0; i < m; ++i) {
    Cluster c;
    const std::size_t k = count(rng, params.machines, "machine count");
    for (std::size_t q = 0; q < k; ++q) c.speeds.push_back(draw(rng, params.speed));
    std::sort(c.speeds.begin(), c.speeds.end(), std::greater<>());
    out.clusters.push_back(std::move(c));
  }
  for (std::size_t j = 0; j < n; ++j) {
    Job job;
    job.weight = draw(rng, params.weight);
    for (std::size_t i = 0; i < m; ++i) {
      Subjob s;
      s.tasks = draw_tasks(rng, static_cast<std::size_t>(rng.uniform(params.tasks.lo, params.tasks.hi)),
                           params.processing, params.equal_tasks);
      if (!s.tasks.empty() && params.release.hi > 0 &&
          rng.chance(static_cast<std::uint64_t>(params.release_percent), 100))
        s.release = draw(rng, params.release);
      job.subjobs.push_back(std::move(s));
    }
    out.jobs.push_back(std::move(job));
  }
  return out;
}

Instance random_pd(const RandomPdParams& params, Rng& rng) {
  require_positive(params.weight, "weights");
  if (params.processing.lo < 0) throw BadParams("processing times must be nonnegative");
  Instance out;
  const std::size_t n = count(rng, params.jobs, "job count");
  const std::size_t m = count(rng, params.machines, "machine count");
  out.clusters.assign(m, Cluster{{Rational(1)}});
  for (std::size_t j = 0; j < n; ++j) {
    Job job;
    job.weight = draw(rng, params.weight);
    for (std::size_t i = 0; i < m; ++i) {
      Subjob s;
      Rational p = draw(rng, params.processing);
      if (p > 0) s.tasks = {p};
      job.subjobs.push_back(std::move(s));
    }
    out.jobs.push_back(std::move(job));
  }
  return out;
}

Instance random_fps(const FpsParams& params, Rng& rng) {
  require_positive(params.weight, "weights");
  if (params.tasks.lo < 0) throw BadParams("task counts must be nonnegative");
  if (params.rho > 0 && static_cast<std::int64_t>(params.tasks.hi) < params.rho)
    throw BadParams("rho is unreachable with the given task counts");
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Instance out;
    const std::size_t n = count(rng, params.jobs, "job count");
    const std::size_t m = count(rng, params.clusters, "cluster count");
    for (std::size_t i = 0; i < m; ++i)
      out.clusters.push_back(Cluster{std::vector<Rational>(count(rng, params.machines, "machine count"), Rational(1))});
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) {
      Job job;
      job.weight = draw(rng, params.weight);
      for (std::size_t i = 0; i < m; ++i) {
        const auto k = static_cast<std::size_t>(rng.uniform(params.tasks.lo, params.tasks.hi));
        any = any || k > 0;
        job.subjobs.push_back(Subjob{std::vector<Rational>(k, Rational(1)), Rational(0)});
      }
      out.jobs.push_back(std::move(job));
    }
    if (!any) continue;
    if (params.rho <= 0 || static_cast<std::int64_t>(time_resolution(out)) == params.rho) return out;
  }
  throw BadParams("could not draw an instance with rho = " + std::to_string(params.rho));
}

LatenessInstance random_lateness(const LatenessParams& params, Rng& rng) {
  require_positive(params.processing, "processing times");
  require_positive(params.weight, "weights");
  if (params.deadline.lo < 0) throw BadParams("deadlines must be nonnegative");
  LatenessInstance out;
  const std::size_t n = count(rng, params.jobs, "job count");
  out.machines = count(rng, params.machines, "machine count");
  for (std::size_t j = 0; j < n; ++j) {
    out.processing.push_back(draw(rng, params.processing));
    out.deadline.push_back(draw(rng, params.deadline));
    out.weight.push_back(draw(rng, params.weight));
  }
  return out;
}

namespace {

class ParamReader {
 public:
  explicit ParamReader(const std::map<std::string, std::string>& params) : params_(params) {}

  void range(const std::string& key, Range& into) {
    if (auto it = find(key)) into = parse_range(**it);
  }
  void integer(const std::string& key, std::int64_t& into) {
    if (auto it = find(key)) {
      Range r = parse_range(**it);
      if (r.lo != r.hi) throw BadParams(key + " takes a single value");
      into = r.lo;
    }
  }
  void flag(const std::string& key, bool& into) {
    std::int64_t v = into;
    integer(key, v);
    into = v != 0;
  }
  void rational(const std::string& key, Rational& into) {
    if (auto it = find(key)) {
      try {
        into = parse_rational(**it);
      } catch (const ParseError& e) {
        throw BadParams(key + ": " + e.what());
      }
    }
  }
  void finish() const {
    for (const auto& [key, value] : params_)
      if (!used_.count(key)) throw BadParams("unknown parameter '" + key + "'");
  }

 private:
  std::optional<const std::string*> find(const std::string& key) {
    auto it = params_.find(key);
    if (it == params_.end()) return std::nullopt;
    used_[key] = true;
    return &it->second;
  }

  const std::map<std::string, std::string>& params_;
  std::map<std::string, bool> used_;
};

std::string describe(const std::string& family, std::uint64_t seed) {
  return family + "-s" + std::to_string(seed);
}

}  // namespace

Document generate(const std::string& family, const std::map<std::string, std::string>& params,
                  std::uint64_t seed) {
  ParamReader read(params);
  Rng rng(seed);
  if (family == "random-cc") {
    RandomCcParams p;
    read.range("n", p.jobs);
    read.range("m", p.clusters);
    read.range("machines", p.machines);
    read.range("tasks", p.tasks);
    read.range("p", p.processing);
    read.range("w", p.weight);
    read.range("speed", p.speed);
    read.range("r", p.release);
    read.integer("release_percent", p.release_percent);
    read.flag("equal_tasks", p.equal_tasks);
    read.finish();
    Instance out = random_cc(p, rng);
    out.name = describe(family, seed);
    return out;
  }
  if (family == "random-pd") {
    RandomPdParams p;
    read.range("n", p.jobs);
    read.range("m", p.machines);
    read.range("p", p.processing);
    read.range("w", p.weight);
    read.finish();
    Instance out = random_pd(p, rng);
    out.name = describe(family, seed);
    return out;
  }
  if (family == "fps") {
    FpsParams p;
    read.range("n", p.jobs);
    read.range("m", p.clusters);
    read.range("machines", p.machines);
    read.range("tasks", p.tasks);
    read.range("w", p.weight);
    read.integer("rho", p.rho);
    read.finish();
    Instance out = random_fps(p, rng);
    out.name = describe(family, seed);
    return out;
  }
  if (family == "swag-adversarial") {
    std::int64_t m = 13, L = 2;
    Rational p = 1, eps = Rational(1, 4);
    read.integer("m", m);
    read.integer("L", L);
    read.rational("p", p);
    read.rational("eps", eps);
    read.finish();
    if (m < 1 || L < 1) throw BadParams("adversarial family needs m >= 1 and L >= 1");
    return gen_adversarial(static_cast<std::size_t>(m), static_cast<std::size_t>(L), p, eps);
  }
  if (family == "lateness") {
    LatenessParams p;
    read.range("n", p.jobs);
    read.range("machines", p.machines);
    read.range("p", p.processing);
    read.range("d", p.deadline);
    read.range("w", p.weight);
    read.finish();
    LatenessInstance out = random_lateness(p, rng);
    out.name = describe(family, seed);
    return out;
  }
  throw BadParams("unknown family '" + family + "'");
}

}  // namespace ccs
