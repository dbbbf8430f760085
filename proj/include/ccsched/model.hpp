#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ccsched/errors.hpp"
#include "ccsched/rational.hpp"

namespace ccs {

/// A bank of uniform machines. Speeds are non-increasing and at least 1.
struct Cluster {
  std::vector<Rational> speeds;

  std::size_t machines() const { return speeds.size(); }
  bool operator==(const Cluster&) const = default;
};

/// The tasks one job brings to one cluster. An empty task list means the job
/// has no work there; its release is then 0 and never constrains anything.
struct Subjob {
  std::vector<Rational> tasks;  // non-increasing
  Rational release = 0;

  bool empty() const { return tasks.empty(); }
  bool operator==(const Subjob&) const = default;
};

struct Job {
  Rational weight = 1;
  std::vector<Subjob> subjobs;  // one per cluster

  bool operator==(const Job&) const = default;
};

struct Instance {
  std::string name;
  std::vector<Cluster> clusters;
  std::vector<Job> jobs;

  std::size_t num_jobs() const { return jobs.size(); }
  std::size_t num_clusters() const { return clusters.size(); }
  const Subjob& subjob(std::size_t job, std::size_t cluster) const {
    return jobs[job].subjobs[cluster];
  }
  bool operator==(const Instance&) const = default;
};

struct Violation {
  std::string path;
  std::string message;

  std::string to_string() const { return path + ": " + message; }
};

/// Reports every invariant violation; never throws.
std::vector<Violation> validate(const Instance& instance);

/// Sorts speeds and tasks non-increasing and zeroes releases of empty subjobs.
/// Other violations are left for `validate` to report.
Instance normalize(Instance instance);

/// Throws ValidationError listing every violation.
void require_valid(const Instance& instance);

/// Per-cluster and per-subjob constants derived from an instance.
struct DerivedConstants {
  struct ClusterConstants {
    std::size_t machines = 0;
    Rational total_speed;    // mu_i
    Rational fastest_speed;  // v_1i
    Rational average_speed;  // mu_i / m_i
    Rational speed_ratio;    // R_i = v_1i / average
  };
  struct SubjobConstants {
    std::size_t machine_cap = 0;  // q_ji = min(|T_ji|, m_i)
    Rational usable_speed;        // mu_ji, sum of the q_ji fastest speeds
    Rational work;                // p_ji
    Rational longest_task;        // p_ji1 (0 for an empty subjob)
  };

  std::vector<ClusterConstants> clusters;
  std::vector<std::vector<SubjobConstants>> subjobs;  // [job][cluster]
  Rational max_speed_ratio;                           // R

  const SubjobConstants& at(std::size_t job, std::size_t cluster) const {
    return subjobs[job][cluster];
  }
  /// max(p_ji1/v_1i, p_ji/mu_ji) + r_ji over clusters with work; 0 for empty jobs.
  Rational completion_lower_bound(const Instance& instance, std::size_t job) const;
};

DerivedConstants derive(const Instance& instance);

struct Assignment {
  std::size_t job = 0;
  std::size_t cluster = 0;
  std::size_t machine = 0;
  std::size_t task = 0;
  Rational start;
  Rational end;

  bool operator==(const Assignment&) const = default;
};

struct Schedule {
  std::vector<Assignment> assignments;
  std::vector<Rational> completion;  // C_j
  Rational objective;                // sum_j w_j C_j
};

struct Evaluation {
  Rational objective;
  std::vector<Rational> completion;
};

/// Recomputes completions and the objective from the assignments, checking
/// durations, releases, machine overlap and task coverage. Throws
/// InfeasibleSchedule naming the first violated constraint.
Evaluation evaluate(const Instance& instance, const Schedule& schedule);

/// sum_j w_j C_j for an arbitrary completion vector.
Rational weighted_sum(const Instance& instance, const std::vector<Rational>& completion);

}  // namespace ccs
