#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "pqb/pq_core.hpp"

namespace pqb {

/// Empirical check of a schedule's declared limits over n0..n_max.
struct ScheduleLimitCheck {
  bool admissible = true;        // every generated pair constructed
  double p_power_error = 0.0;    // |p_n^n - a| at n_max
  double q_power_error = 0.0;    // |q_n^n - b| at n_max
  double p_distance = 0.0;       // 1 - p_n at n_max
  double q_distance = 0.0;       // 1 - q_n at n_max
  bool converging = true;        // all four shrink between n_max/8 and n_max

  bool degenerate() const { return !admissible || !converging; }
};

/// A rule n -> (p_n, q_n) with declared limits p_n^n -> a and q_n^n -> b.
class ParamSchedule {
 public:
  using Rule = std::function<std::pair<double, double>(int)>;

  ParamSchedule(std::string name, Rule rule, double a, double b, int first_degree);

  /// Built-in schedules "i", "ii" and "iii".
  static ParamSchedule builtin(std::string_view id);
  static std::vector<std::string> builtin_ids();

  /// The same pair for every degree. Flagged degenerate by check_limits.
  static ParamSchedule constant(double p, double q);

  const std::string& name() const { return name_; }
  double declared_a() const { return a_; }
  double declared_b() const { return b_; }
  int first_degree() const { return first_degree_; }

  /// Throws DomainError for n below the first admissible degree or when the
  /// rule yields an inadmissible pair.
  PQPair at(int n) const;

  ScheduleLimitCheck check_limits(int n_max) const;

 private:
  std::string name_;
  Rule rule_;
  double a_;
  double b_;
  int first_degree_;
};

}  // namespace pqb
