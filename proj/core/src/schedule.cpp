#include "pqb/schedule.hpp"

#include <cmath>

namespace pqb {

ParamSchedule::ParamSchedule(std::string name, Rule rule, double a, double b, int first_degree)
    : name_(std::move(name)), rule_(std::move(rule)), a_(a), b_(b), first_degree_(first_degree) {
  if (first_degree_ < 1) throw DomainError("schedule first degree must be >= 1");
}

ParamSchedule ParamSchedule::builtin(std::string_view id) {
  const double inv_e = std::exp(-1.0);
  if (id == "i") {
    // p_n = n/(n+1), q_n = p_n (1 - n^-2): p^n -> 1/e, q^n -> 1/e
    return ParamSchedule(
        "i",
        [](int n) {
          const double p = static_cast<double>(n) / (n + 1.0);
          const double nn = static_cast<double>(n);
          return std::pair{p, p * (1.0 - 1.0 / (nn * nn))};
        },
        inv_e, inv_e, 2);
  }
  if (id == "ii") {
    // p_n = e^{-1/n}, q_n = e^{-1/n - 1/n^2}: p^n -> 1/e, q^n -> 1/e
    return ParamSchedule(
        "ii",
        [](int n) {
          const double nn = static_cast<double>(n);
          return std::pair{std::exp(-1.0 / nn), std::exp(-1.0 / nn - 1.0 / (nn * nn))};
        },
        inv_e, inv_e, 2);
  }
  if (id == "iii") {
    // p_n = 1, q_n = 1 - 1/n: p^n -> 1, q^n -> 1/e
    return ParamSchedule(
        "iii",
        [](int n) { return std::pair{1.0, 1.0 - 1.0 / static_cast<double>(n)}; }, 1.0, inv_e,
        2);
  }
  throw DomainError("unknown schedule '" + std::string(id) + "' (expected i, ii or iii)");
}

std::vector<std::string> ParamSchedule::builtin_ids() { return {"i", "ii", "iii"}; }

ParamSchedule ParamSchedule::constant(double p, double q) {
  const PQPair check(p, q);
  (void)check;
  return ParamSchedule(
      "const", [p, q](int) { return std::pair{p, q}; }, 0.0, 0.0, 1);
}

PQPair ParamSchedule::at(int n) const {
  if (n < first_degree_) {
    throw DomainError("schedule '" + name_ + "' is defined for n >= " +
                      std::to_string(first_degree_) + " (got " + std::to_string(n) + ")");
  }
  const auto [p, q] = rule_(n);
  return PQPair(p, q);
}

ScheduleLimitCheck ParamSchedule::check_limits(int n_max) const {
  ScheduleLimitCheck out;
  if (n_max < first_degree_) n_max = first_degree_;
  auto measure = [&](int n, double& pe, double& qe, double& pd, double& qd) {
    const auto [p, q] = rule_(n);
    pe = std::fabs(std::pow(p, n) - a_);
    qe = std::fabs(std::pow(q, n) - b_);
    pd = 1.0 - p;
    qd = 1.0 - q;
  };
  for (int n = first_degree_; n <= n_max; ++n) {
    const auto [p, q] = rule_(n);
    if (!(q > 0.0 && q < p && p <= 1.0)) {
      out.admissible = false;
      break;
    }
  }
  const int n_lo = std::max(first_degree_, n_max / 8);
  double pe_lo, qe_lo, pd_lo, qd_lo;
  measure(n_lo, pe_lo, qe_lo, pd_lo, qd_lo);
  measure(n_max, out.p_power_error, out.q_power_error, out.p_distance, out.q_distance);
  constexpr double kSettled = 1e-12;
  auto shrinks = [&](double lo, double hi) { return hi <= kSettled || hi < lo; };
  out.converging = n_max > n_lo && shrinks(pe_lo, out.p_power_error) &&
                   shrinks(qe_lo, out.q_power_error) && shrinks(pd_lo, out.p_distance) &&
                   shrinks(qd_lo, out.q_distance);
  return out;
}

}  // namespace pqb
