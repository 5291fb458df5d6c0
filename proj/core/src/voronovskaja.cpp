#include "pqb/voronovskaja.hpp"

#include <cmath>

#include "pqb/bivariate.hpp"
#include "pqb/parallel.hpp"

namespace pqb {

namespace {

void check_degrees(std::span<const int> degrees, int first) {
  if (degrees.empty()) throw DomainError("degree list is empty");
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] < first) {
      throw DomainError("degree " + std::to_string(degrees[i]) + " is below the schedule's first degree " +
                        std::to_string(first));
    }
    if (i > 0 && degrees[i] <= degrees[i - 1]) throw DomainError("degrees must be strictly increasing");
  }
}

}  // namespace

std::vector<int> default_voronovskaja_degrees() {
  std::vector<int> out;
  for (int n = 16; n <= 2048; n *= 2) out.push_back(n);
  return out;
}

MomentLimitTrace scaled_central_moment_limit_check(int order, const ParamSchedule& schedule, double x,
                                                   std::span<const int> degrees) {
  if (order != 2 && order != 4) throw DomainError("moment order must be 2 or 4");
  detail::check_unit(x, "x");
  check_degrees(degrees, schedule.first_degree());

  MomentLimitTrace t;
  t.order = order;
  t.schedule = schedule.name();
  t.x = x;
  t.a = schedule.declared_a();
  t.degrees.assign(degrees.begin(), degrees.end());
  const double xx = x * (1.0 - x);
  if (order == 2) {
    t.predicted_limit = t.corrected_limit = t.a * xx;
  } else {
    t.predicted_limit = 3.0 * t.a * xx * xx;
    t.corrected_limit = 3.0 * t.a * t.a * xx * xx;
  }

  t.values.resize(degrees.size());
  parallel_for(degrees.size(), [&](std::size_t i) {
    const int n = degrees[i];
    const PQPair pq = schedule.at(n);
    const double bracket = pq_integer(n, pq);
    const double scale = order == 2 ? bracket : bracket * bracket;
    t.values[i] = scale * uni_central_moment(order, n, x, pq);
  });
  for (double v : t.values) {
    t.residuals.push_back(std::fabs(v - t.predicted_limit));
    t.corrected_residuals.push_back(std::fabs(v - t.corrected_limit));
  }
  return t;
}

double richardson_extrapolate(int n1, double v1, int n2, double v2) {
  if (n1 == n2) throw DomainError("extrapolation needs two distinct degrees");
  return (static_cast<double>(n2) * v2 - static_cast<double>(n1) * v1) / (static_cast<double>(n2) - n1);
}

std::optional<double> AsymptoticTrace::richardson() const {
  if (degrees.size() < 2) return std::nullopt;
  const std::size_t k = degrees.size() - 1;
  return richardson_extrapolate(degrees[k - 1], scaled_values[k - 1], degrees[k], scaled_values[k]);
}

AsymptoticTrace voronovskaja_trace(const TargetFunction& f, const ParamSchedule& schedule, double x, double y,
                                   std::span<const int> degrees, bool allow_finite_difference) {
  detail::check_unit(x, "x");
  detail::check_unit(y, "y");
  check_degrees(degrees, schedule.first_degree());
  if (!f.has_second_partials() && !allow_finite_difference) {
    throw MissingDerivativeError("function '" + f.name +
                                 "' has no analytic second partials (finite differences not allowed)");
  }

  AsymptoticTrace t;
  t.schedule = schedule.name();
  t.function = f.name;
  t.x = x;
  t.y = y;
  t.a = schedule.declared_a();
  t.degrees.assign(degrees.begin(), degrees.end());
  t.finite_difference = !f.has_second_partials();
  const double fxx = second_partial(f, Axis::X, x, y);
  const double fyy = second_partial(f, Axis::Y, x, y);
  t.predicted_limit = 0.5 * t.a * (x - x * x) * fxx + 0.5 * t.a * (y - y * y) * fyy;

  const double fxy = f(x, y);
  t.scaled_values.resize(degrees.size());
  parallel_for(degrees.size(), [&](std::size_t i) {
    const int n = degrees[i];
    const PQPair pq = schedule.at(n);
    const BiParams params(pq, pq, n, n);
    const double b = bi_apply(f.f, params, x, y);
    t.scaled_values[i] = pq_integer(n, pq) * (b - fxy);
  });
  return t;
}

}  // namespace pqb
