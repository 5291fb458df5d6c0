#pragma once

// Scaled central-moment limits and the asymptotic behaviour of
// [n](B_{n,n} f - f) along a parameter schedule.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pqb/schedule.hpp"
#include "pqb/target.hpp"

namespace pqb {

/// 16, 32, ..., 2048.
std::vector<int> default_voronovskaja_degrees();

struct MomentLimitTrace {
  int order = 2;
  std::string schedule;
  double x = 0.0;
  double a = 0.0;
  std::vector<int> degrees;
  std::vector<double> values;  // [n] mu_2 or [n]^2 mu_4
  // order 2: a(x - x^2). order 4: 3a x^2 (1-x)^2 as stated.
  double predicted_limit = 0.0;
  // order 4 tends to 3a^2 x^2 (1-x)^2; equals predicted_limit for order 2.
  double corrected_limit = 0.0;
  std::vector<double> residuals;            // |value - predicted_limit|
  std::vector<double> corrected_residuals;  // |value - corrected_limit|
};

/// order is 2 or 4; degrees strictly increasing.
MomentLimitTrace scaled_central_moment_limit_check(int order, const ParamSchedule& schedule, double x,
                                                   std::span<const int> degrees);

/// f lacks analytic second partials and finite differences were not allowed.
class MissingDerivativeError : public DomainError {
 public:
  using DomainError::DomainError;
};

struct AsymptoticTrace {
  std::string schedule;
  std::string function;
  double x = 0.0;
  double y = 0.0;
  double a = 0.0;
  std::vector<int> degrees;
  std::vector<double> scaled_values;  // [n](B_{n,n} f - f)(x,y)
  double predicted_limit = 0.0;       // a(x-x^2) f_xx/2 + a(y-y^2) f_yy/2
  bool finite_difference = false;     // second partials were approximated

  /// Two-point extrapolation from the last two degrees.
  std::optional<double> richardson() const;
};

/// Eliminates a c/n term: (n2 v2 - n1 v1) / (n2 - n1).
double richardson_extrapolate(int n1, double v1, int n2, double v2);

AsymptoticTrace voronovskaja_trace(const TargetFunction& f, const ParamSchedule& schedule, double x, double y,
                                   std::span<const int> degrees, bool allow_finite_difference = false);

}  // namespace pqb
