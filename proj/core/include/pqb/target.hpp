#pragma once

// Target functions on [0,1]^2: the shipped corpus and expression-defined
// functions, with optional analytic partial derivatives.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pqb/bivariate.hpp"
#include "pqb/expr.hpp"

namespace pqb {

enum class Smoothness { Continuous, C1, C2 };

/// |f(s,t) - f(x,y)| <= M |s-x|^alpha1 |t-y|^alpha2.
struct LipschitzSpec {
  double M = 1.0;
  double alpha1 = 1.0;
  double alpha2 = 1.0;
};

using Fn2 = std::function<double(double, double)>;

struct TargetFunction {
  std::string name;
  Fn2 f;
  // Analytic partials; empty when not registered.
  Fn2 fx, fy, fxx, fyy;
  Smoothness smoothness = Smoothness::Continuous;
  std::optional<LipschitzSpec> lipschitz;

  double operator()(double x, double y) const { return f(x, y); }
  bool has_first_partials() const { return static_cast<bool>(fx) && static_cast<bool>(fy); }
  bool has_second_partials() const { return static_cast<bool>(fxx) && static_cast<bool>(fyy); }
};

/// const1, linx, liny, prodxy, quad, ripple, vee, lip_half.
const std::vector<TargetFunction>& corpus();
std::vector<std::string> corpus_names();
const TargetFunction* find_corpus_function(std::string_view name);

/// Wraps a parsed expression. Only continuity is assumed; no partials.
TargetFunction function_from_expr(const Expr& expr, std::string name);

/// Corpus name if one matches, otherwise the text is parsed as an expression.
TargetFunction resolve_function(std::string_view name_or_expr);

/// Monomial x^i y^j, used as a Korovkin test function.
TargetFunction monomial(int i, int j);

/// First partial at a point: analytic when registered, else central
/// difference with the given step.
double first_partial(const TargetFunction& f, Axis axis, double x, double y, double step = 1e-5);

/// Second partial f_xx or f_yy: analytic when registered, else central
/// second difference.
double second_partial(const TargetFunction& f, Axis axis, double x, double y, double step = 1e-4);

/// Sup over a uniform (grid+1)^2 lattice of |first_partial|.
double partial_sup_norm(const TargetFunction& f, Axis axis, int grid = 200, double step = 1e-5);

/// f evaluated at nodes i/grid, row-major with x as the outer index.
std::vector<double> sample_grid(const TargetFunction& f, int grid);

}  // namespace pqb
