#include "pqb/target.hpp"

#include <cmath>
#include <numbers>

namespace pqb {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<TargetFunction> build_corpus() {
  std::vector<TargetFunction> out;
  auto zero = [](double, double) { return 0.0; };

  {
    TargetFunction t;
    t.name = "const1";
    t.f = [](double, double) { return 1.0; };
    t.fx = t.fy = t.fxx = t.fyy = zero;
    t.smoothness = Smoothness::C2;
    t.lipschitz = LipschitzSpec{1.0, 1.0, 1.0};
    out.push_back(std::move(t));
  }
  {
    TargetFunction t;
    t.name = "linx";
    t.f = [](double x, double) { return x; };
    t.fx = [](double, double) { return 1.0; };
    t.fy = t.fxx = t.fyy = zero;
    t.smoothness = Smoothness::C2;
    out.push_back(std::move(t));
  }
  {
    TargetFunction t;
    t.name = "liny";
    t.f = [](double, double y) { return y; };
    t.fy = [](double, double) { return 1.0; };
    t.fx = t.fxx = t.fyy = zero;
    t.smoothness = Smoothness::C2;
    out.push_back(std::move(t));
  }
  {
    TargetFunction t;
    t.name = "prodxy";
    t.f = [](double x, double y) { return x * y; };
    t.fx = [](double, double y) { return y; };
    t.fy = [](double x, double) { return x; };
    t.fxx = t.fyy = zero;
    t.smoothness = Smoothness::C2;
    out.push_back(std::move(t));
  }
  {
    TargetFunction t;
    t.name = "quad";
    t.f = [](double x, double y) { return x * x + y * y; };
    t.fx = [](double x, double) { return 2.0 * x; };
    t.fy = [](double, double y) { return 2.0 * y; };
    t.fxx = t.fyy = [](double, double) { return 2.0; };
    t.smoothness = Smoothness::C2;
    out.push_back(std::move(t));
  }
  {
    TargetFunction t;
    t.name = "ripple";
    t.f = [](double x, double y) { return std::sin(kPi * x) * std::sin(kPi * y); };
    t.fx = [](double x, double y) { return kPi * std::cos(kPi * x) * std::sin(kPi * y); };
    t.fy = [](double x, double y) { return kPi * std::sin(kPi * x) * std::cos(kPi * y); };
    t.fxx = [](double x, double y) { return -kPi * kPi * std::sin(kPi * x) * std::sin(kPi * y); };
    t.fyy = t.fxx;
    t.smoothness = Smoothness::C2;
    out.push_back(std::move(t));
  }
  {
    TargetFunction t;
    t.name = "vee";
    t.f = [](double x, double y) { return std::fabs(x - 0.5) + std::fabs(y - 0.5); };
    t.smoothness = Smoothness::Continuous;
    out.push_back(std::move(t));
  }
  {
    TargetFunction t;
    t.name = "lip_half";
    t.f = [](double x, double y) {
      return std::sqrt(std::fabs(x - 0.5)) * std::sqrt(std::fabs(y - 0.5));
    };
    t.smoothness = Smoothness::Continuous;
    t.lipschitz = LipschitzSpec{1.0, 0.5, 0.5};
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

const std::vector<TargetFunction>& corpus() {
  static const std::vector<TargetFunction> functions = build_corpus();
  return functions;
}

std::vector<std::string> corpus_names() {
  std::vector<std::string> names;
  for (const auto& t : corpus()) names.push_back(t.name);
  return names;
}

const TargetFunction* find_corpus_function(std::string_view name) {
  for (const auto& t : corpus()) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

TargetFunction function_from_expr(const Expr& expr, std::string name) {
  TargetFunction t;
  t.name = std::move(name);
  t.f = [expr](double x, double y) { return expr.eval(x, y); };
  t.smoothness = Smoothness::Continuous;
  return t;
}

TargetFunction resolve_function(std::string_view name_or_expr) {
  if (const auto* t = find_corpus_function(name_or_expr)) return *t;
  return function_from_expr(parse_expr(name_or_expr), std::string(name_or_expr));
}

TargetFunction monomial(int i, int j) {
  TargetFunction t;
  t.name = "e" + std::to_string(i) + std::to_string(j);
  t.f = [i, j](double x, double y) { return std::pow(x, i) * std::pow(y, j); };
  t.fx = [i, j](double x, double y) { return i == 0 ? 0.0 : i * std::pow(x, i - 1) * std::pow(y, j); };
  t.fy = [i, j](double x, double y) { return j == 0 ? 0.0 : j * std::pow(x, i) * std::pow(y, j - 1); };
  t.fxx = [i, j](double x, double y) {
    return i < 2 ? 0.0 : i * (i - 1) * std::pow(x, i - 2) * std::pow(y, j);
  };
  t.fyy = [i, j](double x, double y) {
    return j < 2 ? 0.0 : j * (j - 1) * std::pow(x, i) * std::pow(y, j - 2);
  };
  t.smoothness = Smoothness::C2;
  return t;
}

// Stencil centre shifted inward so every sample stays inside [0,1].
static double inward_centre(double c, double reach) {
  if (c - reach < 0.0) return reach;
  if (c + reach > 1.0) return 1.0 - reach;
  return c;
}

double first_partial(const TargetFunction& f, Axis axis, double x, double y, double step) {
  if (axis == Axis::X && f.fx) return f.fx(x, y);
  if (axis == Axis::Y && f.fy) return f.fy(x, y);
  if (axis == Axis::X) {
    const double c = inward_centre(x, step);
    return (f(c + step, y) - f(c - step, y)) / (2.0 * step);
  }
  const double c = inward_centre(y, step);
  return (f(x, c + step) - f(x, c - step)) / (2.0 * step);
}

double second_partial(const TargetFunction& f, Axis axis, double x, double y, double step) {
  if (axis == Axis::X && f.fxx) return f.fxx(x, y);
  if (axis == Axis::Y && f.fyy) return f.fyy(x, y);
  if (axis == Axis::X) {
    const double c = inward_centre(x, step);
    return (f(c + step, y) - 2.0 * f(c, y) + f(c - step, y)) / (step * step);
  }
  const double c = inward_centre(y, step);
  return (f(x, c + step) - 2.0 * f(x, c) + f(x, c - step)) / (step * step);
}

double partial_sup_norm(const TargetFunction& f, Axis axis, int grid, double step) {
  double best = 0.0;
  for (int i = 0; i <= grid; ++i) {
    for (int j = 0; j <= grid; ++j) {
      const double v = first_partial(f, axis, static_cast<double>(i) / grid,
                                     static_cast<double>(j) / grid, step);
      best = std::max(best, std::fabs(v));
    }
  }
  return best;
}

std::vector<double> sample_grid(const TargetFunction& f, int grid) {
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(grid + 1) * (grid + 1));
  for (int i = 0; i <= grid; ++i) {
    for (int j = 0; j <= grid; ++j) {
      v.push_back(f(static_cast<double>(i) / grid, static_cast<double>(j) / grid));
    }
  }
  return v;
}

}  // namespace pqb
