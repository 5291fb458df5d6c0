#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "pqb/bivariate.hpp"
#include "pqb/schedule.hpp"
#include "pqb/target.hpp"

namespace pqb {

/// B_{n,m} f at every node (i/grid, j/grid), row-major with x outer.
/// Matches bi_apply bit for bit at each node.
std::vector<double> apply_on_grid(const TargetFunction& f, const BiParams& params, int grid);

struct GridError {
  double sup = 0.0;
  double at_x = 0.0;
  double at_y = 0.0;
};

/// sup over the (grid+1)^2 lattice of |B_{n,m} f - f|.
GridError sup_error(const TargetFunction& f, const BiParams& params, int grid);

struct KorovkinRow {
  int n = 0;
  int m = 0;
  double sup_error = 0.0;
  // e00, e10, e01, e11, e20, e02
  std::array<double, 6> test_errors{};
  bool degenerate = false;
};

inline constexpr std::array<std::pair<int, int>, 6> kKorovkinTests{
    {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}}};

/// Sup-errors of f and the six test monomials for each (n, m). grid >= 10.
std::vector<KorovkinRow> korovkin_experiment(const TargetFunction& f, const ParamSchedule& sched_x,
                                             const ParamSchedule& sched_y,
                                             std::span<const std::pair<int, int>> degrees,
                                             int grid = 50);

}  // namespace pqb
