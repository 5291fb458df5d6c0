#include "pqb/korovkin.hpp"

#include <algorithm>
#include <cmath>

#include "pqb/parallel.hpp"

namespace pqb {

std::vector<double> apply_on_grid(const TargetFunction& f, const BiParams& params, int grid) {
  if (grid < 1) throw DomainError("grid resolution must be >= 1");
  const std::size_t side = static_cast<std::size_t>(grid) + 1;
  const auto sx = uni_nodes(params.n, params.pq1);
  const auto ty = uni_nodes(params.m, params.pq2);

  std::vector<double> samples(sx.size() * ty.size());
  for (std::size_t k = 0; k < sx.size(); ++k) {
    for (std::size_t j = 0; j < ty.size(); ++j) samples[k * ty.size() + j] = f(sx[k], ty[j]);
  }
  std::vector<std::vector<double>> wy(side);
  for (std::size_t j = 0; j < side; ++j) {
    wy[j] = uni_basis_all(params.m, static_cast<double>(j) / grid, params.pq2);
  }

  std::vector<double> out(side * side);
  parallel_for(side, [&](std::size_t i) {
    const auto wx = uni_basis_all(params.n, static_cast<double>(i) / grid, params.pq1);
    for (std::size_t jy = 0; jy < side; ++jy) {
      const auto& w = wy[jy];
      Accumulator<double> outer;
      for (std::size_t k = 0; k < sx.size(); ++k) {
        if (wx[k] == 0) continue;
        Accumulator<double> inner;
        const double* row = &samples[k * ty.size()];
        for (std::size_t j = 0; j < ty.size(); ++j) {
          if (w[j] == 0) continue;
          inner.add(w[j] * row[j]);
        }
        outer.add(wx[k] * inner.value());
      }
      out[i * side + jy] = outer.value();
    }
  });
  return out;
}

GridError sup_error(const TargetFunction& f, const BiParams& params, int grid) {
  const auto values = apply_on_grid(f, params, grid);
  const std::size_t side = static_cast<std::size_t>(grid) + 1;
  GridError err;
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) {
      const double x = static_cast<double>(i) / grid;
      const double y = static_cast<double>(j) / grid;
      const double e = std::fabs(values[i * side + j] - f(x, y));
      if (e > err.sup) err = GridError{e, x, y};
    }
  }
  return err;
}

std::vector<KorovkinRow> korovkin_experiment(const TargetFunction& f, const ParamSchedule& sched_x,
                                             const ParamSchedule& sched_y,
                                             std::span<const std::pair<int, int>> degrees,
                                             int grid) {
  if (grid < 10) throw DomainError("korovkin grid must have at least 11 points per axis");
  int n_max = 1;
  int m_max = 1;
  for (const auto& [n, m] : degrees) {
    n_max = std::max(n_max, n);
    m_max = std::max(m_max, m);
  }
  const bool degenerate =
      sched_x.check_limits(n_max).degenerate() || sched_y.check_limits(m_max).degenerate();

  std::vector<TargetFunction> tests;
  for (const auto& [i, j] : kKorovkinTests) tests.push_back(monomial(i, j));

  std::vector<KorovkinRow> rows;
  for (const auto& [n, m] : degrees) {
    const BiParams params(sched_x.at(n), sched_y.at(m), n, m);
    KorovkinRow row;
    row.n = n;
    row.m = m;
    row.sup_error = sup_error(f, params, grid).sup;
    for (std::size_t t = 0; t < tests.size(); ++t) {
      row.test_errors[t] = sup_error(tests[t], params, grid).sup;
    }
    row.degenerate = degenerate;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace pqb
