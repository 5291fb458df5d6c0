#include "pqb/modulus.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pqb/parallel.hpp"

namespace pqb {

std::string_view to_string(ModulusKind kind) {
  switch (kind) {
    case ModulusKind::Complete:
      return "complete";
    case ModulusKind::PartialX:
      return "partial-x";
    case ModulusKind::PartialY:
      return "partial-y";
  }
  return "?";
}

namespace {

struct Offset {
  int di;
  int dj;
  long d2;
};

// Largest squared lattice length admitted for delta, tolerant to rounding in
// delta * grid.
long admitted_d2(double delta, int grid) {
  const double r = delta * grid;
  return static_cast<long>(std::floor(r * r * (1.0 + 1e-12) + 1e-9));
}

}  // namespace

ModulusProfile::ModulusProfile(const TargetFunction& f, ModulusKind kind, int grid, double max_delta)
    : kind_(kind), grid_(grid), max_delta_(max_delta) {
  if (grid < 1) throw DomainError("modulus grid must be >= 1");
  if (!(max_delta >= 0.0)) throw DomainError("modulus delta must be >= 0");

  const long limit = admitted_d2(max_delta, grid);
  const int reach = static_cast<int>(std::min<long>(grid, static_cast<long>(std::sqrt(limit)) + 1));
  std::vector<Offset> offsets;
  auto admit = [&](int di, int dj) {
    const long d2 = static_cast<long>(di) * di + static_cast<long>(dj) * dj;
    if (d2 > 0 && d2 <= limit) offsets.push_back({di, dj, d2});
  };
  switch (kind) {
    case ModulusKind::Complete:
      // Half plane: (f(a) - f(b)) and (f(b) - f(a)) share one offset.
      for (int di = 0; di <= reach; ++di) {
        for (int dj = di == 0 ? 1 : -reach; dj <= reach; ++dj) admit(di, dj);
      }
      break;
    case ModulusKind::PartialX:
      for (int di = 1; di <= reach; ++di) admit(di, 0);
      break;
    case ModulusKind::PartialY:
      for (int dj = 1; dj <= reach; ++dj) admit(0, dj);
      break;
  }

  const auto samples = sample_grid(f, grid);
  const int side = grid + 1;
  std::vector<double> best(offsets.size(), 0.0);
  parallel_for(offsets.size(), [&](std::size_t o) {
    const int di = offsets[o].di;
    const int dj = offsets[o].dj;
    const int j_lo = std::max(0, -dj);
    const int j_hi = std::min(grid, grid - dj);
    double m = 0.0;
    for (int i = 0; i + di <= grid; ++i) {
      const double* a = &samples[static_cast<std::size_t>(i) * side];
      const double* b = &samples[static_cast<std::size_t>(i + di) * side + dj];
      for (int j = j_lo; j <= j_hi; ++j) m = std::max(m, std::fabs(b[j] - a[j]));
    }
    best[o] = m;
  });

  std::vector<std::size_t> order(offsets.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return offsets[a].d2 < offsets[b].d2; });
  double running = 0.0;
  for (std::size_t idx : order) {
    running = std::max(running, best[idx]);
    if (!dist2_.empty() && dist2_.back() == offsets[idx].d2) {
      running_max_.back() = running;
    } else {
      dist2_.push_back(offsets[idx].d2);
      running_max_.push_back(running);
    }
  }
}

double ModulusProfile::value(double delta) const {
  if (!(delta >= 0.0)) throw DomainError("modulus delta must be >= 0");
  if (delta > max_delta_ * (1.0 + 1e-12)) {
    throw DomainError("modulus delta beyond the profiled range");
  }
  const long d2 = admitted_d2(delta, grid_);
  const auto it = std::upper_bound(dist2_.begin(), dist2_.end(), d2);
  if (it == dist2_.begin()) return 0.0;
  return running_max_[static_cast<std::size_t>(it - dist2_.begin()) - 1];
}

ModulusEstimate ModulusProfile::estimate(double delta) const {
  return ModulusEstimate{delta, value(delta), grid_, kind_};
}

ModulusEstimate complete_modulus(const TargetFunction& f, double delta, int grid) {
  return ModulusProfile(f, ModulusKind::Complete, grid, delta).estimate(delta);
}

ModulusEstimate partial_modulus(const TargetFunction& f, Axis axis, double delta, int grid) {
  const auto kind = axis == Axis::X ? ModulusKind::PartialX : ModulusKind::PartialY;
  return ModulusProfile(f, kind, grid, delta).estimate(delta);
}

}  // namespace pqb
