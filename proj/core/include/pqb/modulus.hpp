#pragma once

// Grid estimates of the complete modulus of continuity and of the partial
// moduli. Estimates are taken over pairs of lattice nodes, so they approach
// the true modulus from below as the lattice refines.

#include <string_view>
#include <vector>

#include "pqb/target.hpp"

namespace pqb {

enum class ModulusKind { Complete, PartialX, PartialY };

std::string_view to_string(ModulusKind kind);

struct ModulusEstimate {
  double delta = 0.0;
  double value = 0.0;
  int grid_resolution = 0;
  ModulusKind direction = ModulusKind::Complete;
};

/// omega(f; delta) for every delta up to max_delta from one pass over node
/// pairs. value() is nondecreasing in delta and value(0) == 0.
class ModulusProfile {
 public:
  ModulusProfile(const TargetFunction& f, ModulusKind kind, int grid, double max_delta);

  /// Throws DomainError when delta is negative or beyond max_delta.
  double value(double delta) const;
  ModulusEstimate estimate(double delta) const;

  ModulusKind kind() const { return kind_; }
  int grid() const { return grid_; }
  double max_delta() const { return max_delta_; }

 private:
  ModulusKind kind_;
  int grid_;
  double max_delta_;
  // Squared offset lengths in lattice units, ascending, with the running max.
  std::vector<long> dist2_;
  std::vector<double> running_max_;
};

ModulusEstimate complete_modulus(const TargetFunction& f, double delta, int grid);
ModulusEstimate partial_modulus(const TargetFunction& f, Axis axis, double delta, int grid);

}  // namespace pqb
