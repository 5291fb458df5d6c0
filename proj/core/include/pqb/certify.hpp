#pragma once

// Error-bound certificates for B_{n,m} f: the measured sup error on an
// evaluation lattice is compared against each rate-of-convergence bound.

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pqb/bivariate.hpp"
#include "pqb/modulus.hpp"
#include "pqb/target.hpp"

namespace pqb {

enum class Theorem { CompleteModulus, PartialModuli, Lipschitz, C1, PeetreK };

std::string_view to_string(Theorem theorem);
Theorem parse_theorem(std::string_view text);
const std::array<Theorem, 5>& all_theorems();

/// f is outside the class a theorem assumes.
class HypothesisError : public std::runtime_error {
 public:
  HypothesisError(Theorem theorem, const std::string& hypothesis);
  Theorem theorem() const { return theorem_; }
  const std::string& hypothesis() const { return hypothesis_; }

 private:
  Theorem theorem_;
  std::string hypothesis_;
};

// Squared deltas at a point; delta_nm_sq == delta_n_sq + delta_m_sq.
double delta_n_sq(const BiParams& params, double x);
double delta_m_sq(const BiParams& params, double y);
double delta_nm_sq(const BiParams& params, double x, double y);
double delta_n(const BiParams& params, double x);
double delta_m(const BiParams& params, double y);
double delta_nm(const BiParams& params, double x, double y);

struct BoundCertificate {
  Theorem theorem = Theorem::CompleteModulus;
  std::string variant;  // "primary" or the name of an alternative reading
  bool gating = true;   // alternatives are reported but never decide the run
  std::string function;
  int n = 0;
  int m = 0;

  double lhs = 0.0;           // sup over the lattice of |B f - f|
  double rhs = 0.0;           // bound with sup-over-lattice deltas
  double rhs_envelope = 0.0;  // same with omega(2 delta); equals rhs off the modulus bounds
  double margin = 0.0;        // rhs_envelope - lhs

  // Node-by-node comparison |B f - f|(x,y) <= bound(x,y).
  double pointwise_margin = 0.0;  // min over nodes of envelope bound - error
  double worst_x = 0.0;
  double worst_y = 0.0;

  bool pass_uniform = false;
  bool pass_pointwise = false;
  bool pass_primary = false;  // both comparisons without the envelope

  bool pass() const { return pass_uniform && pass_pointwise; }
};

inline constexpr double kCertifySlack = 1e-12;

struct CertifyOptions {
  int eval_grid = 50;
  int modulus_grid = 200;
  int k_grid = 100;
  std::vector<double> sigmas{0.02, 0.05, 0.1, 0.2};
  int lipschitz_grid = 60;     // points per axis of the pair check
  int derivative_grid = 200;   // sup norms of first partials
  double derivative_step = 1e-5;
  bool assume_smooth = false;  // allow finite-difference partials for C1
};

/// Sup-norm pieces of one mollified approximant g_sigma.
struct KComponent {
  double sigma = 0.0;
  double distance = 0.0;  // ||f - g||
  double c2_norm = 0.0;   // ||g|| + ||g_x|| + ||g_y|| + ||g_xx|| + ||g_yy||
};

/// Upper bound on the Peetre K-functional from a Gaussian mollification family.
class KSurrogate {
 public:
  KSurrogate(const TargetFunction& f, const std::vector<double>& sigmas, int grid = 100);
  /// min over the family of ||f - g|| + delta ||g||_{C^2}.
  double operator()(double delta) const;
  const std::vector<KComponent>& components() const { return parts_; }

 private:
  std::vector<KComponent> parts_;
};

double k_surrogate(const TargetFunction& f, double delta, const std::vector<double>& sigmas,
                   int grid = 100);

struct LipschitzViolation {
  double s, t, x, y;
  double difference;
  double bound;
};

/// Checks |f(s,t) - f(x,y)| <= M |s-x|^a1 |t-y|^a2 over all pairs of a
/// points^2 lattice. Returns the worst violation, if any.
std::optional<LipschitzViolation> verify_lipschitz(const TargetFunction& f, const LipschitzSpec& spec,
                                                   int points = 60);

/// Caches the per-function work (moduli profiles, K family, partial norms,
/// hypothesis checks) shared by certificates at different degrees.
class Certifier {
 public:
  explicit Certifier(TargetFunction f, CertifyOptions options = {});
  ~Certifier();
  Certifier(const Certifier&) = delete;
  Certifier& operator=(const Certifier&) = delete;

  const TargetFunction& function() const { return f_; }
  const CertifyOptions& options() const { return options_; }

  /// Throws HypothesisError when f is outside the theorem's class.
  void check_hypothesis(Theorem theorem);
  bool meets_hypothesis(Theorem theorem);

  /// The primary certificate first, then any alternative readings.
  std::vector<BoundCertificate> certify(Theorem theorem, const BiParams& params);

 private:
  struct Cache;
  TargetFunction f_;
  CertifyOptions options_;
  std::unique_ptr<Cache> cache_;
};

std::vector<BoundCertificate> certify_bound(Theorem theorem, const TargetFunction& f,
                                            const BiParams& params, const CertifyOptions& options = {});

}  // namespace pqb
