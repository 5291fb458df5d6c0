#include "pqb/certify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <tuple>

#include "pqb/korovkin.hpp"
#include "pqb/parallel.hpp"

namespace pqb {

namespace {

constexpr std::array<Theorem, 5> kTheorems{Theorem::CompleteModulus, Theorem::PartialModuli,
                                           Theorem::Lipschitz, Theorem::C1, Theorem::PeetreK};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

std::string_view to_string(Theorem theorem) {
  switch (theorem) {
    case Theorem::CompleteModulus:
      return "complete-modulus";
    case Theorem::PartialModuli:
      return "partial-moduli";
    case Theorem::Lipschitz:
      return "lipschitz";
    case Theorem::C1:
      return "c1";
    case Theorem::PeetreK:
      return "peetre-k";
  }
  return "?";
}

Theorem parse_theorem(std::string_view text) {
  for (Theorem t : kTheorems) {
    if (to_string(t) == text) return t;
  }
  throw DomainError("unknown theorem '" + std::string(text) +
                    "' (expected complete-modulus, partial-moduli, lipschitz, c1, peetre-k)");
}

const std::array<Theorem, 5>& all_theorems() { return kTheorems; }

HypothesisError::HypothesisError(Theorem theorem, const std::string& hypothesis)
    : std::runtime_error(std::string(to_string(theorem)) + ": hypothesis not met: " + hypothesis),
      theorem_(theorem),
      hypothesis_(hypothesis) {}

double delta_n_sq(const BiParams& params, double x) {
  return bi_central_moment2(Axis::X, params, x, 0.0);
}
double delta_m_sq(const BiParams& params, double y) {
  return bi_central_moment2(Axis::Y, params, 0.0, y);
}
double delta_nm_sq(const BiParams& params, double x, double y) {
  return delta_n_sq(params, x) + delta_m_sq(params, y);
}
double delta_n(const BiParams& params, double x) { return std::sqrt(std::max(0.0, delta_n_sq(params, x))); }
double delta_m(const BiParams& params, double y) { return std::sqrt(std::max(0.0, delta_m_sq(params, y))); }
double delta_nm(const BiParams& params, double x, double y) {
  return std::sqrt(std::max(0.0, delta_nm_sq(params, x, y)));
}

// ---------------------------------------------------------------------------
// K-functional surrogate

namespace {

double mirror(double u) {
  if (u < 0.0) return -u;
  if (u > 1.0) return 2.0 - u;
  return u;
}

// f on the lattice i/grid for i in [-r, grid + r]; evaluates outside [0,1]
// directly when f is finite there, else mirrors every coordinate.
std::vector<double> extended_samples(const TargetFunction& f, int grid, int r) {
  const int side = grid + 1 + 2 * r;
  std::vector<double> out(static_cast<std::size_t>(side) * side);
  auto fill = [&](bool reflect) {
    for (int a = 0; a < side; ++a) {
      for (int b = 0; b < side; ++b) {
        double u = static_cast<double>(a - r) / grid;
        double v = static_cast<double>(b - r) / grid;
        if (reflect) {
          u = mirror(u);
          v = mirror(v);
        }
        const double val = f(u, v);
        if (!std::isfinite(val)) return false;
        out[static_cast<std::size_t>(a) * side + b] = val;
      }
    }
    return true;
  };
  bool direct = false;
  try {
    direct = fill(false);
  } catch (const DomainError&) {
    direct = false;
  }
  if (!direct && !fill(true)) throw DomainError("function is not finite on [0,1]^2");
  return out;
}

KComponent mollified_component(const TargetFunction& f, const std::vector<double>& fgrid, double sigma,
                               int grid) {
  const double h = 1.0 / grid;
  const int r = std::max(1, static_cast<int>(std::ceil(4.0 * sigma / h)));
  const auto ext = extended_samples(f, grid, r);
  const int eside = grid + 1 + 2 * r;
  const int side = grid + 1;

  std::vector<double> w(2 * r + 1);
  double total = 0.0;
  for (int k = -r; k <= r; ++k) {
    const double u = k * h / sigma;
    w[k + r] = std::exp(-0.5 * u * u);
    total += w[k + r];
  }
  for (double& v : w) v /= total;

  // x pass: rows 0..grid, all extended columns
  std::vector<double> tmp(static_cast<std::size_t>(side) * eside);
  for (int i = 0; i < side; ++i) {
    for (int b = 0; b < eside; ++b) {
      double s = 0.0;
      for (int k = -r; k <= r; ++k) s += w[k + r] * ext[static_cast<std::size_t>(i + r + k) * eside + b];
      tmp[static_cast<std::size_t>(i) * eside + b] = s;
    }
  }
  std::vector<double> g(static_cast<std::size_t>(side) * side);
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      double s = 0.0;
      for (int k = -r; k <= r; ++k) s += w[k + r] * tmp[static_cast<std::size_t>(i) * eside + j + r + k];
      g[static_cast<std::size_t>(i) * side + j] = s;
    }
  }

  auto at = [&](int i, int j) { return g[static_cast<std::size_t>(i) * side + j]; };
  // Second-order differences; one-sided at the boundary.
  auto d1 = [&](auto get, int i) {
    if (i == 0) return (-3.0 * get(0) + 4.0 * get(1) - get(2)) / (2.0 * h);
    if (i == grid) return (3.0 * get(grid) - 4.0 * get(grid - 1) + get(grid - 2)) / (2.0 * h);
    return (get(i + 1) - get(i - 1)) / (2.0 * h);
  };
  auto d2 = [&](auto get, int i) {
    if (i == 0) return (2.0 * get(0) - 5.0 * get(1) + 4.0 * get(2) - get(3)) / (h * h);
    if (i == grid) {
      return (2.0 * get(grid) - 5.0 * get(grid - 1) + 4.0 * get(grid - 2) - get(grid - 3)) / (h * h);
    }
    return (get(i + 1) - 2.0 * get(i) + get(i - 1)) / (h * h);
  };

  double dist = 0.0, ng = 0.0, ngx = 0.0, ngy = 0.0, ngxx = 0.0, ngyy = 0.0;
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      auto along_x = [&](int a) { return at(a, j); };
      auto along_y = [&](int b) { return at(i, b); };
      dist = std::max(dist, std::fabs(fgrid[static_cast<std::size_t>(i) * side + j] - at(i, j)));
      ng = std::max(ng, std::fabs(at(i, j)));
      ngx = std::max(ngx, std::fabs(d1(along_x, i)));
      ngy = std::max(ngy, std::fabs(d1(along_y, j)));
      ngxx = std::max(ngxx, std::fabs(d2(along_x, i)));
      ngyy = std::max(ngyy, std::fabs(d2(along_y, j)));
    }
  }
  return KComponent{sigma, dist, ng + ngx + ngy + ngxx + ngyy};
}

}  // namespace

KSurrogate::KSurrogate(const TargetFunction& f, const std::vector<double>& sigmas, int grid) {
  if (sigmas.empty()) throw DomainError("mollification family must be nonempty");
  if (grid < 3) throw DomainError("K-functional grid must be >= 3");
  const auto fgrid = sample_grid(f, grid);
  parts_.resize(sigmas.size());
  parallel_for(sigmas.size(), [&](std::size_t s) {
    if (!(sigmas[s] > 0.0)) throw DomainError("mollification scale must be > 0");
    parts_[s] = mollified_component(f, fgrid, sigmas[s], grid);
  });
}

double KSurrogate::operator()(double delta) const {
  if (!(delta >= 0.0)) throw DomainError("K-functional delta must be >= 0");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : parts_) best = std::min(best, c.distance + delta * c.c2_norm);
  return best;
}

double k_surrogate(const TargetFunction& f, double delta, const std::vector<double>& sigmas, int grid) {
  return KSurrogate(f, sigmas, grid)(delta);
}

// ---------------------------------------------------------------------------
// Lipschitz membership

std::optional<LipschitzViolation> verify_lipschitz(const TargetFunction& f, const LipschitzSpec& spec,
                                                   int points) {
  if (points < 2) throw DomainError("Lipschitz check needs at least 2 points per axis");
  if (!(spec.M > 0.0) || !(spec.alpha1 > 0.0 && spec.alpha1 <= 1.0) ||
      !(spec.alpha2 > 0.0 && spec.alpha2 <= 1.0)) {
    throw DomainError("Lipschitz constants need M > 0 and exponents in (0,1]");
  }
  const int P = points;
  std::vector<double> coord(P);
  for (int i = 0; i < P; ++i) coord[i] = static_cast<double>(i) / (P - 1);
  std::vector<double> vals(static_cast<std::size_t>(P) * P);
  for (int i = 0; i < P; ++i) {
    for (int j = 0; j < P; ++j) vals[static_cast<std::size_t>(i) * P + j] = f(coord[i], coord[j]);
  }
  std::vector<double> px(P), py(P);
  for (int d = 0; d < P; ++d) {
    px[d] = std::pow(coord[d], spec.alpha1);
    py[d] = std::pow(coord[d], spec.alpha2);
  }

  // Worst excess per first point (s,t); reduced in index order.
  std::vector<std::optional<LipschitzViolation>> worst(static_cast<std::size_t>(P) * P);
  parallel_for(worst.size(), [&](std::size_t idx) {
    const int a = static_cast<int>(idx) / P;
    const int b = static_cast<int>(idx) % P;
    const double fab = vals[idx];
    double excess = 0.0;
    for (int c = 0; c < P; ++c) {
      for (int d = 0; d < P; ++d) {
        const double diff = std::fabs(fab - vals[static_cast<std::size_t>(c) * P + d]);
        const double bound = spec.M * px[std::abs(a - c)] * py[std::abs(b - d)];
        if (diff - bound > std::max(excess, kCertifySlack)) {
          excess = diff - bound;
          worst[idx] = LipschitzViolation{coord[a], coord[b], coord[c], coord[d], diff, bound};
        }
      }
    }
  });
  std::optional<LipschitzViolation> out;
  for (const auto& v : worst) {
    if (v && (!out || v->difference - v->bound > out->difference - out->bound)) out = v;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Certifier

struct Certifier::Cache {
  std::unique_ptr<ModulusProfile> complete, partial_x, partial_y;
  std::unique_ptr<KSurrogate> k;
  std::optional<double> norm_fx, norm_fy;
  std::map<Theorem, std::optional<std::string>> hypothesis;  // failure text or nullopt

  using Key = std::tuple<int, int, double, double, double, double>;
  std::optional<Key> error_key;
  std::vector<double> errors;
};

Certifier::Certifier(TargetFunction f, CertifyOptions options)
    : f_(std::move(f)), options_(std::move(options)), cache_(std::make_unique<Cache>()) {
  if (options_.eval_grid < 1 || options_.modulus_grid < 1) throw DomainError("grid must be >= 1");
}

Certifier::~Certifier() = default;

void Certifier::check_hypothesis(Theorem theorem) {
  auto found = cache_->hypothesis.find(theorem);
  if (found == cache_->hypothesis.end()) {
    std::optional<std::string> failure;
    try {
      const int G = std::max(options_.modulus_grid, options_.eval_grid);
      for (int i = 0; i <= G && !failure; ++i) {
        for (int j = 0; j <= G; ++j) {
          if (!std::isfinite(f_(static_cast<double>(i) / G, static_cast<double>(j) / G))) {
            failure = "f is not finite on [0,1]^2";
            break;
          }
        }
      }
    } catch (const DomainError& e) {
      failure = std::string("f is not defined on all of [0,1]^2 (") + e.what() + ")";
    }
    if (!failure && theorem == Theorem::Lipschitz) {
      if (!f_.lipschitz) {
        failure = "no Lipschitz constants registered for f";
      } else if (auto v = verify_lipschitz(f_, *f_.lipschitz, options_.lipschitz_grid)) {
        failure = "|f(" + fmt(v->s) + "," + fmt(v->t) + ") - f(" + fmt(v->x) + "," + fmt(v->y) +
                  ")| = " + fmt(v->difference) + " exceeds M|s-x|^a1|t-y|^a2 = " + fmt(v->bound);
      }
    }
    if (!failure && theorem == Theorem::C1 && f_.smoothness == Smoothness::Continuous &&
        !options_.assume_smooth) {
      failure = "f is not registered as continuously differentiable";
    }
    found = cache_->hypothesis.emplace(theorem, failure).first;
  }
  if (found->second) throw HypothesisError(theorem, *found->second);
}

bool Certifier::meets_hypothesis(Theorem theorem) {
  try {
    check_hypothesis(theorem);
    return true;
  } catch (const HypothesisError&) {
    return false;
  }
}

namespace {

using PointBound = std::function<double(double, double)>;

struct BoundForms {
  PointBound point;
  PointBound point_envelope;
  double uniform = 0.0;
  double uniform_envelope = 0.0;
};

BoundCertificate assemble(Theorem theorem, std::string variant, bool gating, const std::string& name,
                          const BiParams& params, const std::vector<double>& errors, int grid,
                          const BoundForms& forms) {
  BoundCertificate c;
  c.theorem = theorem;
  c.variant = std::move(variant);
  c.gating = gating;
  c.function = name;
  c.n = params.n;
  c.m = params.m;
  c.rhs = forms.uniform;
  c.rhs_envelope = forms.uniform_envelope;

  bool point_ok = true;
  bool point_primary_ok = true;
  c.pointwise_margin = std::numeric_limits<double>::infinity();
  const int side = grid + 1;
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      const double x = static_cast<double>(i) / grid;
      const double y = static_cast<double>(j) / grid;
      const double e = errors[static_cast<std::size_t>(i) * side + j];
      c.lhs = std::max(c.lhs, e);
      const double env = forms.point_envelope(x, y);
      if (env - e < c.pointwise_margin) {
        c.pointwise_margin = env - e;
        c.worst_x = x;
        c.worst_y = y;
      }
      if (!(e <= env + kCertifySlack)) point_ok = false;
      if (!(e <= forms.point(x, y) + kCertifySlack)) point_primary_ok = false;
    }
  }
  c.margin = c.rhs_envelope - c.lhs;
  c.pass_uniform = c.lhs <= c.rhs_envelope + kCertifySlack;
  c.pass_pointwise = point_ok;
  c.pass_primary = point_primary_ok && c.lhs <= c.rhs + kCertifySlack;
  return c;
}

}  // namespace

std::vector<BoundCertificate> Certifier::certify(Theorem theorem, const BiParams& params) {
  check_hypothesis(theorem);
  auto& cache = *cache_;
  const int G = options_.eval_grid;

  const Cache::Key key{params.n, params.m, params.pq1.p(), params.pq1.q(), params.pq2.p(), params.pq2.q()};
  if (cache.error_key != key) {
    const auto values = apply_on_grid(f_, params, G);
    const auto exact = sample_grid(f_, G);
    cache.errors.resize(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) cache.errors[i] = std::fabs(values[i] - exact[i]);
    cache.error_key = key;
  }
  const auto& errors = cache.errors;

  double sup_dn2 = 0.0, sup_dm2 = 0.0;
  for (int i = 0; i <= G; ++i) {
    const double u = static_cast<double>(i) / G;
    sup_dn2 = std::max(sup_dn2, delta_n_sq(params, u));
    sup_dm2 = std::max(sup_dm2, delta_m_sq(params, u));
  }
  const double sup_dn = std::sqrt(sup_dn2);
  const double sup_dm = std::sqrt(sup_dm2);
  const double sup_dnm = std::sqrt(sup_dn2 + sup_dm2);

  auto profile = [&](std::unique_ptr<ModulusProfile>& slot, ModulusKind kind, double diameter)
      -> const ModulusProfile& {
    if (!slot) slot = std::make_unique<ModulusProfile>(f_, kind, options_.modulus_grid, diameter);
    return *slot;
  };
  // omega is constant beyond the diameter of the domain
  auto omega = [](const ModulusProfile& p, double d) { return p.value(std::min(d, p.max_delta())); };

  const std::string& name = f_.name;
  std::vector<BoundCertificate> out;

  switch (theorem) {
    case Theorem::CompleteModulus: {
      const auto& w = profile(cache.complete, ModulusKind::Complete, std::numbers::sqrt2);
      BoundForms forms;
      forms.point = [&](double x, double y) { return 2.0 * omega(w, delta_nm(params, x, y)); };
      forms.point_envelope = [&](double x, double y) { return 2.0 * omega(w, 2.0 * delta_nm(params, x, y)); };
      forms.uniform = 2.0 * omega(w, sup_dnm);
      forms.uniform_envelope = 2.0 * omega(w, 2.0 * sup_dnm);
      out.push_back(assemble(theorem, "primary", true, name, params, errors, G, forms));
      break;
    }
    case Theorem::PartialModuli: {
      const auto& wx = profile(cache.partial_x, ModulusKind::PartialX, 1.0);
      const auto& wy = profile(cache.partial_y, ModulusKind::PartialY, 1.0);
      for (double factor : {2.0, 1.0}) {
        BoundForms forms;
        forms.point = [&, factor](double x, double y) {
          return factor * (omega(wx, delta_n(params, x)) + omega(wy, delta_m(params, y)));
        };
        forms.point_envelope = [&, factor](double x, double y) {
          return factor * (omega(wx, 2.0 * delta_n(params, x)) + omega(wy, 2.0 * delta_m(params, y)));
        };
        forms.uniform = factor * (omega(wx, sup_dn) + omega(wy, sup_dm));
        forms.uniform_envelope = factor * (omega(wx, 2.0 * sup_dn) + omega(wy, 2.0 * sup_dm));
        const bool primary = factor == 2.0;
        out.push_back(assemble(theorem, primary ? "primary" : "single-constant", primary, name, params,
                               errors, G, forms));
      }
      break;
    }
    case Theorem::Lipschitz: {
      const LipschitzSpec spec = *f_.lipschitz;
      for (double scale : {0.5, 1.0}) {
        auto bound = [spec, scale](double dn, double dm) {
          return spec.M * std::pow(dn, scale * spec.alpha1) * std::pow(dm, scale * spec.alpha2);
        };
        BoundForms forms;
        forms.point = [&, bound](double x, double y) { return bound(delta_n(params, x), delta_m(params, y)); };
        forms.point_envelope = forms.point;
        forms.uniform = forms.uniform_envelope = bound(sup_dn, sup_dm);
        const bool primary = scale == 0.5;
        out.push_back(assemble(theorem, primary ? "primary" : "full-exponent", primary, name, params, errors,
                               G, forms));
      }
      break;
    }
    case Theorem::C1: {
      if (!cache.norm_fx) {
        cache.norm_fx = partial_sup_norm(f_, Axis::X, options_.derivative_grid, options_.derivative_step);
        cache.norm_fy = partial_sup_norm(f_, Axis::Y, options_.derivative_grid, options_.derivative_step);
      }
      const double nx = *cache.norm_fx;
      const double ny = *cache.norm_fy;
      BoundForms forms;
      forms.point = [&, nx, ny](double x, double y) { return nx * delta_n(params, x) + ny * delta_m(params, y); };
      forms.point_envelope = forms.point;
      forms.uniform = forms.uniform_envelope = nx * sup_dn + ny * sup_dm;
      out.push_back(assemble(theorem, "primary", true, name, params, errors, G, forms));
      break;
    }
    case Theorem::PeetreK: {
      if (!cache.k) cache.k = std::make_unique<KSurrogate>(f_, options_.sigmas, options_.k_grid);
      const KSurrogate& K = *cache.k;
      auto delta = [&](double x, double y) {
        return 0.5 * std::max(delta_n_sq(params, x), delta_m_sq(params, y));
      };
      BoundForms forms;
      forms.point = [&](double x, double y) { return 2.0 * K(0.5 * delta(x, y)); };
      forms.point_envelope = forms.point;
      forms.uniform = forms.uniform_envelope = 2.0 * K(0.25 * std::max(sup_dn2, sup_dm2));
      out.push_back(assemble(theorem, "primary", true, name, params, errors, G, forms));
      break;
    }
  }
  return out;
}

std::vector<BoundCertificate> certify_bound(Theorem theorem, const TargetFunction& f, const BiParams& params,
                                            const CertifyOptions& options) {
  Certifier c(f, options);
  return c.certify(theorem, params);
}

}  // namespace pqb
