#pragma once

// Independent reference implementations used only by the tests. Nothing here
// calls into the library's formulas.

#include <gmpxx.h>

#include <cmath>
#include <vector>

namespace oracle {

using Q = mpq_class;

inline Q power(const Q& b, long e) {
  Q r(1);
  if (e >= 0) {
    for (long i = 0; i < e; ++i) r *= b;
  } else {
    for (long i = 0; i < -e; ++i) r /= b;
  }
  return r;
}

/// Quotient form (p^n - q^n)/(p - q).
inline Q bracket(int n, const Q& p, const Q& q) {
  if (n <= 0) return Q(0);
  return (power(p, n) - power(q, n)) / (p - q);
}

/// Table of (p,q)-binomials from [n k] = p^{n-k}[n-1 k-1] + q^k [n-1 k].
inline std::vector<std::vector<Q>> pascal(int n, const Q& p, const Q& q) {
  std::vector<std::vector<Q>> t(n + 1);
  for (int r = 0; r <= n; ++r) {
    t[r].assign(r + 1, Q(1));
    for (int k = 1; k < r; ++k) t[r][k] = power(p, r - k) * t[r - 1][k - 1] + power(q, k) * t[r - 1][k];
  }
  return t;
}

inline Q node(int n, int k, const Q& p, const Q& q) {
  return bracket(k, p, q) / (bracket(n, p, q) * power(p, k - n));
}

/// R_{n,k} straight from the definition.
inline std::vector<Q> basis(int n, const Q& x, const Q& p, const Q& q) {
  const auto binom = pascal(n, p, q)[n];
  std::vector<Q> w(n + 1);
  for (int k = 0; k <= n; ++k) {
    Q prod(1);
    for (int s = 0; s < n - k; ++s) prod *= power(p, s) - power(q, s) * x;
    const long e = (static_cast<long>(k) * (k - 1) - static_cast<long>(n) * (n - 1)) / 2;
    w[k] = power(p, e) * binom[k] * power(x, k) * prod;
  }
  return w;
}

template <class F>
Q apply(F&& f, int n, const Q& x, const Q& p, const Q& q) {
  const auto w = basis(n, x, p, q);
  Q s(0);
  for (int k = 0; k <= n; ++k) s += w[k] * Q(f(node(n, k, p, q)));
  return s;
}

/// Classical Bernstein polynomial in long double.
template <class F>
long double classical_bernstein(F&& f, int n, long double x) {
  long double s = 0;
  long double c = 1;
  for (int k = 0; k <= n; ++k) {
    s += c * std::pow(x, k) * std::pow(1 - x, n - k) * f(static_cast<long double>(k) / n);
    c = c * (n - k) / (k + 1);
  }
  return s;
}

/// Brute-force grid modulus: max over all node pairs within distance delta.
template <class F>
double grid_modulus(F&& f, int grid, double delta, int axis /* 0 complete, 1 x, 2 y */) {
  double best = 0.0;
  const double g = grid;
  for (int a = 0; a <= grid; ++a)
    for (int b = 0; b <= grid; ++b)
      for (int c = 0; c <= grid; ++c)
        for (int d = 0; d <= grid; ++d) {
          if (axis == 1 && b != d) continue;
          if (axis == 2 && a != c) continue;
          const double dist = std::hypot((a - c) / g, (b - d) / g);
          if (dist > delta + 1e-12) continue;
          best = std::max(best, std::fabs(f(a / g, b / g) - f(c / g, d / g)));
        }
  return best;
}

}  // namespace oracle
