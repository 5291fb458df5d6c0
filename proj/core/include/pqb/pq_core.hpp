#pragma once

// (p,q)-calculus primitives: integers, factorials, binomial coefficients and
// the falling product used by the Bernstein basis. Every function is a
// template over the scalar type; `double` selects the float path (log domain
// where products can under- or overflow) and `Rational` the exact path.

#include <algorithm>
#include <utility>
#include <vector>

#include "pqb/numeric.hpp"

namespace pqb {

/// Parameter pair with 0 < q < p <= 1.
template <class T>
class BasicPQPair {
 public:
  BasicPQPair(T p, T q) : p_(std::move(p)), q_(std::move(q)) {
    if constexpr (!is_float_v<T>) {
      p_.canonicalize();
      q_.canonicalize();
    }
    if (!(q_ > 0 && q_ < p_ && p_ <= 1)) {
      throw DomainError("PQPair requires 0 < q < p <= 1 (got p=" + describe(p_) +
                        ", q=" + describe(q_) + ")");
    }
  }

  const T& p() const { return p_; }
  const T& q() const { return q_; }

  friend bool operator==(const BasicPQPair& a, const BasicPQPair& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }

 private:
  T p_;
  T q_;
};

using PQPair = BasicPQPair<double>;
using ExactPQPair = BasicPQPair<Rational>;

inline ExactPQPair exact_pair(long p_num, long p_den, long q_num, long q_den) {
  return ExactPQPair(make_rational(p_num, p_den), make_rational(q_num, q_den));
}

namespace detail {
double pq_binomial_float(int n, int k, const PQPair& pq);
double falling_product_float(double x, int count, const PQPair& pq);
}  // namespace detail

/// [n]_{p,q} = sum_{i=0}^{n-1} p^{n-1-i} q^i. Zero for n <= 0.
template <class T>
T pq_integer(int n, const BasicPQPair<T>& pq) {
  if (n <= 0) return T(0);
  Accumulator<T> acc;
  if constexpr (is_float_v<T>) {
    for (int i = 0; i < n; ++i) {
      acc.add(std::pow(pq.p(), n - 1 - i) * std::pow(pq.q(), i));
    }
  } else {
    T qi(1);
    for (int i = 0; i < n; ++i) {
      acc.add(ipow(pq.p(), n - 1 - i) * qi);
      qi *= pq.q();
    }
  }
  return acc.value();
}

/// [1], [2], ..., [n] via [i] = q[i-1] + p^{i-1}; index 0 holds [0] = 0.
template <class T>
std::vector<T> pq_integers_upto(int n, const BasicPQPair<T>& pq) {
  std::vector<T> out(static_cast<std::size_t>(std::max(n, 0)) + 1, T(0));
  for (int i = 1; i <= n; ++i) {
    if constexpr (is_float_v<T>) {
      out[i] = pq.q() * out[i - 1] + std::pow(pq.p(), i - 1);
    } else {
      out[i] = pq.q() * out[i - 1] + ipow(pq.p(), i - 1);
    }
  }
  return out;
}

template <class T>
T pq_factorial(int n, const BasicPQPair<T>& pq) {
  if (n < 0) throw DomainError("pq_factorial: n must be >= 0");
  const auto ints = pq_integers_upto(n, pq);
  T r(1);
  for (int i = 1; i <= n; ++i) r *= ints[i];
  return r;
}

/// (p,q)-binomial coefficient [n k]_{p,q}. The float path works in the log
/// domain so it stays finite for n well beyond 500.
template <class T>
T pq_binomial(int n, int k, const BasicPQPair<T>& pq) {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError("pq_binomial: need 0 <= k <= n (got n=" + std::to_string(n) +
                      ", k=" + std::to_string(k) + ")");
  }
  if constexpr (is_float_v<T>) {
    return detail::pq_binomial_float(n, k, pq);
  } else {
    return pq_factorial(n, pq) / (pq_factorial(k, pq) * pq_factorial(n - k, pq));
  }
}

/// prod_{s=0}^{count-1} (p^s - q^s x); 1 for count == 0.
template <class T>
T falling_product(const T& x, int count, const BasicPQPair<T>& pq) {
  if (count < 0) throw DomainError("falling_product: count must be >= 0");
  if constexpr (is_float_v<T>) {
    return detail::falling_product_float(x, count, pq);
  } else {
    T r(1);
    T ps(1);
    T qs(1);
    for (int s = 0; s < count; ++s) {
      r *= ps - qs * x;
      ps *= pq.p();
      qs *= pq.q();
    }
    return r;
  }
}

/// Compares sum_k p^{C(n-k,2)} q^{C(k,2)} [n k] a^{n-k} b^k x^{n-k} y^k with
/// prod_{s=0}^{n-1} (p^s a x + q^s b y). Exact types compare strictly.
template <class T>
bool pq_binomial_expansion_check(int n, const T& a, const T& b, const T& x, const T& y,
                                 const BasicPQPair<T>& pq) {
  if (n < 0 || n > 20) throw DomainError("pq_binomial_expansion_check: need 0 <= n <= 20");
  Accumulator<T> sum;
  double magnitude = 0.0;
  for (int k = 0; k <= n; ++k) {
    const long c1 = static_cast<long>(n - k) * (n - k - 1) / 2;
    const long c2 = static_cast<long>(k) * (k - 1) / 2;
    T term = ipow(pq.p(), c1) * ipow(pq.q(), c2) * pq_binomial(n, k, pq);
    term *= ipow(T(a * x), n - k) * ipow(T(b * y), k);
    magnitude += std::fabs(to_double(term));
    sum.add(term);
  }
  T prod(1);
  for (int s = 0; s < n; ++s) {
    prod *= ipow(pq.p(), s) * a * x + ipow(pq.q(), s) * b * y;
  }
  const T lhs = sum.value();
  if constexpr (is_float_v<T>) {
    // Cancelling terms: tolerance scales with the sum of magnitudes.
    return std::fabs(lhs - prod) <= kRelTol * magnitude + kAbsTol;
  } else {
    return lhs == prod;
  }
}

}  // namespace pqb
