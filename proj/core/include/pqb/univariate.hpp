#pragma once

// Univariate (p,q)-Bernstein operator
//
//   B_n(f; x) = sum_{k=0}^{n} R_{n,k}(x) f([k] / ([n] p^{k-n}))
//   R_{n,k}(x) = p^{(k(k-1) - n(n-1))/2} [n k]_{p,q} x^k prod_{s<n-k} (p^s - q^s x)
//
// with its closed-form raw moments e_0..e_4 and the central moments of
// order 2 and 4.
//
// The exact path evaluates R_{n,k} literally. The float path uses the
// equivalent reduced form [n k]_r x^k prod_{s<n-k} (1 - r^s x), r = q/p,
// accumulated in the log domain, which keeps n in the thousands accurate.

#include <array>
#include <vector>

#include "pqb/pq_core.hpp"

namespace pqb {

namespace detail {
std::vector<double> uni_basis_all_float(int n, double x, const PQPair& pq);
std::vector<double> uni_nodes_float(int n, const PQPair& pq);

inline void check_degree(int n) {
  if (n < 1) throw DomainError("degree must be >= 1 (got " + std::to_string(n) + ")");
}

inline void check_index(int n, int k) {
  if (k < 0 || k > n) {
    throw DomainError("index must satisfy 0 <= k <= n (got n=" + std::to_string(n) +
                      ", k=" + std::to_string(k) + ")");
  }
}

template <class T>
void check_unit(const T& x, const char* name) {
  if (!(x >= 0 && x <= 1)) {
    throw DomainError(std::string(name) + " must lie in [0,1] (got " + describe(x) + ")");
  }
}
}  // namespace detail

/// Sample abscissa [k]_{p,q} / ([n]_{p,q} p^{k-n}); always in [0,1].
template <class T>
T uni_node(int n, int k, const BasicPQPair<T>& pq) {
  detail::check_degree(n);
  detail::check_index(n, k);
  if constexpr (is_float_v<T>) {
    return detail::uni_nodes_float(n, pq)[static_cast<std::size_t>(k)];
  } else {
    return pq_integer(k, pq) / (pq_integer(n, pq) * ipow(pq.p(), k - n));
  }
}

template <class T>
std::vector<T> uni_nodes(int n, const BasicPQPair<T>& pq) {
  detail::check_degree(n);
  if constexpr (is_float_v<T>) {
    return detail::uni_nodes_float(n, pq);
  } else {
    const auto ints = pq_integers_upto(n, pq);
    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) out.push_back(ints[k] / (ints[n] * ipow(pq.p(), k - n)));
    return out;
  }
}

/// All basis weights R_{n,0}(x) .. R_{n,n}(x).
template <class T>
std::vector<T> uni_basis_all(int n, const T& x, const BasicPQPair<T>& pq) {
  detail::check_degree(n);
  detail::check_unit(x, "x");
  if constexpr (is_float_v<T>) {
    return detail::uni_basis_all_float(n, x, pq);
  } else {
    const auto ints = pq_integers_upto(n, pq);
    std::vector<T> fact(ints.size(), T(1));
    for (std::size_t i = 1; i < ints.size(); ++i) fact[i] = fact[i - 1] * ints[i];
    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
      const long pexp = (static_cast<long>(k) * (k - 1) - static_cast<long>(n) * (n - 1)) / 2;
      T w = ipow(pq.p(), pexp) * fact[n] / (fact[k] * fact[n - k]);
      w *= ipow(x, k) * falling_product(x, n - k, pq);
      out.push_back(std::move(w));
    }
    return out;
  }
}

template <class T>
T uni_basis(int n, int k, const T& x, const BasicPQPair<T>& pq) {
  detail::check_degree(n);
  detail::check_index(n, k);
  detail::check_unit(x, "x");
  if constexpr (is_float_v<T>) {
    return detail::uni_basis_all_float(n, x, pq)[static_cast<std::size_t>(k)];
  } else {
    const long pexp = (static_cast<long>(k) * (k - 1) - static_cast<long>(n) * (n - 1)) / 2;
    return ipow(pq.p(), pexp) * pq_binomial(n, k, pq) * ipow(x, k) *
           falling_product(x, n - k, pq);
  }
}

/// B_n(f; x). Terms are accumulated in ascending k.
template <class T, class F>
T uni_apply(F&& f, int n, const T& x, const BasicPQPair<T>& pq) {
  const auto weights = uni_basis_all(n, x, pq);
  const auto nodes = uni_nodes(n, pq);
  Accumulator<T> acc;
  for (int k = 0; k <= n; ++k) {
    if (weights[k] == 0) continue;
    acc.add(T(weights[k] * T(f(nodes[k]))));
  }
  return acc.value();
}

/// Closed-form raw moment B_n(t^i; x) for i in 0..4. The e_3 and e_4 forms
/// are the ones that match brute-force summation exactly in rationals.
/// Brackets [j] with j <= 0 are zero.
template <class T>
T uni_moment_closed(int i, int n, const T& x, const BasicPQPair<T>& pq) {
  detail::check_degree(n);
  const T& p = pq.p();
  const T& q = pq.q();
  switch (i) {
    case 0:
      return T(1);
    case 1:
      return x;
    case 2: {
      const T bn = pq_integer(n, pq);
      return T(ipow(p, n - 1) / bn * x + q * pq_integer(n - 1, pq) / bn * x * x);
    }
    case 3: {
      const T bn = pq_integer(n, pq);
      const T b1 = pq_integer(n - 1, pq);
      const T b2 = pq_integer(n - 2, pq);
      T num = ipow(p, 2 * n - 2) * x;
      num += ipow(p, n - 2) * (2 * p + q) * q * b1 * x * x;
      num += q * q * q * b1 * b2 * x * x * x;
      return T(num / (bn * bn));
    }
    case 4: {
      const T bn = pq_integer(n, pq);
      const T b1 = pq_integer(n - 1, pq);
      const T b2 = pq_integer(n - 2, pq);
      const T b3 = pq_integer(n - 3, pq);
      const T x2 = x * x;
      T num = ipow(p, 3 * n - 3) * x;
      num += q * (3 * p * p + 3 * q * p + q * q) * b1 * ipow(p, 2 * n - 4) * x2;
      num += ipow(q, 3) * (3 * p * p + 2 * p * q + q * q) * b1 * b2 * ipow(p, n - 3) * x2 * x;
      num += ipow(q, 6) * b1 * b2 * b3 * x2 * x2;
      return T(num / (bn * bn * bn));
    }
    default:
      throw DomainError("moment index must be in 0..4 (got " + std::to_string(i) + ")");
  }
}

/// Alternative closed forms of e_3 and e_4 (e_3 with
/// p^{n-1}(2p+q); e_4 with q^3 inside the x^2 coefficient and no x on the
/// leading term). Diagnostic only; other indices defer to uni_moment_closed.
template <class T>
T uni_moment_statement_form(int i, int n, const T& x, const BasicPQPair<T>& pq) {
  detail::check_degree(n);
  const T& p = pq.p();
  const T& q = pq.q();
  if (i == 3) {
    const T bn = pq_integer(n, pq);
    const T b1 = pq_integer(n - 1, pq);
    const T b2 = pq_integer(n - 2, pq);
    T num = ipow(p, 2 * n - 2) * x;
    num += ipow(p, n - 1) * (2 * p + q) * q * b1 * x * x;
    num += q * q * q * b1 * b2 * x * x * x;
    return T(num / (bn * bn));
  }
  if (i == 4) {
    const T bn = pq_integer(n, pq);
    const T b1 = pq_integer(n - 1, pq);
    const T b2 = pq_integer(n - 2, pq);
    const T b3 = pq_integer(n - 3, pq);
    const T x2 = x * x;
    T num = ipow(p, 3 * n - 3);
    num += q * (3 * p * p + 3 * q * p + ipow(q, 3)) * b1 * ipow(p, 2 * n - 4) * x2;
    num += ipow(q, 3) * (3 * p * p + 2 * p * q + q * q) * b1 * b2 * ipow(p, n - 3) * x2 * x;
    num += ipow(q, 6) * b1 * b2 * b3 * x2 * x2;
    return T(num / (bn * bn * bn));
  }
  return uni_moment_closed(i, n, x, pq);
}

/// True when the closed forms for moment i touch brackets [j], j <= 0.
inline bool moment_uses_nonpositive_brackets(int i, int n) { return n < i; }

/// B_n((t - x)^r; x) for r in {2, 4}. Order 4 is assembled from the raw
/// moments by binomial expansion.
template <class T>
T uni_central_moment(int r, int n, const T& x, const BasicPQPair<T>& pq) {
  detail::check_degree(n);
  detail::check_unit(x, "x");
  if (r == 2) {
    return T(ipow(pq.p(), n - 1) / pq_integer(n, pq) * (x - x * x));
  }
  if (r == 4) {
    static constexpr std::array<int, 5> kBinom4{1, 4, 6, 4, 1};
    Accumulator<T> acc;
    const T minus_x = -x;
    for (int j = 0; j <= 4; ++j) {
      acc.add(T(kBinom4[j] * ipow(minus_x, 4 - j) * uni_moment_closed(j, n, x, pq)));
    }
    return acc.value();
  }
  throw DomainError("central moment order must be 2 or 4 (got " + std::to_string(r) + ")");
}

/// Coefficients A_1..A_4 of x^4, x^3, x^2, x in the alternative expansion of
/// the fourth central moment, whose A_3, A_4 denominators use the q-integer
/// [n]_q. Diagnostic only.
template <class T>
std::array<T, 4> printed_fourth_moment_coefficients(int n, const BasicPQPair<T>& pq) {
  detail::check_degree(n);
  const T& p = pq.p();
  const T& q = pq.q();
  const T bn = pq_integer(n, pq);
  T bq(0);
  {
    T qi(1);
    for (int i = 0; i < n; ++i) {
      bq += qi;
      qi *= q;
    }
  }
  const T bn3 = bn * bn * bn;
  const T bq3 = bq * bq * bq;
  const T p2 = p * p;
  const T p3 = p2 * p;
  const T q2 = q * q;
  const T q3 = q2 * q;

  T a1 = ipow(p, n - 3) * bn * bn * (-p2 + 2 * p * q - q2);
  a1 += ipow(p, n - 5) * bn * (-p3 + 3 * p * q2 + q3);
  a1 -= ipow(p, 3 * n - 6) * (p2 + p3 + 2 * p * q2 + q3);
  a1 /= bn3;

  T a2 = ipow(p, n - 3) * bn * bn * (p2 - 2 * p * q + q2);
  a2 += ipow(p, 2 * n - 5) * bn * (-q3 - 4 * p * q2 - 3 * p2 * q + 2 * p3);
  a2 -= ipow(p, 3 * n - 6) * (3 * p3 + 3 * p * q2 + 5 * p2 * q + q3);
  a2 /= bn3;

  T a3 = ipow(p, 2 * n - 4) * bn * (-p2 + 3 * p * q + q2);
  a3 -= ipow(p, 3 * n - 5) * (3 * p2 + q2 + 3 * p * q);
  a3 /= bq3;

  T a4 = ipow(p, 3 * n - 3) / bq3;
  return {a1, a2, a3, a4};
}

template <class T>
T uni_central_moment4_printed(int n, const T& x, const BasicPQPair<T>& pq) {
  const auto a = printed_fourth_moment_coefficients(n, pq);
  const T x2 = x * x;
  return T(a[0] * x2 * x2 + a[1] * x2 * x + a[2] * x2 + a[3] * x);
}

}  // namespace pqb
