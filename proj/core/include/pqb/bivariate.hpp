#pragma once

// Tensor-product bivariate (p,q)-Bernstein operator
//
//   B_{n,m}(f; x, y) = sum_k sum_j R_{n,k}(p1,q1; x) R_{m,j}(p2,q2; y) f(node_k, node_j)

#include <string_view>

#include "pqb/univariate.hpp"

namespace pqb {

/// Degrees and parameter pairs for both axes.
template <class T>
struct BasicBiParams {
  BasicPQPair<T> pq1;  // x direction
  BasicPQPair<T> pq2;  // y direction
  int n;
  int m;

  BasicBiParams(BasicPQPair<T> pair_x, BasicPQPair<T> pair_y, int n_x, int m_y)
      : pq1(std::move(pair_x)), pq2(std::move(pair_y)), n(n_x), m(m_y) {
    detail::check_degree(n);
    detail::check_degree(m);
  }
};

using BiParams = BasicBiParams<double>;
using ExactBiParams = BasicBiParams<Rational>;

enum class BiMoment { One, S, T, ST, S2, T2 };
enum class Axis { X, Y };

BiMoment parse_bi_moment(std::string_view text);
std::string_view to_string(BiMoment which);
std::string_view to_string(Axis axis);

template <class T>
T bi_basis(const BasicBiParams<T>& params, int k, int j, const T& x, const T& y) {
  return T(uni_basis(params.n, k, x, params.pq1) * uni_basis(params.m, j, y, params.pq2));
}

/// Double sum, inner index j, outer index k, both compensated.
template <class T, class F>
T bi_apply(F&& f, const BasicBiParams<T>& params, const T& x, const T& y) {
  const auto wx = uni_basis_all(params.n, x, params.pq1);
  const auto wy = uni_basis_all(params.m, y, params.pq2);
  const auto sx = uni_nodes(params.n, params.pq1);
  const auto ty = uni_nodes(params.m, params.pq2);
  Accumulator<T> outer;
  for (int k = 0; k <= params.n; ++k) {
    if (wx[k] == 0) continue;
    Accumulator<T> inner;
    for (int j = 0; j <= params.m; ++j) {
      if (wy[j] == 0) continue;
      inner.add(T(wy[j] * T(f(sx[k], ty[j]))));
    }
    outer.add(T(wx[k] * inner.value()));
  }
  return outer.value();
}

/// Closed-form images of 1, s, t, st, s^2, t^2. The t^2 denominator uses
/// [m]_{p2,q2}.
template <class T>
T bi_moment_closed(BiMoment which, const BasicBiParams<T>& params, const T& x, const T& y) {
  switch (which) {
    case BiMoment::One:
      return T(1);
    case BiMoment::S:
      return x;
    case BiMoment::T:
      return y;
    case BiMoment::ST:
      return T(x * y);
    case BiMoment::S2:
      return uni_moment_closed(2, params.n, x, params.pq1);
    case BiMoment::T2:
      return uni_moment_closed(2, params.m, y, params.pq2);
  }
  throw DomainError("unknown bivariate moment selector");
}

/// B((s-x)^2) for axis X, B((t-y)^2) for axis Y.
template <class T>
T bi_central_moment2(Axis axis, const BasicBiParams<T>& params, const T& x, const T& y) {
  if (axis == Axis::X) {
    return T(ipow(params.pq1.p(), params.n - 1) / pq_integer(params.n, params.pq1) * (x - x * x));
  }
  return T(ipow(params.pq2.p(), params.m - 1) / pq_integer(params.m, params.pq2) * (y - y * y));
}

}  // namespace pqb
