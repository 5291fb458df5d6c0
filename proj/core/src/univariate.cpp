#include "pqb/univariate.hpp"

#include <cmath>

namespace pqb::detail {

namespace {

// log r with r = q/p. q - p is exact whenever p/2 <= q (Sterbenz).
double log_ratio(const PQPair& pq) { return std::log1p((pq.q() - pq.p()) / pq.p()); }

}  // namespace

std::vector<double> uni_nodes_float(int n, const PQPair& pq) {
  // [k]_{p,q} / ([n]_{p,q} p^{k-n}) == [k]_r / [n]_r == expm1(kL) / expm1(nL)
  const double L = log_ratio(pq);
  const double denom = std::expm1(n * L);
  std::vector<double> nodes(static_cast<std::size_t>(n) + 1);
  nodes[0] = 0.0;
  for (int k = 1; k < n; ++k) nodes[k] = std::expm1(k * L) / denom;
  nodes[n] = 1.0;
  return nodes;
}

std::vector<double> uni_basis_all_float(int n, double x, const PQPair& pq) {
  std::vector<double> w(static_cast<std::size_t>(n) + 1, 0.0);
  if (x == 0.0) {
    w[0] = 1.0;
    return w;
  }
  if (x == 1.0) {
    w[n] = 1.0;
    return w;
  }
  const double L = log_ratio(pq);
  const double log_x = std::log(x);

  // tail[m] = sum_{s<m} log(1 - r^s x), with 1 - r^s x = (1-x) - x expm1(sL)
  // written as a sum of two nonnegative terms.
  std::vector<double> tail(static_cast<std::size_t>(n) + 1, 0.0);
  {
    Accumulator<double> acc;
    for (int s = 0; s < n; ++s) {
      acc.add(std::log((1.0 - x) - x * std::expm1(s * L)));
      tail[s + 1] = acc.value();
    }
  }

  // log [n k]_r by the ratio recurrence [n k+1] = [n k] [n-k]_r / [k+1]_r.
  Accumulator<double> log_gauss;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      log_gauss.add(std::log(std::expm1((n - k + 1) * L) / std::expm1(k * L)));
    }
    w[k] = std::exp(log_gauss.value() + k * log_x + tail[n - k]);
  }
  // The weights sum to 1 exactly; rescale away the accumulated rounding.
  Accumulator<double> total;
  for (double v : w) total.add(v);
  const double s = total.value();
  for (double& v : w) v /= s;
  return w;
}

}  // namespace pqb::detail
