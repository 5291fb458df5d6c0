#include "pqb/pq_core.hpp"

#include <cmath>

namespace pqb::detail {

double pq_binomial_float(int n, int k, const PQPair& pq) {
  const int kk = std::min(k, n - k);
  if (kk == 0) return 1.0;
  const auto ints = pq_integers_upto(n, pq);
  Accumulator<double> log_sum;
  for (int i = 1; i <= kk; ++i) {
    log_sum.add(std::log(ints[n - kk + i] / ints[i]));
  }
  return std::exp(log_sum.value());
}

double falling_product_float(double x, int count, const PQPair& pq) {
  Accumulator<double> log_sum;
  bool negative = false;
  for (int s = 0; s < count; ++s) {
    const double factor = std::pow(pq.p(), s) - std::pow(pq.q(), s) * x;
    if (factor == 0.0) return 0.0;
    if (factor < 0.0) negative = !negative;
    log_sum.add(std::log(std::fabs(factor)));
  }
  const double magnitude = std::exp(log_sum.value());
  return negative ? -magnitude : magnitude;
}

}  // namespace pqb::detail
