#pragma once

// Scalar plumbing shared by the float and exact-rational evaluation paths.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <gmpxx.h>

namespace pqb {

using Rational = mpq_class;

/// num/den in lowest terms. mpq_class(num, den) does not reduce, and GMP
/// arithmetic assumes canonical operands.
inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Raised when an argument lies outside an operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Relative and absolute tolerances for float-vs-exact comparisons.
inline constexpr double kRelTol = 1e-12;
inline constexpr double kAbsTol = 1e-14;

template <class T>
inline constexpr bool is_float_v = std::is_floating_point_v<T>;

template <class T>
std::string describe(const T& v) {
  if constexpr (is_float_v<T>) {
    return std::to_string(v);
  } else {
    return v.get_str();
  }
}

/// base^e for integer e (negative exponents invert).
template <class T>
T ipow(const T& base, long e) {
  if constexpr (is_float_v<T>) {
    return std::pow(base, static_cast<T>(e));
  } else {
    if (e < 0) {
      T inv = T(1) / base;
      return ipow(inv, -e);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    T r(num, den);
    r.canonicalize();
    return r;
  }
}

template <class T>
T abs_value(const T& v) {
  if constexpr (is_float_v<T>) {
    return std::fabs(v);
  } else {
    return abs(v);
  }
}

template <class T>
double to_double(const T& v) {
  if constexpr (is_float_v<T>) {
    return static_cast<double>(v);
  } else {
    return v.get_d();
  }
}

/// Running sum. Neumaier-compensated for floats, plain for exact types.
/// Terms must be added in a fixed order for reproducible results.
template <class T>
class Accumulator {
 public:
  void add(const T& term) {
    if constexpr (is_float_v<T>) {
      const T t = sum_ + term;
      if (std::fabs(sum_) >= std::fabs(term)) {
        comp_ += (sum_ - t) + term;
      } else {
        comp_ += (term - t) + sum_;
      }
      sum_ = t;
    } else {
      sum_ += term;
    }
  }

  T value() const {
    if constexpr (is_float_v<T>) {
      return sum_ + comp_;
    } else {
      return sum_;
    }
  }

 private:
  T sum_{0};
  T comp_{0};
};

/// Classical binomial C(n, k) as a double; exact for the small n used here.
inline double classical_binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

}  // namespace pqb
