#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pqb/bivariate.hpp"

using namespace pqb;

namespace {

Rational moment_fn(BiMoment w, const Rational& s, const Rational& t) {
  switch (w) {
    case BiMoment::One: return Rational(1);
    case BiMoment::S: return s;
    case BiMoment::T: return t;
    case BiMoment::ST: return s * t;
    case BiMoment::S2: return s * s;
    case BiMoment::T2: return t * t;
  }
  return Rational(0);
}

constexpr std::array<BiMoment, 6> kAll{BiMoment::One, BiMoment::S, BiMoment::T,
                                       BiMoment::ST, BiMoment::S2, BiMoment::T2};

}  // namespace

TEST_CASE("params validation") {
  const PQPair a(0.9, 0.5);
  CHECK_THROWS_AS(BiParams(a, a, 0, 3), DomainError);
  CHECK_THROWS_AS(BiParams(a, a, 3, 0), DomainError);
  CHECK_NOTHROW(BiParams(a, a, 1, 1));
}

TEST_CASE("selector parsing") {
  CHECK(parse_bi_moment("st") == BiMoment::ST);
  CHECK(parse_bi_moment("s^2") == BiMoment::S2);
  CHECK(parse_bi_moment("t2") == BiMoment::T2);
  CHECK(to_string(BiMoment::T2) == "t2");
  CHECK(to_string(Axis::Y) == "y");
  CHECK_THROWS_AS(parse_bi_moment("u"), DomainError);
}

TEST_CASE("bivariate basis") {
  const PQPair a(0.9, 0.5), b(0.8, 0.4);
  const BiParams params(a, b, 2, 2);
  CHECK(bi_basis(params, 0, 0, 0.0, 0.0) == 1.0);
  CHECK(bi_basis(params, 1, 1, 0.5, 0.5) ==
        doctest::Approx(uni_basis(2, 1, 0.5, a) * uni_basis(2, 1, 0.5, b)).epsilon(1e-15));
  const ExactBiParams e(exact_pair(9, 10, 1, 2), exact_pair(4, 5, 2, 5), 2, 2);
  const Rational half = make_rational(1, 2);
  CHECK(bi_basis(e, 1, 1, half, half) == oracle::basis(2, half, make_rational(9, 10), make_rational(1, 2))[1] *
                                             oracle::basis(2, half, make_rational(4, 5), make_rational(2, 5))[1]);
  const BiParams big(a, b, 9, 13);
  for (double x : {0.0, 0.3, 1.0}) {
    for (double y : {0.0, 0.55, 1.0}) {
      Accumulator<double> s;
      for (int k = 0; k <= 9; ++k)
        for (int j = 0; j <= 13; ++j) s.add(bi_basis(big, k, j, x, y));
      CHECK(std::fabs(s.value() - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("bivariate moment identities hold exactly, n,m <= 10") {
  const std::vector<ExactPQPair> pairs{exact_pair(1, 1, 1, 2), exact_pair(3, 4, 1, 2), exact_pair(9, 10, 3, 5)};
  const std::vector<Rational> pts{Rational(0), make_rational(1, 4), make_rational(1, 2), make_rational(3, 4), Rational(1)};
  for (int n = 1; n <= 10; ++n) {
    for (int m = 1; m <= 10; ++m) {
      const ExactBiParams params(pairs[n % 3], pairs[(n + m) % 3], n, m);
      for (std::size_t xi = 0; xi < pts.size(); xi += 2) {
        for (std::size_t yi = 1; yi < pts.size(); yi += 2) {
          const Rational& x = pts[xi];
          const Rational& y = pts[yi];
          for (BiMoment w : kAll) {
            const Rational brute =
                bi_apply([w](const Rational& s, const Rational& t) { return moment_fn(w, s, t); }, params, x, y);
            CHECK(brute == bi_moment_closed(w, params, x, y));
          }
          const Rational cx = bi_apply(
              [&](const Rational& s, const Rational&) -> Rational { return (s - x) * (s - x); }, params, x, y);
          const Rational cy = bi_apply(
              [&](const Rational&, const Rational& t) -> Rational { return (t - y) * (t - y); }, params, x, y);
          CHECK(cx == bi_central_moment2(Axis::X, params, x, y));
          CHECK(cy == bi_central_moment2(Axis::Y, params, x, y));
        }
      }
    }
  }
}

TEST_CASE("t^2 denominator is [m], not [n]") {
  const ExactBiParams params(exact_pair(9, 10, 3, 5), exact_pair(9, 10, 3, 5), 4, 8);
  const Rational x = make_rational(1, 2), y = make_rational(1, 2);
  const Rational brute =
      bi_apply([](const Rational&, const Rational& t) -> Rational { return t * t; }, params, x, y);
  CHECK(brute == bi_moment_closed(BiMoment::T2, params, x, y));
  const auto& pq = params.pq2;
  const Rational with_n = ipow(pq.p(), params.m - 1) / pq_integer(params.n, pq) * y +
                          pq.q() * pq_integer(params.m - 1, pq) / pq_integer(params.m, pq) * y * y;
  CHECK(brute != with_n);
}

TEST_CASE("reference values") {
  const PQPair a(0.9, 0.6), b(1.0, 0.8);
  const BiParams p1(a, b, 6, 4);
  CHECK(std::fabs(bi_apply([](double, double) { return 1.0; }, p1, 0.3, 0.7) - 1.0) <= 1e-12);
  CHECK(std::fabs(bi_apply([](double s, double t) { return s * t; }, p1, 0.3, 0.7) - 0.21) <= 1e-12);
  const double s2 = bi_apply([](double s, double) { return s * s; }, p1, 0.3, 0.7);
  const double want = std::pow(0.9, 5) / pq_integer(6, a) * 0.3 + 0.6 * pq_integer(5, a) / pq_integer(6, a) * 0.09;
  CHECK(std::fabs(s2 - want) <= 1e-14);
  CHECK(bi_moment_closed(BiMoment::S, p1, 0.42, 0.1) == 0.42);

  const BiParams p2(a, PQPair(0.9, 0.6), 3, 8);
  CHECK(std::fabs(bi_moment_closed(BiMoment::T2, p2, 0.2, 0.5) -
                  bi_apply([](double, double t) { return t * t; }, p2, 0.2, 0.5)) <= 1e-14);

  const BiParams p3(PQPair(0.9, 0.5), b, 5, 10);
  CHECK(bi_central_moment2(Axis::X, p3, 0.0, 0.3) == 0.0);
  CHECK(bi_central_moment2(Axis::X, p3, 1.0, 0.3) == 0.0);
  CHECK(bi_central_moment2(Axis::Y, p3, 0.1, 0.5) == doctest::Approx(0.25 / pq_integer(10, b)).epsilon(1e-14));
  CHECK(std::fabs(bi_central_moment2(Axis::X, p3, 0.2, 0.6) -
                  bi_apply([](double s, double) { return (s - 0.2) * (s - 0.2); }, p3, 0.2, 0.6)) <= 1e-14);
}

TEST_CASE("tensor consistency on separable functions") {
  const PQPair a(0.95, 0.7), b(0.8, 0.3);
  auto g = [](double s) { return std::exp(-s) + s * s * s; };
  auto h = [](double t) { return std::sin(5 * t) + 2.0; };
  for (int n = 1; n <= 20; n += 3) {
    for (int m = 1; m <= 20; m += 4) {
      const BiParams params(a, b, n, m);
      for (int i = 0; i <= 8; ++i) {
        for (int j = 0; j <= 8; ++j) {
          const double x = i / 8.0, y = j / 8.0;
          const double lhs = bi_apply([&](double s, double t) { return g(s) * h(t); }, params, x, y);
          CHECK(std::fabs(lhs - uni_apply(g, n, x, a) * uni_apply(h, m, y, b)) <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("exact on 1, s, t, st in floating point") {
  const BiParams params(PQPair(0.97, 0.9), PQPair(0.6, 0.3), 33, 17);
  for (int i = 0; i <= 10; ++i) {
    for (int j = 0; j <= 10; ++j) {
      const double x = i / 10.0, y = j / 10.0;
      CHECK(std::fabs(bi_apply([](double, double) { return 1.0; }, params, x, y) - 1.0) <= 1e-12);
      CHECK(std::fabs(bi_apply([](double s, double) { return s; }, params, x, y) - x) <= 1e-12);
      CHECK(std::fabs(bi_apply([](double, double t) { return t; }, params, x, y) - y) <= 1e-12);
      CHECK(std::fabs(bi_apply([](double s, double t) { return s * t; }, params, x, y) - x * y) <= 1e-12);
    }
  }
}

TEST_CASE("positive and monotone") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double p = 0.4 + 0.6 * u(rng);
    const PQPair pq(p, p * (0.1 + 0.8 * u(rng)));
    const BiParams params(pq, pq, 1 + trial % 15, 1 + (3 * trial) % 15);
    const double c = u(rng), d = 4 * u(rng);
    auto f = [=](double s, double t) { return c * std::cos(d * s * t) * std::cos(d * s * t); };
    auto g = [=](double s, double t) { return f(s, t) + 1e-3 + c * s; };
    const double x = u(rng), y = u(rng);
    const double bf = bi_apply(f, params, x, y);
    CHECK(bf >= 0.0);
    CHECK(bf <= bi_apply(g, params, x, y));
  }
}
