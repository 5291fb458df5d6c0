#include <cmath>
#include <random>
#include <sstream>

#include "pqb/bivariate.hpp"
#include "pqb/schedule.hpp"
#include "pqb/voronovskaja.hpp"
#include "pqb_cli/cli.hpp"

namespace pqb::cli {

namespace {

struct Check {
  std::string name;
  std::string status;  // pass, fail, discrepancy
  std::string detail;
};

std::vector<ExactPQPair> exact_pairs() {
  return {exact_pair(1, 1, 1, 2), exact_pair(3, 4, 1, 2), exact_pair(9, 10, 3, 5)};
}

std::vector<Rational> unit_points() {
  return {Rational(0), make_rational(1, 4), make_rational(1, 2), make_rational(3, 4), Rational(1)};
}

Check raw_moments() {
  int cases = 0;
  int mismatches = 0;
  for (const auto& pq : exact_pairs()) {
    for (int n = 1; n <= 12; ++n) {
      for (const auto& x : unit_points()) {
        for (int i = 0; i <= 4; ++i) {
          const Rational brute = uni_apply([i](const Rational& s) { return ipow(s, i); }, n, x, pq);
          ++cases;
          if (brute != uni_moment_closed(i, n, x, pq)) ++mismatches;
        }
      }
    }
  }
  return {"raw-moments-exact", mismatches ? "fail" : "pass",
          std::to_string(cases - mismatches) + "/" + std::to_string(cases) + " exact"};
}

Check statement_forms() {
  int cases = 0;
  int e3 = 0;
  int e4 = 0;
  for (const auto& pq : exact_pairs()) {
    for (int n = 4; n <= 12; ++n) {
      for (const auto& x : unit_points()) {
        if (x == 0) continue;
        ++cases;
        const Rational b3 = uni_apply([](const Rational& s) { return ipow(s, 3); }, n, x, pq);
        const Rational b4 = uni_apply([](const Rational& s) { return ipow(s, 4); }, n, x, pq);
        if (b3 != uni_moment_statement_form(3, n, x, pq)) ++e3;
        if (b4 != uni_moment_statement_form(4, n, x, pq)) ++e4;
      }
    }
  }
  std::ostringstream os;
  os << "statement form differs from brute force: e3 in " << e3 << "/" << cases << ", e4 in " << e4 << "/"
     << cases << " (closed forms in use match exactly)";
  return {"moment-statement-forms", (e3 || e4) ? "discrepancy" : "pass", os.str()};
}

Check bivariate_moments() {
  int cases = 0;
  int mismatches = 0;
  const std::array<BiMoment, 6> which{BiMoment::One, BiMoment::S, BiMoment::T,
                                      BiMoment::ST, BiMoment::S2, BiMoment::T2};
  const auto pairs = exact_pairs();
  const std::vector<Rational> pts{make_rational(1, 4), make_rational(1, 2), Rational(1)};
  for (int n = 1; n <= 6; ++n) {
    for (int m = 1; m <= 6; ++m) {
      const ExactBiParams params(pairs[(n + m) % 3], pairs[(n * m) % 3], n, m);
      for (const auto& x : pts) {
        for (const auto& y : pts) {
          for (BiMoment w : which) {
            auto f = [w](const Rational& s, const Rational& t) -> Rational {
              switch (w) {
                case BiMoment::One: return Rational(1);
                case BiMoment::S: return s;
                case BiMoment::T: return t;
                case BiMoment::ST: return s * t;
                case BiMoment::S2: return s * s;
                case BiMoment::T2: return t * t;
              }
              return Rational(0);
            };
            ++cases;
            if (bi_apply(f, params, x, y) != bi_moment_closed(w, params, x, y)) ++mismatches;
          }
          ++cases;
          const Rational cx = bi_apply([&](const Rational& s, const Rational&) -> Rational { return (s - x) * (s - x); },
                                       params, x, y);
          if (cx != bi_central_moment2(Axis::X, params, x, y)) ++mismatches;
        }
      }
    }
  }
  return {"bivariate-moments-exact", mismatches ? "fail" : "pass",
          std::to_string(cases - mismatches) + "/" + std::to_string(cases) + " exact"};
}

Check partition_of_unity() {
  double worst_sum = 0.0;
  double most_negative = 0.0;
  for (const PQPair& pq : {PQPair(1.0, 0.5), PQPair(0.75, 0.5), PQPair(0.9, 0.6), PQPair(0.99, 0.98)}) {
    for (int n = 1; n <= 100; ++n) {
      for (int i = 0; i <= 100; ++i) {
        const auto w = uni_basis_all(n, i / 100.0, pq);
        Accumulator<double> acc;
        for (double v : w) {
          acc.add(v);
          most_negative = std::min(most_negative, v);
        }
        worst_sum = std::max(worst_sum, std::fabs(acc.value() - 1.0));
      }
    }
  }
  std::ostringstream os;
  os.precision(3);
  os << "max |sum - 1| = " << worst_sum << ", min weight = " << most_negative;
  return {"partition-of-unity", (worst_sum <= 1e-12 && most_negative >= -1e-15) ? "pass" : "fail", os.str()};
}

Check float_vs_exact(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(1, 30);
  std::uniform_int_distribution<int> num(1, 99);
  double worst = 0.0;
  for (int trial = 0; trial < 40; ++trial) {
    int a = num(rng);
    int b = num(rng);
    if (a == b) b = a == 99 ? 98 : a + 1;
    const ExactPQPair epq(make_rational(std::max(a, b), 100), make_rational(std::min(a, b), 100));
    const PQPair fpq(epq.p().get_d(), epq.q().get_d());
    const int n = deg(rng);
    const Rational x = make_rational(num(rng), 100);
    const auto we = uni_basis_all(n, x, ExactPQPair(Rational(fpq.p()), Rational(fpq.q())));
    const auto wf = uni_basis_all(n, x.get_d(), fpq);
    for (std::size_t k = 0; k < we.size(); ++k) worst = std::max(worst, std::fabs(we[k].get_d() - wf[k]));
  }
  std::ostringstream os;
  os.precision(3);
  os << "max |float - exact| basis weight = " << worst;
  return {"float-vs-exact-basis", worst <= 1e-12 ? "pass" : "fail", os.str()};
}

Check monotone(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int violations = 0;
  const int trials = 200;
  for (int trial = 0; trial < trials; ++trial) {
    const double c0 = u(rng), c1 = u(rng), c2 = u(rng), bump = u(rng);
    auto f = [=](double s, double t) { return std::sin(6 * c0 * s) * std::cos(5 * c1 * t) + c2 * s * t; };
    auto g = [=](double s, double t) { return f(s, t) + bump * (1.0 + s * t); };
    const double p = 0.5 + 0.5 * u(rng);
    const PQPair pq(p, p * (0.1 + 0.85 * u(rng)));
    const BiParams params(pq, pq, 1 + trial % 12, 1 + (trial * 7) % 12);
    const double x = u(rng), y = u(rng);
    if (bi_apply(f, params, x, y) > bi_apply(g, params, x, y) + 1e-14) ++violations;
  }
  return {"positivity-monotonicity", violations ? "fail" : "pass",
          std::to_string(trials - violations) + "/" + std::to_string(trials) + " dominated pairs ordered"};
}

Check tensor() {
  double worst = 0.0;
  const PQPair a(0.9, 0.6), b(1.0, 0.8);
  auto g = [](double s) { return std::exp(s) - s * s; };
  auto h = [](double t) { return std::cos(3 * t); };
  for (int n : {1, 5, 12, 20}) {
    for (int m : {1, 7, 20}) {
      const BiParams params(a, b, n, m);
      for (int i = 0; i <= 8; ++i) {
        for (int j = 0; j <= 8; ++j) {
          const double x = i / 8.0, y = j / 8.0;
          const double lhs = bi_apply([&](double s, double t) { return g(s) * h(t); }, params, x, y);
          const double rhs = uni_apply(g, n, x, a) * uni_apply(h, m, y, b);
          worst = std::max(worst, std::fabs(lhs - rhs));
        }
      }
    }
  }
  std::ostringstream os;
  os.precision(3);
  os << "max |B(g h) - B g * B h| = " << worst;
  return {"tensor-consistency", worst <= 1e-12 ? "pass" : "fail", os.str()};
}

Check fourth_moment_limit() {
  const auto sched = ParamSchedule::builtin("i");
  const std::vector<int> degrees{2048};
  const auto tr = scaled_central_moment_limit_check(4, sched, 0.5, degrees);
  std::ostringstream os;
  os.precision(6);
  os << "[n]^2 mu4 at n=2048, x=0.5: " << tr.values[0] << "; stated limit 3a x^2(1-x)^2 = " << tr.predicted_limit
     << ", 3a^2 x^2(1-x)^2 = " << tr.corrected_limit;
  const bool closer_to_corrected = tr.corrected_residuals[0] < tr.residuals[0];
  return {"fourth-moment-limit", closer_to_corrected ? "discrepancy" : "pass", os.str()};
}

Check schedules() {
  std::string bad;
  for (const auto& id : ParamSchedule::builtin_ids()) {
    if (ParamSchedule::builtin(id).check_limits(2048).degenerate()) bad += id + " ";
  }
  return {"schedule-limits", bad.empty() ? "pass" : "fail",
          bad.empty() ? "built-in schedules admissible and converging" : "degenerate: " + bad};
}

}  // namespace

Table selftest_table(std::uint64_t seed, int& status) {
  std::mt19937_64 rng(seed);
  std::vector<Check> checks;
  checks.push_back(raw_moments());
  checks.push_back(statement_forms());
  checks.push_back(bivariate_moments());
  checks.push_back(partition_of_unity());
  checks.push_back(float_vs_exact(rng));
  checks.push_back(monotone(rng));
  checks.push_back(tensor());
  checks.push_back(fourth_moment_limit());
  checks.push_back(schedules());

  Table t;
  t.columns = {"check", "status", "detail"};
  status = kExitOk;
  for (auto& c : checks) {
    if (c.status == "fail") status = kExitCertificateFailure;
    t.add({c.name, c.status, c.detail});
  }
  t.meta = {{"seed", static_cast<std::int64_t>(seed)}};
  return t;
}

}  // namespace pqb::cli
