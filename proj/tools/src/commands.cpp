#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "pqb/certify.hpp"
#include "pqb/korovkin.hpp"
#include "pqb/voronovskaja.hpp"
#include "pqb_cli/cli.hpp"

namespace pqb::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Cell i64(long long v) { return static_cast<std::int64_t>(v); }

TargetFunction function_arg(const std::string& text) {
  try {
    return resolve_function(text);
  } catch (const ParseError& e) {
    throw UsageError("cannot parse function '" + text + "': " + e.describe());
  }
}

ParamSchedule schedule_arg(const std::string& id) {
  try {
    return ParamSchedule::builtin(id);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

PQPair pair_arg(std::optional<double> p, std::optional<double> q, const char* which) {
  if (!p || !q) throw UsageError(std::string("missing ") + which + " (give both p and q)");
  try {
    return PQPair(*p, *q);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

int m_of(const RunConfig& c) { return c.m.value_or(c.n); }

// Axis pairs either from --schedule (one id, or two for x and y) or --p/--q[/--p2/--q2].
BiParams bi_params(const RunConfig& c) {
  const int n = c.n;
  const int m = m_of(c);
  if (!c.schedules.empty()) {
    const auto sx = schedule_arg(c.schedules[0]);
    const auto sy = schedule_arg(c.schedules.size() > 1 ? c.schedules[1] : c.schedules[0]);
    return BiParams(sx.at(n), sy.at(m), n, m);
  }
  const PQPair px = pair_arg(c.p, c.q, "--p/--q");
  const PQPair py = (c.p2 || c.q2) ? pair_arg(c.p2, c.q2, "--p2/--q2") : px;
  return BiParams(px, py, n, m);
}

std::vector<double> xs_or(const RunConfig& c, std::vector<double> fallback) {
  return c.xs.empty() ? fallback : c.xs;
}

Table cmd_pq(const RunConfig& c) {
  const PQPair pq = pair_arg(c.p, c.q, "--p/--q");
  if (c.n_max < 0 || c.n_max > 20) throw UsageError("--n-max must be in 0..20");
  Table t;
  t.columns = {"n", "k", "pq_integer", "pq_factorial", "pq_binomial", "falling_product", "expansion_ok"};
  const double x = 0.5;
  for (int n = 0; n <= c.n_max; ++n) {
    const bool expansion = pq_binomial_expansion_check(n, 1.0, 1.0, 0.3, 0.7, pq);
    for (int k = 0; k <= n; ++k) {
      t.add({i64(n), i64(k), pq_integer(n, pq), pq_factorial(n, pq), pq_binomial(n, k, pq),
             falling_product(x, n, pq), expansion});
    }
  }
  t.meta = {{"p", pq.p()}, {"q", pq.q()}, {"falling_product_x", x}};
  return t;
}

Table cmd_eval(const RunConfig& c) {
  if (c.functions.size() != 1) throw UsageError("eval needs exactly one --f");
  const auto f = function_arg(c.functions[0]);
  const BiParams params = bi_params(c);
  Table t;
  t.columns = {"x", "y", "f", "Bf", "abs_error"};
  auto row = [&](double x, double y, double b) {
    const double v = f(x, y);
    t.add({x, y, v, b, std::fabs(b - v)});
  };
  if (c.point) {
    const auto [x, y] = *c.point;
    row(x, y, bi_apply(f.f, params, x, y));
  } else {
    const int G = c.grid.value_or(10);
    if (G < 1) throw UsageError("--grid must be >= 1");
    const auto values = apply_on_grid(f, params, G);
    for (int i = 0; i <= G; ++i) {
      for (int j = 0; j <= G; ++j) {
        row(static_cast<double>(i) / G, static_cast<double>(j) / G,
            values[static_cast<std::size_t>(i) * (G + 1) + j]);
      }
    }
  }
  t.meta = {{"function", f.name}, {"n", i64(params.n)}, {"m", i64(params.m)},
            {"p1", params.pq1.p()}, {"q1", params.pq1.q()}, {"p2", params.pq2.p()}, {"q2", params.pq2.q()}};
  return t;
}

constexpr int kExactLimit = 64;

Table cmd_moments(const RunConfig& c) {
  const PQPair pq = pair_arg(c.p, c.q, "--p/--q");
  if (c.n < 1) throw UsageError("--n must be >= 1");
  const ExactPQPair exact_pq(Rational(pq.p()), Rational(pq.q()));
  Table t;
  t.columns = {"i", "x", "closed_form", "oracle", "abs_diff", "statement_form", "exact_equal"};
  for (double x : xs_or(c, {0.0, 0.25, 0.5, 0.75, 1.0})) {
    for (int i = 0; i <= 4; ++i) {
      const double closed = uni_moment_closed(i, c.n, x, pq);
      const double oracle = uni_apply([i](double s) { return std::pow(s, i); }, c.n, x, pq);
      Cell exact = std::string("skipped");
      if (c.n <= kExactLimit) {
        const Rational xr(x);
        const Rational brute = uni_apply([i](const Rational& s) { return ipow(s, i); }, c.n, xr, exact_pq);
        exact = brute == uni_moment_closed(i, c.n, xr, exact_pq);
      }
      t.add({i64(i), x, closed, oracle, std::fabs(closed - oracle),
             uni_moment_statement_form(i, c.n, x, pq), exact});
    }
  }
  t.meta = {{"n", i64(c.n)}, {"p", pq.p()}, {"q", pq.q()}};
  return t;
}

Table cmd_central_moments(const RunConfig& c) {
  const PQPair pq = pair_arg(c.p, c.q, "--p/--q");
  if (c.n < 1) throw UsageError("--n must be >= 1");
  Table t;
  t.columns = {"r", "x", "closed_form", "oracle", "abs_diff", "printed_form"};
  for (double x : xs_or(c, {0.0, 0.25, 0.5, 0.75, 1.0})) {
    for (int r : {2, 4}) {
      const double closed = uni_central_moment(r, c.n, x, pq);
      const double oracle = uni_apply([r, x](double s) { return std::pow(s - x, r); }, c.n, x, pq);
      const double printed = r == 4 ? uni_central_moment4_printed(c.n, x, pq) : closed;
      t.add({i64(r), x, closed, oracle, std::fabs(closed - oracle), printed});
    }
  }
  t.meta = {{"n", i64(c.n)}, {"p", pq.p()}, {"q", pq.q()}};
  return t;
}

std::vector<int> degrees_or(const RunConfig& c, std::vector<int> fallback) {
  return c.degrees.empty() ? fallback : c.degrees;
}

Table cmd_korovkin(const RunConfig& c) {
  const auto f = function_arg(c.functions.empty() ? "quad" : c.functions[0]);
  std::optional<ParamSchedule> sx, sy;
  if (!c.schedules.empty()) {
    sx = schedule_arg(c.schedules[0]);
    sy = schedule_arg(c.schedules.size() > 1 ? c.schedules[1] : c.schedules[0]);
  } else if (c.p || c.q) {
    const PQPair px = pair_arg(c.p, c.q, "--p/--q");
    const PQPair py = (c.p2 || c.q2) ? pair_arg(c.p2, c.q2, "--p2/--q2") : px;
    sx = ParamSchedule::constant(px.p(), px.q());
    sy = ParamSchedule::constant(py.p(), py.q());
  } else {
    sx = sy = schedule_arg("i");
  }
  const int G = c.grid.value_or(50);
  if (G < 10) throw UsageError("--grid must be >= 10");
  std::vector<std::pair<int, int>> degrees;
  for (int n : degrees_or(c, {8, 16, 32, 64})) degrees.emplace_back(n, c.m.value_or(n));
  const auto rows = korovkin_experiment(f, *sx, *sy, degrees, G);
  Table t;
  t.columns = {"n", "m", "sup_error", "e00", "e10", "e01", "e11", "e20", "e02", "degenerate"};
  for (const auto& r : rows) {
    t.add({i64(r.n), i64(r.m), r.sup_error, r.test_errors[0], r.test_errors[1], r.test_errors[2],
           r.test_errors[3], r.test_errors[4], r.test_errors[5], r.degenerate});
  }
  t.meta = {{"function", f.name}, {"schedule_x", sx->name()}, {"schedule_y", sy->name()}, {"grid", i64(G)}};
  return t;
}

RunResult cmd_certify(const RunConfig& c) {
  std::vector<std::string> functions = c.functions;
  if (functions.empty()) functions = corpus_names();
  std::vector<Theorem> theorems;
  try {
    for (const auto& name : c.theorems) theorems.push_back(parse_theorem(name));
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (theorems.empty()) theorems.assign(all_theorems().begin(), all_theorems().end());
  std::vector<std::string> schedule_ids = c.schedules;
  if (schedule_ids.empty()) schedule_ids = ParamSchedule::builtin_ids();
  std::vector<ParamSchedule> schedules;
  for (const auto& id : schedule_ids) schedules.push_back(schedule_arg(id));
  const auto degrees = degrees_or(c, {4, 8, 16, 32});

  CertifyOptions options;
  options.eval_grid = c.grid.value_or(50);
  options.modulus_grid = c.modulus_grid;
  options.assume_smooth = c.assume_smooth;
  if (options.eval_grid < 1 || options.modulus_grid < 1) throw UsageError("grids must be >= 1");

  RunResult result;
  Table& t = result.table;
  t.columns = {"theorem", "variant", "gating", "function", "schedule", "n", "m", "lhs", "rhs", "rhs_envelope",
               "margin", "pointwise_margin", "worst_x", "worst_y", "pass_uniform", "pass_pointwise",
               "pass_primary", "status", "note"};
  int failures = 0;
  int certified = 0;
  for (const auto& text : functions) {
    Certifier certifier(function_arg(text), options);
    const std::string& name = certifier.function().name;
    for (Theorem th : theorems) {
      std::optional<std::string> unmet;
      try {
        certifier.check_hypothesis(th);
      } catch (const HypothesisError& e) {
        unmet = e.hypothesis();
      }
      if (unmet) {
        t.add({std::string(to_string(th)), std::string("primary"), true, name, std::string(""), i64(0), i64(0),
               kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, false, false, false, std::string("hypothesis-not-met"),
               *unmet});
        continue;
      }
      for (const auto& sched : schedules) {
        for (int n : degrees) {
          const int m = c.m.value_or(n);
          const BiParams params(sched.at(n), sched.at(m), n, m);
          for (const auto& cert : certifier.certify(th, params)) {
            std::string status;
            if (cert.gating) {
              status = cert.pass() ? "pass" : "FAIL";
              if (cert.pass()) {
                ++certified;
              } else {
                ++failures;
                std::ostringstream os;
                os.precision(17);
                os << "counterexample: " << to_string(th) << " f=" << name << " schedule=" << sched.name()
                   << " n=" << n << " m=" << m << " lhs=" << cert.lhs << " rhs=" << cert.rhs_envelope
                   << " worst at (" << cert.worst_x << "," << cert.worst_y
                   << ") pointwise margin=" << cert.pointwise_margin;
                result.diagnostics.push_back(os.str());
              }
            } else {
              status = cert.pass() ? "pass" : "not-certified";
            }
            t.add({std::string(to_string(th)), cert.variant, cert.gating, name, sched.name(), i64(n), i64(m),
                   cert.lhs, cert.rhs, cert.rhs_envelope, cert.margin, cert.pointwise_margin, cert.worst_x,
                   cert.worst_y, cert.pass_uniform, cert.pass_pointwise, cert.pass_primary, status,
                   std::string("")});
          }
        }
      }
    }
  }
  t.meta = {{"certified", i64(certified)},
            {"failures", i64(failures)},
            {"eval_grid", i64(options.eval_grid)},
            {"modulus_grid", i64(options.modulus_grid)}};
  result.status = failures ? kExitCertificateFailure : kExitOk;
  return result;
}

Table cmd_voronovskaja(const RunConfig& c) {
  const auto schedule = schedule_arg(c.schedules.empty() ? "i" : c.schedules[0]);
  const auto degrees = degrees_or(c, default_voronovskaja_degrees());
  Table t;
  try {
    if (c.order != 0) {
      if (c.order != 2 && c.order != 4) throw UsageError("--order must be 2 or 4");
      t.columns = {"x", "n", "value", "predicted_limit", "residual", "corrected_limit", "corrected_residual"};
      for (double x : xs_or(c, {0.25, 0.5, 0.75})) {
        const auto tr = scaled_central_moment_limit_check(c.order, schedule, x, degrees);
        for (std::size_t i = 0; i < tr.degrees.size(); ++i) {
          t.add({x, i64(tr.degrees[i]), tr.values[i], tr.predicted_limit, tr.residuals[i], tr.corrected_limit,
                 tr.corrected_residuals[i]});
        }
      }
      t.meta = {{"schedule", schedule.name()}, {"order", i64(c.order)}, {"a", schedule.declared_a()}};
      return t;
    }
    const auto f = function_arg(c.functions.empty() ? "quad" : c.functions[0]);
    const auto [x, y] = c.point.value_or(std::pair{0.5, 0.5});
    const bool fd = c.allow_fd || (!f.has_second_partials() && !find_corpus_function(f.name));
    const auto tr = voronovskaja_trace(f, schedule, x, y, degrees, fd);
    t.columns = {"n", "scaled_value", "predicted_limit", "residual", "richardson"};
    for (std::size_t i = 0; i < tr.degrees.size(); ++i) {
      const double rich = i == 0 ? kNaN
                                 : richardson_extrapolate(tr.degrees[i - 1], tr.scaled_values[i - 1],
                                                          tr.degrees[i], tr.scaled_values[i]);
      t.add({i64(tr.degrees[i]), tr.scaled_values[i], tr.predicted_limit,
             std::fabs(tr.scaled_values[i] - tr.predicted_limit), rich});
    }
    t.meta = {{"function", tr.function},
              {"schedule", tr.schedule},
              {"x", x},
              {"y", y},
              {"a", tr.a},
              {"predicted_limit", tr.predicted_limit},
              {"richardson", tr.richardson().value_or(kNaN)},
              {"finite_difference", tr.finite_difference}};
  } catch (const MissingDerivativeError& e) {
    throw UsageError(std::string(e.what()) + "; pass --allow-fd");
  }
  return t;
}

}  // namespace

RunResult execute(const RunConfig& config) {
  RunResult result;
  try {
    const std::string& cmd = config.command;
    if (cmd == "pq") {
      result.table = cmd_pq(config);
    } else if (cmd == "eval") {
      result.table = cmd_eval(config);
    } else if (cmd == "moments") {
      result.table = cmd_moments(config);
    } else if (cmd == "central-moments") {
      result.table = cmd_central_moments(config);
    } else if (cmd == "korovkin") {
      result.table = cmd_korovkin(config);
    } else if (cmd == "certify") {
      result = cmd_certify(config);
    } else if (cmd == "voronovskaja") {
      result.table = cmd_voronovskaja(config);
    } else if (cmd == "selftest") {
      result.table = selftest_table(config.seed, result.status);
    } else {
      throw UsageError("unknown command '" + cmd + "'");
    }
  } catch (const EvalError& e) {
    throw UsageError(std::string("evaluation failed: ") + e.what());
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  result.table.command = config.command;
  return result;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  RunResult result;
  try {
    result = execute(config);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  std::ofstream file;
  std::ostream* sink = &out;
  if (!config.output.empty()) {
    file.open(config.output, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << config.output << " for writing\n";
      return kExitUsage;
    }
    sink = &file;
  }
  if (config.json) {
    write_json(result.table, *sink);
  } else {
    write_csv(result.table, *sink);
  }
  sink->flush();
  if (!*sink) {
    err << "error: write failed\n";
    return kExitUsage;
  }
  for (const auto& d : result.diagnostics) err << d << '\n';
  return result.status;
}

}  // namespace pqb::cli
