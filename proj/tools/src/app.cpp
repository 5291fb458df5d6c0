#include <sstream>

#include "CLI11.hpp"
#include "pqb/target.hpp"
#include "pqb_cli/cli.hpp"

namespace pqb::cli {

namespace {

void add_output(CLI::App* sub, RunConfig& c) {
  sub->add_flag("--json", c.json, "Emit one JSON document instead of CSV");
  sub->add_option("-o,--output", c.output, "Write to a file instead of stdout");
}

void add_pair(CLI::App* sub, RunConfig& c) {
  sub->add_option("--p", c.p, "p for the x axis (0 < q < p <= 1)");
  sub->add_option("--q", c.q, "q for the x axis");
}

void add_second_pair(CLI::App* sub, RunConfig& c) {
  sub->add_option("--p2", c.p2, "p for the y axis (default: --p)");
  sub->add_option("--q2", c.q2, "q for the y axis (default: --q)");
}

void add_schedule(CLI::App* sub, RunConfig& c, const std::string& help) {
  sub->add_option("--schedule", c.schedules, help)->delimiter(',')->check(CLI::IsMember({"i", "ii", "iii"}));
}

void add_point(CLI::App* sub, std::vector<double>& point) {
  sub->add_option("--point", point, "Evaluation point x,y")->delimiter(',')->expected(2);
}

const char* kFunctionHelp =
    "Corpus name (const1 linx liny prodxy quad ripple vee lip_half) or an expression in x, y";

}  // namespace

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"(p,q)-Bernstein operators: moments, convergence, error-bound certificates"};
  app.name(args.empty() ? "pqb" : args[0]);
  app.require_subcommand(1);
  RunConfig c;
  std::vector<double> point;

  auto* pq = app.add_subcommand("pq", "(p,q)-integers, factorials, binomials, falling products.\n"
                                      "Columns: n,k,pq_integer,pq_factorial,pq_binomial,falling_product,expansion_ok");
  add_pair(pq, c);
  pq->add_option("--n-max", c.n_max, "Largest n (<= 20)");
  add_output(pq, c);

  auto* eval = app.add_subcommand("eval", "B_{n,m} f on a lattice or at a point.\nColumns: x,y,f,Bf,abs_error");
  eval->add_option("--f", c.functions, kFunctionHelp)->required()->expected(1);
  eval->add_option("--n", c.n, "Degree in x");
  eval->add_option("--m", c.m, "Degree in y (default: n)");
  add_pair(eval, c);
  add_second_pair(eval, c);
  add_schedule(eval, c, "Built-in schedule instead of --p/--q (two ids: x,y)");
  eval->add_option("--grid", c.grid, "Lattice resolution G, (G+1)^2 nodes (default 10)");
  add_point(eval, point);
  add_output(eval, c);

  auto* moments = app.add_subcommand(
      "moments", "Closed-form raw moments e0..e4 against brute-force summation.\n"
                 "Columns: i,x,closed_form,oracle,abs_diff,statement_form,exact_equal");
  moments->add_option("--n", c.n, "Degree");
  add_pair(moments, c);
  moments->add_option("--x", c.xs, "Points (default 0,0.25,0.5,0.75,1)")->delimiter(',');
  add_output(moments, c);

  auto* central = app.add_subcommand(
      "central-moments", "Central moments of order 2 and 4.\nColumns: r,x,closed_form,oracle,abs_diff,printed_form");
  central->add_option("--n", c.n, "Degree");
  add_pair(central, c);
  central->add_option("--x", c.xs, "Points (default 0,0.25,0.5,0.75,1)")->delimiter(',');
  add_output(central, c);

  auto* korovkin = app.add_subcommand(
      "korovkin", "Sup-errors along a degree ladder with the six test monomials.\n"
                  "Columns: n,m,sup_error,e00,e10,e01,e11,e20,e02,degenerate");
  korovkin->add_option("--f", c.functions, kFunctionHelp)->expected(1);
  add_schedule(korovkin, c, "Built-in schedule (default i; two ids: x,y)");
  add_pair(korovkin, c);
  add_second_pair(korovkin, c);
  korovkin->add_option("--degrees", c.degrees, "n=m ladder (default 8,16,32,64)")->delimiter(',');
  korovkin->add_option("--m", c.m, "Fixed y degree");
  korovkin->add_option("--grid", c.grid, "Lattice resolution G >= 10 (default 50)");
  add_output(korovkin, c);

  auto* certify = app.add_subcommand(
      "certify", "Error-bound certificates. Exit status 1 if any gating certificate fails.\n"
                 "Columns: theorem,variant,gating,function,schedule,n,m,lhs,rhs,rhs_envelope,margin,"
                 "pointwise_margin,worst_x,worst_y,pass_uniform,pass_pointwise,pass_primary,status,note");
  certify->add_option("--f", c.functions, "Functions (default: whole corpus)")->delimiter(';');
  certify->add_option("--theorem", c.theorems, "complete-modulus, partial-moduli, lipschitz, c1, peetre-k")
      ->delimiter(',');
  add_schedule(certify, c, "Schedules (default i,ii,iii)");
  certify->add_option("--degrees", c.degrees, "n=m degrees (default 4,8,16,32)")->delimiter(',');
  certify->add_option("--grid", c.grid, "Evaluation lattice resolution (default 50)");
  certify->add_option("--modulus-grid", c.modulus_grid, "Lattice resolution for the moduli (default 200)");
  certify->add_flag("--assume-smooth", c.assume_smooth, "Treat expressions as C1 (finite-difference partials)");
  add_output(certify, c);

  auto* voron = app.add_subcommand(
      "voronovskaja", "[n](B_{n,n} f - f) along a schedule, or scaled central moments with --order.\n"
                      "Columns: n,scaled_value,predicted_limit,residual,richardson\n"
                      "With --order: x,n,value,predicted_limit,residual,corrected_limit,corrected_residual");
  voron->add_option("--f", c.functions, kFunctionHelp)->expected(1);
  voron->add_option("--schedule", c.schedules, "Built-in schedule (default i)")
      ->expected(1)
      ->check(CLI::IsMember({"i", "ii", "iii"}));
  add_point(voron, point);
  voron->add_option("--degrees", c.degrees, "Ascending degrees (default 16,32,...,2048)")->delimiter(',');
  voron->add_option("--order", c.order, "2 or 4: scaled central-moment limits instead of a trace");
  voron->add_option("--x", c.xs, "Points for --order (default 0.25,0.5,0.75)")->delimiter(',');
  voron->add_flag("--allow-fd", c.allow_fd, "Finite-difference second partials for corpus functions");
  add_output(voron, c);

  auto* selftest = app.add_subcommand("selftest", "Built-in property checks.\nColumns: check,status,detail");
  selftest->add_option("--seed", c.seed, "Seed for randomized sweeps");
  add_output(selftest, c);

  std::vector<std::string> rest(args.rbegin(), args.rend());
  if (!rest.empty()) rest.pop_back();
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  c.command = app.get_subcommands().front()->get_name();
  if (!point.empty()) c.point = std::pair{point[0], point[1]};
  return run(c, out, err);
}

}  // namespace pqb::cli
