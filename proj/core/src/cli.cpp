#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "lerchlab/errors.hpp"
#include "lerchlab/harness.hpp"
#include "lerchlab/specfun.hpp"

namespace lerchlab::harness {

namespace {

struct CaseArgs {
  std::string family;
  std::string variant;
  int p = 1, q = 1, n = 1, a = 1, b = 1;
};

struct OracleArgs {
  double quad_tol = oracle::QuadConfig{}.abs_tol;
  int max_level = oracle::QuadConfig{}.max_level;
  long max_terms = oracle::SumConfig{}.max_terms;
  std::string accel = "ALT_CVZ";
  int tail_order = oracle::SumConfig{}.tail_order;
};

void add_case(CLI::App* cmd, CaseArgs& c, bool family_required) {
  auto* f = cmd->add_option("--family", c.family, "INT_INF_1 ... BBP_O (or int-inf-1 ...)");
  if (family_required) f->required();
  cmd->add_option("-p", c.p, "polylog / harmonic order");
  cmd->add_option("-q", c.q, "log power / denominator order");
  cmd->add_option("-n", c.n, "argument power");
  cmd->add_option("-a", c.a, "sign a (1 or -1)");
  cmd->add_option("-b", c.b, "sign b (1 or -1)");
  cmd->add_option("--variant", c.variant, "i or ii (INT_UNIT_1/2 only)");
}

void add_oracle(CLI::App* cmd, OracleArgs& o) {
  cmd->add_option("--quad-tol", o.quad_tol, "quadrature absolute tolerance");
  cmd->add_option("--max-level", o.max_level, "quadrature refinement levels");
  cmd->add_option("--max-terms", o.max_terms, "summation term budget");
  cmd->add_option("--accel", o.accel, "NONE, ALT_CVZ or EM_TAIL");
  cmd->add_option("--tail-order", o.tail_order, "Euler-Maclaurin / Boole order");
}

closedform::Family to_family(const CaseArgs& c) {
  const auto tag = closedform::parse_family(c.family);
  if (c.variant.empty()) return closedform::Family(tag);
  return closedform::Family(tag, closedform::parse_variant(c.variant));
}

closedform::Params to_params(const CaseArgs& c) { return {c.p, c.q, c.n, Sign(c.a), Sign(c.b)}; }

OracleConfig to_config(const OracleArgs& o) {
  OracleConfig cfg;
  cfg.quad.abs_tol = o.quad_tol;
  cfg.quad.max_level = o.max_level;
  cfg.sum.max_terms = o.max_terms;
  cfg.sum.accel = oracle::parse_accel(o.accel);
  cfg.sum.tail_order = o.tail_order;
  cfg.quad.check();
  cfg.sum.check();
  return cfg;
}

void print(std::ostream& out, std::string_view label, const RealScalar& v) {
  out << fmt::format("{} {:.17g} +- {:.3g}\n", label, v.value, v.err);
}

void write(const std::vector<EvalReport>& reports, const std::string& format, const std::string& path,
           std::ostream& out) {
  const Format f = parse_format(format);
  if (path.empty()) {
    emit_report(reports, f, out);
  } else {
    emit_report(reports, f, path);
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed forms for Lerch-type integrals and sums, with numerical oracles", "lerchlab"};
  app.require_subcommand(1);

  // specfun
  std::string fn;
  int sc = 1, sq = 2, ss = 2, sr = 1;
  std::string alpha = "1";
  auto* specfun_cmd = app.add_subcommand("specfun", "evaluate phi, theta, zeta, eta, lambda or beta");
  specfun_cmd->add_option("function", fn, "phi | theta | zeta | eta | lambda | beta")
      ->required()
      ->check(CLI::IsMember({"phi", "theta", "zeta", "eta", "lambda", "beta"}));
  specfun_cmd->add_option("-c", sc, "base c (1 or -1)");
  specfun_cmd->add_option("-q", sq, "order q (phi, theta)");
  specfun_cmd->add_option("--alpha", alpha, "rational num/den in (0, 1] (phi)");
  specfun_cmd->add_option("-s", ss, "argument s (zeta ... beta) or numerator (theta)");
  specfun_cmd->add_option("-r", sr, "denominator (theta)");

  CaseArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "closed form of one case");
  add_case(eval_cmd, eval_args, true);

  CaseArgs oracle_args;
  OracleArgs oracle_opts;
  auto* oracle_cmd = app.add_subcommand("oracle", "numerical value of one case");
  add_case(oracle_cmd, oracle_args, true);
  add_oracle(oracle_cmd, oracle_opts);

  std::vector<std::string> verify_families;
  SweepSpec sweep;
  OracleArgs verify_opts;
  std::string verify_format = "json", verify_out;
  auto* verify_cmd = app.add_subcommand("verify", "sweep the parameter lattice against the oracles");
  verify_cmd->add_option("--family", verify_families, "families to sweep (default all)");
  verify_cmd->add_option("--pmax", sweep.p_max, "largest p");
  verify_cmd->add_option("--qmax", sweep.q_max, "largest q");
  verify_cmd->add_option("--nmax", sweep.n_max, "largest n");
  verify_cmd->add_option("--wmax", sweep.weight_max, "largest p + q (0 for none)");
  verify_cmd->add_option("--tol", sweep.tol, "relative tolerance");
  add_oracle(verify_cmd, verify_opts);
  verify_cmd->add_option("--format", verify_format, "json or csv");
  verify_cmd->add_option("--out", verify_out, "output file (default stdout)");

  OracleArgs ident_opts;
  std::string ident_format = "json", ident_out;
  auto* ident_cmd = app.add_subcommand("identities", "check the named identity registry");
  add_oracle(ident_cmd, ident_opts);
  ident_cmd->add_option("--format", ident_format, "json or csv");
  ident_cmd->add_option("--out", ident_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (specfun_cmd->parsed()) {
      RealScalar v;
      if (fn == "phi") {
        v = specfun::lerch_phi(Sign(sc), sq, Rational::parse(alpha));
      } else if (fn == "theta") {
        v = specfun::theta(Sign(sc), sq, ss, sr);
      } else {
        const auto kind = fn == "zeta"  ? specfun::Constant::zeta
                          : fn == "eta" ? specfun::Constant::eta
                          : fn == "lambda" ? specfun::Constant::lambda
                                           : specfun::Constant::beta;
        v = specfun::reduced_constant(kind, ss);
      }
      print(out, fn, v);
      return 0;
    }
    if (eval_cmd->parsed()) {
      const auto f = to_family(eval_args);
      const auto x = to_params(eval_args);
      print(out, "theorem", closedform::eval_theorem(f, x));
      if (closedform::has_corollary(f, x)) print(out, "corollary", closedform::eval_corollary(f, x));
      return 0;
    }
    if (oracle_cmd->parsed()) {
      const auto cfg = to_config(oracle_opts);
      const auto f = to_family(oracle_args);
      const auto x = to_params(oracle_args);
      if (auto v = closedform::validate_params(f, x); !v.ok) throw closedform::ValidationError(v);
      print(out, "oracle", oracle::evaluate(f, x, cfg.quad, cfg.sum));
      return 0;
    }
    if (verify_cmd->parsed()) {
      for (const auto& name : verify_families) sweep.families.push_back(closedform::parse_family(name));
      sweep.oracle_cfg = to_config(verify_opts);
      parse_format(verify_format);
      const auto reports = run_sweep(sweep);
      write(reports, verify_format, verify_out, out);
      return exit_code(reports);
    }
    if (ident_cmd->parsed()) {
      const auto cfg = to_config(ident_opts);
      parse_format(ident_format);
      const auto reports = run_identities(cfg);
      write(reports, ident_format, ident_out, out);
      return exit_code(reports);
    }
  } catch (const std::invalid_argument& e) {
    // ParameterError, UsageError, ValidationError, UnsupportedCase
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace lerchlab::harness
