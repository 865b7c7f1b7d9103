#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>

#include "lerchlab/errors.hpp"
#include "lerchlab/harness.hpp"
#include "lerchlab/specfun.hpp"

namespace lerchlab::harness {

using closedform::Family;
using closedform::FamilyTag;
using closedform::Params;

namespace {

double catalan() { return specfun::reduced_constant(specfun::Constant::beta, 2).value; }
double zeta3() { return specfun::reduced_constant(specfun::Constant::zeta, 3).value; }

std::vector<IdentityRecord> build_registry() {
  constexpr double pi = std::numbers::pi;
  constexpr double ln2 = std::numbers::ln2;
  const Sign P = Sign::plus();
  const Sign M = Sign::minus();
  std::vector<IdentityRecord> r;
  r.push_back({"batir-n1", Family(FamilyTag::BBP_O), Params{1, 1, 1, M, P}, std::nullopt,
               "G - pi/2 ln2", catalan() - pi / 2 * ln2, 1e-10});
  r.push_back({"euler-2zeta3", Family(FamilyTag::EULER_H), Params{1, 2, 1, P, P}, std::nullopt,
               "2 zeta(3)", 2 * zeta3(), 1e-10});
  r.push_back({"euler-alt-zeta3", Family(FamilyTag::EULER_H), Params{1, 2, 1, M, P}, std::nullopt,
               "-5/8 zeta(3)", -5.0 / 8.0 * zeta3(), 1e-10});
  r.push_back({"lemma3-pi2", std::nullopt, Params{}, Lemma3Case{P, 2, 1, 2}, "-pi^2/8", -pi * pi / 8, 1e-10});
  r.push_back({"lemma3-catalan", std::nullopt, Params{}, Lemma3Case{M, 2, 1, 2}, "-G", -catalan(), 1e-10});
  return r;
}

}  // namespace

const std::vector<IdentityRecord>& identity_registry() {
  static const std::vector<IdentityRecord> registry = build_registry();
  return registry;
}

EvalReport check_identity(const IdentityRecord& record, const OracleConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  EvalReport rep;
  rep.identity = record.name;
  rep.expected = record.expected;
  rep.lemma3 = record.lemma3;
  if (record.family) rep.family = *record.family;
  rep.params = record.params;

  bool converged = true;
  bool failed = false;
  try {
    if (record.lemma3) {
      const Lemma3Case& l = *record.lemma3;
      rep.closed_form = closedform::lemma3_value(l.c, l.q, l.s, l.r);
    } else {
      rep.closed_form = closedform::eval_theorem(rep.family, rep.params);
      if (closedform::has_corollary(rep.family, rep.params)) {
        rep.corollary = closedform::eval_corollary(rep.family, rep.params);
      }
    }
  } catch (const std::exception&) {
    rep.closed_form = {std::numeric_limits<double>::quiet_NaN(), 0.0};
    failed = true;
  }
  try {
    if (record.lemma3) {
      const Lemma3Case& l = *record.lemma3;
      rep.oracle = oracle::quad_unit(oracle::Lemma3Integral{l.c, l.q, l.s, l.r}, cfg.quad);
    } else {
      rep.oracle = oracle::evaluate(rep.family, rep.params, cfg.quad, cfg.sum);
    }
  } catch (const NonConvergedError& e) {
    rep.oracle = {e.estimate(), e.err()};
    converged = false;
  } catch (const std::exception&) {
    rep.oracle = {std::numeric_limits<double>::quiet_NaN(), 0.0};
    failed = true;
  }

  // Both paths are measured against the expected constant.
  const double scale = std::max(1.0, std::abs(record.expected));
  rep.abs_err = std::max(std::abs(rep.closed_form.value - record.expected),
                         std::abs(rep.oracle.value - record.expected));
  rep.rel_err = rep.abs_err / scale;
  if (failed || std::isnan(rep.abs_err)) {
    rep.status = Status::FAIL;
  } else if (!converged) {
    rep.status = Status::NONCONVERGED;
  } else {
    rep.status = rep.rel_err <= record.tolerance ? Status::PASS : Status::FAIL;
  }
  rep.wall_time_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<EvalReport> run_identities(const OracleConfig& cfg) {
  std::vector<EvalReport> out;
  for (const auto& rec : identity_registry()) out.push_back(check_identity(rec, cfg));
  return out;
}

}  // namespace lerchlab::harness
