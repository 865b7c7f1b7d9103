#include "lerchlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>

#include "lerchlab/errors.hpp"

namespace lerchlab::harness {

using closedform::Family;
using closedform::FamilyTag;
using closedform::Params;
using closedform::Variant;

std::string_view to_string(Status s) {
  switch (s) {
    case Status::PASS: return "PASS";
    case Status::FAIL: return "FAIL";
    case Status::SUSPECT_IDENTITY: return "SUSPECT_IDENTITY";
    case Status::SKIPPED_INVALID: return "SKIPPED_INVALID";
    case Status::NONCONVERGED: return "NONCONVERGED";
  }
  return "?";
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

OracleConfig tightened(const OracleConfig& cfg) {
  OracleConfig t = cfg;
  t.quad.abs_tol = std::max(1e-14, cfg.quad.abs_tol / 10.0);
  t.quad.max_level = std::min(16, cfg.quad.max_level + 2);
  t.sum.max_terms = cfg.sum.max_terms * 4;
  t.sum.tail_order = std::min(8, cfg.sum.tail_order + 2);
  return t;
}

double rel_diff(double x, double ref) { return std::abs(x - ref) / std::max(1.0, std::abs(ref)); }

}  // namespace

EvalReport compare_case(const Family& family, const Params& params, double tol, const OracleConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  EvalReport rep;
  rep.family = family;
  rep.params = params;
  auto done = [&](Status s) {
    rep.status = s;
    rep.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    return rep;
  };

  if (!closedform::validate_params(family, params).ok) {
    rep.closed_form = {kNaN, kNaN};
    rep.oracle = {kNaN, kNaN};
    rep.abs_err = kNaN;
    rep.rel_err = kNaN;
    return done(Status::SKIPPED_INVALID);
  }

  try {
    rep.closed_form = closedform::eval_theorem(family, params);
    if (closedform::has_corollary(family, params)) {
      rep.corollary = closedform::eval_corollary(family, params);
    }
  } catch (const std::exception&) {
    rep.oracle = {kNaN, kNaN};
    rep.abs_err = kNaN;
    rep.rel_err = kNaN;
    return done(Status::FAIL);
  }

  bool converged = true;
  try {
    rep.oracle = oracle::evaluate(family, params, cfg.quad, cfg.sum);
  } catch (const NonConvergedError& e) {
    rep.oracle = {e.estimate(), e.err()};
    converged = false;
  } catch (const std::exception&) {
    rep.oracle = {kNaN, kNaN};
    rep.abs_err = kNaN;
    rep.rel_err = kNaN;
    return done(Status::FAIL);
  }

  rep.abs_err = std::abs(rep.closed_form.value - rep.oracle.value);
  rep.rel_err = rep.abs_err / std::max(1.0, std::abs(rep.closed_form.value));
  if (!converged) return done(Status::NONCONVERGED);
  const double scale = std::max(1.0, std::abs(rep.closed_form.value));
  // Agreement only counts when the oracle's own bound supports the tolerance.
  if (rep.rel_err <= tol && rep.oracle.err <= tol * scale) return done(Status::PASS);
  // A gap inside the combined error bars is no evidence against the identity.
  const bool resolved = rep.abs_err > rep.closed_form.err + rep.oracle.err;
  if (rep.rel_err > 10.0 * tol && resolved) {
    try {
      const RealScalar again = oracle::evaluate(family, params, tightened(cfg).quad, tightened(cfg).sum);
      if (rel_diff(again.value, rep.oracle.value) <= tol) return done(Status::SUSPECT_IDENTITY);
    } catch (const std::exception&) {
    }
  }
  return done(Status::FAIL);
}

void SweepSpec::check() const {
  if (p_max < 1 || q_max < 1 || n_max < 1) throw ParameterError("sweep bounds must be positive");
  if (p_max + q_max > closedform::kMaxWeight) throw ParameterError("sweep needs p_max + q_max <= 12");
  if (n_max > 4) throw ParameterError("sweep needs n_max <= 4");
  if (weight_max < 0) throw ParameterError("sweep weight_max must be >= 0");
  if (!(tol > 0.0)) throw ParameterError("sweep tol must be positive");
  oracle_cfg.quad.check();
  oracle_cfg.sum.check();
}

namespace {

unsigned worker_count(std::size_t jobs) {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("LERCHLAB_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

}  // namespace

std::vector<EvalReport> run_sweep(const SweepSpec& spec) {
  spec.check();
  std::vector<FamilyTag> tags = spec.families;
  if (tags.empty()) tags.assign(std::begin(closedform::kAllFamilies), std::end(closedform::kAllFamilies));

  std::vector<std::pair<Family, Params>> cases;
  for (FamilyTag tag : tags) {
    std::vector<Family> fams;
    if (closedform::has_variants(tag)) {
      fams = {Family(tag, Variant::i), Family(tag, Variant::ii)};
    } else {
      fams = {Family(tag)};
    }
    for (const Family& f : fams) {
      for (int p = 1; p <= spec.p_max; ++p) {
        for (int q = 1; q <= spec.q_max; ++q) {
          if (spec.weight_max > 0 && p + q > spec.weight_max) continue;
          for (int n = 1; n <= spec.n_max; ++n) {
            for (Sign a : {Sign::plus(), Sign::minus()}) {
              for (Sign b : {Sign::plus(), Sign::minus()}) cases.push_back({f, Params{p, q, n, a, b}});
            }
          }
        }
      }
    }
  }

  std::vector<EvalReport> out(cases.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      out[i] = compare_case(cases[i].first, cases[i].second, spec.tol, spec.oracle_cfg);
    }
  };
  const unsigned workers = worker_count(cases.size());
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return out;
}

int exit_code(const std::vector<EvalReport>& reports) {
  for (const auto& r : reports) {
    if (r.status == Status::FAIL || r.status == Status::SUSPECT_IDENTITY) return 1;
  }
  return 0;
}

}  // namespace lerchlab::harness
