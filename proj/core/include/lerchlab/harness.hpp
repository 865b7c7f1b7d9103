#pragma once

// Lattice sweeps, the named-identity registry and report output.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lerchlab/closedform.hpp"
#include "lerchlab/oracle.hpp"
#include "lerchlab/types.hpp"

namespace lerchlab::harness {

enum class Status { PASS, FAIL, SUSPECT_IDENTITY, SKIPPED_INVALID, NONCONVERGED };
std::string_view to_string(Status s);

struct OracleConfig {
  oracle::QuadConfig quad;
  oracle::SumConfig sum;
};

// int_0^1 x^{s-1} ln^{q-1}(x) / (1 - c x^r) dx as a registry entry (see lemma3_value).
struct Lemma3Case {
  Sign c;
  int q = 2;
  int s = 1;
  int r = 1;
};

struct EvalReport {
  closedform::Family family;
  closedform::Params params;
  RealScalar closed_form{};
  std::optional<RealScalar> corollary;
  RealScalar oracle{};
  double abs_err = 0.0;
  double rel_err = 0.0;
  Status status = Status::FAIL;
  long long wall_time_ms = 0;

  // Set only for registry entries. A lemma3 entry reports as family
  // LEMMA3 with p = s, n = r, a = c.
  std::string identity;
  std::optional<Lemma3Case> lemma3;
  std::optional<double> expected;
};

// rel_err = |closed_form - oracle| / max(1, |closed_form|).
//
// PASS: rel_err <= tol and the oracle's err is within tol * max(1, |closed_form|).
// SUSPECT_IDENTITY: rel_err > 10 tol, the gap exceeds both err fields
// combined, and a second oracle run with a tightened config reproduces the
// first. Everything else is FAIL. Values of a SKIPPED_INVALID
// report are NaN. Never throws for positive p, q, n.
EvalReport compare_case(const closedform::Family& family, const closedform::Params& params,
                        double tol, const OracleConfig& cfg = {});

struct SweepSpec {
  std::vector<closedform::FamilyTag> families;  // empty means all eight
  int p_max = 3;
  int q_max = 3;
  int n_max = 2;
  int weight_max = 0;  // cap on p + q; 0 for none
  double tol = 1e-8;
  OracleConfig oracle_cfg;

  // Throws ParameterError unless p_max + q_max <= 12, n_max <= 4, tol > 0.
  void check() const;
};

// Reports ordered by (family, variant, p, q, n, a, b) with +1 before -1.
// LERCHLAB_THREADS caps the worker count.
std::vector<EvalReport> run_sweep(const SweepSpec& spec);

struct IdentityRecord {
  std::string name;
  std::optional<closedform::Family> family;
  closedform::Params params;
  std::optional<Lemma3Case> lemma3;
  std::string expression;  // e.g. "G - pi/2 ln2"
  double expected = 0.0;
  double tolerance = 1e-10;
};

const std::vector<IdentityRecord>& identity_registry();

// Closed-form (eval_theorem or lemma3_value) value and oracle each within the record tolerance
// of the expected constant.
EvalReport check_identity(const IdentityRecord& record, const OracleConfig& cfg = {});
std::vector<EvalReport> run_identities(const OracleConfig& cfg = {});

enum class Format { json, csv };
Format parse_format(std::string_view text);

// Throws UsageError for an empty list.
void emit_report(const std::vector<EvalReport>& reports, Format format, std::ostream& out);
// Throws IoError if path cannot be written.
void emit_report(const std::vector<EvalReport>& reports, Format format, const std::string& path);

// 0 when no report is FAIL or SUSPECT_IDENTITY, else 1.
int exit_code(const std::vector<EvalReport>& reports);

// Entry point of the lerchlab tool. Returns the process exit code
// (2 for usage errors).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lerchlab::harness
