#pragma once

// Closed-form right-hand sides of the eight identity families.
//
// INT_INF_1   int_0^inf ln^{q-1}(x) Li_p(b x^n) / (x (1 - a x)) dx
// INT_INF_2   int_0^inf ln^{q-1}(x) Li_p(b x^{2n}) / (1 - a x^2) dx
// INT_UNIT_1  int_0^1 ln^{q-1}(x) Li_p(b x^{+-n}) / (1 - a x) dx       (variant i / ii)
// INT_UNIT_2  int_0^1 ln^{q-1}(x) Li_p(b x^{+-2n}) / (1 - a x^2) dx    (variant i / ii)
// EULER_H     sum_k a^k H_{nk}^{(p)}(b) / k^q
// EULER_O     sum_k a^k O_{nk}^{(p)}(b) / k^q
// BBP_H       sum_k (a^n)^k H_k^{(p)}(b) sum_{j=1}^n a^{j-1} / (nk + j)^q
// BBP_O       sum_k (a^n)^k H_k^{(p)}(b) sum_{j=1}^n a^{j-1} / (2nk + 2j - 1)^q
//
// Variant ii uses x^{-n}; where the argument exceeds 1 the real part is meant.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lerchlab/types.hpp"

namespace lerchlab::closedform {

enum class FamilyTag { INT_INF_1, INT_INF_2, INT_UNIT_1, INT_UNIT_2, EULER_H, EULER_O, BBP_H, BBP_O };
enum class Variant { none, i, ii };

inline constexpr FamilyTag kAllFamilies[] = {
    FamilyTag::INT_INF_1, FamilyTag::INT_INF_2, FamilyTag::INT_UNIT_1, FamilyTag::INT_UNIT_2,
    FamilyTag::EULER_H,   FamilyTag::EULER_O,   FamilyTag::BBP_H,      FamilyTag::BBP_O,
};

struct Family {
  FamilyTag tag = FamilyTag::INT_INF_1;
  Variant variant = Variant::none;

  // Throws ParameterError when a variant is given to a family without parts.
  Family() = default;
  Family(FamilyTag t, Variant v = Variant::none);

  bool operator==(const Family&) const = default;
};

bool has_variants(FamilyTag tag);
std::string_view to_string(FamilyTag tag);
std::string_view to_string(Variant v);
// Accepts "INT_INF_1" and the CLI spelling "int-inf-1", case-insensitive.
FamilyTag parse_family(std::string_view text);
Variant parse_variant(std::string_view text);

struct Params {
  int p = 1;
  int q = 1;
  int n = 1;
  Sign a;
  Sign b;
};

inline constexpr int kMaxWeight = 12;  // p + q cap

enum class Reason { PARITY, FORCED_SIGN, P1_B1_NEEDS_N1, Q1_A1_DIVERGENT, CAP };
std::string_view to_string(Reason r);

struct Validity {
  bool ok = true;
  std::optional<Reason> reason;
};

class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(Validity v);
  const Validity& validity() const noexcept { return validity_; }

 private:
  Validity validity_;
};

// Total: never throws for positive p, q, n.
Validity validate_params(const Family& family, const Params& params);

// Theorem right-hand side. Throws ValidationError for invalid params.
RealScalar eval_theorem(const Family& family, const Params& params);

// True when a hand-reduced corollary exists for this family and sign choice.
bool has_corollary(const Family& family, const Params& params);

// Corollary right-hand side, coded independently of eval_theorem.
// Throws UnsupportedCase when no corollary applies.
RealScalar eval_corollary(const Family& family, const Params& params);

// int_0^1 x^{s-1} ln^{q-1}(x) / (1 - c x^r) dx = (-1)^{q-1} (q-1)! / r^q Phi(c, q, s/r).
RealScalar lemma3_value(Sign c, int q, int s, int r);

// int_0^inf ln^{q-1}(x)/x (1/(1 - a x) - 1/(1 - b y x^n)) dx for y in (0, 1).
RealScalar lemma5_value(int q, int n, Sign a, Sign b, double y);

}  // namespace lerchlab::closedform
