#include <algorithm>
#include <cctype>
#include <string>

#include "lerchlab/closedform.hpp"
#include "lerchlab/errors.hpp"

namespace lerchlab::closedform {

bool has_variants(FamilyTag tag) { return tag == FamilyTag::INT_UNIT_1 || tag == FamilyTag::INT_UNIT_2; }

Family::Family(FamilyTag t, Variant v) : tag(t), variant(v) {
  if (has_variants(t)) {
    if (variant == Variant::none) variant = Variant::i;
  } else if (variant != Variant::none) {
    throw ParameterError("family " + std::string(to_string(t)) + " has no variants");
  }
}

std::string_view to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::INT_INF_1: return "INT_INF_1";
    case FamilyTag::INT_INF_2: return "INT_INF_2";
    case FamilyTag::INT_UNIT_1: return "INT_UNIT_1";
    case FamilyTag::INT_UNIT_2: return "INT_UNIT_2";
    case FamilyTag::EULER_H: return "EULER_H";
    case FamilyTag::EULER_O: return "EULER_O";
    case FamilyTag::BBP_H: return "BBP_H";
    case FamilyTag::BBP_O: return "BBP_O";
  }
  return "?";
}

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::none: return "none";
    case Variant::i: return "i";
    case Variant::ii: return "ii";
  }
  return "?";
}

std::string_view to_string(Reason r) {
  switch (r) {
    case Reason::PARITY: return "PARITY";
    case Reason::FORCED_SIGN: return "FORCED_SIGN";
    case Reason::P1_B1_NEEDS_N1: return "P1_B1_NEEDS_N1";
    case Reason::Q1_A1_DIVERGENT: return "Q1_A1_DIVERGENT";
    case Reason::CAP: return "CAP";
  }
  return "?";
}

FamilyTag parse_family(std::string_view text) {
  std::string norm(text);
  std::transform(norm.begin(), norm.end(), norm.begin(), [](unsigned char ch) {
    return ch == '-' ? '_' : static_cast<char>(std::toupper(ch));
  });
  for (FamilyTag t : kAllFamilies) {
    if (to_string(t) == norm) return t;
  }
  throw ParameterError("unknown family \"" + std::string(text) + "\"");
}

Variant parse_variant(std::string_view text) {
  if (text == "i") return Variant::i;
  if (text == "ii") return Variant::ii;
  if (text == "none") return Variant::none;
  throw ParameterError("variant must be i or ii, got \"" + std::string(text) + "\"");
}

ValidationError::ValidationError(Validity v)
    : std::invalid_argument("invalid parameters: " +
                            std::string(v.reason ? to_string(*v.reason) : "unspecified")),
      validity_(v) {}

Validity validate_params(const Family& family, const Params& x) {
  auto reject = [](Reason r) { return Validity{false, r}; };
  if (x.p < 1 || x.q < 1 || x.n < 1 || x.p + x.q > kMaxWeight) return reject(Reason::CAP);

  const bool odd_weight = (x.p + x.q) % 2 == 1;
  const Sign forced = parity(x.p + x.q - 1);
  bool integral = false;
  switch (family.tag) {
    case FamilyTag::INT_INF_1:
    case FamilyTag::INT_INF_2:
      integral = true;
      break;
    case FamilyTag::INT_UNIT_1:
      integral = true;
      if (!odd_weight) return reject(Reason::PARITY);
      break;
    case FamilyTag::INT_UNIT_2:
      integral = true;
      if (x.a != forced) return reject(Reason::FORCED_SIGN);
      break;
    case FamilyTag::EULER_H:
    case FamilyTag::BBP_H:
      if (!odd_weight) return reject(Reason::PARITY);
      break;
    case FamilyTag::EULER_O:
      if (x.b != forced) return reject(Reason::FORCED_SIGN);
      break;
    case FamilyTag::BBP_O:
      if (x.a != forced) return reject(Reason::FORCED_SIGN);
      break;
  }
  if (x.q == 1 && x.a.is_plus()) return reject(Reason::Q1_A1_DIVERGENT);
  const bool pole_sign = integral ? (x.a.pow(x.n) * x.b).is_plus() : x.b.is_plus();
  if (x.p == 1 && pole_sign && x.n != 1) return reject(Reason::P1_B1_NEEDS_N1);
  return {};
}

}  // namespace lerchlab::closedform
