#include <charconv>
#include <numeric>

#include "lerchlab/errors.hpp"
#include "lerchlab/types.hpp"

namespace lerchlab {

Sign::Sign(int v) : v_(v) {
  if (v != 1 && v != -1) {
    throw ParameterError("sign must be +1 or -1, got " + std::to_string(v));
  }
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ParameterError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParameterError("expected an exact rational \"num/den\", got \"" + std::string(whole) + "\"");
  }
  return v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text), 1);
  return Rational(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& x, const Rational& y) {
  return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}
Rational operator-(const Rational& x, const Rational& y) {
  return Rational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
}
Rational operator*(const Rational& x, const Rational& y) {
  return Rational(x.num_ * y.num_, x.den_ * y.den_);
}
Rational operator/(const Rational& x, const Rational& y) {
  return Rational(x.num_ * y.den_, x.den_ * y.num_);
}
bool operator<(const Rational& x, const Rational& y) {
  return x.num_ * y.den_ < y.num_ * x.den_;
}

}  // namespace lerchlab
