#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace lerchlab {

// A sign in {+1, -1}. Used for the Lerch base c and the sign parameters a, b.
class Sign {
 public:
  constexpr Sign() = default;
  // Throws ParameterError unless v is +1 or -1.
  explicit Sign(int v);

  static constexpr Sign plus() { return Sign(Raw{1}); }
  static constexpr Sign minus() { return Sign(Raw{-1}); }

  constexpr int value() const { return v_; }
  constexpr bool is_plus() const { return v_ > 0; }
  constexpr double as_double() const { return static_cast<double>(v_); }

  // s^k for any integer k.
  constexpr Sign pow(long long k) const {
    return (v_ > 0 || k % 2 == 0) ? plus() : minus();
  }

  friend constexpr Sign operator*(Sign x, Sign y) { return Sign(Raw{x.v_ * y.v_}); }
  friend constexpr Sign operator-(Sign x) { return Sign(Raw{-x.v_}); }
  friend constexpr bool operator==(Sign x, Sign y) = default;

 private:
  struct Raw {
    int v;
  };
  constexpr explicit Sign(Raw r) : v_(r.v) {}

  int v_ = 1;
};

// (-1)^k as a Sign.
constexpr Sign parity(long long k) { return Sign::minus().pow(k); }

// Exact rational num/den held in lowest terms with den > 0.
class Rational {
 public:
  constexpr Rational() = default;
  // Throws ParameterError for a zero denominator.
  Rational(std::int64_t num, std::int64_t den = 1);

  // Parses "num/den" or an integer "num". Decimal text is rejected.
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  bool is_one() const { return num_ == den_; }
  bool positive() const { return num_ > 0; }

  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);
  friend bool operator==(const Rational& x, const Rational& y) = default;
  friend bool operator<(const Rational& x, const Rational& y);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// A real value with a nonnegative error estimate (0 when analytically exact).
struct RealScalar {
  double value = 0.0;
  double err = 0.0;
};

}  // namespace lerchlab
