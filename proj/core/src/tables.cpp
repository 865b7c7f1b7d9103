#include <array>
#include <string>

#include "lerchlab/errors.hpp"
#include "lerchlab/specfun.hpp"

namespace lerchlab::specfun {

namespace {

BigInt binomial(int n, int k) {
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

// B_m = -1/(m+1) sum_{k<m} C(m+1,k) B_k.
const std::vector<BigRational>& full_bernoulli() {
  static const std::vector<BigRational> table = [] {
    const int top = 2 * kMaxBernoulliM;
    std::vector<BigRational> b(top + 1);
    b[0] = 1;
    for (int m = 1; m <= top; ++m) {
      BigRational acc = 0;
      for (int k = 0; k < m; ++k) {
        if (k > 1 && k % 2 == 1) continue;
        acc += BigRational(binomial(m + 1, k)) * b[k];
      }
      b[m] = -acc / (m + 1);
    }
    return b;
  }();
  return table;
}

// sum_{k=0}^{n} C(2n, 2k) E_{2k} = 0 for n >= 1.
const std::vector<BigInt>& full_euler() {
  static const std::vector<BigInt> table = [] {
    const int top = 2 * kMaxEulerM;
    std::vector<BigInt> e(top + 1, 0);
    e[0] = 1;
    for (int n = 1; 2 * n <= top; ++n) {
      BigInt acc = 0;
      for (int k = 0; k < n; ++k) acc += binomial(2 * n, 2 * k) * e[2 * k];
      e[2 * n] = -acc;
    }
    return e;
  }();
  return table;
}

}  // namespace

BernoulliTable bernoulli_numbers(int M) {
  if (M < 1 || M > kMaxBernoulliM) {
    throw ParameterError("bernoulli_numbers: M must lie in [1, 64], got " + std::to_string(M));
  }
  const auto& all = full_bernoulli();
  return BernoulliTable{{all.begin(), all.begin() + 2 * M + 1}};
}

EulerNumberTable euler_numbers(int M) {
  if (M < 0 || M > kMaxEulerM) {
    throw ParameterError("euler_numbers: M must lie in [0, 32], got " + std::to_string(M));
  }
  const auto& all = full_euler();
  return EulerNumberTable{{all.begin(), all.begin() + 2 * M + 1}};
}

double bernoulli(int k) {
  static const auto table = [] {
    std::array<double, 2 * kMaxBernoulliM + 1> d{};
    const auto& b = full_bernoulli();
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = static_cast<double>(b[i]);
    return d;
  }();
  if (k < 0 || k > 2 * kMaxBernoulliM) throw ParameterError("bernoulli index out of range");
  return table[static_cast<std::size_t>(k)];
}

double euler_number(int k) {
  static const auto table = [] {
    std::array<double, 2 * kMaxEulerM + 1> d{};
    const auto& e = full_euler();
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = static_cast<double>(e[i]);
    return d;
  }();
  if (k < 0 || k > 2 * kMaxEulerM) throw ParameterError("euler index out of range");
  return table[static_cast<std::size_t>(k)];
}

}  // namespace lerchlab::specfun
