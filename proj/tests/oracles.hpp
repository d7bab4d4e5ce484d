#pragma once

#include "jordan/sl2/sl2.hpp"

// Independent constructions shared by tests.
namespace oracle {

using namespace jordan;

inline BigRational fact(long n) {
  BigRational out(1L);
  for (long k = 2; k <= n; ++k) out *= BigRational(k);
  return out;
}

// (a)_n for integer a through factorial quotients.
inline BigRational poch_int(long a, long n) {
  if (n == 0) return BigRational(1L);
  if (a > 0) return fact(a + n - 1) / fact(a - 1);
  if (n > -a) return {};
  return BigRational((n % 2 == 0) ? 1L : -1L) * fact(-a) / fact(-a - n);
}

inline BigRational b_oracle(HalfInt m1, HalfInt m2, int k, int l) {
  if (k < 0 || l < 0) return {};
  return poch_int(-m1.twice() - k, l) * poch_int(-m2.twice() - l, k) / (fact(k) * fact(l));
}

inline HPoly a_oracle(HalfInt m1, HalfInt m2, int k, int l) {
  const BigRational d = b_oracle(m1, m2, k, l) - b_oracle(m1, m2, k - 1, l - 1);
  if (d.is_zero() || k + l < 0) return {};
  BigRational c = d / BigRational(BigInt(BigInt(1) << static_cast<unsigned>(k + l)));
  if (k % 2 == 1) c = -c;
  return HPoly::monomial(Radical(c), k + l);
}

inline PolyMatrix w_oracle(HalfInt j1, HalfInt j2) {
  const auto labels = sl2::uncoupled_labels(j1, j2);
  PolyMatrix w(labels.size(), labels.size());
  for (std::size_t r = 0; r < labels.size(); ++r) {
    for (std::size_t c = 0; c < labels.size(); ++c) {
      const int k = (labels[c].first - labels[r].first).twice() / 2;
      const int l = (labels[c].second - labels[r].second).twice() / 2;
      if ((labels[c].first - labels[r].first).twice() % 2 == 0) w(r, c) = a_oracle(labels[r].first, labels[r].second, k, l);
    }
  }
  return w;
}

}  // namespace oracle
