#include "jordan/uhsl2/uhsl2.hpp"

#include <stdexcept>
#include <string>

#include "jordan/sl2/sl2.hpp"

namespace jordan::uhsl2 {

namespace {

// (h/2)^(2k) / (2k+1) etc. share this shape.
HPoly half_h_power(int power, const BigRational& scale) {
  return HPoly::monomial(Radical(scale / BigRational(BigInt(BigInt(1) << static_cast<unsigned>(power)))), power);
}

}  // namespace

PolyMatrix h_matrix(HalfInt j) {
  std::vector<HPoly> diag;
  for (int i = 0; i < dimension(j); ++i) diag.emplace_back(static_cast<long>(weight_at(j, i).twice()));
  return PolyMatrix::diagonal(diag);
}

PolyMatrix x_matrix(HalfInt j) {
  const int n = dimension(j);
  PolyMatrix out(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    // X v_m = sum_k (h/2)^{2k}/(2k+1) v_{m+1+2k}, the target index staying below n
    for (int k = 0; i + 1 + 2 * k < n; ++k) {
      out(static_cast<std::size_t>(i + 1 + 2 * k), static_cast<std::size_t>(i)) =
          half_h_power(2 * k, BigRational(BigInt(1), BigInt(2 * k + 1)));
    }
  }
  return out;
}

PolyMatrix y_matrix(HalfInt j) {
  const int n = dimension(j);
  const int tj = j.twice();
  PolyMatrix out(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  const auto at = [&](int r, int c) -> HPoly& { return out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)); };
  for (int i = 0; i < n; ++i) {
    const int tm = weight_at(j, i).twice();
    const long plus = (tj + tm) / 2;   // j + m
    const long minus = (tj - tm) / 2;  // j - m
    if (i > 0) at(i - 1, i) += HPoly(plus * (minus + 1));
    if (i + 1 < n) at(i + 1, i) += half_h_power(2, BigRational(-minus * (plus + 1)));
    // s-sum: (h/2)^{2s} v_{m-1+2s}; at s = 1 it lands on v_{m+1} again
    for (int s = 1; i - 1 + 2 * s < n; ++s) at(i - 1 + 2 * s, i) += half_h_power(2 * s, BigRational(1));
  }
  return out;
}

UhRep uh_rep(HalfInt j) { return UhRep{j, h_matrix(j), x_matrix(j), y_matrix(j)}; }

int nilpotency_index(const PolyMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("nilpotency_index: matrix is not square");
  PolyMatrix power = PolyMatrix::identity(m.rows());
  for (std::size_t k = 0; k <= m.rows(); ++k) {
    if (power.is_zero()) return static_cast<int>(k);
    power = power * m;
  }
  throw std::invalid_argument("matrix is not nilpotent: no power up to the dimension vanishes");
}

PolyMatrix nilpotent_series(const PolyMatrix& m, const SeriesCoeff& coeff) {
  if (!m.is_square()) throw std::invalid_argument("nilpotent_series: matrix is not square");
  PolyMatrix sum(m.rows(), m.cols());
  PolyMatrix power = PolyMatrix::identity(m.rows());
  for (std::size_t k = 0;; ++k) {
    if (power.is_zero()) return sum;
    if (k == m.rows()) throw std::invalid_argument("nilpotent_series: matrix is not nilpotent");
    const HPoly c = coeff(static_cast<int>(k));
    if (!c.is_zero()) sum += power * c;
    power = power * m;
  }
}

HPoly exp_coeff(int k, int sign) {
  const BigRational s(BigInt((sign < 0 && k % 2 == 1) ? -1 : 1), factorial(static_cast<unsigned>(k)));
  return HPoly::monomial(Radical(s), k);
}

HPoly sinh_over_h_coeff(int k) {
  if (k % 2 == 0) return {};
  return HPoly::monomial(Radical(BigRational(BigInt(1), factorial(static_cast<unsigned>(k)))), k - 1);
}

HPoly cosh_coeff(int k) {
  if (k % 2 == 1) return {};
  return HPoly::monomial(Radical(BigRational(BigInt(1), factorial(static_cast<unsigned>(k)))), k);
}

HPoly cosh_half_coeff(int k) {
  if (k % 2 == 1) return {};
  return half_h_power(k, BigRational(BigInt(1), factorial(static_cast<unsigned>(k))));
}

std::vector<BigRational> tanh_taylor(int order) {
  const auto n = static_cast<std::size_t>(order + 1);
  std::vector<BigRational> sinh(n), cosh(n), tanh(n);
  for (std::size_t k = 0; k < n; ++k) {
    const BigRational inv_fact(BigInt(1), factorial(static_cast<unsigned>(k)));
    (k % 2 == 0 ? cosh : sinh)[k] = inv_fact;
  }
  // cosh * tanh = sinh with cosh_0 = 1
  for (std::size_t k = 0; k < n; ++k) {
    BigRational t = sinh[k];
    for (std::size_t i = 1; i <= k; ++i) t -= cosh[i] * tanh[k - i];
    tanh[k] = t;
  }
  return tanh;
}

HPoly tanh_half_scaled_coeff(int k) {
  if (k % 2 == 0) return {};
  const BigRational t = tanh_taylor(k)[static_cast<std::size_t>(k)];
  // (2/h) t_k (hX/2)^k = t_k (h/2)^{k-1} X^k
  return half_h_power(k - 1, t);
}

HPoly geometric_half_coeff(int k, int sign) {
  return half_h_power(k, BigRational((sign < 0 && k % 2 == 1) ? -1L : 1L));
}

PolyMatrix exp_hx(const PolyMatrix& x, int sign) {
  return nilpotent_series(x, [sign](int k) { return exp_coeff(k, sign); });
}

PolyMatrix sinh_hx_over_h(const PolyMatrix& x) { return nilpotent_series(x, sinh_over_h_coeff); }
PolyMatrix cosh_hx(const PolyMatrix& x) { return nilpotent_series(x, cosh_coeff); }
PolyMatrix cosh_half_hx(const PolyMatrix& x) { return nilpotent_series(x, cosh_half_coeff); }

ZPair z_from_xy(const PolyMatrix& x, const PolyMatrix& y) {
  const int top = nilpotency_index(x);
  const auto tanh = tanh_taylor(top);
  PolyMatrix zplus = nilpotent_series(x, [&tanh](int k) {
    if (k % 2 == 0) return HPoly{};
    return half_h_power(k - 1, tanh[static_cast<std::size_t>(k)]);
  });
  const PolyMatrix c = cosh_half_hx(x);
  return ZPair{std::move(zplus), c * y * c};
}

ZPair z_from_xy(const UhRep& rep) { return z_from_xy(rep.x, rep.y); }

PolyMatrix exp_hx_from_zplus(const PolyMatrix& zplus) {
  const PolyMatrix one = PolyMatrix::identity(zplus.rows());
  const PolyMatrix inverse = nilpotent_series(zplus, [](int k) { return geometric_half_coeff(k, 1); });
  return (one + zplus * half_h_power(1, BigRational(1))) * inverse;
}

Report verify_relations(const PolyMatrix& h, const PolyMatrix& x, const PolyMatrix& y) {
  Report r;
  r.add_matrix("[H,X]=2sinh(hX)/h", commutator(h, x), sinh_hx_over_h(x) * HPoly(2L));
  r.add_matrix("[X,Y]=H", commutator(x, y), h);
  const PolyMatrix c = cosh_hx(x);
  r.add_matrix("[H,Y]=-Ycosh(hX)-cosh(hX)Y", commutator(h, y), -(y * c) - c * y);
  return r;
}

Report verify_uh_relations(const UhRep& rep) { return verify_relations(rep.h, rep.x, rep.y); }
Report verify_uh_relations(HalfInt j) { return verify_uh_relations(uh_rep(j)); }

Report verify_nonlinear_map(const UhRep& rep) {
  Report r;
  const auto classical = sl2::sl2_matrices(rep.j, sl2::Flavor::V);
  const auto z = z_from_xy(rep);
  r.add_matrix("Z+=(2/h)tanh(hX/2)", z.zplus, classical.zplus);
  r.add_matrix("Z-=cosh(hX/2)Ycosh(hX/2)", z.zminus, classical.zminus);
  r.add_matrix("e^{hX}=(1+hZ+/2)(1-hZ+/2)^{-1}", exp_hx_from_zplus(z.zplus), exp_hx(rep.x));
  return r;
}

Report verify_nonlinear_map(HalfInt j) { return verify_nonlinear_map(uh_rep(j)); }

}  // namespace jordan::uhsl2
