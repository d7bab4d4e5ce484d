#pragma once

#include <cstdint>
#include <functional>
#include <utility>

#include "jordan/exact/half_int.hpp"
#include "jordan/exact/poly_matrix.hpp"
#include "jordan/report.hpp"

// Two-fold tensor products V(j1) (x) V(j2) in the v (x) v basis.
namespace jordan::tensor {

/// (m1, m2) <-> flat index, lexicographic ascending: flat = i1 * dim(j2) + i2.
class TensorIndex {
 public:
  TensorIndex(HalfInt j1, HalfInt j2);

  HalfInt j1() const { return j1_; }
  HalfInt j2() const { return j2_; }
  std::size_t size() const { return static_cast<std::size_t>(d1_ * d2_); }
  std::size_t flat(HalfInt m1, HalfInt m2) const;
  std::pair<HalfInt, HalfInt> labels(std::size_t flat) const;
  bool contains(HalfInt m1, HalfInt m2) const { return is_weight_of(j1_, m1) && is_weight_of(j2_, m2); }

 private:
  HalfInt j1_;
  HalfInt j2_;
  int d1_;
  int d2_;
};

/// Rising factorial (a)_n; (a)_0 = 1.
BigRational pochhammer(const BigRational& a, int n);

/// (-2m1-k)_l (-2m2-l)_k / (k! l!) for k, l >= 0, otherwise 0.
BigRational b_coeff(HalfInt m1, HalfInt m2, int k, int l);

/// (-1)^k (h/2)^{k+l} (b_{k,l} - b_{k-1,l-1}).
HPoly a_coeff(HalfInt m1, HalfInt m2, int k, int l);

/// Row (m1, m2) holds w_{m1,m2} = sum a^{m1,m2}_{k,l} v_{m1+k} (x) v_{m2+l}
/// over k <= j1 - m1, l <= j2 - m2.
struct WBasis {
  HalfInt j1;
  HalfInt j2;
  PolyMatrix matrix;
};

WBasis w_basis(HalfInt j1, HalfInt j2);

enum class Generator { H, X, Y, Zplus, Zminus };

const char* generator_name(Generator g);

/// All coproducts on one tensor space. Z+ and Z- come from the nonlinear map
/// applied to Delta(X), Delta(Y), which is nilpotent on the finite space.
struct Coproducts {
  PolyMatrix h;
  PolyMatrix x;
  PolyMatrix y;
  PolyMatrix zplus;
  PolyMatrix zminus;

  const PolyMatrix& operator[](Generator g) const;
};

Coproducts coproducts(HalfInt j1, HalfInt j2);
PolyMatrix coproduct_matrix(Generator gen, HalfInt j1, HalfInt j2);

/// Lie coproduct g (x) 1 + 1 (x) g of the classical v-basis matrices; g in {H, Zplus, Zminus}.
PolyMatrix classical_coproduct(Generator gen, HalfInt j1, HalfInt j2);

/// Delta(H), Delta(Z+), Delta(Z-) on every w-vector against the classical action;
/// out-of-range w-vectors count as zero.
Report verify_w_action(const WBasis& w);
Report verify_w_action(HalfInt j1, HalfInt j2);

/// w-basis conjugation turns Delta(H), Delta(Z+), Delta(Z-) into the classical Lie coproducts.
Report verify_classical_conjugation(HalfInt j1, HalfInt j2);

/// The U_h(sl(2)) relations transported through Delta.
Report verify_coproduct_relations(HalfInt j1, HalfInt j2);

/// unipotent_inverse(W) == skew_transpose(W), plus the index-level sum
/// sum_n a^{m}_{n-m} a^{-M}_{M-n} = delta_{m,M} for every (m, M).
Report verify_skew_inverse(const WBasis& w);
Report verify_skew_inverse(HalfInt j1, HalfInt j2);

/// Summand of the two-variable identity at (k, l), both rational prefactors included.
BigRational xy_summand(const BigRational& x, const BigRational& y, int big_k, int big_l, int k, int l);

using XySummand = std::function<BigRational(const BigRational&, const BigRational&, int, int, int, int)>;

/// Double sum over 0 <= k <= K, 0 <= l <= L.
BigRational xy_sum(const BigRational& x, const BigRational& y, int big_k, int big_l, const XySummand& summand = xy_summand);

struct XyIdentityResult {
  int big_k = 0;
  int big_l = 0;
  std::uint64_t seed = 0;
  int samples = 0;
  int redraws = 0;
  /// After clearing denominators the identity is polynomial with these degree bounds.
  int degree_x = 0;
  int degree_y = 0;
  /// Every point of a (degree_x+1) x (degree_y+1) grid agreed, which proves the identity.
  bool grid_certificate = false;
  Report report;

  bool passed() const { return report.passed(); }
};

/// Evaluates the sum at `samples` seeded random points x, y = n/7 with n in [1, 10^4]
/// and on a full degree-bound grid; expects delta_{K,0} delta_{L,0} everywhere.
XyIdentityResult xy_identity_check(int big_k, int big_l, int samples, std::uint64_t seed,
                                   const XySummand& summand = xy_summand);

}  // namespace jordan::tensor
