#include <doctest.h>

#include "jordan/sl2/sl2.hpp"
#include "jordan/tensor/tensor.hpp"
#include "jordan/uhsl2/uhsl2.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace jordan;
using namespace jordan::tensor;
using namespace oracle;

namespace {

HalfInt hi(int twice) { return HalfInt::from_twice(twice); }
HPoly q(long n, long d, int power = 0) { return HPoly::monomial(Radical(BigRational(BigInt(n), BigInt(d))), power); }

PolyMatrix from_rows(const std::vector<std::vector<HPoly>>& rows) {
  PolyMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

BigRational summand_oracle(const BigRational& x, const BigRational& y, int K, int L, int k, int l) {
  auto poch = [](BigRational a, int n) {
    BigRational out(1L);
    for (int i = 0; i < n; ++i) out *= a + BigRational(static_cast<long>(i));
    return out;
  };
  const BigRational bk(static_cast<long>(k)), bl(static_cast<long>(l));
  const BigRational BK(static_cast<long>(K)), BL(static_cast<long>(L));
  BigRational t = poch(-x - bk, l) * poch(-y - bl, k) / (fact(k) * fact(l));
  t *= poch(x + BK + bk, L - l) * poch(y + BL + bl, K - k) / (fact(K - k) * fact(L - l));
  t *= (x * y + bl * x + bk * y) / ((x + bk) * (y + bl));
  t *= (x * y + BL * x + BK * y + bl * x + bk * y + BigRational(2L) * BK * bl + BigRational(2L) * bk * BL) /
       ((x + BK + bk) * (y + BL + bl));
  return t;
}

}  // namespace

TEST_CASE("pochhammer and b coefficients") {
  CHECK(pochhammer(BigRational(BigInt(7), BigInt(3)), 0) == BigRational(1L));
  CHECK(pochhammer(BigRational(2L), 1) == BigRational(2L));
  CHECK(pochhammer(BigRational(-3L), 5).is_zero());
  CHECK_THROWS_AS(pochhammer(BigRational(1L), -1), std::invalid_argument);
  for (long a = -6; a <= 6; ++a) {
    for (long n = 0; n <= 6; ++n) CHECK(pochhammer(BigRational(a), static_cast<int>(n)) == poch_int(a, n));
  }
  CHECK(b_coeff(hi(3), hi(-5), 0, 0) == BigRational(1L));
  CHECK(b_coeff(hi(-2), hi(-1), 0, 1) == BigRational(2L));
  CHECK(b_coeff(hi(1), hi(1), -1, 0).is_zero());
  for (int t1 = -6; t1 <= 6; ++t1) {
    for (int t2 = -6; t2 <= 6; ++t2) {
      for (int k = -1; k <= 4; ++k) {
        for (int l = -1; l <= 4; ++l) CHECK(b_coeff(hi(t1), hi(t2), k, l) == b_oracle(hi(t1), hi(t2), k, l));
      }
    }
  }
}

TEST_CASE("a coefficients") {
  CHECK(a_coeff(hi(5), hi(-3), 0, 0) == HPoly(1L));
  CHECK(a_coeff(hi(-2), hi(-1), 0, 1) == HPoly::h());
  CHECK(a_coeff(hi(-2), hi(-1), 1, 1) == q(1, 4, 2));
  CHECK(a_coeff(hi(-2), hi(-1), -1, 0).is_zero());
  for (int t1 = -6; t1 <= 6; t1 += 1) {
    for (int t2 = -5; t2 <= 5; ++t2) {
      for (int k = 0; k <= 4; ++k) {
        for (int l = 0; l <= 4; ++l) CHECK(a_coeff(hi(t1), hi(t2), k, l) == a_oracle(hi(t1), hi(t2), k, l));
      }
    }
  }
}

TEST_CASE("golden w-basis for V(1) x V(1/2)") {
  const HPoly z, one(1L), h = HPoly::h();
  const PolyMatrix w_golden = from_rows({{one, h, q(-1, 2, 1), q(1, 4, 2), q(1, 4, 2), q(-1, 8, 3)},
                                        {z, one, z, q(1, 2, 1), z, z},
                                        {z, z, one, z, q(-1, 2, 1), q(1, 4, 2)},
                                        {z, z, z, one, z, q(1, 2, 1)},
                                        {z, z, z, z, one, -h},
                                        {z, z, z, z, z, one}});
  const PolyMatrix inv_golden = from_rows({{one, -h, q(1, 2, 1), q(1, 4, 2), z, q(-1, 8, 3)},
                                          {z, one, z, q(-1, 2, 1), z, q(1, 4, 2)},
                                          {z, z, one, z, q(1, 2, 1), q(1, 4, 2)},
                                          {z, z, z, one, z, q(-1, 2, 1)},
                                          {z, z, z, z, one, h},
                                          {z, z, z, z, z, one}});
  const WBasis w = w_basis(hi(2), hi(1));
  CHECK(w.matrix == w_golden);
  CHECK(unipotent_inverse(w_golden) == inv_golden);
  CHECK(skew_transpose(w_golden) == inv_golden);
  CHECK(w_basis(hi(0), hi(0)).matrix == PolyMatrix::identity(1));
  CHECK(verify_skew_inverse(w).passed());
}

TEST_CASE("w-basis against the direct construction") {
  for (int t1 = 0; t1 <= 6; ++t1) {
    for (int t2 = 0; t2 <= 6; ++t2) {
      CAPTURE(t1);
      CAPTURE(t2);
      const PolyMatrix w = w_basis(hi(t1), hi(t2)).matrix;
      CHECK(w == w_oracle(hi(t1), hi(t2)));
      CHECK(w.is_upper_unipotent());
      CHECK(w.eval_at_zero() == PolyMatrix::identity(w.rows()));
    }
  }
}

TEST_CASE("tensor index") {
  const TensorIndex idx(hi(2), hi(1));
  CHECK(idx.size() == 6);
  CHECK(idx.flat(hi(0), hi(-1)) == 2);
  CHECK(idx.labels(5) == std::pair{hi(2), hi(1)});
  CHECK_FALSE(idx.contains(hi(4), hi(1)));
}

TEST_CASE("coproducts") {
  const PolyMatrix dx = coproduct_matrix(Generator::X, hi(1), hi(1));
  const PolyMatrix x = uhsl2::x_matrix(hi(1));
  CHECK(dx == kronecker(x, PolyMatrix::identity(2)) + kronecker(PolyMatrix::identity(2), x));
  CHECK(dx.max_degree() == 0);
  for (int t1 = 0; t1 <= 4; ++t1) {
    for (int t2 = 0; t2 <= 4; ++t2) {
      const PolyMatrix hh = coproduct_matrix(Generator::H, hi(t1), hi(t2));
      CHECK(hh.eval_at_zero() == classical_coproduct(Generator::H, hi(t1), hi(t2)));
      const auto r1 = uhsl2::uh_rep(hi(t1));
      const auto r2 = uhsl2::uh_rep(hi(t2));
      const PolyMatrix t_1 = uhsl2::exp_hx(r1.x), ti_1 = uhsl2::exp_hx(r1.x, -1);
      const PolyMatrix t_2 = uhsl2::exp_hx(r2.x);
      CHECK(hh == kronecker(r1.h, t_2) + kronecker(ti_1, r2.h));
      CHECK(coproduct_matrix(Generator::Y, hi(t1), hi(t2)) == kronecker(r1.y, t_2) + kronecker(ti_1, r2.y));
    }
  }
}

TEST_CASE("w-vectors diagonalize Delta(H)") {
  const PolyMatrix p = w_basis(hi(2), hi(1)).matrix.transpose();
  const PolyMatrix dh = coproduct_matrix(Generator::H, hi(2), hi(1));
  const PolyMatrix eig = PolyMatrix::diagonal({-3L, -1L, -1L, 1L, 1L, 3L});
  CHECK(dh * p == p * eig);
}

TEST_CASE("action and conjugation") {
  for (int t1 = 0; t1 <= 4; ++t1) {
    for (int t2 = 0; t2 <= 4; ++t2) {
      CAPTURE(t1);
      CAPTURE(t2);
      CHECK(verify_w_action(hi(t1), hi(t2)).passed());
      CHECK(verify_classical_conjugation(hi(t1), hi(t2)).passed());
      const PolyMatrix p = w_basis(hi(t1), hi(t2)).matrix.transpose();
      const PolyMatrix pi = unipotent_inverse(p.transpose()).transpose();
      for (Generator g : {Generator::H, Generator::Zplus, Generator::Zminus}) {
        CHECK(pi * coproduct_matrix(g, hi(t1), hi(t2)) * p == classical_coproduct(g, hi(t1), hi(t2)));
      }
    }
  }
}

TEST_CASE("coproduct relations") {
  for (int t1 = 0; t1 <= 4; ++t1) {
    for (int t2 = 0; t2 <= 4; ++t2) CHECK(verify_coproduct_relations(hi(t1), hi(t2)).passed());
  }
}

TEST_CASE("w-action check is not vacuous") {
  WBasis w = w_basis(hi(2), hi(1));
  w.matrix(0, 1) = -w.matrix(0, 1);
  const Report r = verify_w_action(w);
  CHECK_FALSE(r.passed());
  const Check* dh = r.find("Delta(H)w=2(m1+m2)w");
  REQUIRE(dh);
  CHECK_FALSE(dh->pass);
  CHECK(dh->detail.find("w(m1,m2)=(-1,-1/2)") != std::string::npos);
}

TEST_CASE("skew inverse") {
  for (int t1 = 0; t1 <= 6; ++t1) {
    for (int t2 = 0; t2 <= 6; ++t2) CHECK(verify_skew_inverse(hi(t1), hi(t2)).passed());
  }
  WBasis w = w_basis(hi(2), hi(2));
  w.matrix(1, 4) = w.matrix(1, 4) + q(1, 3, 2);
  const Report r = verify_skew_inverse(w);
  CHECK_FALSE(r.passed());
  CHECK(r.first_failure().find("entry (") != std::string::npos);
}

TEST_CASE("two-variable identity") {
  CHECK(xy_sum(BigRational(3L), BigRational(5L), 0, 0) == BigRational(1L));
  CHECK(xy_summand(BigRational(3L), BigRational(5L), 1, 0, 0, 0) == BigRational(5L));
  CHECK(xy_summand(BigRational(3L), BigRational(5L), 1, 0, 1, 0) == BigRational(-5L));
  CHECK(xy_sum(BigRational(3L), BigRational(5L), 1, 0).is_zero());
  for (int i = 0; i < 40; ++i) {
    const BigRational x(BigInt(testgen::uniform(1, 10000)), BigInt(7));
    const BigRational y(BigInt(testgen::uniform(1, 10000)), BigInt(7));
    const int K = static_cast<int>(testgen::uniform(0, 4)), L = static_cast<int>(testgen::uniform(0, 4));
    for (int k = 0; k <= K; ++k) {
      for (int l = 0; l <= L; ++l) CHECK(xy_summand(x, y, K, L, k, l) == summand_oracle(x, y, K, L, k, l));
    }
    CHECK(xy_sum(x, y, K, L) == BigRational((K == 0 && L == 0) ? 1L : 0L));
  }
  const XyIdentityResult r = xy_identity_check(2, 2, 100, 99);
  CHECK(r.passed());
  CHECK(r.samples == 100);
  CHECK(r.seed == 99);
  CHECK(r.grid_certificate);
  CHECK(xy_identity_check(0, 0, 10, 1).passed());
}

TEST_CASE("two-variable identity is reproducible and not vacuous") {
  const auto a = xy_identity_check(3, 1, 20, 5);
  const auto b = xy_identity_check(3, 1, 20, 5);
  CHECK(a.report.checks.size() == b.report.checks.size());
  CHECK(a.redraws == b.redraws);
  const XySummand bad = [](const BigRational& x, const BigRational& y, int K, int L, int k, int l) {
    BigRational v = xy_summand(x, y, K, L, k, l);
    return (k == 1 && l == 0) ? v * BigRational(BigInt(1001), BigInt(1000)) : v;
  };
  const auto r = xy_identity_check(2, 1, 20, 5, bad);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.grid_certificate);
  CHECK(r.report.first_failure().find("x=") != std::string::npos);
}
