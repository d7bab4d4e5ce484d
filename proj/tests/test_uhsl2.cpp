#include <doctest.h>

#include "jordan/sl2/sl2.hpp"
#include "jordan/uhsl2/uhsl2.hpp"

using namespace jordan;
using namespace jordan::uhsl2;

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

// Power sum built here, not through the library series helper.
PolyMatrix power_sum(const PolyMatrix& m, const std::function<HPoly(int)>& coeff, int terms) {
  PolyMatrix out(m.rows(), m.cols()), power = PolyMatrix::identity(m.rows());
  for (int k = 0; k < terms; ++k) {
    out += power * coeff(k);
    power = power * m;
  }
  return out;
}

HPoly half_h_pow_over(int k, long den) { return q(1, den * (1L << k), k); }

long factorial_long(int k) { return k <= 1 ? 1 : k * factorial_long(k - 1); }

// X from the inverse nonlinear map: (2/h) artanh(h Z+/2) = sum (h/2)^{2k} Z+^{2k+1}/(2k+1).
PolyMatrix x_oracle(HalfInt j) {
  const PolyMatrix zp = sl2::sl2_matrices(j, sl2::Flavor::V).zplus;
  const int n = j.twice() + 1;
  return power_sum(zp, [](int k) { return k % 2 == 1 ? half_h_pow_over(k - 1, k) : HPoly(); }, n + 1);
}

// Y = sech(hX/2) Z- sech(hX/2).
PolyMatrix y_oracle(HalfInt j) {
  const PolyMatrix x = x_oracle(j);
  const PolyMatrix zm = sl2::sl2_matrices(j, sl2::Flavor::V).zminus;
  const int n = j.twice() + 1;
  const PolyMatrix c =
      power_sum(x, [](int k) { return k % 2 == 0 ? half_h_pow_over(k, factorial_long(k)) : HPoly(); }, n + 1);
  const PolyMatrix ci = unipotent_inverse(c.transpose()).transpose();
  return ci * zm * ci;
}

}  // namespace

TEST_CASE("golden j = 2 matrices, descending display") {
  const HPoly z, one(1L), h2 = q(1, 12, 2);
  const PolyMatrix x_golden = from_rows({{z, one, z, h2, z},
                                        {z, z, one, z, h2},
                                        {z, z, z, one, z},
                                        {z, z, z, z, one},
                                        {z, z, z, z, z}});
  const HPoly a = q(-3, 4, 2), b = q(-5, 4, 2), c = q(1, 16, 4);
  const PolyMatrix y_golden = from_rows({{z, a, z, c, z},
                                        {HPoly(4L), z, b, z, c},
                                        {z, HPoly(6L), z, b, z},
                                        {z, z, HPoly(6L), z, a},
                                        {z, z, z, HPoly(4L), z}});
  CHECK(x_matrix(hi(4)).reversed() == x_golden);
  CHECK(y_matrix(hi(4)).reversed() == y_golden);
  CHECK(h_matrix(hi(4)).reversed() == PolyMatrix::diagonal({4L, 2L, 0L, -2L, -4L}));
  CHECK(verify_relations(h_matrix(hi(4)), x_golden.reversed(), y_golden.reversed()).passed());
}

TEST_CASE("small cases") {
  CHECK(y_matrix(hi(0)) == PolyMatrix(1, 1));
  CHECK(h_matrix(hi(0)) == PolyMatrix(1, 1));
  const PolyMatrix x = x_matrix(hi(1));
  CHECK(x(1, 0) == HPoly(1L));
  CHECK(x(0, 1).is_zero());
  CHECK(x(0, 0).is_zero());
  PolyMatrix t = PolyMatrix::identity(2);
  t(1, 0) = HPoly::h();
  CHECK(exp_hx(x) == t);
  CHECK(nilpotent_series(x, tanh_half_scaled_coeff) == x);
  const auto z = z_from_xy(uh_rep(hi(1)));
  CHECK(z.zplus == sl2::sl2_matrices(hi(1), sl2::Flavor::V).zplus);
  CHECK(z.zminus == sl2::sl2_matrices(hi(1), sl2::Flavor::V).zminus);
  CHECK(verify_uh_relations(hi(1)).passed());
}

TEST_CASE("tanh coefficients") {
  const auto t = tanh_taylor(7);
  REQUIRE(t.size() == 8);
  CHECK(t[0].is_zero());
  CHECK(t[1] == BigRational(1L));
  CHECK(t[3] == BigRational(BigInt(-1), BigInt(3)));
  CHECK(t[5] == BigRational(BigInt(2), BigInt(15)));
  CHECK(t[7] == BigRational(BigInt(-17), BigInt(315)));
  CHECK(t[6].is_zero());
}

TEST_CASE("closed forms agree with the inverse nonlinear map") {
  for (int t = 0; t <= 8; ++t) {
    CAPTURE(t);
    CHECK(x_matrix(hi(t)) == x_oracle(hi(t)));
    CHECK(y_matrix(hi(t)) == y_oracle(hi(t)));
  }
}

TEST_CASE("structure of the representation matrices") {
  for (int t = 0; t <= 8; ++t) {
    CAPTURE(t);
    const HalfInt j = hi(t);
    const UhRep rep = uh_rep(j);
    const auto classical = sl2::sl2_matrices(j, sl2::Flavor::V);
    CHECK(rep.x.eval_at_zero() == classical.zplus);
    CHECK(rep.y.eval_at_zero() == classical.zminus);
    CHECK(rep.h == classical.h);
    HPoly trace;
    for (std::size_t i = 0; i < rep.h.rows(); ++i) trace += rep.h(i, i);
    CHECK(trace.is_zero());
    CHECK(nilpotency_index(rep.x) == (t == 0 ? 1 : t + 1));
    CHECK(exp_hx(rep.x, 1) * exp_hx(rep.x, -1) == PolyMatrix::identity(rep.x.rows()));
    if (t >= 1) {
      // 2 floor((2j-1)/2) and 2 floor((2j+1)/2)
      CHECK(rep.x.max_degree() == 2 * ((t - 1) / 2));
      CHECK(rep.y.max_degree() <= 2 * ((t + 1) / 2));
      if (t >= 2) CHECK(rep.y.max_degree() == 2 * ((t + 1) / 2));
    }
  }
  // j = 1/2: the h^2 contributions to Y v_{1/2} cancel, j = 0: Y = 0.
  CHECK(y_matrix(hi(1)).max_degree() == 0);
  CHECK(y_matrix(hi(0)).max_degree() == HPoly::kZeroDegree);
}

TEST_CASE("defining relations and the nonlinear map") {
  for (int t = 0; t <= 8; ++t) {
    CAPTURE(t);
    const Report r = verify_uh_relations(hi(t));
    CHECK(r.passed());
    CHECK(r.checks.size() == 3);
    const Report n = verify_nonlinear_map(hi(t));
    CHECK(n.passed());
    const UhRep rep = uh_rep(hi(t));
    CHECK(exp_hx_from_zplus(z_from_xy(rep).zplus) == exp_hx(rep.x));
  }
}

TEST_CASE("verifiers catch corruption") {
  UhRep rep = uh_rep(hi(4));
  rep.x(3, 0) = rep.x(3, 0) + HPoly::h();
  const Report r = verify_uh_relations(rep);
  CHECK_FALSE(r.passed());
  const Check* xy = r.find("[X,Y]=H");
  REQUIRE(xy);
  CHECK_FALSE(xy->pass);
  CHECK(xy->detail.find("entry (") != std::string::npos);

  UhRep flipped = uh_rep(hi(3));
  flipped.y(0, 1) = -flipped.y(0, 1);
  CHECK_FALSE(verify_relations(flipped.h, flipped.x, flipped.y).passed());
  CHECK_FALSE(verify_nonlinear_map(flipped).passed());
}

TEST_CASE("series need nilpotent input") {
  PolyMatrix m = PolyMatrix::identity(2);
  CHECK_THROWS_AS(nilpotency_index(m), std::invalid_argument);
  CHECK_THROWS_AS(nilpotent_series(m, cosh_coeff), std::invalid_argument);
  CHECK(nilpotency_index(PolyMatrix(3, 3)) == 1);
}
