#include "jordan/tensor/tensor.hpp"

#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "jordan/sl2/sl2.hpp"
#include "jordan/uhsl2/uhsl2.hpp"

namespace jordan::tensor {

TensorIndex::TensorIndex(HalfInt j1, HalfInt j2) : j1_(j1), j2_(j2), d1_(dimension(j1)), d2_(dimension(j2)) {}

std::size_t TensorIndex::flat(HalfInt m1, HalfInt m2) const {
  require_weight(j1_, m1);
  require_weight(j2_, m2);
  return static_cast<std::size_t>(weight_index(j1_, m1) * d2_ + weight_index(j2_, m2));
}

std::pair<HalfInt, HalfInt> TensorIndex::labels(std::size_t flat) const {
  if (flat >= size()) throw std::out_of_range("tensor index out of range");
  const int f = static_cast<int>(flat);
  return {weight_at(j1_, f / d2_), weight_at(j2_, f % d2_)};
}

BigRational pochhammer(const BigRational& a, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: negative length");
  BigRational out(1L);
  BigRational factor = a;
  for (int i = 0; i < n; ++i) {
    out *= factor;
    if (out.is_zero()) break;
    factor += BigRational(1L);
  }
  return out;
}

BigRational b_coeff(HalfInt m1, HalfInt m2, int k, int l) {
  if (k < 0 || l < 0) return {};
  // -2m1 and -2m2 are integers, so both Pochhammers stay integral.
  const BigRational first = pochhammer(BigRational(static_cast<long>(-m1.twice() - k)), l);
  if (first.is_zero()) return {};
  const BigRational second = pochhammer(BigRational(static_cast<long>(-m2.twice() - l)), k);
  return first * second / BigRational(factorial(static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(l)));
}

HPoly a_coeff(HalfInt m1, HalfInt m2, int k, int l) {
  if (k < 0 || l < 0) return {};
  BigRational c = b_coeff(m1, m2, k, l) - b_coeff(m1, m2, k - 1, l - 1);
  if (c.is_zero()) return {};
  if (k % 2 == 1) c = -c;
  const int power = k + l;
  c /= BigRational(BigInt(1) << static_cast<unsigned>(power));
  return HPoly::monomial(Radical(c), power);
}

WBasis w_basis(HalfInt j1, HalfInt j2) {
  const TensorIndex index(j1, j2);
  PolyMatrix w(index.size(), index.size());
  for (std::size_t r = 0; r < index.size(); ++r) {
    const auto [m1, m2] = index.labels(r);
    for (int k = 0; k <= (j1.twice() - m1.twice()) / 2; ++k) {
      for (int l = 0; l <= (j2.twice() - m2.twice()) / 2; ++l) {
        w(r, index.flat(m1 + k, m2 + l)) = a_coeff(m1, m2, k, l);
      }
    }
  }
  return WBasis{j1, j2, std::move(w)};
}

const char* generator_name(Generator g) {
  switch (g) {
    case Generator::H: return "H";
    case Generator::X: return "X";
    case Generator::Y: return "Y";
    case Generator::Zplus: return "Zplus";
    case Generator::Zminus: return "Zminus";
  }
  return "?";
}

const PolyMatrix& Coproducts::operator[](Generator g) const {
  switch (g) {
    case Generator::H: return h;
    case Generator::X: return x;
    case Generator::Y: return y;
    case Generator::Zplus: return zplus;
    case Generator::Zminus: return zminus;
  }
  throw std::invalid_argument("unknown generator");
}

Coproducts coproducts(HalfInt j1, HalfInt j2) {
  const auto r1 = uhsl2::uh_rep(j1);
  const auto r2 = uhsl2::uh_rep(j2);
  const auto one1 = PolyMatrix::identity(r1.h.rows());
  const auto one2 = PolyMatrix::identity(r2.h.rows());
  const auto t2 = uhsl2::exp_hx(r2.x, 1);
  const auto t1_inv = uhsl2::exp_hx(r1.x, -1);

  Coproducts out;
  out.x = kronecker(r1.x, one2) + kronecker(one1, r2.x);
  out.h = kronecker(r1.h, t2) + kronecker(t1_inv, r2.h);
  out.y = kronecker(r1.y, t2) + kronecker(t1_inv, r2.y);
  auto z = uhsl2::z_from_xy(out.x, out.y);
  out.zplus = std::move(z.zplus);
  out.zminus = std::move(z.zminus);
  return out;
}

PolyMatrix coproduct_matrix(Generator gen, HalfInt j1, HalfInt j2) {
  if (gen == Generator::X) {
    const auto x1 = uhsl2::x_matrix(j1);
    const auto x2 = uhsl2::x_matrix(j2);
    return kronecker(x1, PolyMatrix::identity(x2.rows())) + kronecker(PolyMatrix::identity(x1.rows()), x2);
  }
  return coproducts(j1, j2)[gen];
}

PolyMatrix classical_coproduct(Generator gen, HalfInt j1, HalfInt j2) {
  const auto c1 = sl2::sl2_matrices(j1, sl2::Flavor::V);
  const auto c2 = sl2::sl2_matrices(j2, sl2::Flavor::V);
  const auto pick = [gen](const sl2::Sl2Triple& t) -> const PolyMatrix& {
    switch (gen) {
      case Generator::H: return t.h;
      case Generator::Zplus: return t.zplus;
      case Generator::Zminus: return t.zminus;
      default: throw std::invalid_argument("classical_coproduct: only H, Zplus, Zminus have a classical limit here");
    }
  };
  return kronecker(pick(c1), PolyMatrix::identity(c2.h.rows())) + kronecker(PolyMatrix::identity(c1.h.rows()), pick(c2));
}

namespace {

std::string labels_of(const TensorIndex& index, std::size_t flat) {
  const auto [m1, m2] = index.labels(flat);
  return "(m1,m2)=(" + m1.to_string() + "," + m2.to_string() + ")";
}

// Column-wise comparison so a failure names the offending w-vector.
void add_columns(Report& report, const std::string& name, const TensorIndex& index, const PolyMatrix& actual,
                 const PolyMatrix& expected) {
  for (std::size_t c = 0; c < actual.cols(); ++c) {
    for (std::size_t r = 0; r < actual.rows(); ++r) {
      if (actual(r, c) != expected(r, c)) {
        report.add(name, false,
                   "w" + labels_of(index, c) + ", component " + labels_of(index, r) + ": got " +
                       actual(r, c).to_string() + ", expected " + expected(r, c).to_string());
        return;
      }
    }
  }
  report.add(name, true);
}

}  // namespace

Report verify_w_action(const WBasis& w) {
  const TensorIndex index(w.j1, w.j2);
  const Coproducts delta = coproducts(w.j1, w.j2);
  const PolyMatrix p = w.matrix.transpose();  // columns are the w-vectors
  Report r;
  add_columns(r, "Delta(H)w=2(m1+m2)w", index, delta.h * p, p * classical_coproduct(Generator::H, w.j1, w.j2));
  add_columns(r, "Delta(Z+)w", index, delta.zplus * p, p * classical_coproduct(Generator::Zplus, w.j1, w.j2));
  add_columns(r, "Delta(Z-)w", index, delta.zminus * p, p * classical_coproduct(Generator::Zminus, w.j1, w.j2));
  return r;
}

Report verify_w_action(HalfInt j1, HalfInt j2) { return verify_w_action(w_basis(j1, j2)); }

Report verify_classical_conjugation(HalfInt j1, HalfInt j2) {
  const WBasis w = w_basis(j1, j2);
  const Coproducts delta = coproducts(j1, j2);
  const PolyMatrix p = w.matrix.transpose();
  const PolyMatrix p_inv = unipotent_inverse(w.matrix).transpose();
  Report r;
  for (Generator g : {Generator::H, Generator::Zplus, Generator::Zminus}) {
    r.add_matrix(std::string("w^-1 Delta(") + generator_name(g) + ") w = classical", p_inv * delta[g] * p,
                 classical_coproduct(g, j1, j2));
  }
  return r;
}

Report verify_coproduct_relations(HalfInt j1, HalfInt j2) {
  const Coproducts delta = coproducts(j1, j2);
  return uhsl2::verify_relations(delta.h, delta.x, delta.y);
}

Report verify_skew_inverse(const WBasis& w) {
  Report r;
  if (!w.matrix.is_upper_unipotent()) {
    r.add("w-matrix unipotent upper triangular", false, "w-matrix is not unipotent upper triangular");
    return r;
  }
  r.add_matrix("inverse = skew-transpose", unipotent_inverse(w.matrix), skew_transpose(w.matrix));

  // Index-level sum straight from the coefficient formula, n over the whole tensor space.
  const TensorIndex index(w.j1, w.j2);
  const std::size_t n = index.size();
  std::string failure;
  for (std::size_t from = 0; from < n && failure.empty(); ++from) {
    const auto [m1, m2] = index.labels(from);
    for (std::size_t to = 0; to < n && failure.empty(); ++to) {
      const auto [big_m1, big_m2] = index.labels(to);
      HPoly sum;
      for (std::size_t mid = 0; mid < n; ++mid) {
        const auto [n1, n2] = index.labels(mid);
        const HPoly left = a_coeff(m1, m2, (n1 - m1).as_int(), (n2 - m2).as_int());
        if (left.is_zero()) continue;
        const HPoly right = a_coeff(-big_m1, -big_m2, (big_m1 - n1).as_int(), (big_m2 - n2).as_int());
        if (!right.is_zero()) sum += left * right;
      }
      const HPoly expected = from == to ? HPoly(1L) : HPoly();
      if (sum != expected) {
        failure = "m=(" + m1.to_string() + "," + m2.to_string() + "), M=(" + big_m1.to_string() + "," +
                  big_m2.to_string() + "): sum " + sum.to_string() + ", expected " + expected.to_string();
      }
    }
  }
  r.add("sum a a = delta", failure.empty(), failure);
  return r;
}

Report verify_skew_inverse(HalfInt j1, HalfInt j2) { return verify_skew_inverse(w_basis(j1, j2)); }

BigRational xy_summand(const BigRational& x, const BigRational& y, int big_k, int big_l, int k, int l) {
  const BigRational bk(static_cast<long>(k));
  const BigRational bl(static_cast<long>(l));
  const BigRational big_kr(static_cast<long>(big_k));
  const BigRational big_lr(static_cast<long>(big_l));

  BigRational term = pochhammer(-x - bk, l) * pochhammer(-y - bl, k);
  if (term.is_zero()) return {};
  term /= BigRational(factorial(static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(l)));
  term *= pochhammer(x + big_kr + bk, big_l - l) * pochhammer(y + big_lr + bl, big_k - k);
  term /= BigRational(factorial(static_cast<unsigned>(big_k - k)) * factorial(static_cast<unsigned>(big_l - l)));
  term *= (x * y + bl * x + bk * y) / ((x + bk) * (y + bl));
  const BigRational second = x * y + big_lr * x + big_kr * y + bl * x + bk * y + BigRational(2L) * big_kr * bl +
                             BigRational(2L) * bk * big_lr;
  term *= second / ((x + big_kr + bk) * (y + big_lr + bl));
  return term;
}

BigRational xy_sum(const BigRational& x, const BigRational& y, int big_k, int big_l, const XySummand& summand) {
  BigRational total;
  for (int k = 0; k <= big_k; ++k) {
    for (int l = 0; l <= big_l; ++l) total += summand(x, y, big_k, big_l, k, l);
  }
  return total;
}

namespace {

// Pole set of the summand: x + k, x + K + k for k <= K (likewise y).
bool hits_pole(const BigRational& v, int big) {
  for (int k = 0; k <= 2 * big; ++k) {
    if ((v + BigRational(static_cast<long>(k))).is_zero()) return true;
  }
  return false;
}

}  // namespace

XyIdentityResult xy_identity_check(int big_k, int big_l, int samples, std::uint64_t seed, const XySummand& summand) {
  if (big_k < 0 || big_l < 0) throw std::invalid_argument("xy_identity_check: K and L must be non-negative");
  if (samples < 0) throw std::invalid_argument("xy_identity_check: negative sample count");
  XyIdentityResult out;
  out.big_k = big_k;
  out.big_l = big_l;
  out.seed = seed;
  out.samples = samples;
  // Multiplying through by prod_k (x+k)(x+K+k) and the y analogue leaves a polynomial identity.
  out.degree_x = big_l + 2 * big_k + 2;
  out.degree_y = big_k + 2 * big_l + 2;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> numerator(1, 10000);
  const auto draw = [&](int big) {
    for (;;) {
      BigRational v(BigInt(numerator(rng)), BigInt(7));
      if (!hits_pole(v, big)) return v;
      ++out.redraws;
    }
  };
  const BigRational expected(big_k == 0 && big_l == 0 ? 1L : 0L);

  std::string failure;
  for (int s = 0; s < samples && failure.empty(); ++s) {
    const BigRational x = draw(big_k);
    const BigRational y = draw(big_l);
    const BigRational value = xy_sum(x, y, big_k, big_l, summand);
    if (value != expected) {
      failure = "x=" + x.to_string() + ", y=" + y.to_string() + ": sum " + value.to_string() + ", expected " +
                expected.to_string();
    }
  }
  out.report.add("random points", failure.empty(), failure);

  // Distinct grid abscissae make agreement a proof for the cleared polynomial.
  const auto distinct = [&](int count, int big) {
    std::set<BigRational> values;
    while (static_cast<int>(values.size()) < count) values.insert(draw(big));
    return std::vector<BigRational>(values.begin(), values.end());
  };
  const auto xs = distinct(out.degree_x + 1, big_k);
  const auto ys = distinct(out.degree_y + 1, big_l);
  std::string grid_failure;
  for (const auto& x : xs) {
    for (const auto& y : ys) {
      const BigRational value = xy_sum(x, y, big_k, big_l, summand);
      if (value != expected && grid_failure.empty()) {
        grid_failure = "x=" + x.to_string() + ", y=" + y.to_string() + ": sum " + value.to_string();
      }
    }
  }
  out.grid_certificate = grid_failure.empty();
  std::ostringstream grid_name;
  grid_name << "grid " << xs.size() << "x" << ys.size();
  out.report.add(grid_name.str(), grid_failure.empty(), grid_failure);
  return out;
}

}  // namespace jordan::tensor
