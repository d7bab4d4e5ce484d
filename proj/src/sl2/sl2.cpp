#include "jordan/sl2/sl2.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace jordan::sl2 {

int dim(HalfInt j) { return dimension(j); }

namespace {

// Factorial of a half-integer sum that must be a non-negative integer.
BigInt fact_of_twice(int twice) {
  if (twice < 0 || twice % 2 != 0) throw std::logic_error("factorial of non-integer or negative label combination");
  return factorial(static_cast<unsigned>(twice / 2));
}

}  // namespace

Radical alpha(HalfInt j, HalfInt m) {
  require_weight(j, m);
  return Radical::sqrt(BigRational(fact_of_twice(j.twice() + m.twice()), fact_of_twice(j.twice() - m.twice())));
}

PolyMatrix alpha_diagonal(HalfInt j) {
  std::vector<HPoly> diag;
  for (int i = 0; i < dim(j); ++i) diag.emplace_back(alpha(j, weight_at(j, i)));
  return PolyMatrix::diagonal(diag);
}

PolyMatrix alpha_diagonal_inverse(HalfInt j) {
  std::vector<HPoly> diag;
  for (int i = 0; i < dim(j); ++i) diag.emplace_back(alpha(j, weight_at(j, i)).inverse());
  return PolyMatrix::diagonal(diag);
}

Sl2Triple sl2_matrices(HalfInt j, Flavor flavor) {
  const auto n = static_cast<std::size_t>(dim(j));
  Sl2Triple t{PolyMatrix(n, n), PolyMatrix(n, n), PolyMatrix(n, n)};
  const int tj = j.twice();
  for (std::size_t i = 0; i < n; ++i) {
    const int tm = weight_at(j, static_cast<int>(i)).twice();
    t.h(i, i) = HPoly(static_cast<long>(tm));
    // (j-m)(j+m+1) and (j+m)(j-m+1) in doubled units
    const long up = static_cast<long>((tj - tm) / 2) * ((tj + tm) / 2 + 1);
    const long down = static_cast<long>((tj + tm) / 2) * ((tj - tm) / 2 + 1);
    if (i + 1 < n) {
      t.zplus(i + 1, i) = flavor == Flavor::V ? HPoly(1L) : HPoly(Radical::sqrt(BigRational(up)));
    }
    if (i > 0) {
      t.zminus(i - 1, i) = flavor == Flavor::V ? HPoly(down) : HPoly(Radical::sqrt(BigRational(down)));
    }
  }
  return t;
}

Report verify_triple(const Sl2Triple& t) {
  Report r;
  r.add_matrix("[H,Z+]=2Z+", commutator(t.h, t.zplus), t.zplus * HPoly(2L));
  r.add_matrix("[H,Z-]=-2Z-", commutator(t.h, t.zminus), t.zminus * HPoly(-2L));
  r.add_matrix("[Z+,Z-]=H", commutator(t.zplus, t.zminus), t.h);
  return r;
}

Radical su2_cgc(HalfInt j1, HalfInt j2, HalfInt j, HalfInt m1, HalfInt m2, HalfInt m) {
  require_spin(j1);
  require_spin(j2);
  require_spin(j);
  const int a = j1.twice();
  const int b = j2.twice();
  const int c = j.twice();
  if (c < std::abs(a - b) || c > a + b || (a + b + c) % 2 != 0) {
    throw std::invalid_argument("su2_cgc: (" + j1.to_string() + ", " + j2.to_string() + ", " + j.to_string() +
                                ") violates the triangle condition");
  }
  require_weight(j1, m1);
  require_weight(j2, m2);
  require_weight(j, m);
  if (m1.twice() + m2.twice() != m.twice()) return {};

  const int x = m1.twice();
  const int y = m2.twice();
  const int z = m.twice();
  BigInt top = (c + 1) * fact_of_twice(a + b - c) * fact_of_twice(a - b + c) * fact_of_twice(-a + b + c);
  top *= fact_of_twice(c + z) * fact_of_twice(c - z);
  top *= fact_of_twice(a - x) * fact_of_twice(a + x) * fact_of_twice(b - y) * fact_of_twice(b + y);
  const BigInt bottom = fact_of_twice(a + b + c + 2);

  BigRational sum;
  // k runs over all integers keeping every factorial argument non-negative.
  const int k_min = std::max({0, (b - c - x) / 2, (a - c + y) / 2});
  const int k_max = std::min({(a + b - c) / 2, (a - x) / 2, (b + y) / 2});
  for (int k = k_min; k <= k_max; ++k) {
    BigInt den = factorial(static_cast<unsigned>(k));
    den *= fact_of_twice(a + b - c - 2 * k) * fact_of_twice(a - x - 2 * k) * fact_of_twice(b + y - 2 * k);
    den *= fact_of_twice(c - b + x + 2 * k) * fact_of_twice(c - a - y + 2 * k);
    const BigRational term(BigInt(k % 2 == 0 ? 1 : -1), den);
    sum += term;
  }
  return Radical::sqrt(BigRational(top, bottom)) * sum;
}

std::vector<HalfInt> coupled_spins(HalfInt j1, HalfInt j2) {
  require_spin(j1);
  require_spin(j2);
  std::vector<HalfInt> out;
  for (int t = std::abs(j1.twice() - j2.twice()); t <= j1.twice() + j2.twice(); t += 2) {
    out.push_back(HalfInt::from_twice(t));
  }
  return out;
}

std::vector<std::pair<HalfInt, HalfInt>> coupled_labels(HalfInt j1, HalfInt j2) {
  std::vector<std::pair<HalfInt, HalfInt>> out;
  for (HalfInt j : coupled_spins(j1, j2)) {
    for (int i = 0; i < dim(j); ++i) out.emplace_back(j, weight_at(j, i));
  }
  return out;
}

std::vector<std::pair<HalfInt, HalfInt>> uncoupled_labels(HalfInt j1, HalfInt j2) {
  std::vector<std::pair<HalfInt, HalfInt>> out;
  for (int i1 = 0; i1 < dim(j1); ++i1) {
    for (int i2 = 0; i2 < dim(j2); ++i2) out.emplace_back(weight_at(j1, i1), weight_at(j2, i2));
  }
  return out;
}

namespace {

using RationalMatrix = std::vector<std::vector<BigRational>>;

// Basis of {x : A x = 0} by reduced row echelon form.
std::vector<std::vector<BigRational>> nullspace(RationalMatrix a, std::size_t cols) {
  std::vector<int> pivot_of_col(cols, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const BigRational lead = a[row][col];
    for (auto& v : a[row]) v /= lead;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      const BigRational f = a[r][col];
      for (std::size_t k = 0; k < cols; ++k) a[r][k] -= f * a[row][k];
    }
    pivot_of_col[col] = static_cast<int>(row);
    ++row;
  }
  std::vector<std::vector<BigRational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    std::vector<BigRational> v(cols);
    v[free] = 1;
    for (std::size_t col = 0; col < cols; ++col) {
      if (pivot_of_col[col] >= 0) v[col] = -a[static_cast<std::size_t>(pivot_of_col[col])][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Radical norm_squared(const std::vector<Radical>& v) {
  Radical s;
  for (const auto& x : v) s += x * x;
  return s;
}

void normalize(std::vector<Radical>& v) {
  const BigRational n2 = norm_squared(v).to_rational();
  if (n2.sign() <= 0) throw std::logic_error("su2_cgc_oracle: degenerate vector");
  const Radical scale = Radical::sqrt(BigRational(1) / n2);
  for (auto& x : v) x = x * scale;
}

}  // namespace

PolyMatrix su2_cgc_oracle(HalfInt j1, HalfInt j2) {
  const int d1 = dim(j1);
  const int d2 = dim(j2);
  const auto n = static_cast<std::size_t>(d1 * d2);
  const auto flat = [&](HalfInt m1, HalfInt m2) {
    return static_cast<std::size_t>(weight_index(j1, m1) * d2 + weight_index(j2, m2));
  };
  const auto alpha_sq = [](HalfInt j, HalfInt m) {
    return BigRational(factorial(static_cast<unsigned>((j.twice() + m.twice()) / 2)),
                       factorial(static_cast<unsigned>((j.twice() - m.twice()) / 2)));
  };
  // Uncoupled pairs of a given total weight, ordered by m1.
  const auto weight_space = [&](int twice_total) {
    std::vector<std::pair<HalfInt, HalfInt>> out;
    for (int i1 = 0; i1 < d1; ++i1) {
      const HalfInt m1 = weight_at(j1, i1);
      const HalfInt m2 = HalfInt::from_twice(twice_total - m1.twice());
      if (is_weight_of(j2, m2)) out.emplace_back(m1, m2);
    }
    return out;
  };

  const auto e1 = sl2_matrices(j1, Flavor::E);
  const auto e2 = sl2_matrices(j2, Flavor::E);

  PolyMatrix out(n, n);
  std::size_t row = 0;
  for (HalfInt j : coupled_spins(j1, j2)) {
    // Highest-weight vector: kernel of Z+ (x) 1 + 1 (x) Z+ on the weight-j space, v-basis coordinates.
    const auto source = weight_space(j.twice());
    const auto target = weight_space(j.twice() + 2);
    RationalMatrix zplus(target.size(), std::vector<BigRational>(source.size()));
    for (std::size_t s = 0; s < source.size(); ++s) {
      const auto [m1, m2] = source[s];
      for (std::size_t t = 0; t < target.size(); ++t) {
        if ((target[t].first == m1 + 1 && target[t].second == m2) || (target[t].first == m1 && target[t].second == m2 + 1)) {
          zplus[t][s] += BigRational(1);
        }
      }
    }
    // Spin j occurs once, so the kernel is a line.
    const auto kernel = nullspace(zplus, source.size());
    if (kernel.size() != 1) throw std::logic_error("su2_cgc_oracle: highest-weight space is not one-dimensional");
    std::vector<BigRational> hw = kernel.front();

    // Condon-Shortley: coefficient on e_{j1} (x) e_{j-j1} positive.
    std::size_t anchor = source.size();
    for (std::size_t s = 0; s < source.size(); ++s) {
      if (source[s].first == j1) anchor = s;
    }
    if (anchor == source.size() || hw[anchor].is_zero()) throw std::logic_error("su2_cgc_oracle: phase anchor vanishes");
    if (hw[anchor].sign() < 0) {
      for (auto& x : hw) x = -x;
    }

    // e-basis coordinates of the whole tensor space.
    std::vector<Radical> vec(n);
    for (std::size_t s = 0; s < source.size(); ++s) {
      const auto [m1, m2] = source[s];
      vec[flat(m1, m2)] = Radical::sqrt(alpha_sq(j1, m1) * alpha_sq(j2, m2)) * hw[s];
    }
    normalize(vec);

    // Rows for m = j, j-1, ..., -j; stored ascending so m = j lands last in the block.
    const auto block = static_cast<std::size_t>(dim(j));
    std::vector<std::vector<Radical>> rows(block);
    rows[block - 1] = vec;
    for (std::size_t k = block - 1; k-- > 0;) {
      const auto& prev = rows[k + 1];
      std::vector<Radical> next(n);
      for (std::size_t i1 = 0; i1 < static_cast<std::size_t>(d1); ++i1) {
        for (std::size_t i2 = 0; i2 < static_cast<std::size_t>(d2); ++i2) {
          const Radical& x = prev[i1 * d2 + i2];
          if (x.is_zero()) continue;
          if (i1 > 0) next[(i1 - 1) * d2 + i2] += e1.zminus(i1 - 1, i1).eval_at_zero() * x;
          if (i2 > 0) next[i1 * d2 + i2 - 1] += e2.zminus(i2 - 1, i2).eval_at_zero() * x;
        }
      }
      // Z- |j m> = sqrt((j+m)(j-m+1)) |j m-1> with m the weight of rows[k+1]
      const HalfInt m = weight_at(j, static_cast<int>(k + 1));
      const long factor = static_cast<long>((j.twice() + m.twice()) / 2) * ((j.twice() - m.twice()) / 2 + 1);
      const Radical inv = Radical::sqrt(BigRational(factor)).inverse();
      for (auto& x : next) x = x * inv;
      normalize(next);
      rows[k] = std::move(next);
    }
    for (std::size_t k = 0; k < block; ++k, ++row) {
      for (std::size_t c = 0; c < n; ++c) out(row, c) = HPoly(rows[k][c]);
    }
  }
  return out;
}

PolyMatrix su2_cgc_matrix(HalfInt j1, HalfInt j2) {
  const auto rows = coupled_labels(j1, j2);
  const auto cols = uncoupled_labels(j1, j2);
  PolyMatrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto [j, m] = rows[r];
      const auto [m1, m2] = cols[c];
      if (m1.twice() + m2.twice() == m.twice()) out(r, c) = HPoly(su2_cgc(j1, j2, j, m1, m2, m));
    }
  }
  return out;
}

}  // namespace jordan::sl2
