#include "jordan/cgc/cgc.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "jordan/sl2/sl2.hpp"
#include "jordan/uhsl2/uhsl2.hpp"

namespace jordan::cgc {

namespace {

BigRational alpha_squared(HalfInt j, HalfInt m) {
  require_weight(j, m);
  return BigRational(factorial(static_cast<unsigned>((j.twice() + m.twice()) / 2)),
                     factorial(static_cast<unsigned>((j.twice() - m.twice()) / 2)));
}

void require_triangle(HalfInt j1, HalfInt j2, HalfInt j) {
  require_spin(j1);
  require_spin(j2);
  const int a = j1.twice();
  const int b = j2.twice();
  const int c = j.twice();
  if (c < std::abs(a - b) || c > a + b || (a + b + c) % 2 != 0) {
    throw std::invalid_argument("j = " + j.to_string() + " is outside the coupled range " +
                                HalfInt::from_twice(std::abs(a - b)).to_string() + " ... " +
                                HalfInt::from_twice(a + b).to_string());
  }
}

// (-1)^{j1+j2-j}
long coupling_sign(HalfInt j1, HalfInt j2, HalfInt j) {
  return ((j1.twice() + j2.twice() - j.twice()) / 2) % 2 == 0 ? 1 : -1;
}

std::size_t coupled_row(HalfInt j1, HalfInt j2, HalfInt j, HalfInt m) {
  std::size_t row = 0;
  for (HalfInt spin : sl2::coupled_spins(j1, j2)) {
    if (spin == j) return row + static_cast<std::size_t>(weight_index(j, m));
    row += static_cast<std::size_t>(dimension(spin));
  }
  throw std::invalid_argument("coupled label outside range");
}

std::string coupled_label(HalfInt j1, HalfInt j2, std::size_t row) {
  const auto [j, m] = sl2::coupled_labels(j1, j2).at(row);
  return "(j,m)=(" + j.to_string() + "," + m.to_string() + ")";
}

std::string uncoupled_label(HalfInt j1, HalfInt j2, std::size_t col) {
  const auto [n1, n2] = sl2::uncoupled_labels(j1, j2).at(col);
  return "(n1,n2)=(" + n1.to_string() + "," + n2.to_string() + ")";
}

}  // namespace

HPoly scaled_a_coeff(HalfInt j1, HalfInt j2, HalfInt m1, HalfInt m2, int k, int l) {
  require_weight(j1, m1);
  require_weight(j2, m2);
  require_weight(j1, m1 + k);
  require_weight(j2, m2 + l);
  HPoly a = tensor::a_coeff(m1, m2, k, l);
  if (a.is_zero()) return a;
  const BigRational ratio =
      alpha_squared(j1, m1 + k) * alpha_squared(j2, m2 + l) / (alpha_squared(j1, m1) * alpha_squared(j2, m2));
  return a * Radical::sqrt(ratio);
}

HPoly uh_cgc(HalfInt j1, HalfInt j2, HalfInt j, HalfInt n1, HalfInt n2, HalfInt m) {
  require_triangle(j1, j2, j);
  require_weight(j1, n1);
  require_weight(j2, n2);
  require_weight(j, m);
  HPoly sum;
  for (int t1 = -j1.twice(); t1 <= n1.twice(); t1 += 2) {
    const HalfInt m1 = HalfInt::from_twice(t1);
    const HalfInt m2 = m - m1;
    if (!is_weight_of(j2, m2) || m2 > n2) continue;
    const Radical c = sl2::su2_cgc(j1, j2, j, m1, m2, m);
    if (c.is_zero()) continue;
    sum += scaled_a_coeff(j1, j2, m1, m2, (n1 - m1).as_int(), (n2 - m2).as_int()) * c;
  }
  return sum;
}

PolyMatrix cgc_matrix(HalfInt j1, HalfInt j2) {
  const auto rows = sl2::coupled_labels(j1, j2);
  const auto cols = sl2::uncoupled_labels(j1, j2);
  PolyMatrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      out(r, c) = uh_cgc(j1, j2, rows[r].first, cols[c].first, cols[c].second, rows[r].second);
    }
  }
  return out;
}

CgcTable cgc_table(HalfInt j1, HalfInt j2) {
  const auto rows = sl2::coupled_labels(j1, j2);
  const auto cols = sl2::uncoupled_labels(j1, j2);
  const PolyMatrix g = cgc_matrix(j1, j2);
  CgcTable table{j1, j2, {}};
  table.entries.reserve(rows.size() * cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      table.entries.push_back({rows[r].first, rows[r].second, cols[c].first, cols[c].second, g(r, c)});
    }
  }
  return table;
}

PolyMatrix e_basis_a_matrix(HalfInt j1, HalfInt j2) {
  const PolyMatrix d = kronecker(sl2::alpha_diagonal(j1), sl2::alpha_diagonal(j2));
  const PolyMatrix d_inv = kronecker(sl2::alpha_diagonal_inverse(j1), sl2::alpha_diagonal_inverse(j2));
  return d_inv * tensor::w_basis(j1, j2).matrix * d;
}

PolyMatrix skew_orthogonal_inverse(const PolyMatrix& cgc, HalfInt j1, HalfInt j2) {
  const auto rows = sl2::coupled_labels(j1, j2);
  const tensor::TensorIndex index(j1, j2);
  if (cgc.rows() != rows.size() || cgc.cols() != index.size()) {
    throw std::invalid_argument("skew_orthogonal_inverse: matrix shape does not match the labels");
  }
  PolyMatrix out(index.size(), rows.size());
  for (std::size_t c = 0; c < index.size(); ++c) {
    const auto [n1, n2] = index.labels(c);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto [j, m] = rows[r];
      HPoly v = cgc(coupled_row(j1, j2, j, -m), index.flat(-n1, -n2));
      out(c, r) = coupling_sign(j1, j2, j) < 0 ? -v : v;
    }
  }
  return out;
}

Report verify_factorization(HalfInt j1, HalfInt j2) {
  Report r;
  r.add_matrix("cgc = C_su2 * A_e", cgc_matrix(j1, j2), sl2::su2_cgc_matrix(j1, j2) * e_basis_a_matrix(j1, j2));
  return r;
}

Report verify_cgc_structure(const PolyMatrix& cgc, HalfInt j1, HalfInt j2) {
  const auto rows = sl2::coupled_labels(j1, j2);
  const auto cols = sl2::uncoupled_labels(j1, j2);
  std::string diagonal_failure;
  std::string upper_failure;
  std::string monomial_failure;
  int vanishing = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto [j, m] = rows[r];
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto [n1, n2] = cols[c];
      const HPoly& v = cgc(r, c);
      const int gap = (n1 + n2 - m).as_int();
      const std::string where = coupled_label(j1, j2, r) + " " + uncoupled_label(j1, j2, c) + ": " + v.to_string();
      if (gap == 0) {
        if (v != HPoly(sl2::su2_cgc(j1, j2, j, n1, n2, m)) && diagonal_failure.empty()) {
          diagonal_failure = where + " differs from the su(2) value";
        }
      } else if (gap < 0) {
        if (!v.is_zero() && upper_failure.empty()) upper_failure = where + " should vanish";
      } else if (v.is_zero()) {
        ++vanishing;
      } else if ((!v.is_monomial() || v.degree() != gap) && monomial_failure.empty()) {
        monomial_failure = where + " is not a monomial in h^" + std::to_string(gap);
      }
    }
  }
  Report rep;
  rep.add("m=n1+n2: su(2) value", diagonal_failure.empty(), diagonal_failure);
  rep.add("m>n1+n2: zero", upper_failure.empty(), upper_failure);
  rep.add("m<n1+n2: monomial", monomial_failure.empty(),
          monomial_failure.empty() ? std::to_string(vanishing) + " permitted entries vanish" : monomial_failure);
  return rep;
}

Report verify_cgc_structure(HalfInt j1, HalfInt j2) { return verify_cgc_structure(cgc_matrix(j1, j2), j1, j2); }

Report verify_skew_orthogonality(const PolyMatrix& cgc, HalfInt j1, HalfInt j2) {
  const PolyMatrix inv = skew_orthogonal_inverse(cgc, j1, j2);
  Report rep;
  const auto first = first_mismatch(cgc * inv, PolyMatrix::identity(cgc.rows()));
  rep.add("sum_n (-1)^{j1+j2-j} C^j_{n,m} C^j'_{-n,-m'} = delta", !first,
          first ? coupled_label(j1, j2, first->row) + " vs " + coupled_label(j1, j2, first->col) + ": got " +
                      first->actual.to_string()
                : std::string{});
  const auto second = first_mismatch(inv * cgc, PolyMatrix::identity(cgc.cols()));
  rep.add("sum_{j,m} (-1)^{j1+j2-j} C^j_{n,m} C^j_{-n',-m} = delta", !second,
          second ? uncoupled_label(j1, j2, second->col) + " vs " + uncoupled_label(j1, j2, second->row) + ": got " +
                       second->actual.to_string()
                 : std::string{});
  return rep;
}

Report verify_skew_orthogonality(HalfInt j1, HalfInt j2) {
  return verify_skew_orthogonality(cgc_matrix(j1, j2), j1, j2);
}

PolyMatrix coupled_block_matrix(tensor::Generator gen, HalfInt j1, HalfInt j2) {
  const std::size_t n = static_cast<std::size_t>(dimension(j1) * dimension(j2));
  PolyMatrix out(n, n);
  std::size_t offset = 0;
  for (HalfInt j : sl2::coupled_spins(j1, j2)) {
    const auto rep = uhsl2::uh_rep(j);
    const PolyMatrix* g = nullptr;
    switch (gen) {
      case tensor::Generator::H: g = &rep.h; break;
      case tensor::Generator::X: g = &rep.x; break;
      case tensor::Generator::Y: g = &rep.y; break;
      default: throw std::invalid_argument("coupled_block_matrix: generator must be H, X or Y");
    }
    const PolyMatrix block = sl2::alpha_diagonal(j) * *g * sl2::alpha_diagonal_inverse(j);
    for (std::size_t r = 0; r < block.rows(); ++r) {
      for (std::size_t c = 0; c < block.cols(); ++c) out(offset + r, offset + c) = block(r, c);
    }
    offset += block.rows();
  }
  return out;
}

Report verify_decomposition(const PolyMatrix& cgc, HalfInt j1, HalfInt j2) {
  Report rep;
  const auto spins = sl2::coupled_spins(j1, j2);
  const int total = std::accumulate(spins.begin(), spins.end(), 0, [](int acc, HalfInt j) { return acc + dimension(j); });
  rep.add("block dimensions sum to dim V(j1) x V(j2)", total == dimension(j1) * dimension(j2),
          std::to_string(total) + " vs " + std::to_string(dimension(j1) * dimension(j2)));

  // Columns of Q are the coupled vectors. Its inverse comes from the factorization
  // Q^T = C_su2 A_e: Q^{-1} = C_su2 (A_e^{-1})^T with A_e^{-1} = D^{-1} W^{-1} D.
  const PolyMatrix q = cgc.transpose();
  const PolyMatrix d = kronecker(sl2::alpha_diagonal(j1), sl2::alpha_diagonal(j2));
  const PolyMatrix d_inv = kronecker(sl2::alpha_diagonal_inverse(j1), sl2::alpha_diagonal_inverse(j2));
  const PolyMatrix a_e_inv = d_inv * unipotent_inverse(tensor::w_basis(j1, j2).matrix) * d;
  const PolyMatrix q_inv = sl2::su2_cgc_matrix(j1, j2) * a_e_inv.transpose();
  rep.add_matrix("Q^-1 Q = 1", q_inv * q, PolyMatrix::identity(q.rows()));

  const tensor::Coproducts delta = tensor::coproducts(j1, j2);
  for (tensor::Generator g : {tensor::Generator::H, tensor::Generator::X, tensor::Generator::Y}) {
    const PolyMatrix delta_e = d * delta[g] * d_inv;
    const auto bad = first_mismatch(q_inv * delta_e * q, coupled_block_matrix(g, j1, j2));
    rep.add(std::string("Q^-1 Delta(") + tensor::generator_name(g) + ") Q = blocks", !bad,
            bad ? coupled_label(j1, j2, bad->row) + " <- " + coupled_label(j1, j2, bad->col) + ": got " +
                      bad->actual.to_string() + ", expected " + bad->expected.to_string()
                : std::string{});
  }
  return rep;
}

Report verify_decomposition(HalfInt j1, HalfInt j2) { return verify_decomposition(cgc_matrix(j1, j2), j1, j2); }

}  // namespace jordan::cgc
