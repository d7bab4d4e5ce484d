#pragma once

#include <vector>

#include "jordan/exact/half_int.hpp"
#include "jordan/exact/poly_matrix.hpp"
#include "jordan/report.hpp"
#include "jordan/tensor/tensor.hpp"

// Clebsch-Gordan coefficients of U_h(sl(2)) in the e-basis:
//
//   e^{(j1 j2) j}_m = sum_{n1,n2} Cgc^{j1,j2,j}_{n1,n2,m}(h) e_{n1} (x) e_{n2}
//
// Matrices use rows (j, m) with j ascending then m ascending, and columns
// (n1, n2) in lexicographic ascending order.
namespace jordan::cgc {

/// a^{m1,m2}_{k,l} alpha_{j1,m1+k} alpha_{j2,m2+l} / (alpha_{j1,m1} alpha_{j2,m2}).
/// Throws std::invalid_argument when a shifted label leaves its representation.
HPoly scaled_a_coeff(HalfInt j1, HalfInt j2, HalfInt m1, HalfInt m2, int k, int l);

/// Sum over m1 + m2 = m of C^{j1,j2,j}_{m1,m2,m} times scaled_a_coeff at (n1-m1, n2-m2).
HPoly uh_cgc(HalfInt j1, HalfInt j2, HalfInt j, HalfInt n1, HalfInt n2, HalfInt m);

PolyMatrix cgc_matrix(HalfInt j1, HalfInt j2);

struct CgcEntry {
  HalfInt j;
  HalfInt m;
  HalfInt n1;
  HalfInt n2;
  HPoly value;
  friend bool operator==(const CgcEntry&, const CgcEntry&) = default;
};

struct CgcTable {
  HalfInt j1;
  HalfInt j2;
  std::vector<CgcEntry> entries;  // matrix order: (j, m) outer, (n1, n2) inner
  friend bool operator==(const CgcTable&, const CgcTable&) = default;
};

CgcTable cgc_table(HalfInt j1, HalfInt j2);

/// The a-coefficient matrix carried to the e-basis: D^{-1} W D with D = diag(alpha (x) alpha).
PolyMatrix e_basis_a_matrix(HalfInt j1, HalfInt j2);

/// Inverse read off from skew-orthogonality:
/// result[(n1,n2)][(j,m)] = (-1)^{j1+j2-j} cgc[(j,-m)][(-n1,-n2)].
PolyMatrix skew_orthogonal_inverse(const PolyMatrix& cgc, HalfInt j1, HalfInt j2);

/// cgc_matrix == su(2) coupling matrix times e_basis_a_matrix.
Report verify_factorization(HalfInt j1, HalfInt j2);

/// Per entry: su(2) value when m = n1+n2, zero when m > n1+n2, otherwise zero or c*h^{n1+n2-m}.
Report verify_cgc_structure(const PolyMatrix& cgc, HalfInt j1, HalfInt j2);
Report verify_cgc_structure(HalfInt j1, HalfInt j2);

/// Both skew-orthogonality sums, entry by entry.
Report verify_skew_orthogonality(const PolyMatrix& cgc, HalfInt j1, HalfInt j2);
Report verify_skew_orthogonality(HalfInt j1, HalfInt j2);

/// Change of basis to the coupled vectors block-diagonalizes Delta(H), Delta(X),
/// Delta(Y) into the single-representation e-basis matrices.
Report verify_decomposition(const PolyMatrix& cgc, HalfInt j1, HalfInt j2);
Report verify_decomposition(HalfInt j1, HalfInt j2);

/// Block diagonal of g^{(j)} in the e-basis over j = |j1-j2|, ..., j1+j2; g in {H, X, Y}.
PolyMatrix coupled_block_matrix(tensor::Generator gen, HalfInt j1, HalfInt j2);

}  // namespace jordan::cgc
