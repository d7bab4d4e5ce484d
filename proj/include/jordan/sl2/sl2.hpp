#pragma once

#include <utility>
#include <vector>

#include "jordan/exact/half_int.hpp"
#include "jordan/exact/poly_matrix.hpp"
#include "jordan/exact/radical.hpp"
#include "jordan/report.hpp"

// Classical sl(2): the e-basis (orthonormal, Condon-Shortley) and the v-basis
// v_m = alpha_{j,m} e_m in which the Jordanian matrices become rational.
// All matrices use the ascending basis m = -j, ..., j.
namespace jordan::sl2 {

enum class Flavor { E, V };

struct RepLabel {
  HalfInt j;
  explicit RepLabel(HalfInt spin) : j(spin) { require_spin(spin); }
};

struct BasisVectorId {
  HalfInt j;
  HalfInt m;
  Flavor flavor;
  BasisVectorId(HalfInt spin, HalfInt weight, Flavor f) : j(spin), m(weight), flavor(f) { require_weight(spin, weight); }
};

/// H, Z+, Z- of one irreducible module.
struct Sl2Triple {
  PolyMatrix h;
  PolyMatrix zplus;
  PolyMatrix zminus;
};

int dim(HalfInt j);

/// sqrt((j+m)!/(j-m)!)
Radical alpha(HalfInt j, HalfInt m);

/// diag(alpha_{j,-j}, ..., alpha_{j,j}); maps v-coordinates to e-coordinates.
PolyMatrix alpha_diagonal(HalfInt j);
PolyMatrix alpha_diagonal_inverse(HalfInt j);

Sl2Triple sl2_matrices(HalfInt j, Flavor flavor);

/// [H,Z+] = 2Z+, [H,Z-] = -2Z-, [Z+,Z-] = H.
Report verify_triple(const Sl2Triple& t);

/// Condon-Shortley su(2) Clebsch-Gordan coefficient <j1 m1; j2 m2 | j m>
/// from the Racah single-sum formula. Zero when m != m1 + m2.
Radical su2_cgc(HalfInt j1, HalfInt j2, HalfInt j, HalfInt m1, HalfInt m2, HalfInt m);

/// Allowed coupled spins |j1-j2|, ..., j1+j2.
std::vector<HalfInt> coupled_spins(HalfInt j1, HalfInt j2);

/// Coupled labels (j, m): j ascending, then m ascending.
std::vector<std::pair<HalfInt, HalfInt>> coupled_labels(HalfInt j1, HalfInt j2);

/// Uncoupled labels (m1, m2), lexicographic ascending; flat index i1 * dim(j2) + i2.
std::vector<std::pair<HalfInt, HalfInt>> uncoupled_labels(HalfInt j1, HalfInt j2);

/// su(2) coupling matrix built from first principles: for each j the
/// Z+-kernel of the weight-j space (exact rational elimination in the v-basis),
/// sign fixed so the e_{j1} (x) e_{j-j1} coefficient is positive, normalized,
/// then lowered with Z- (x) 1 + 1 (x) Z- and renormalized.
///
/// Rows are coupled labels, columns uncoupled labels, entries in the e (x) e basis.
PolyMatrix su2_cgc_oracle(HalfInt j1, HalfInt j2);

/// Same layout as su2_cgc_oracle, filled from su2_cgc.
PolyMatrix su2_cgc_matrix(HalfInt j1, HalfInt j2);

}  // namespace jordan::sl2
