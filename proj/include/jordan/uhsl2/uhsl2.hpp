#pragma once

#include <functional>

#include "jordan/exact/half_int.hpp"
#include "jordan/exact/poly_matrix.hpp"
#include "jordan/report.hpp"

// Finite-dimensional representations of the Jordanian algebra U_h(sl(2)) in
// the v-basis with ascending weights m = -j, ..., j.
//
// Analytic functions of hX (exp, sinh, cosh, tanh) only ever meet nilpotent
// matrices here, so each one is a terminating Taylor sum with coefficients
// that are monomials in h.
namespace jordan::uhsl2 {

struct UhRep {
  HalfInt j;
  PolyMatrix h;
  PolyMatrix x;
  PolyMatrix y;
};

PolyMatrix h_matrix(HalfInt j);
PolyMatrix x_matrix(HalfInt j);
PolyMatrix y_matrix(HalfInt j);
UhRep uh_rep(HalfInt j);

/// k -> scalar multiplying M^k.
using SeriesCoeff = std::function<HPoly(int)>;

/// Smallest k with M^k = 0; throws std::invalid_argument when no power up to the dimension vanishes.
int nilpotency_index(const PolyMatrix& m);

/// Sum over k of coeff(k) M^k, truncated where the powers of M vanish.
PolyMatrix nilpotent_series(const PolyMatrix& m, const SeriesCoeff& coeff);

// Coefficient functions for the series in hX.
HPoly exp_coeff(int k, int sign);          // (sign h)^k / k!
HPoly sinh_over_h_coeff(int k);            // sinh(hX)/h: h^(k-1)/k! for odd k
HPoly cosh_coeff(int k);                   // cosh(hX): h^k/k! for even k
HPoly cosh_half_coeff(int k);              // cosh(hX/2): (h/2)^k/k! for even k
HPoly tanh_half_scaled_coeff(int k);       // (2/h) tanh(hX/2): t_k (h/2)^(k-1) for odd k
HPoly geometric_half_coeff(int k, int sign);  // (sign h/2)^k, i.e. (1 - sign hZ/2)^(-1)

/// Taylor coefficients t_0..t_order of tanh(u), by exact series division sinh/cosh.
std::vector<BigRational> tanh_taylor(int order);

PolyMatrix exp_hx(const PolyMatrix& x, int sign = 1);
PolyMatrix sinh_hx_over_h(const PolyMatrix& x);
PolyMatrix cosh_hx(const PolyMatrix& x);
PolyMatrix cosh_half_hx(const PolyMatrix& x);

struct ZPair {
  PolyMatrix zplus;
  PolyMatrix zminus;
};

/// Z+ = (2/h) tanh(hX/2), Z- = cosh(hX/2) Y cosh(hX/2), for any matrices with X nilpotent.
ZPair z_from_xy(const PolyMatrix& x, const PolyMatrix& y);
ZPair z_from_xy(const UhRep& rep);

/// e^{hX} = (1 + hZ+/2)(1 - hZ+/2)^{-1}, evaluated from Z+ alone.
PolyMatrix exp_hx_from_zplus(const PolyMatrix& zplus);

/// [H,X] = 2 sinh(hX)/h, [X,Y] = H, [H,Y] = -Y cosh(hX) - cosh(hX) Y.
Report verify_relations(const PolyMatrix& h, const PolyMatrix& x, const PolyMatrix& y);
Report verify_uh_relations(const UhRep& rep);
Report verify_uh_relations(HalfInt j);

/// Z+/Z- against the classical v-basis matrices, plus the e^{hX} inversion formula.
Report verify_nonlinear_map(const UhRep& rep);
Report verify_nonlinear_map(HalfInt j);

}  // namespace jordan::uhsl2
