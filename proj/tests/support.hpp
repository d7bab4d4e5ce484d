#pragma once

#include <random>

#include "jordan/exact/poly_matrix.hpp"

// Hand-rolled generators for property tests.
namespace testgen {

using namespace jordan;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20241014);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline BigRational rational(long bound = 20) {
  long den = uniform(1, bound);
  return BigRational(BigInt(uniform(-bound, bound)), BigInt(den));
}

inline BigRational nonzero_rational(long bound = 20) {
  for (;;) {
    BigRational q = rational(bound);
    if (!q.is_zero()) return q;
  }
}

inline Radical radical(int max_terms = 3) {
  static const long radicands[] = {1, 2, 3, 5, 6, 7, 12, 18};
  Radical out;
  const int n = static_cast<int>(uniform(0, max_terms));
  for (int i = 0; i < n; ++i) out += Radical::surd(rational(), BigInt(radicands[uniform(0, 7)]));
  return out;
}

inline HPoly poly(int max_degree = 4, int max_radical_terms = 2) {
  std::vector<HPoly::Term> terms;
  for (int p = 0; p <= max_degree; ++p) {
    if (uniform(0, 2) == 0) continue;
    terms.push_back({p, radical(max_radical_terms)});
  }
  return HPoly::from_terms(std::move(terms));
}

inline PolyMatrix matrix(std::size_t rows, std::size_t cols, int max_degree = 3) {
  PolyMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = poly(max_degree, 1);
  }
  return m;
}

inline PolyMatrix unipotent(std::size_t n, int max_degree = 3) {
  PolyMatrix m = PolyMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r + 1; c < n; ++c) m(r, c) = poly(max_degree, 1);
  }
  return m;
}

/// Evaluates a polynomial at a rational h, for radicals without sqrt parts.
inline BigRational eval_rational(const HPoly& p, const BigRational& h) {
  BigRational out;
  for (const auto& t : p.terms()) out += t.coeff.to_rational() * h.pow(static_cast<unsigned>(t.power));
  return out;
}

}  // namespace testgen
