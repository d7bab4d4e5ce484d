#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jordan/exact/big_rational.hpp"

namespace jordan {

struct SquarefreeParts {
  BigInt outer;
  BigInt radicand;
};

/// n = outer^2 * radicand with radicand squarefree. Throws for n <= 0.
SquarefreeParts squarefree_decompose(const BigInt& n);

/// Element of Q(sqrt 2, sqrt 3, sqrt 5, ...): a finite sum q_r * sqrt(r) over
/// distinct squarefree r >= 1. Radicand 1 carries the rational part.
///
/// Terms are kept sorted by radicand with no zero coefficients, so two values
/// are equal exactly when their term lists are equal.
class Radical {
 public:
  struct Term {
    BigInt radicand;
    BigRational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Radical() = default;
  Radical(BigRational q);  // NOLINT(google-explicit-constructor)
  Radical(long q) : Radical(BigRational(q)) {}  // NOLINT(google-explicit-constructor)

  /// coeff * sqrt(n) for any positive n; n is reduced to squarefree form.
  static Radical surd(const BigRational& coeff, const BigInt& n);
  /// Principal square root of a non-negative rational.
  static Radical sqrt(const BigRational& q);
  /// Rebuilds a value from arbitrary (possibly unnormalized) terms.
  static Radical from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].radicand == 1); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Coefficient of sqrt(1).
  BigRational rational_part() const;
  /// Throws std::domain_error unless the value is rational.
  BigRational to_rational() const;

  /// Inverse of a single-term value c*sqrt(r), i.e. sqrt(r)/(c*r).
  Radical inverse() const;

  Radical operator-() const;
  Radical& operator+=(const Radical& o);
  Radical& operator-=(const Radical& o);
  Radical& operator*=(const BigRational& q);

  friend Radical operator+(Radical a, const Radical& b) { return a += b; }
  friend Radical operator-(Radical a, const Radical& b) { return a -= b; }
  friend Radical operator*(const Radical& a, const Radical& b);
  friend Radical operator*(Radical a, const BigRational& q) { return a *= q; }
  friend Radical operator*(const BigRational& q, Radical a) { return a *= q; }
  Radical& operator*=(const Radical& o) { return *this = *this * o; }

  friend bool operator==(const Radical&, const Radical&) = default;

  /// Floating-point value; diagnostics only.
  double to_double() const;

  /// "0", "3/4", "sqrt(2)", "-1/2*sqrt(6)", "1+sqrt(3)".
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

inline Radical radical_mul(const Radical& a, const Radical& b) { return a * b; }

}  // namespace jordan
