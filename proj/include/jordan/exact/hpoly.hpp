#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "jordan/exact/radical.hpp"

namespace jordan {

/// Polynomial sum c_n h^n in the deformation parameter h with Radical
/// coefficients. Terms are sorted by power and never hold a zero coefficient.
class HPoly {
 public:
  struct Term {
    int power;
    Radical coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  HPoly() = default;
  HPoly(Radical c);  // NOLINT(google-explicit-constructor)
  HPoly(BigRational c) : HPoly(Radical(std::move(c))) {}  // NOLINT(google-explicit-constructor)
  HPoly(long c) : HPoly(Radical(BigRational(c))) {}  // NOLINT(google-explicit-constructor)

  static HPoly monomial(Radical coeff, int power);
  static HPoly h() { return monomial(Radical(1L), 1); }
  static HPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].power == 0); }
  bool is_monomial() const { return terms_.size() == 1; }
  int degree() const { return terms_.empty() ? kZeroDegree : terms_.back().power; }
  Radical coeff(int power) const;

  /// The h -> 0 specialization.
  Radical eval_at_zero() const { return coeff(0); }

  HPoly operator-() const;
  HPoly& operator+=(const HPoly& o);
  HPoly& operator-=(const HPoly& o);
  HPoly& operator*=(const Radical& c);

  friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
  friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
  friend HPoly operator*(const HPoly& a, const HPoly& b);
  friend HPoly operator*(HPoly a, const Radical& c) { return a *= c; }
  HPoly& operator*=(const HPoly& o) { return *this = *this * o; }

  friend bool operator==(const HPoly&, const HPoly&) = default;

  /// Plain text in the "h^2/12", "-3h^2/4", "sqrt(2)h/2" style.
  std::string to_string() const;
  /// Same layout as to_string with radicals written as \sqrt{r}.
  std::string to_latex() const;

 private:
  std::vector<Term> terms_;
};

}  // namespace jordan
