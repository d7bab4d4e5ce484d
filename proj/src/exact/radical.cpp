#include "jordan/exact/radical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jordan {

SquarefreeParts squarefree_decompose(const BigInt& n) {
  if (sgn(n) <= 0) throw std::invalid_argument("squarefree_decompose needs a positive integer, got " + n.get_str());
  BigInt rest = n;
  BigInt outer = 1;
  BigInt radicand = 1;
  // Trial division; the remaining cofactor after the loop is 1 or a prime.
  for (unsigned long p = 2;; p = (p == 2 ? 3 : p + 2)) {
    if (rest < BigInt(p) * p) break;
    unsigned exponent = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++exponent;
    }
    for (unsigned e = 0; e < exponent / 2; ++e) outer *= p;
    if (exponent % 2 == 1) radicand *= p;
  }
  radicand *= rest;
  return {outer, radicand};
}

Radical::Radical(BigRational q) {
  if (!q.is_zero()) terms_.push_back({BigInt(1), std::move(q)});
}

Radical Radical::surd(const BigRational& coeff, const BigInt& n) {
  if (sgn(n) <= 0) throw std::invalid_argument("surd needs a positive radicand, got " + n.get_str());
  if (coeff.is_zero()) return {};
  auto parts = squarefree_decompose(n);
  Radical out;
  out.terms_.push_back({std::move(parts.radicand), coeff * BigRational(parts.outer)});
  return out;
}

Radical Radical::sqrt(const BigRational& q) {
  if (q.sign() < 0) throw std::domain_error("square root of negative rational " + q.to_string());
  if (q.is_zero()) return {};
  // sqrt(a/b) = oa*sqrt(ra) / (ob*sqrt(rb)) = oa*sqrt(ra*rb) / (ob*rb)
  const auto a = squarefree_decompose(q.num());
  const auto b = squarefree_decompose(q.den());
  Radical out;
  out.terms_.push_back({a.radicand * b.radicand, BigRational(a.outer, b.outer * b.radicand)});
  return out;
}

Radical Radical::from_terms(std::vector<Term> terms) {
  std::vector<Term> reduced;
  reduced.reserve(terms.size());
  for (auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    auto parts = squarefree_decompose(t.radicand);
    reduced.push_back({std::move(parts.radicand), t.coeff * BigRational(parts.outer)});
  }
  Radical out;
  out.terms_ = std::move(reduced);
  out.normalize();
  return out;
}

void Radical::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.radicand < b.radicand; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().radicand == t.radicand) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
  terms_ = std::move(merged);
}

BigRational Radical::rational_part() const {
  if (!terms_.empty() && terms_[0].radicand == 1) return terms_[0].coeff;
  return {};
}

BigRational Radical::to_rational() const {
  if (!is_rational()) throw std::domain_error("value " + to_string() + " is irrational");
  return rational_part();
}

Radical Radical::inverse() const {
  if (!is_monomial()) throw std::domain_error("inverse only defined here for single-term radicals, got " + to_string());
  const auto& t = terms_[0];
  Radical out;
  out.terms_.push_back({t.radicand, BigRational(1) / (t.coeff * BigRational(t.radicand))});
  return out;
}

Radical Radical::operator-() const {
  Radical out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Radical& Radical::operator+=(const Radical& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->radicand < b->radicand)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->radicand < a->radicand) {
      merged.push_back(*b++);
    } else {
      BigRational sum = a->coeff + b->coeff;
      if (!sum.is_zero()) merged.push_back({std::move(a->radicand), std::move(sum)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Radical& Radical::operator-=(const Radical& o) { return *this += -o; }

Radical& Radical::operator*=(const BigRational& q) {
  if (q.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= q;
  return *this;
}

Radical operator*(const Radical& a, const Radical& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Radical out;
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      if (x.radicand == 1 || y.radicand == 1) {
        out.terms_.push_back({x.radicand * y.radicand, x.coeff * y.coeff});
        continue;
      }
      // sqrt(r1)*sqrt(r2) = g*sqrt((r1/g)*(r2/g)) for squarefree r1, r2 with g = gcd(r1, r2)
      const BigInt g = gcd(x.radicand, y.radicand);
      const BigInt r = (x.radicand / g) * (y.radicand / g);
      out.terms_.push_back({r, x.coeff * y.coeff * BigRational(g)});
    }
  }
  if (out.terms_.size() > 1) out.normalize();
  return out;
}

double Radical::to_double() const {
  double v = 0.0;
  for (const auto& t : terms_) {
    v += mpq_class(t.coeff.num(), t.coeff.den()).get_d() * std::sqrt(t.radicand.get_d());
  }
  return v;
}

std::string Radical::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    std::string piece;
    if (t.radicand == 1) {
      piece = t.coeff.to_string();
    } else {
      const BigRational mag = t.coeff.abs();
      if (t.coeff.sign() < 0) piece = "-";
      if (!mag.is_one()) piece += mag.to_string() + "*";
      piece += "sqrt(" + t.radicand.get_str() + ")";
    }
    if (i > 0 && piece[0] != '-') out += "+";
    out += piece;
  }
  return out;
}

}  // namespace jordan
