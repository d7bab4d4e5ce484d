#include "jordan/exact/hpoly.hpp"

#include <algorithm>

namespace jordan {

HPoly::HPoly(Radical c) {
  if (!c.is_zero()) terms_.push_back({0, std::move(c)});
}

HPoly HPoly::monomial(Radical coeff, int power) {
  if (power < 0) throw std::invalid_argument("negative power of h");
  HPoly out;
  if (!coeff.is_zero()) out.terms_.push_back({power, std::move(coeff)});
  return out;
}

HPoly HPoly::from_terms(std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.power < 0) throw std::invalid_argument("negative power of h");
  }
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.power < b.power; });
  HPoly out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().power == t.power) {
      out.terms_.back().coeff += t.coeff;
    } else {
      out.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(out.terms_, [](const Term& t) { return t.coeff.is_zero(); });
  return out;
}

Radical HPoly::coeff(int power) const {
  const auto it = std::lower_bound(terms_.begin(), terms_.end(), power,
                                   [](const Term& t, int p) { return t.power < p; });
  if (it != terms_.end() && it->power == power) return it->coeff;
  return {};
}

HPoly HPoly::operator-() const {
  HPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

HPoly& HPoly::operator+=(const HPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->power < b->power)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->power < a->power) {
      merged.push_back(*b++);
    } else {
      Radical sum = a->coeff + b->coeff;
      if (!sum.is_zero()) merged.push_back({a->power, std::move(sum)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

HPoly& HPoly::operator-=(const HPoly& o) { return *this += -o; }

HPoly& HPoly::operator*=(const Radical& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff = t.coeff * c;
  std::erase_if(terms_, [](const Term& t) { return t.coeff.is_zero(); });
  return *this;
}

HPoly operator*(const HPoly& a, const HPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const int top = a.degree() + b.degree();
  std::vector<Radical> dense(static_cast<std::size_t>(top + 1));
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) dense[static_cast<std::size_t>(x.power + y.power)] += x.coeff * y.coeff;
  }
  HPoly out;
  for (int p = 0; p <= top; ++p) {
    auto& c = dense[static_cast<std::size_t>(p)];
    if (!c.is_zero()) out.terms_.push_back({p, std::move(c)});
  }
  return out;
}

namespace {

std::string format_term(const HPoly::Term& t, bool latex, bool leading) {
  std::string h_part;
  if (t.power == 1) h_part = "h";
  if (t.power > 1) h_part = latex ? "h^{" + std::to_string(t.power) + "}" : "h^" + std::to_string(t.power);

  std::string out;
  if (t.coeff.is_monomial()) {
    const auto& c = t.coeff.terms()[0];
    std::string sign = c.coeff.sign() < 0 ? "-" : (leading ? "" : "+");
    const BigInt num = abs(c.coeff.num());
    const BigInt& den = c.coeff.den();
    std::string top;
    if (num != 1 || (c.radicand == 1 && h_part.empty())) top = num.get_str();
    if (c.radicand != 1) {
      top += latex ? "\\sqrt{" + c.radicand.get_str() + "}" : "sqrt(" + c.radicand.get_str() + ")";
    }
    top += h_part;
    out = sign + top;
    if (den != 1) out += "/" + den.get_str();
    return out;
  }
  std::string inner = t.coeff.to_string();
  if (latex) {
    // sqrt(r) -> \sqrt{r}
    std::string converted;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner.compare(i, 5, "sqrt(") == 0) {
        const auto close = inner.find(')', i);
        converted += "\\sqrt{" + inner.substr(i + 5, close - i - 5) + "}";
        i = close;
      } else {
        converted += inner[i];
      }
    }
    inner = converted;
  }
  if (h_part.empty()) return (leading || inner[0] == '-' ? "" : "+") + inner;
  return std::string(leading ? "" : "+") + "(" + inner + ")" + h_part;
}

std::string format(const std::vector<HPoly::Term>& terms, bool latex) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) out += format_term(terms[i], latex, i == 0);
  return out;
}

}  // namespace

std::string HPoly::to_string() const { return format(terms_, false); }
std::string HPoly::to_latex() const { return format(terms_, true); }

}  // namespace jordan
