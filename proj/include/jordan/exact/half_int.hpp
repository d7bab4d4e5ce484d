#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jordan {

/// Half-integer label (spin j or weight m) stored as its doubled value.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(int value) { return HalfInt(2 * value); }

  /// Parses "2", "-1", "1/2", "-3/2". Anything else throws std::invalid_argument.
  static HalfInt parse(std::string_view text);

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  /// Integer value; throws when the label is a proper half-integer.
  int as_int() const {
    if (!is_integer()) throw std::domain_error("half-integer " + to_string() + " is not an integer");
    return twice_ / 2;
  }

  std::string to_string() const;

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr HalfInt operator+(int n) const { return HalfInt(twice_ + 2 * n); }
  constexpr HalfInt operator-(int n) const { return HalfInt(twice_ - 2 * n); }

  constexpr auto operator<=>(const HalfInt&) const = default;

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

/// j labels need 2j >= 0.
inline void require_spin(HalfInt j) {
  if (j.twice() < 0) throw std::invalid_argument("spin label " + j.to_string() + " is negative");
}

/// m labels need |2m| <= 2j and 2m = 2j (mod 2).
inline bool is_weight_of(HalfInt j, HalfInt m) {
  return j.twice() >= 0 && m.twice() >= -j.twice() && m.twice() <= j.twice() &&
         (j.twice() - m.twice()) % 2 == 0;
}

inline void require_weight(HalfInt j, HalfInt m) {
  if (!is_weight_of(j, m)) {
    throw std::invalid_argument("weight " + m.to_string() + " is not a label of V(" + j.to_string() + ")");
  }
}

/// Position of m in the ascending basis m = -j, ..., j.
inline int weight_index(HalfInt j, HalfInt m) { return (m.twice() + j.twice()) / 2; }

inline HalfInt weight_at(HalfInt j, int index) { return HalfInt::from_twice(2 * index - j.twice()); }

inline int dimension(HalfInt j) {
  require_spin(j);
  return j.twice() + 1;
}

}  // namespace jordan
