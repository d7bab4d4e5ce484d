#include "jordan/exact/half_int.hpp"

#include <charconv>
#include <limits>

namespace jordan {

namespace {

bool parse_int(std::string_view s, int& out) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto* end = s.data() + s.size();
  const auto result = std::from_chars(s.data(), end, out);
  return result.ec == std::errc() && result.ptr == end;
}

[[noreturn]] void reject(std::string_view text) {
  throw std::invalid_argument("'" + std::string(text) + "' is not a half-integer (expected forms: 2, -1, 1/2, -3/2)");
}

}  // namespace

HalfInt HalfInt::parse(std::string_view text) {
  const auto slash = text.find('/');
  int num = 0;
  if (slash == std::string_view::npos) {
    if (!parse_int(text, num) || num > std::numeric_limits<int>::max() / 2 ||
        num < std::numeric_limits<int>::min() / 2) {
      reject(text);
    }
    return from_int(num);
  }
  int den = 0;
  if (!parse_int(text.substr(0, slash), num) || !parse_int(text.substr(slash + 1), den)) reject(text);
  const long long twice = 2LL * num;
  if (den <= 0 || twice % den != 0) reject(text);
  return from_twice(static_cast<int>(twice / den));
}

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace jordan
