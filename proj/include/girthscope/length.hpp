#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

namespace girthscope {

/// Path or cycle length: a non-negative integer, or infinite.
///
/// Addition saturates at infinity and infinity compares greater than every
/// finite value, so `a + b >= k` style tests work unchanged when any operand
/// is unbounded.
class Length {
 public:
  using value_type = std::uint64_t;

  constexpr Length() = default;
  constexpr explicit Length(value_type value) : value_(value == kInf ? kInf - 1 : value) {}

  static constexpr Length infinite() {
    Length l;
    l.value_ = kInf;
    return l;
  }

  constexpr bool is_infinite() const { return value_ == kInf; }
  constexpr bool is_finite() const { return value_ != kInf; }
  /// Raw value; only meaningful when finite.
  constexpr value_type value() const { return value_; }

  friend constexpr Length operator+(Length a, Length b) {
    if (a.is_infinite() || b.is_infinite()) return infinite();
    if (a.value_ > kInf - 1 - b.value_) return infinite();
    return Length(a.value_ + b.value_);
  }
  friend constexpr Length operator+(Length a, value_type b) { return a + Length(b); }

  friend constexpr auto operator<=>(Length, Length) = default;

  /// "inf" or the decimal value.
  std::string to_string() const { return is_infinite() ? std::string("inf") : std::to_string(value_); }

  /// Accepts a decimal integer, "inf", "infinity" or "∞".
  static Length parse(std::string_view text);

 private:
  static constexpr value_type kInf = std::numeric_limits<value_type>::max();
  value_type value_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Length l) { return os << l.to_string(); }

inline constexpr Length kInfinite = Length::infinite();

}  // namespace girthscope
