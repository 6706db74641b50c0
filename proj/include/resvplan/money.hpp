#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <string_view>

namespace resvplan {

// Currency amount held as an integer count of 0.001 units (millis).
// All cost arithmetic in the library is exact: planner-vs-solver
// comparisons are integer equality, never float tolerance. Arithmetic
// that would overflow int64 throws std::overflow_error.
class Money {
 public:
  constexpr Money() = default;

  static constexpr Money from_millis(std::int64_t millis) { return Money(millis); }

  // Parses a plain decimal string ("0.24", "-32.00", "1.5") with at most
  // three fractional digits. Anything else (exponents, excess digits,
  // stray characters) throws std::invalid_argument.
  static Money parse(std::string_view text);

  // Nearest-milli conversion for values that arrive as binary floating
  // point (e.g. JSON numbers). Ties round away from zero.
  static Money from_double(double value);

  constexpr std::int64_t millis() const { return millis_; }
  constexpr bool is_zero() const { return millis_ == 0; }
  constexpr bool is_negative() const { return millis_ < 0; }

  // Rendered with exactly three decimal places, e.g. "17.000", "-0.104".
  std::string to_string() const;

  Money operator+(Money other) const;
  Money operator-(Money other) const;
  Money operator-() const;
  Money& operator+=(Money other);
  Money& operator-=(Money other);

  // Scaling by an instance count or an hour count.
  Money operator*(std::int64_t factor) const;
  Money& operator*=(std::int64_t factor);

  friend constexpr auto operator<=>(Money, Money) = default;

 private:
  explicit constexpr Money(std::int64_t millis) : millis_(millis) {}

  std::int64_t millis_ = 0;
};

inline Money operator*(std::int64_t factor, Money m) { return m * factor; }

// floor(numerator / denominator) for positive denominators; exact integer
// arithmetic so boundary cases never wobble the way float division would.
std::int64_t floor_ratio(Money numerator, Money denominator);

}  // namespace resvplan
