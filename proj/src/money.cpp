#include "resvplan/money.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace resvplan {

namespace {

[[noreturn]] void bad_money(std::string_view text) {
  throw std::invalid_argument("not a currency literal (expect up to 3 decimal places): '" +
                              std::string(text) + "'");
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("currency addition overflow");
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("currency multiplication overflow");
  }
  return out;
}

}  // namespace

Money Money::parse(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  if (rest.empty()) bad_money(text);

  std::int64_t whole = 0;
  std::size_t i = 0;
  std::size_t whole_digits = 0;
  for (; i < rest.size() && rest[i] != '.'; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(rest[i]))) bad_money(text);
    whole = checked_add(checked_mul(whole, 10), rest[i] - '0');
    ++whole_digits;
  }

  std::int64_t frac = 0;
  std::size_t frac_digits = 0;
  if (i < rest.size()) {  // saw '.'
    ++i;
    for (; i < rest.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(rest[i]))) bad_money(text);
      if (++frac_digits > 3) bad_money(text);
      frac = frac * 10 + (rest[i] - '0');
    }
    if (frac_digits == 0) bad_money(text);
  }
  if (whole_digits == 0 && frac_digits == 0) bad_money(text);

  for (std::size_t d = frac_digits; d < 3; ++d) frac *= 10;
  std::int64_t millis = checked_add(checked_mul(whole, 1000), frac);
  return Money::from_millis(negative ? -millis : millis);
}

Money Money::from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite currency value");
  const double scaled = value * 1000.0;
  if (scaled >= 9.2e18 || scaled <= -9.2e18) throw std::overflow_error("currency value out of range");
  return Money::from_millis(static_cast<std::int64_t>(std::llround(scaled)));
}

std::string Money::to_string() const {
  const std::int64_t absval = millis_ < 0 ? -millis_ : millis_;
  std::string out;
  if (millis_ < 0) out += '-';
  out += std::to_string(absval / 1000);
  out += '.';
  const std::int64_t frac = absval % 1000;
  out += static_cast<char>('0' + frac / 100);
  out += static_cast<char>('0' + (frac / 10) % 10);
  out += static_cast<char>('0' + frac % 10);
  return out;
}

Money Money::operator+(Money other) const { return Money(checked_add(millis_, other.millis_)); }

Money Money::operator-(Money other) const {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(millis_, other.millis_, &out)) {
    throw std::overflow_error("currency subtraction overflow");
  }
  return Money(out);
}

Money Money::operator-() const {
  if (millis_ == std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("currency negation overflow");
  }
  return Money(-millis_);
}

Money& Money::operator+=(Money other) { return *this = *this + other; }
Money& Money::operator-=(Money other) { return *this = *this - other; }

Money Money::operator*(std::int64_t factor) const { return Money(checked_mul(millis_, factor)); }
Money& Money::operator*=(std::int64_t factor) { return *this = *this * factor; }

std::int64_t floor_ratio(Money numerator, Money denominator) {
  if (denominator.millis() <= 0) throw std::invalid_argument("floor_ratio requires a positive denominator");
  const std::int64_t n = numerator.millis();
  const std::int64_t d = denominator.millis();
  std::int64_t q = n / d;
  if ((n % d != 0) && (n < 0)) --q;
  return q;
}

}  // namespace resvplan
