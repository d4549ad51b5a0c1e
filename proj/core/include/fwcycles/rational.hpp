#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace fwc {

/// Exact rational number with 64-bit numerator and positive denominator,
/// always kept in lowest terms. Intermediate products use 128-bit integers;
/// results that do not fit raise ErrorCode::ArithmeticOverflow.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& other) { return *this = *this + other; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Parses "-12", "0.125", "+3.50" or "1/3" exactly. Throws MalformedInput.
Rational parse_rational(std::string_view text);

/// Shortest exact decimal ("0.5", "-3", "12.125") when the denominator has
/// only factors 2 and 5, otherwise "p/q". parse_rational inverts it.
std::string format_rational(const Rational& value);

}  // namespace fwc
