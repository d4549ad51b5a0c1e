#include "fwcycles/rational.hpp"

#include <limits>
#include <numeric>

#include "fwcycles/error.hpp"

namespace fwc {
namespace {

__extension__ typedef __int128 Wide;

Wide gcd_wide(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make_reduced(Wide num, Wide den) {
  if (den == 0) throw Error(ErrorCode::ArithmeticOverflow, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = gcd_wide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr Wide lo = std::numeric_limits<std::int64_t>::min();
  constexpr Wide hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi)
    throw Error(ErrorCode::ArithmeticOverflow, "rational value exceeds 64-bit range");
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

[[noreturn]] void malformed(std::string_view text) {
  throw Error(ErrorCode::MalformedInput, "not an exact number: '" + std::string(text) + "'");
}

Wide parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) malformed(whole);
  Wide value = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') malformed(whole);
    value = value * 10 + (c - '0');
    if (value > std::numeric_limits<std::int64_t>::max())
      throw Error(ErrorCode::ArithmeticOverflow, "too many digits in '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::ArithmeticOverflow, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

Rational operator+(const Rational& a, const Rational& b) {
  return make_reduced(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return make_reduced(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return make_reduced(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Wide lhs = Wide(a.num_) * b.den_;
  Wide rhs = Wide(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) malformed(text);

  Wide num = 0;
  Wide den = 1;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = parse_digits(body.substr(0, slash), text);
    den = parse_digits(body.substr(slash + 1), text);
    if (den == 0) malformed(text);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = body.substr(0, dot);
    std::string_view frac_part = body.substr(dot + 1);
    if (int_part.empty() || frac_part.empty()) malformed(text);
    if (frac_part.size() > 18) throw Error(ErrorCode::ArithmeticOverflow, "too many decimals in '" + std::string(text) + "'");
    Wide scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    num = parse_digits(int_part, text) * scale + parse_digits(frac_part, text);
    den = scale;
  } else {
    num = parse_digits(body, text);
  }
  return make_reduced(negative ? -num : num, den);
}

std::string format_rational(const Rational& value) {
  std::int64_t den = value.den();
  int twos = 0;
  int fives = 0;
  while (den % 2 == 0) { den /= 2; ++twos; }
  while (den % 5 == 0) { den /= 5; ++fives; }
  if (den != 1) return std::to_string(value.num()) + "/" + std::to_string(value.den());

  int digits = std::max(twos, fives);
  // Scale the numerator so the denominator becomes 10^digits.
  Wide scaled = value.num();
  for (int i = twos; i < digits; ++i) scaled *= 2;
  for (int i = fives; i < digits; ++i) scaled *= 5;

  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string raw;
  do {
    raw.insert(raw.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
    scaled /= 10;
  } while (scaled != 0);
  if (digits > 0) {
    if (raw.size() <= static_cast<std::size_t>(digits)) raw.insert(0, digits - raw.size() + 1, '0');
    raw.insert(raw.size() - digits, ".");
  }
  return negative ? "-" + raw : raw;
}

}  // namespace fwc
