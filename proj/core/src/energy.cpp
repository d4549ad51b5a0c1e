#include "fwcycles/energy.hpp"

#include <limits>

#include "fwcycles/error.hpp"

namespace fwc {

__extension__ typedef __int128 Wide;

std::int64_t Energy::units() const {
  if (infinite_) throw Error(ErrorCode::ArithmeticOverflow, "units() of an infinite energy");
  return units_;
}

double Energy::to_double(std::int64_t scale) const {
  if (infinite_) return std::numeric_limits<double>::infinity();
  return static_cast<double>(units_) / static_cast<double>(scale);
}

Energy operator+(Energy a, Energy b) {
  if (a.infinite_ || b.infinite_) return Energy::infinity();
  std::int64_t sum = 0;
  if (__builtin_add_overflow(a.units_, b.units_, &sum))
    throw Error(ErrorCode::ArithmeticOverflow, "energy addition overflow");
  return Energy::from_units(sum);
}

Energy operator-(Energy a, Energy b) {
  if (b.infinite_) throw Error(ErrorCode::ArithmeticOverflow, "subtracting an infinite energy");
  if (a.infinite_) return a;
  std::int64_t diff = 0;
  if (__builtin_sub_overflow(a.units_, b.units_, &diff))
    throw Error(ErrorCode::ArithmeticOverflow, "energy subtraction overflow");
  return Energy::from_units(diff);
}

Energy energy_from_rational(const Rational& value, std::int64_t scale) {
  if (scale <= 0) throw Error(ErrorCode::MalformedInput, "energy scale must be positive");
  Wide scaled = static_cast<Wide>(value.num()) * scale;
  if (scaled % value.den() != 0)
    throw Error(ErrorCode::ScaleOverflow,
                format_rational(value) + " is not representable at scale " + std::to_string(scale));
  scaled /= value.den();
  if (scaled > std::numeric_limits<std::int64_t>::max() || scaled < std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorCode::ScaleOverflow, format_rational(value) + " overflows at scale " + std::to_string(scale));
  return Energy::from_units(static_cast<std::int64_t>(scaled));
}

Energy parse_energy(std::string_view text, std::int64_t scale) {
  if (text == "inf") return Energy::infinity();
  return energy_from_rational(parse_rational(text), scale);
}

std::string format_energy(Energy value, std::int64_t scale) {
  if (value.is_infinite()) return "inf";
  return format_rational(Rational(value.units(), scale));
}

}  // namespace fwc
