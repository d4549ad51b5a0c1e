#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "fwcycles/rational.hpp"

namespace fwc {

inline constexpr std::int64_t kDefaultEnergyScale = 1'000'000;

/// Fixed-point energy: an integer count of 1/scale energy units, or +inf.
///
/// The scale lives on the owning Landscape; Energy values only compare and
/// add meaningfully when they share it. Arithmetic is exact and checked for
/// overflow. +inf absorbs addition and dominates every finite value.
class Energy {
 public:
  constexpr Energy() = default;

  static constexpr Energy from_units(std::int64_t units) { return Energy(units, false); }
  static constexpr Energy infinity() { return Energy(0, true); }
  static constexpr Energy zero() { return Energy(0, false); }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }

  /// Raw scaled integer. Throws ArithmeticOverflow on +inf.
  std::int64_t units() const;

  /// max(value, 0).
  constexpr Energy positive_part() const {
    return (infinite_ || units_ >= 0) ? *this : zero();
  }

  double to_double(std::int64_t scale) const;

  friend Energy operator+(Energy a, Energy b);
  /// inf - finite = inf; anything - inf is undefined and throws.
  friend Energy operator-(Energy a, Energy b);
  Energy& operator+=(Energy other) { return *this = *this + other; }

  friend constexpr bool operator==(Energy a, Energy b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.units_ == b.units_);
  }
  friend constexpr std::strong_ordering operator<=>(Energy a, Energy b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.units_ <=> b.units_;
  }

 private:
  constexpr Energy(std::int64_t units, bool infinite) : units_(units), infinite_(infinite) {}

  std::int64_t units_ = 0;
  bool infinite_ = false;
};

/// Converts an exact value to units at `scale`; ScaleOverflow when the value
/// is not a whole number of units or does not fit.
Energy energy_from_rational(const Rational& value, std::int64_t scale);
Energy parse_energy(std::string_view text, std::int64_t scale);

/// "inf" for +inf, otherwise the exact decimal (see format_rational).
std::string format_energy(Energy value, std::int64_t scale);

}  // namespace fwc
