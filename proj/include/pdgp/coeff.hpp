#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>

#include "pdgp/error.hpp"

namespace pdgp {

/// Exact signed 128-bit integer. Every arithmetic operation is checked and
/// throws ErrorKind::Overflow instead of wrapping.
class Coeff {
 public:
  using rep = __int128;

  constexpr Coeff() = default;
  constexpr Coeff(long long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  static constexpr Coeff from_raw(rep v) { Coeff c; c.v_ = v; return c; }
  static Coeff from_unsigned(std::uint64_t v) { return from_raw(static_cast<rep>(v)); }

  static constexpr Coeff max() { return from_raw(~(static_cast<rep>(1) << 127)); }
  static constexpr Coeff min() { return from_raw(static_cast<rep>(1) << 127); }

  constexpr rep raw() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  friend Coeff operator+(Coeff a, Coeff b) {
    rep r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw Error(ErrorKind::Overflow, "coefficient addition");
    return from_raw(r);
  }
  friend Coeff operator-(Coeff a, Coeff b) {
    rep r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw Error(ErrorKind::Overflow, "coefficient subtraction");
    return from_raw(r);
  }
  friend Coeff operator*(Coeff a, Coeff b) {
    rep r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw Error(ErrorKind::Overflow, "coefficient multiplication");
    return from_raw(r);
  }
  Coeff operator-() const { return Coeff(0) - *this; }
  Coeff& operator+=(Coeff o) { return *this = *this + o; }
  Coeff& operator-=(Coeff o) { return *this = *this - o; }
  Coeff& operator*=(Coeff o) { return *this = *this * o; }

  /// Exact division; throws BadParameter when `d` does not divide.
  Coeff exact_div(Coeff d) const {
    if (d.v_ == 0 || v_ % d.v_ != 0) throw Error(ErrorKind::BadParameter, "inexact coefficient division");
    if (v_ == min().v_ && d.v_ == -1) throw Error(ErrorKind::Overflow, "coefficient division");
    return from_raw(v_ / d.v_);
  }

  friend constexpr bool operator==(Coeff, Coeff) = default;
  friend constexpr std::strong_ordering operator<=>(Coeff a, Coeff b) { return a.v_ <=> b.v_; }

  std::string to_string() const {
    if (v_ == 0) return "0";
    unsigned __int128 mag = v_ < 0 ? -static_cast<unsigned __int128>(v_) : static_cast<unsigned __int128>(v_);
    std::string digits;
    while (mag != 0) {
      digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
      mag /= 10;
    }
    if (v_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
  }

 private:
  rep v_ = 0;
};

inline Coeff pow2(int k) {
  if (k < 0 || k > 126) throw Error(ErrorKind::Overflow, "2^" + std::to_string(k));
  return Coeff::from_raw(static_cast<Coeff::rep>(1) << k);
}

inline Coeff factorial(int k) {
  Coeff r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

}  // namespace pdgp
