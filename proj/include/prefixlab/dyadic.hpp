#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "prefixlab/bitstring.hpp"

namespace prefixlab {

// Exact nonnegative dyadic rational numerator / 2^exponent, kept canonical
// (numerator odd, or zero with exponent zero).
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(Natural numerator, std::uint64_t exponent);

  static Dyadic zero() { return Dyadic(); }
  static Dyadic one() { return Dyadic(1, 0); }
  // 2^-k.
  static Dyadic inversePowerOfTwo(std::uint64_t k) { return Dyadic(1, k); }

  const Natural& numerator() const noexcept { return numerator_; }
  std::uint64_t exponent() const noexcept { return exponent_; }
  bool isZero() const noexcept { return numerator_ == 0; }

  Dyadic& operator+=(const Dyadic& rhs);
  friend Dyadic operator+(Dyadic lhs, const Dyadic& rhs) { return lhs += rhs; }

  // Scaling by a natural count.
  friend Dyadic operator*(const Dyadic& d, const Natural& k) { return Dyadic(d.numerator_ * k, d.exponent_); }

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  // "num/2^exp", or just "num" when exp is zero.
  std::string toString() const;
  // Nearest double, for reports only.
  double toDouble() const;

 private:
  void normalize();

  Natural numerator_ = 0;
  std::uint64_t exponent_ = 0;
};

}  // namespace prefixlab
