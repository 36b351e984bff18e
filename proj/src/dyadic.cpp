#include "prefixlab/dyadic.hpp"

#include <cmath>
#include <stdexcept>

namespace prefixlab {

Dyadic::Dyadic(Natural numerator, std::uint64_t exponent) : numerator_(std::move(numerator)), exponent_(exponent) {
  if (numerator_ < 0) throw std::domain_error("Dyadic: negative numerator");
  normalize();
}

void Dyadic::normalize() {
  if (numerator_ == 0) {
    exponent_ = 0;
    return;
  }
  const std::uint64_t twos = boost::multiprecision::lsb(numerator_);
  const std::uint64_t shift = twos < exponent_ ? twos : exponent_;
  numerator_ >>= shift;
  exponent_ -= shift;
}

Dyadic& Dyadic::operator+=(const Dyadic& rhs) {
  if (rhs.exponent_ > exponent_) {
    numerator_ <<= (rhs.exponent_ - exponent_);
    exponent_ = rhs.exponent_;
    numerator_ += rhs.numerator_;
  } else {
    numerator_ += rhs.numerator_ << (exponent_ - rhs.exponent_);
  }
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const std::uint64_t e = a.exponent_ > b.exponent_ ? a.exponent_ : b.exponent_;
  const Natural lhs = a.numerator_ << (e - a.exponent_);
  const Natural rhs = b.numerator_ << (e - b.exponent_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Dyadic::toString() const {
  std::string out = numerator_.str();
  if (exponent_ != 0) out += "/2^" + std::to_string(exponent_);
  return out;
}

double Dyadic::toDouble() const {
  return std::ldexp(numerator_.convert_to<double>(), -static_cast<int>(exponent_));
}

}  // namespace prefixlab
