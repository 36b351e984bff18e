#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace prefixlab {

// Arbitrary-precision natural number. Ranks, cardinalities and Kraft
// numerators all live here.
using Natural = boost::multiprecision::cpp_int;

// Position of a string in the ordering λ, 0, 1, 00, 01, 10, 11, 000, ...
using Rank = Natural;

// An immutable finite binary string, possibly empty (λ).
//
// Ordering is length-lexicographic: shorter strings first, equal lengths
// compared bitwise. This coincides with the numeric order of rankOf.
class BitString {
 public:
  BitString() = default;

  // Parses the ASCII encoding: a run of '0'/'1', or "-" for λ. An empty view is
  // also accepted as λ. Throws ParseError on any other character.
  static BitString parse(std::string_view text);

  // Builds from raw bits given as '0'/'1' characters (no "-" handling).
  static BitString fromBits(std::string_view bits);

  static BitString zeros(std::size_t n) { return BitString(std::string(n, '0')); }
  static BitString ones(std::size_t n) { return BitString(std::string(n, '1')); }

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  bool operator[](std::size_t i) const noexcept { return bits_[i] == '1'; }

  // Raw '0'/'1' characters; empty for λ.
  std::string_view bits() const noexcept { return bits_; }

  // Text encoding used by every file format: "-" for λ.
  std::string toText() const { return bits_.empty() ? std::string("-") : bits_; }

  // True when this is a (proper or improper) prefix of other.
  bool isPrefixOf(const BitString& other) const noexcept {
    return bits_.size() <= other.bits_.size() &&
           std::string_view(other.bits_).substr(0, bits_.size()) == bits_;
  }

  BitString prefix(std::size_t n) const { return BitString(bits_.substr(0, n)); }

  BitString& push_back(bool bit) {
    bits_.push_back(bit ? '1' : '0');
    return *this;
  }

  BitString& append(const BitString& tail) {
    bits_.append(tail.bits_);
    return *this;
  }

  friend BitString operator+(BitString lhs, const BitString& rhs) { return std::move(lhs.append(rhs)); }

  friend bool operator==(const BitString&, const BitString&) = default;

  friend std::strong_ordering operator<=>(const BitString& a, const BitString& b) noexcept {
    if (auto c = a.bits_.size() <=> b.bits_.size(); c != 0) return c;
    return a.bits_.compare(b.bits_) <=> 0;
  }

 private:
  explicit BitString(std::string bits) : bits_(std::move(bits)) {}

  std::string bits_;
};

// φ(s): value of the numeral 1s minus one.
Rank rankOf(const BitString& s);

// Inverse of rankOf. Negative values are not representable and are rejected
// with std::domain_error.
BitString stringOf(const Rank& n);
BitString stringOf(std::uint64_t n);

// Cantor pairing on naturals: (m+n)(m+n+1)/2 + n.
Natural cantorPair(const Natural& m, const Natural& n);
std::pair<Natural, Natural> cantorUnpair(const Natural& z);

// The pairing function b on strings, lifted through rankOf/stringOf.
BitString pair(const BitString& s, const BitString& t);
std::pair<BitString, BitString> unpair(const BitString& u);

}  // namespace prefixlab

template <>
struct std::hash<prefixlab::BitString> {
  std::size_t operator()(const prefixlab::BitString& s) const noexcept {
    return std::hash<std::string_view>{}(s.bits());
  }
};
