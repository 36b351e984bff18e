#include "prefixlab/bitstring.hpp"

#include <stdexcept>

#include "prefixlab/error.hpp"

namespace prefixlab {

BitString BitString::parse(std::string_view text) {
  if (text == "-") return BitString();
  return fromBits(text);
}

BitString BitString::fromBits(std::string_view bits) {
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw ParseError("invalid bit character '" + std::string(1, c) + "' in \"" + std::string(bits) + "\"");
    }
  }
  return BitString(std::string(bits));
}

Rank rankOf(const BitString& s) {
  Rank value = 1;
  for (char c : s.bits()) {
    value <<= 1;
    if (c == '1') value |= 1;
  }
  return value - 1;
}

BitString stringOf(const Rank& n) {
  if (n < 0) throw std::domain_error("stringOf: negative rank");
  const Rank m = n + 1;
  const std::size_t top = boost::multiprecision::msb(m);
  BitString out;
  for (std::size_t i = top; i-- > 0;) out.push_back(boost::multiprecision::bit_test(m, i));
  return out;
}

BitString stringOf(std::uint64_t n) { return stringOf(Rank(n)); }

Natural cantorPair(const Natural& m, const Natural& n) {
  const Natural w = m + n;
  return w * (w + 1) / 2 + n;
}

std::pair<Natural, Natural> cantorUnpair(const Natural& z) {
  if (z < 0) throw std::domain_error("cantorUnpair: negative argument");
  // Largest w with w(w+1)/2 <= z.
  Natural w = (boost::multiprecision::sqrt(Natural(8 * z + 1)) - 1) / 2;
  while (w * (w + 1) / 2 > z) --w;
  while ((w + 1) * (w + 2) / 2 <= z) ++w;
  const Natural n = z - w * (w + 1) / 2;
  return {w - n, n};
}

BitString pair(const BitString& s, const BitString& t) { return stringOf(cantorPair(rankOf(s), rankOf(t))); }

std::pair<BitString, BitString> unpair(const BitString& u) {
  auto [m, n] = cantorUnpair(rankOf(u));
  return {stringOf(m), stringOf(n)};
}

}  // namespace prefixlab
