#pragma once

#include <compare>
#include <cstddef>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "prefixlab/bitstring.hpp"
#include "prefixlab/dyadic.hpp"

namespace prefixlab {

// H_C(s): a codeword length, or infinity when s has no codeword.
class Complexity {
 public:
  constexpr Complexity() = default;  // infinity
  constexpr explicit Complexity(std::size_t bits) : bits_(bits), finite_(true) {}

  static constexpr Complexity infinity() { return Complexity(); }

  constexpr bool isFinite() const noexcept { return finite_; }
  // Precondition: isFinite().
  constexpr std::size_t value() const noexcept { return bits_; }

  std::string toString() const { return finite_ ? std::to_string(bits_) : std::string("inf"); }

  friend constexpr bool operator==(const Complexity&, const Complexity&) = default;
  friend constexpr std::strong_ordering operator<=>(const Complexity& a, const Complexity& b) noexcept {
    if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (!a.finite_) return std::strong_ordering::equal;
    return a.bits_ <=> b.bits_;
  }

 private:
  std::size_t bits_ = 0;
  bool finite_ = false;
};

struct Entry {
  BitString codeword;
  BitString symbol;

  friend bool operator==(const Entry&, const Entry&) = default;
};

// Returns the first offending pair (prefix, extension), or nullopt when the
// codewords are prefix-free. Repeated elements count as a violation (x, x).
// Prefixes are found with a binary trie in time linear in the total length.
std::optional<std::pair<BitString, BitString>> findPrefixViolation(std::span<const BitString> codewords);

bool checkPrefixFree(std::span<const BitString> codewords);

// Exact Σ 2^-|p|.
Dyadic kraftSum(std::span<const BitString> codewords);

// A finite presentation of a prefix-free machine: the entries of its graph in
// enumeration order. Order is part of the value; constructions that depend on
// "the first entry for s" read it from here.
class MachineGraph {
 public:
  MachineGraph() = default;
  // Validates distinct codewords and prefix-freeness; throws
  // DuplicateCodewordError or PrefixViolationError.
  explicit MachineGraph(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  std::vector<BitString> domain() const;
  // Range symbols in order of first appearance.
  const std::vector<BitString>& range() const noexcept { return range_; }
  // Index of the first entry carrying s.
  std::optional<std::size_t> firstIndex(const BitString& s) const;
  std::size_t maxCodewordLength() const noexcept { return maxCodewordLength_; }

  std::optional<BitString> evaluate(const BitString& p) const;
  // Codewords mapping to s, in enumeration order.
  std::vector<BitString> preimage(const BitString& s) const;
  std::size_t preimageSize(const BitString& s) const;
  Complexity complexityOf(const BitString& s) const;
  // Length-lex least codeword for s.
  std::optional<BitString> canonicalProgram(const BitString& s) const;

  Dyadic kraft() const;

  // Serializes in the machine-graph file format.
  std::string toText() const;

  friend bool operator==(const MachineGraph& a, const MachineGraph& b) { return a.entries_ == b.entries_; }

 private:
  struct SymbolInfo {
    std::vector<std::size_t> indices;
    std::size_t canonical = 0;
  };

  std::vector<Entry> entries_;
  std::unordered_map<BitString, std::size_t> byCodeword_;
  std::unordered_map<BitString, SymbolInfo> bySymbol_;
  std::vector<BitString> range_;
  std::size_t maxCodewordLength_ = 0;
};

// Parses the machine-graph file format without validating the machine
// invariants. Throws ParseError.
std::vector<Entry> parseGraphEntries(std::string_view text);

MachineGraph loadGraph(std::string_view text);
MachineGraph loadGraph(std::istream& in);

// #{s : H_C(s) < n} <= 2^n - 1 for every n in [0, maxN].
bool countingBoundHolds(const MachineGraph& m, std::size_t maxN);

}  // namespace prefixlab
