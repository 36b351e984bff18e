#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "prefixlab/bitstring.hpp"
#include "prefixlab/dyadic.hpp"
#include "prefixlab/machine.hpp"
#include "prefixlab/universal.hpp"

namespace prefixlab {

// All constructions below read the input's entry order as its enumeration
// order. Outputs are canonical only relative to that order.

struct FinitePreimageResult {
  MachineGraph machine;
  // f(s) = 2^(|p_g(s)|+1) - 1, where g(s) is the index of the first entry
  // carrying s.
  std::map<BitString, Natural> bound;
};

// Keeps (p_i, s_i) iff |p_i| <= |p_g(s_i)|. Complexity is unchanged for every
// symbol and each preimage becomes bounded by f.
FinitePreimageResult finitePreimageTransform(const MachineGraph& c);

// The optimal-machine variant: the same construction applied to U's graph.
FinitePreimageResult finitePreimageOfUniversal(const BudgetedUniversal& u);

// Cap on the total number of codeword bits the infinite-preimage construction
// may emit.
inline constexpr std::uint64_t kDefaultEmittedBitLimit = std::uint64_t{1} << 28;

struct InfinitePreimageChoice {
  BitString symbol;  // s0
  BitString q;       // dropped, then extended as q 0^k 1
  BitString r;       // keeps H(s0) in place
};

// s0 is the first symbol in enumeration order with two or more codewords;
// q and r are the length-lex max and min of its preimage. Throws
// PreconditionError when every preimage is a singleton.
InfinitePreimageChoice chooseDuplicatedPreimage(const MachineGraph& v);

// Truncation of the construction that makes every preimage infinite:
// s0 loses q and gains q 0^b(s0,i) 1 for i < perSymbolBudget; every other
// range symbol s gains the first perSymbolBudget codewords q 0^b(s,i) 1 whose
// length is at least H_V(s). Exponents b(s,i) are rankOf(pair(s, stringOf(i))).
MachineGraph infinitePreimageTransform(const MachineGraph& v, std::size_t perSymbolBudget,
                                       std::uint64_t emittedBitLimit = kDefaultEmittedBitLimit);

// For each entry (q, y) of uGraph with unpair(y) = (stringOf(n), s) and
// |q| <= n <= maxCodewordLength, emits (q t, s) for every t of length n - |q|.
// Throws BudgetOverflowError if the output would exceed ceiling entries.
MachineGraph denseOptimalConstruction(const MachineGraph& uGraph, std::size_t maxCodewordLength,
                                      std::uint64_t ceiling = kDefaultCeiling);
MachineGraph denseOptimalConstruction(const BudgetedUniversal& u, std::size_t maxCodewordLength);

// f(b(n, s)) = #S_C(n, s) 2^(-n-1) for n <= maxN and each range symbol s,
// keyed by pair(stringOf(n), s). Zero values are included.
std::map<BitString, Dyadic> semiMeasureOfCensus(const MachineGraph& c, std::size_t maxN);

struct TelescopingCheck {
  Dyadic truncated;  // Σ_{n<=maxN} Σ_s #S_C(n,s) 2^(-n-1)
  Dyadic tail;       // Σ_s #S_C(maxN,s) 2^(-maxN-1)
  Dyadic kraft;      // Σ_{p in Dom C} 2^-|p|
  bool exact() const { return truncated + tail == kraft; }
};

// The identity holds exactly whenever maxN >= c.maxCodewordLength().
TelescopingCheck telescopingIdentity(const MachineGraph& c, std::size_t maxN);

struct WitnessRow {
  BitString symbol;
  Complexity hTilde;                // H over u's finite graph
  std::optional<BitString> witness; // shortest codeword of c for s if |p| <= hTilde + n0
};

// Diagnostic only. For every symbol in u's range, looks for a codeword of c
// with length at most hTilde(s) + n0. Rows follow (hTilde, rankOf(s)) order.
std::vector<WitnessRow> optimalityWitnessReport(const MachineGraph& c, const BudgetedUniversal& u, std::size_t n0);

}  // namespace prefixlab
