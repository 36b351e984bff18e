#include "prefixlab/transform.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "prefixlab/census.hpp"
#include "prefixlab/error.hpp"

namespace prefixlab {

FinitePreimageResult finitePreimageTransform(const MachineGraph& c) {
  const auto& entries = c.entries();
  std::vector<Entry> kept;
  kept.reserve(entries.size());
  std::map<BitString, Natural> bound;
  for (const auto& e : entries) {
    const std::size_t firstLength = entries[*c.firstIndex(e.symbol)].codeword.size();
    if (e.codeword.size() <= firstLength) kept.push_back(e);
    if (!bound.contains(e.symbol)) bound.emplace(e.symbol, (Natural(1) << (firstLength + 1)) - 1);
  }
  return {MachineGraph(std::move(kept)), std::move(bound)};
}

FinitePreimageResult finitePreimageOfUniversal(const BudgetedUniversal& u) {
  return finitePreimageTransform(u.graph());
}

InfinitePreimageChoice chooseDuplicatedPreimage(const MachineGraph& v) {
  for (const auto& s : v.range()) {
    std::vector<BitString> pre = v.preimage(s);
    if (pre.size() < 2) continue;
    auto [lo, hi] = std::minmax_element(pre.begin(), pre.end());
    return {s, *hi, *lo};
  }
  throw PreconditionError("no symbol has two or more codewords");
}

namespace {

BitString paddedCodeword(const BitString& q, const Natural& zeros) {
  BitString w = q;
  w.append(BitString::zeros(zeros.convert_to<std::size_t>()));
  w.push_back(true);
  return w;
}

}  // namespace

MachineGraph infinitePreimageTransform(const MachineGraph& v, std::size_t perSymbolBudget,
                                       std::uint64_t emittedBitLimit) {
  const InfinitePreimageChoice choice = chooseDuplicatedPreimage(v);
  const BitString& q = choice.q;

  std::uint64_t emitted = 0;
  auto charge = [&](const Natural& zeros) {
    const Natural bits = Natural(q.size()) + zeros + 1;
    if (bits > emittedBitLimit - emitted) {
      throw BudgetOverflowError("infinite-preimage construction exceeds " + std::to_string(emittedBitLimit) +
                                " emitted codeword bits");
    }
    emitted += bits.convert_to<std::uint64_t>();
  };

  std::vector<Entry> out;
  for (const auto& e : v.entries()) {
    if (e.codeword != q) out.push_back(e);
  }

  const Rank s0Rank = rankOf(choice.symbol);
  for (std::size_t i = 0; i < perSymbolBudget; ++i) {
    const Natural k = cantorPair(s0Rank, Natural(i));
    charge(k);
    out.push_back({paddedCodeword(q, k), choice.symbol});
  }

  for (const auto& s : v.range()) {
    if (s == choice.symbol) continue;
    const Rank sRank = rankOf(s);
    const std::size_t h = v.complexityOf(s).value();
    std::size_t admitted = 0;
    for (std::size_t i = 0; admitted < perSymbolBudget; ++i) {
      const Natural k = cantorPair(sRank, Natural(i));
      if (Natural(h) > Natural(q.size()) + k + 1) continue;
      charge(k);
      out.push_back({paddedCodeword(q, k), s});
      ++admitted;
    }
  }
  return MachineGraph(std::move(out));
}

MachineGraph denseOptimalConstruction(const MachineGraph& uGraph, std::size_t maxCodewordLength,
                                      std::uint64_t ceiling) {
  struct Seed {
    const BitString* q;
    BitString s;
    std::size_t n;
  };
  std::vector<Seed> seeds;
  Natural total = 0;
  for (const auto& e : uGraph.entries()) {
    auto [first, s] = unpair(e.symbol);
    const Rank n = rankOf(first);
    if (n < e.codeword.size() || n > maxCodewordLength) continue;
    const std::size_t len = n.convert_to<std::size_t>();
    total += Natural(1) << (len - e.codeword.size());
    seeds.push_back({&e.codeword, std::move(s), len});
  }
  if (total > ceiling) {
    throw BudgetOverflowError("dense construction would emit " + total.str() + " codewords, above the ceiling of " +
                              std::to_string(ceiling));
  }

  std::vector<Entry> out;
  out.reserve(total.convert_to<std::size_t>());
  for (const auto& seed : seeds) {
    const std::size_t padBits = seed.n - seed.q->size();
    const std::uint64_t pads = std::uint64_t{1} << padBits;
    for (std::uint64_t t = 0; t < pads; ++t) {
      BitString w = *seed.q;
      for (std::size_t b = padBits; b-- > 0;) w.push_back(((t >> b) & 1) != 0);
      out.push_back({std::move(w), seed.s});
    }
  }
  return MachineGraph(std::move(out));
}

MachineGraph denseOptimalConstruction(const BudgetedUniversal& u, std::size_t maxCodewordLength) {
  return denseOptimalConstruction(u.graph(), maxCodewordLength, u.budgets().ceiling);
}

std::map<BitString, Dyadic> semiMeasureOfCensus(const MachineGraph& c, std::size_t maxN) {
  const CensusTable census = CensusTable::build(c, maxN);
  std::map<BitString, Dyadic> f;
  for (const auto& s : census.symbols()) {
    for (std::size_t n = 0; n <= maxN; ++n) {
      f.emplace(pair(stringOf(std::uint64_t{n}), s), Dyadic(census.count(n, s), n + 1));
    }
  }
  return f;
}

TelescopingCheck telescopingIdentity(const MachineGraph& c, std::size_t maxN) {
  TelescopingCheck check;
  for (const auto& [key, value] : semiMeasureOfCensus(c, maxN)) check.truncated += value;
  const CensusTable census = CensusTable::build(c, maxN);
  for (const auto& s : census.symbols()) check.tail += Dyadic(census.count(maxN, s), maxN + 1);
  check.kraft = c.kraft();
  return check;
}

std::vector<WitnessRow> optimalityWitnessReport(const MachineGraph& c, const BudgetedUniversal& u, std::size_t n0) {
  std::vector<WitnessRow> rows;
  for (const auto& s : u.graph().range()) {
    WitnessRow row{s, u.graph().complexityOf(s), std::nullopt};
    if (auto p = c.canonicalProgram(s); p && p->size() <= row.hTilde.value() + n0) row.witness = *p;
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const WitnessRow& a, const WitnessRow& b) {
    return std::tie(a.hTilde, a.symbol) < std::tie(b.hTilde, b.symbol);
  });
  return rows;
}

}  // namespace prefixlab
