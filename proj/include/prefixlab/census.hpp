#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "prefixlab/bitstring.hpp"
#include "prefixlab/machine.hpp"
#include "prefixlab/universal.hpp"

namespace prefixlab {

// FNV-1a 64 of the graph's file-format serialization, as 16 hex digits.
std::string machineId(const MachineGraph& m);

// #S_C(n, s) = #{p : |p| <= n, C(p) = s} for n <= maxN, stored sparsely by
// range symbol. Absent symbols count zero.
class CensusTable {
 public:
  struct Row {
    std::size_t n;
    BitString symbol;
    std::uint64_t count;
  };

  static CensusTable build(const MachineGraph& c, std::size_t maxN);

  std::size_t maxN() const noexcept { return maxN_; }
  const std::string& machineId() const noexcept { return machineId_; }

  // n beyond maxN is clamped to maxN.
  std::uint64_t count(std::size_t n, const BitString& s) const;
  // #{p : |p| = l, C(p) = s}
  std::uint64_t slice(std::size_t l, const BitString& s) const;
  // Σ_s count(n, s)
  std::uint64_t domainCount(std::size_t n) const;

  // Range symbols in length-lex order.
  std::vector<BitString> symbols() const;
  // Nonzero counts sorted by (n, rankOf(s)).
  std::vector<Row> rows() const;

  std::string toJson() const;

 private:
  std::size_t maxN_ = 0;
  std::string machineId_;
  std::map<BitString, std::vector<std::uint64_t>> cumulative_;
};

std::uint64_t sliceCounts(const MachineGraph& c, std::size_t l, const BitString& s);
std::uint64_t domainCount(const MachineGraph& c, std::size_t n);

struct EnvelopeRow {
  std::size_t n;
  BitString symbol;
  std::uint64_t count;
  Complexity hTilde;  // approxJointH(n, s) at u's budgets
  // log2 count - (n - hTilde); +infinity when hTilde is infinite.
  double logRatio;
};

// Exploratory comparison of #S_C(n,s) with 2^(n - H~(n,s)). Rows are sorted by
// (n, rankOf(s)). Informational only: H~ bounds H from above.
std::vector<EnvelopeRow> envelopeReport(const BudgetedUniversal& u, const MachineGraph& c, std::size_t maxN);

// TSV with a leading "# non-normative" line.
std::string envelopeTsv(const std::vector<EnvelopeRow>& rows, const std::string& sourceId);

}  // namespace prefixlab
