#include "prefixlab/census.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace prefixlab {

std::string machineId(const MachineGraph& m) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : m.toText()) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

CensusTable CensusTable::build(const MachineGraph& c, std::size_t maxN) {
  CensusTable table;
  table.maxN_ = maxN;
  table.machineId_ = prefixlab::machineId(c);
  for (const auto& s : c.range()) table.cumulative_.emplace(s, std::vector<std::uint64_t>(maxN + 1, 0));
  for (const auto& e : c.entries()) {
    if (e.codeword.size() <= maxN) ++table.cumulative_[e.symbol][e.codeword.size()];
  }
  for (auto& [s, counts] : table.cumulative_) {
    for (std::size_t n = 1; n <= maxN; ++n) counts[n] += counts[n - 1];
  }
  return table;
}

std::uint64_t CensusTable::count(std::size_t n, const BitString& s) const {
  auto it = cumulative_.find(s);
  if (it == cumulative_.end()) return 0;
  return it->second[std::min(n, maxN_)];
}

std::uint64_t CensusTable::slice(std::size_t l, const BitString& s) const {
  if (l > maxN_) return 0;
  return count(l, s) - (l == 0 ? 0 : count(l - 1, s));
}

std::uint64_t CensusTable::domainCount(std::size_t n) const {
  std::uint64_t total = 0;
  for (const auto& [s, counts] : cumulative_) total += counts[std::min(n, maxN_)];
  return total;
}

std::vector<BitString> CensusTable::symbols() const {
  std::vector<BitString> out;
  out.reserve(cumulative_.size());
  for (const auto& [s, counts] : cumulative_) out.push_back(s);
  return out;
}

std::vector<CensusTable::Row> CensusTable::rows() const {
  std::vector<Row> out;
  for (std::size_t n = 0; n <= maxN_; ++n) {
    for (const auto& [s, counts] : cumulative_) {
      if (counts[n] != 0) out.push_back({n, s, counts[n]});
    }
  }
  return out;
}

std::string CensusTable::toJson() const {
  nlohmann::ordered_json doc;
  doc["machine"] = machineId_;
  doc["maxN"] = maxN_;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows()) {
    doc["rows"].push_back({{"n", row.n}, {"s", row.symbol.toText()}, {"count", row.count}});
  }
  return doc.dump(2) + "\n";
}

std::uint64_t sliceCounts(const MachineGraph& c, std::size_t l, const BitString& s) {
  std::uint64_t count = 0;
  for (const auto& p : c.preimage(s)) count += p.size() == l ? 1 : 0;
  return count;
}

std::uint64_t domainCount(const MachineGraph& c, std::size_t n) {
  std::uint64_t count = 0;
  for (const auto& e : c.entries()) count += e.codeword.size() <= n ? 1 : 0;
  return count;
}

std::vector<EnvelopeRow> envelopeReport(const BudgetedUniversal& u, const MachineGraph& c, std::size_t maxN) {
  const CensusTable census = CensusTable::build(c, maxN);
  std::vector<EnvelopeRow> out;
  for (const auto& row : census.rows()) {
    const Complexity h = u.approxJointH(Natural(row.n), row.symbol).upperBound;
    const double ratio = h.isFinite() ? std::log2(static_cast<double>(row.count)) -
                                            (static_cast<double>(row.n) - static_cast<double>(h.value()))
                                      : std::numeric_limits<double>::infinity();
    out.push_back({row.n, row.symbol, row.count, h, ratio});
  }
  return out;
}

std::string envelopeTsv(const std::vector<EnvelopeRow>& rows, const std::string& sourceId) {
  std::ostringstream out;
  out << "# non-normative: H~ is an upper bound on H, so these rows track slack only and test nothing\n";
  out << "# machine " << sourceId << "\n";
  out << "n\ts\tcount\th_tilde\tlog_ratio\n";
  for (const auto& r : rows) {
    out << r.n << '\t' << r.symbol.toText() << '\t' << r.count << '\t' << r.hTilde.toString() << '\t';
    if (std::isinf(r.logRatio)) {
      out << "inf";
    } else {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", r.logRatio);
      out << buf;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace prefixlab
