#include "prefixlab/machine.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <iterator>
#include <map>
#include <sstream>

#include "prefixlab/error.hpp"

namespace prefixlab {

namespace {

struct TrieNode {
  std::array<std::int32_t, 2> child{-1, -1};
  std::int32_t terminal = -1;  // index of the codeword ending here
};

}  // namespace

std::optional<std::pair<BitString, BitString>> findPrefixViolation(std::span<const BitString> codewords) {
  std::vector<TrieNode> nodes(1);
  for (std::size_t i = 0; i < codewords.size(); ++i) {
    const BitString& w = codewords[i];
    std::size_t node = 0;
    for (std::size_t d = 0; d < w.size(); ++d) {
      if (nodes[node].terminal >= 0) return std::pair{codewords[nodes[node].terminal], w};
      const int bit = w[d] ? 1 : 0;
      if (nodes[node].child[bit] < 0) {
        nodes[node].child[bit] = static_cast<std::int32_t>(nodes.size());
        nodes.emplace_back();
      }
      node = static_cast<std::size_t>(nodes[node].child[bit]);
    }
    if (nodes[node].terminal >= 0) return std::pair{codewords[nodes[node].terminal], w};
    // Some earlier codeword passes through here, so w is a proper prefix of it.
    for (int bit = 0; bit < 2; ++bit) {
      if (nodes[node].child[bit] < 0) continue;
      std::size_t probe = static_cast<std::size_t>(nodes[node].child[bit]);
      while (nodes[probe].terminal < 0) {
        probe = static_cast<std::size_t>(nodes[probe].child[0] >= 0 ? nodes[probe].child[0] : nodes[probe].child[1]);
      }
      return std::pair{w, codewords[nodes[probe].terminal]};
    }
    nodes[node].terminal = static_cast<std::int32_t>(i);
  }
  return std::nullopt;
}

bool checkPrefixFree(std::span<const BitString> codewords) { return !findPrefixViolation(codewords).has_value(); }

Dyadic kraftSum(std::span<const BitString> codewords) {
  // Histogram by length, then one pass of carries from the longest length.
  std::size_t maxLen = 0;
  for (const auto& w : codewords) maxLen = std::max(maxLen, w.size());
  std::vector<std::uint64_t> byLength(maxLen + 1, 0);
  for (const auto& w : codewords) ++byLength[w.size()];
  Natural numerator = 0;
  for (std::size_t len = 0; len <= maxLen; ++len) {
    if (byLength[len] != 0) numerator += Natural(byLength[len]) << (maxLen - len);
  }
  return Dyadic(numerator, maxLen);
}

MachineGraph::MachineGraph(std::vector<Entry> entries) : entries_(std::move(entries)) {
  byCodeword_.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const Entry& e = entries_[i];
    if (!byCodeword_.emplace(e.codeword, i).second) throw DuplicateCodewordError(e.codeword.toText());
  }
  std::vector<BitString> words = domain();
  if (auto bad = findPrefixViolation(words)) throw PrefixViolationError(bad->first.toText(), bad->second.toText());

  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const Entry& e = entries_[i];
    maxCodewordLength_ = std::max(maxCodewordLength_, e.codeword.size());
    auto [it, inserted] = bySymbol_.try_emplace(e.symbol);
    SymbolInfo& info = it->second;
    if (inserted) {
      range_.push_back(e.symbol);
      info.canonical = i;
    } else if (e.codeword < entries_[info.canonical].codeword) {
      info.canonical = i;
    }
    info.indices.push_back(i);
  }
}

std::vector<BitString> MachineGraph::domain() const {
  std::vector<BitString> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.codeword);
  return out;
}

std::optional<std::size_t> MachineGraph::firstIndex(const BitString& s) const {
  auto it = bySymbol_.find(s);
  if (it == bySymbol_.end()) return std::nullopt;
  return it->second.indices.front();
}

std::optional<BitString> MachineGraph::evaluate(const BitString& p) const {
  auto it = byCodeword_.find(p);
  if (it == byCodeword_.end()) return std::nullopt;
  return entries_[it->second].symbol;
}

std::vector<BitString> MachineGraph::preimage(const BitString& s) const {
  std::vector<BitString> out;
  auto it = bySymbol_.find(s);
  if (it == bySymbol_.end()) return out;
  out.reserve(it->second.indices.size());
  for (std::size_t i : it->second.indices) out.push_back(entries_[i].codeword);
  return out;
}

std::size_t MachineGraph::preimageSize(const BitString& s) const {
  auto it = bySymbol_.find(s);
  return it == bySymbol_.end() ? 0 : it->second.indices.size();
}

Complexity MachineGraph::complexityOf(const BitString& s) const {
  auto it = bySymbol_.find(s);
  if (it == bySymbol_.end()) return Complexity::infinity();
  return Complexity(entries_[it->second.canonical].codeword.size());
}

std::optional<BitString> MachineGraph::canonicalProgram(const BitString& s) const {
  auto it = bySymbol_.find(s);
  if (it == bySymbol_.end()) return std::nullopt;
  return entries_[it->second.canonical].codeword;
}

Dyadic MachineGraph::kraft() const {
  std::vector<BitString> words = domain();
  return kraftSum(words);
}

std::string MachineGraph::toText() const {
  std::string out;
  for (const auto& e : entries_) {
    out += e.codeword.toText();
    out += '\t';
    out += e.symbol.toText();
    out += '\n';
  }
  return out;
}

std::vector<Entry> parseGraphEntries(std::string_view text) {
  std::vector<Entry> entries;
  std::size_t lineNo = 0;
  while (!text.empty()) {
    ++lineNo;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos || line.find('\t', tab + 1) != std::string_view::npos) {
      throw ParseError("expected <codeword><TAB><symbol>", lineNo);
    }
    const std::string_view cw = line.substr(0, tab);
    const std::string_view sym = line.substr(tab + 1);
    if (cw.empty() || sym.empty()) throw ParseError("empty field (write λ as '-')", lineNo);
    try {
      entries.push_back({BitString::parse(cw), BitString::parse(sym)});
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineNo);
    }
  }
  return entries;
}

MachineGraph loadGraph(std::string_view text) { return MachineGraph(parseGraphEntries(text)); }

MachineGraph loadGraph(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return loadGraph(buffer.str());
}

bool countingBoundHolds(const MachineGraph& m, std::size_t maxN) {
  std::map<std::size_t, std::size_t> byComplexity;
  for (const auto& s : m.range()) ++byComplexity[m.complexityOf(s).value()];
  std::size_t below = 0;  // #{s : H(s) < n}
  auto it = byComplexity.begin();
  for (std::size_t n = 0; n <= maxN; ++n) {
    while (it != byComplexity.end() && it->first < n) below += (it++)->second;
    if (n < 64 && below > (std::size_t{1} << n) - 1) return false;
  }
  return true;
}

}  // namespace prefixlab
