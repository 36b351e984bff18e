#include "prefixlab/cli.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "prefixlab/bitstring.hpp"
#include "prefixlab/census.hpp"
#include "prefixlab/error.hpp"
#include "prefixlab/machine.hpp"
#include "prefixlab/transform.hpp"
#include "prefixlab/universal.hpp"

namespace prefixlab::cli {

namespace {

using json = nlohmann::ordered_json;

struct Config {
  long long maxLen = 12;
  long long maxSteps = 1000;
  long long ceiling = -1;  // unset: defaultCeiling()
  long long budget = 8;
  long long maxN = -1;     // unset: the input's longest codeword
  long long n0 = -1;       // unset: no witness report
  bool semiMeasure = false;
  std::string output;
  std::vector<std::string> inputs;
  std::string kind;
};

class InputError : public Error {
 public:
  using Error::Error;
};

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Writes to path via a temporary sibling and a rename; "-" or empty writes to out.
void writeOutput(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw InputError("cannot write " + path);
    file << content;
    if (!file.flush()) throw InputError("cannot write " + path);
  }
  std::filesystem::rename(tmp, path);
}

Budgets budgetsOf(const Config& cfg) {
  return {static_cast<std::size_t>(cfg.maxLen), static_cast<std::uint64_t>(cfg.maxSteps),
          cfg.ceiling < 0 ? defaultCeiling() : static_cast<std::uint64_t>(cfg.ceiling)};
}

std::size_t maxNOf(const Config& cfg, const MachineGraph& m) {
  return cfg.maxN < 0 ? m.maxCodewordLength() : static_cast<std::size_t>(cfg.maxN);
}

MachineGraph loadInput(const Config& cfg, std::size_t index = 0) {
  if (cfg.inputs.size() <= index) throw InputError("missing input path");
  return loadGraph(readFile(cfg.inputs[index]));
}

json dyadicJson(const Dyadic& d) { return {{"num", d.numerator().str()}, {"exp", d.exponent()}}; }

json naturalJson(const Natural& n) {
  if (n <= std::numeric_limits<std::uint64_t>::max()) return n.convert_to<std::uint64_t>();
  return n.str();
}

int cmdEnumerate(const Config& cfg, std::ostream& out) {
  writeOutput(cfg.output, enumerate(budgetsOf(cfg)).toText(), out);
  return kOk;
}

int cmdTransform(const Config& cfg, std::ostream& out) {
  const MachineGraph input = loadInput(cfg);
  if (cfg.kind == "finite-preimage") {
    const FinitePreimageResult result = finitePreimageTransform(input);
    writeOutput(cfg.output, result.machine.toText(), out);
    if (!cfg.output.empty() && cfg.output != "-") {
      json bound = json::object();
      for (const auto& [s, f] : result.bound) bound[s.toText()] = naturalJson(f);
      writeOutput(cfg.output + ".json", json{{"bound", bound}}.dump(2) + "\n", out);
    }
  } else if (cfg.kind == "infinite-preimage") {
    writeOutput(cfg.output, infinitePreimageTransform(input, static_cast<std::size_t>(cfg.budget)).toText(), out);
  } else {
    const Budgets b = budgetsOf(cfg);
    writeOutput(cfg.output, denseOptimalConstruction(input, b.maxProgramLength, b.ceiling).toText(), out);
  }
  return kOk;
}

int cmdCensus(const Config& cfg, std::ostream& out) {
  const MachineGraph input = loadInput(cfg);
  const std::size_t maxN = maxNOf(cfg, input);
  if (!cfg.semiMeasure) {
    writeOutput(cfg.output, CensusTable::build(input, maxN).toJson(), out);
    return kOk;
  }
  json values = json::object();
  for (const auto& [key, value] : semiMeasureOfCensus(input, maxN)) values[key.toText()] = dyadicJson(value);
  const TelescopingCheck check = telescopingIdentity(input, maxN);
  json doc{{"machine", machineId(input)},
           {"maxN", maxN},
           {"values", values},
           {"truncated", dyadicJson(check.truncated)},
           {"tail", dyadicJson(check.tail)},
           {"kraft", dyadicJson(check.kraft)},
           {"exact", check.exact()}};
  writeOutput(cfg.output, doc.dump(2) + "\n", out);
  return kOk;
}

int cmdEnvelope(const Config& cfg, std::ostream& out) {
  const MachineGraph input = loadInput(cfg);
  const BudgetedUniversal u(budgetsOf(cfg));
  if (cfg.n0 >= 0) {
    std::ostringstream tsv;
    tsv << "# non-normative: witness search with user-supplied n0 = " << cfg.n0 << "\n";
    tsv << "s\th_tilde\twitness\n";
    for (const auto& row : optimalityWitnessReport(input, u, static_cast<std::size_t>(cfg.n0))) {
      tsv << row.symbol.toText() << '\t' << row.hTilde.toString() << '\t'
          << (row.witness ? row.witness->toText() : std::string("none")) << '\n';
    }
    writeOutput(cfg.output, tsv.str(), out);
    return kOk;
  }
  const auto rows = envelopeReport(u, input, maxNOf(cfg, input));
  writeOutput(cfg.output, envelopeTsv(rows, machineId(input)), out);
  return kOk;
}

// Census against a rescan of every string of length <= n through evaluate.
bool naiveRescanAgrees(const MachineGraph& m, const CensusTable& census, std::size_t limit) {
  std::map<std::pair<std::size_t, BitString>, std::uint64_t> exact;
  BitString p;
  for (std::size_t len = 0; len <= limit; ++len) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      p = BitString();
      for (std::size_t b = len; b-- > 0;) p.push_back(((v >> b) & 1) != 0);
      if (auto s = m.evaluate(p)) ++exact[{len, *s}];
    }
  }
  for (const auto& s : m.range()) {
    std::uint64_t running = 0;
    for (std::size_t n = 0; n <= limit; ++n) {
      auto it = exact.find({n, s});
      running += it == exact.end() ? 0 : it->second;
      if (census.count(n, s) != running) return false;
    }
  }
  return true;
}

int cmdVerify(const Config& cfg, std::ostream& out) {
  if (cfg.inputs.empty()) throw InputError("missing input path");
  std::vector<Entry> entries = parseGraphEntries(readFile(cfg.inputs[0]));
  std::optional<MachineGraph> source;
  if (cfg.inputs.size() > 1) source = loadInput(cfg, 1);

  bool allPass = true;
  auto report = [&](const std::string& name, bool pass, const std::string& detail = {}) {
    out << (pass ? "PASS " : "FAIL ") << name;
    if (!detail.empty()) out << ": " << detail;
    out << '\n';
    allPass = allPass && pass;
  };
  auto skip = [&](const std::string& name) {
    out << "SKIP " << name << ": machine invariants violated\n";
    allPass = false;
  };

  std::vector<BitString> words;
  words.reserve(entries.size());
  for (const auto& e : entries) words.push_back(e.codeword);

  std::optional<std::string> duplicate;
  std::vector<BitString> unique;
  {
    std::set<BitString> seen;
    for (const auto& w : words) {
      if (seen.insert(w).second) {
        unique.push_back(w);
      } else if (!duplicate) {
        duplicate = w.toText();
      }
    }
  }
  report("distinct-codewords", !duplicate, duplicate ? "duplicate " + *duplicate : "");

  const auto violation = findPrefixViolation(unique);
  report("prefix-free", !violation,
         violation ? violation->first.toText() + " is a prefix of " + violation->second.toText() : "");

  const Dyadic kraft = kraftSum(words);
  report("kraft<=1", kraft <= Dyadic::one(), kraft.toString());

  std::optional<MachineGraph> machine;
  if (!duplicate && !violation) machine.emplace(std::move(entries));
  if (!machine) {
    skip("census-reconciliation");
    skip("counting-bound");
    if (source) skip("complexity-preserved");
    return allPass ? kOk : kVerificationFailed;
  }

  const std::size_t maxN = maxNOf(cfg, *machine);
  const CensusTable census = CensusTable::build(*machine, std::max(maxN, machine->maxCodewordLength()));
  Dyadic sliced;
  std::uint64_t marginal = 0;
  for (const auto& s : census.symbols()) {
    for (std::size_t l = 0; l <= census.maxN(); ++l) sliced += Dyadic(census.slice(l, s), l);
    marginal += census.count(census.maxN(), s);
  }
  const bool rescan = naiveRescanAgrees(*machine, census, std::min<std::size_t>(census.maxN(), 12));
  report("census-reconciliation",
         sliced == machine->kraft() && marginal == domainCount(*machine, census.maxN()) && rescan);

  report("counting-bound", countingBoundHolds(*machine, 16));

  if (source) {
    std::set<BitString> symbols(source->range().begin(), source->range().end());
    symbols.insert(machine->range().begin(), machine->range().end());
    std::optional<std::string> mismatch;
    for (const auto& s : symbols) {
      if (machine->complexityOf(s) != source->complexityOf(s)) {
        mismatch = s.toText() + ": " + machine->complexityOf(s).toString() + " vs " +
                   source->complexityOf(s).toString();
        break;
      }
    }
    report("complexity-preserved", !mismatch, mismatch.value_or(""));
  }
  return allPass ? kOk : kVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Workbench for finite presentations of prefix-free machines", "prefixlab"};
  app.require_subcommand(1);

  auto addBudgets = [&](CLI::App* sub) {
    sub->add_option("--max-len", cfg.maxLen, "Maximum program length in bits")->check(CLI::NonNegativeNumber);
    sub->add_option("--max-steps", cfg.maxSteps, "Interpreter step budget")->check(CLI::NonNegativeNumber);
    sub->add_option("--ceiling", cfg.ceiling, "Enumeration ceiling (candidate programs)")
        ->check(CLI::NonNegativeNumber);
  };
  auto addOutput = [&](CLI::App* sub) { sub->add_option("-o,--output", cfg.output, "Output path (default stdout)"); };

  CLI::App* enumerateCmd = app.add_subcommand("enumerate", "Write U's enumerated graph");
  addBudgets(enumerateCmd);
  addOutput(enumerateCmd);

  CLI::App* transformCmd = app.add_subcommand("transform", "Apply a machine construction");
  transformCmd->add_option("kind", cfg.kind, "finite-preimage | infinite-preimage | dense-optimal")
      ->required()
      ->check(CLI::IsMember({"finite-preimage", "infinite-preimage", "dense-optimal"}));
  transformCmd->add_option("input", cfg.inputs, "Input machine graph")->required()->expected(1);
  transformCmd->add_option("--budget", cfg.budget, "Per-symbol budget for infinite-preimage")
      ->check(CLI::NonNegativeNumber);
  addBudgets(transformCmd);
  addOutput(transformCmd);

  CLI::App* censusCmd = app.add_subcommand("census", "Codeword census as JSON");
  censusCmd->add_option("input", cfg.inputs, "Input machine graph")->required()->expected(1);
  censusCmd->add_option("--max-n", cfg.maxN, "Largest length n")->check(CLI::NonNegativeNumber);
  censusCmd->add_flag("--semi-measure", cfg.semiMeasure, "Emit #S(n,s) 2^(-n-1) keyed by b(n,s)");
  addOutput(censusCmd);

  CLI::App* envelopeCmd = app.add_subcommand("envelope", "Non-normative census envelope report (TSV)");
  envelopeCmd->add_option("input", cfg.inputs, "Input machine graph")->required()->expected(1);
  envelopeCmd->add_option("--max-n", cfg.maxN, "Largest length n")->check(CLI::NonNegativeNumber);
  envelopeCmd->add_option("--n0", cfg.n0, "Emit the witness search with this slack instead")
      ->check(CLI::NonNegativeNumber);
  addBudgets(envelopeCmd);
  addOutput(envelopeCmd);

  CLI::App* verifyCmd = app.add_subcommand("verify", "Check machine invariants");
  verifyCmd->add_option("inputs", cfg.inputs, "MACHINE [SOURCE]: SOURCE enables the complexity check")
      ->required()
      ->expected(1, 2);
  verifyCmd->add_option("--max-n", cfg.maxN, "Largest census length")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "prefixlab: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*enumerateCmd) return cmdEnumerate(cfg, out);
    if (*transformCmd) return cmdTransform(cfg, out);
    if (*censusCmd) return cmdCensus(cfg, out);
    if (*envelopeCmd) return cmdEnvelope(cfg, out);
    return cmdVerify(cfg, out);
  } catch (const BudgetOverflowError& e) {
    err << "prefixlab: " << e.what() << "\n";
    return kResourceCeiling;
  } catch (const PreconditionError& e) {
    err << "prefixlab: " << e.what() << "\n";
    return kPreconditionUnmet;
  } catch (const Error& e) {
    err << "prefixlab: " << e.what() << "\n";
    return kInputInvalid;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "prefixlab: " << e.what() << "\n";
    return kInputInvalid;
  }
}

}  // namespace prefixlab::cli
