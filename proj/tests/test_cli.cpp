#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "prefixlab/cli.hpp"
#include "prefixlab/machine.hpp"

namespace fs = std::filesystem;
using namespace prefixlab;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "prefixlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("prefixlab_cli_" + std::to_string(::getpid()))) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string file(const std::string& name, const std::string& content = {}) const {
    const fs::path p = path_ / name;
    if (!content.empty()) std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }

 private:
  fs::path path_;
};

const char* kThreeEntry = "00\t-\n01\t-\n1\t0\n";

}  // namespace

TEST_CASE("enumerate") {
  TempDir dir;
  const std::string a = dir.file("a.mg");
  const std::string b = dir.file("b.mg");
  CHECK(run({"enumerate", "--max-len", "12", "--max-steps", "1000", "-o", a}).code == cli::kOk);
  CHECK(run({"enumerate", "--max-len", "12", "--max-steps", "1000", "-o", b}).code == cli::kOk);
  CHECK(slurp(a) == slurp(b));
  const MachineGraph g = loadGraph(slurp(a));
  CHECK(checkPrefixFree(g.domain()));
  CHECK_FALSE(fs::exists(a + ".tmp"));

  const Outcome stdoutRun = run({"enumerate", "--max-len", "12", "--max-steps", "1000"});
  CHECK(stdoutRun.out == slurp(a));

  CHECK(run({"enumerate", "--max-len", "-1"}).code == cli::kUsage);
  CHECK(run({"enumerate", "--bogus"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
  Outcome overflow = run({"enumerate", "--max-len", "30"});
  CHECK(overflow.code == cli::kResourceCeiling);
  CHECK(overflow.err.find("ceiling") != std::string::npos);
  CHECK(run({"enumerate", "--max-len", "10", "--ceiling", "100"}).code == cli::kResourceCeiling);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("transform finite-preimage writes the bound sidecar") {
  TempDir dir;
  const std::string in = dir.file("c.mg", kThreeEntry);
  const std::string out = dir.file("d.mg");
  REQUIRE(run({"transform", "finite-preimage", in, "-o", out}).code == cli::kOk);
  CHECK(slurp(out) == kThreeEntry);
  const auto sidecar = nlohmann::json::parse(slurp(out + ".json"));
  CHECK(sidecar == nlohmann::json::parse(R"({"bound": {"-": 7, "0": 3}})"));
}

TEST_CASE("transform infinite-preimage and dense-optimal") {
  TempDir dir;
  const std::string singleton = dir.file("s.mg", "0\t-\n1\t0\n");
  CHECK(run({"transform", "infinite-preimage", singleton}).code == cli::kPreconditionUnmet);

  const std::string dup = dir.file("v.mg", "00\t-\n01\t-\n");
  const Outcome w = run({"transform", "infinite-preimage", dup, "--budget", "2"});
  CHECK(w.code == cli::kOk);
  CHECK(w.out == "00\t-\n011\t-\n01001\t-\n");

  const std::string empty = dir.file("e.mg");
  std::ofstream(empty).close();
  const std::string out = dir.file("dense.mg");
  CHECK(run({"transform", "dense-optimal", empty, "-o", out}).code == cli::kOk);
  CHECK(slurp(out).empty());

  const std::string bad = dir.file("bad.mg", "0\t-\n01\t0\n");
  const Outcome invalid = run({"transform", "finite-preimage", bad});
  CHECK(invalid.code == cli::kInputInvalid);
  CHECK(invalid.err.find("0 is a prefix of 01") != std::string::npos);

  CHECK(run({"transform", "sideways", dup}).code == cli::kUsage);
  CHECK(run({"transform", "finite-preimage", dup, dup}).code == cli::kUsage);
  CHECK(run({"census", dup, dup}).code == cli::kUsage);
  CHECK(run({"transform", "finite-preimage", dir.file("missing.mg")}).code == cli::kInputInvalid);
}

TEST_CASE("census and envelope") {
  TempDir dir;
  const std::string in = dir.file("c.mg", kThreeEntry);
  const Outcome census = run({"census", in, "--max-n", "2"});
  REQUIRE(census.code == cli::kOk);
  const auto doc = nlohmann::json::parse(census.out);
  CHECK(doc["maxN"] == 2);
  CHECK(doc["rows"].size() == 3);

  const Outcome measure = run({"census", in, "--semi-measure"});
  REQUIRE(measure.code == cli::kOk);
  const auto sm = nlohmann::json::parse(measure.out);
  CHECK(sm["exact"] == true);
  CHECK(sm["kraft"] == nlohmann::json::parse(R"({"num": "1", "exp": 0})"));
  // f(b(0, λ)) = #S(0, λ) 2^-1 = 0.
  CHECK(sm["values"]["-"] == nlohmann::json::parse(R"({"num": "0", "exp": 0})"));

  const Outcome envelope = run({"envelope", in, "--max-len", "10", "--max-steps", "200"});
  REQUIRE(envelope.code == cli::kOk);
  CHECK(envelope.out.rfind("# non-normative", 0) == 0);

  const Outcome witness = run({"envelope", in, "--max-len", "6", "--max-steps", "100", "--n0", "2"});
  REQUIRE(witness.code == cli::kOk);
  CHECK(witness.out.find("s\th_tilde\twitness\n") != std::string::npos);
}

TEST_CASE("verify") {
  TempDir dir;
  const std::string u = dir.file("u.mg");
  REQUIRE(run({"enumerate", "--max-len", "12", "--max-steps", "1000", "-o", u}).code == cli::kOk);
  const Outcome ok = run({"verify", u});
  CHECK(ok.code == cli::kOk);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(ok.out.find("PASS prefix-free") != std::string::npos);
  CHECK(ok.out.find("PASS counting-bound") != std::string::npos);

  const std::string corrupt = dir.file("bad.mg", "11\t-\n0\t-\n01\t0\n");
  const Outcome bad = run({"verify", corrupt});
  CHECK(bad.code == cli::kVerificationFailed);
  CHECK(bad.out.find("FAIL prefix-free: 0 is a prefix of 01") != std::string::npos);

  const std::string dupe = dir.file("dupe.mg", "0\t-\n0\t1\n");
  CHECK(run({"verify", dupe}).code == cli::kVerificationFailed);

  const std::string d = dir.file("d.mg");
  REQUIRE(run({"transform", "finite-preimage", u, "-o", d}).code == cli::kOk);
  const Outcome preserved = run({"verify", d, u});
  CHECK(preserved.code == cli::kOk);
  CHECK(preserved.out.find("PASS complexity-preserved") != std::string::npos);

  const std::string other = dir.file("o.mg", "0\t-\n");
  const Outcome mismatch = run({"verify", other, u});
  CHECK(mismatch.code == cli::kVerificationFailed);
  CHECK(mismatch.out.find("FAIL complexity-preserved") != std::string::npos);

  CHECK(run({"verify", dir.file("missing.mg")}).code == cli::kInputInvalid);
  CHECK(run({"verify", dir.file("junk.mg", "zz\n")}).code == cli::kInputInvalid);
}
