#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <set>

#include "prefixlab/error.hpp"
#include "prefixlab/universal.hpp"
#include "support/generators.hpp"

using namespace prefixlab;
namespace t = prefixlab::testing;

namespace {

BitString bs(const char* text) { return BitString::parse(text); }

std::size_t literalLength(std::size_t n) {
  return n + 2 * static_cast<std::size_t>(std::floor(std::log2(static_cast<double>(n + 1)))) + 2;
}

std::set<std::pair<BitString, BitString>> entrySet(const MachineGraph& m) {
  std::set<std::pair<BitString, BitString>> out;
  for (const auto& e : m.entries()) out.emplace(e.codeword, e.symbol);
  return out;
}

}  // namespace

TEST_CASE("Elias gamma") {
  CHECK(eliasGamma(1) == bs("1"));
  CHECK(eliasGamma(2) == bs("010"));
  CHECK(eliasGamma(3) == bs("011"));
  CHECK(eliasGamma(7) == bs("00111"));
  CHECK(eliasGamma(8) == bs("0001000"));
  for (std::uint64_t n = 1; n < 2000; ++n) {
    REQUIRE(eliasGamma(n).size() == 2 * static_cast<std::size_t>(std::floor(std::log2(double(n)))) + 1);
  }
  CHECK_THROWS(eliasGamma(0));
}

TEST_CASE("literal channel") {
  const RunResult r = runU(bs("11"), 100);
  CHECK(r.halted);
  REQUIRE(r.output);
  CHECK(r.output->empty());
  CHECK(r.bitsRead == 2);

  CHECK_FALSE(runU(bs("110"), 100).output);
  CHECK_FALSE(runU(bs("111"), 100).output);
  CHECK(literalProgram(bs("01")) == bs("101101"));

  for (const auto& s : t::allStrings(6)) {
    const BitString p = literalProgram(s);
    REQUIRE(p.size() == literalLength(s.size()));
    const RunResult run = runU(p, 1000);
    REQUIRE(run.output == s);
    REQUIRE(run.bitsRead == p.size());
    // A proper prefix of a literal program asks for more input.
    if (!p.empty()) REQUIRE_FALSE(runU(p.prefix(p.size() - 1), 1000).output);
  }
}

TEST_CASE("empty program and step budget") {
  CHECK_FALSE(runU(BitString(), 100).output);
  CHECK_FALSE(runU(bs("11"), 1).output);
  CHECK(runU(bs("11"), 2).output);
  CHECK(runU(bs("11"), 2).steps == 2);
}

TEST_CASE("bytecode golden programs") {
  // 0 | HALT
  RunResult r = runU(bs("0111"), 100);
  REQUIRE(r.output);
  CHECK(r.output->empty());
  CHECK(r.steps == 2);

  // 0 | OUT0 HALT
  CHECK(runU(bs("0001111"), 100).output == bs("0"));
  // 0 | OUT1 OUT0 HALT
  CHECK(runU(bs("0010001111"), 100).output == bs("10"));
  // 0 | READBIT [1] JUMPBACK -> READBIT [0] JUMPBACK | HALT
  r = runU(bs("000011000111"), 100);
  REQUIRE(r.output);
  CHECK(r.output->empty());
  CHECK(r.steps == 6);
  // 0 | OUT0 READBIT [1] JUMPBACK -> OUT0 READBIT [0] JUMPBACK | HALT
  CHECK(runU(bs("000100011000111"), 100).output == bs("00"));
  // 0 | PUSH0 FLIPTOP DUPTOP JUMPBACK(pops 1) -> loops, stack grows
  r = runU(bs("0101110011100"), 500);
  CHECK_FALSE(r.halted);
  CHECK(r.steps == 500);
  // 0 | JUMPBACK on an empty stack crashes
  CHECK_FALSE(runU(bs("0100"), 100).halted);
  CHECK_FALSE(runU(bs("0110"), 100).halted);
  CHECK_FALSE(runU(bs("0011"), 100).halted);
  // 0 | PUSH0 FLIPTOP JUMPBACK never halts
  r = runU(bs("0101110100"), 10000);
  CHECK_FALSE(r.halted);
  CHECK(r.steps == 10000);
  // Halting before the end of p is undefined.
  r = runU(bs("01110"), 100);
  CHECK(r.halted);
  CHECK_FALSE(r.output);
  CHECK(r.bitsRead == 4);
}

TEST_CASE("enumerate agrees with running every candidate program") {
  const Budgets budgets{12, 300};
  const MachineGraph g = enumerate(budgets);
  std::set<std::pair<BitString, BitString>> brute;
  for (const auto& p : t::allStrings(12)) {
    if (auto out = runU(p, budgets.maxSteps).output) brute.emplace(p, *out);
  }
  CHECK(entrySet(g) == brute);
  CHECK(g.size() > 100);
}

TEST_CASE("enumeration order is (steps, length-lex)") {
  const auto halting = enumerateHalting({12, 1000});
  for (std::size_t i = 0; i + 1 < halting.size(); ++i) {
    const auto& a = halting[i];
    const auto& b = halting[i + 1];
    REQUIRE((a.steps < b.steps || (a.steps == b.steps && a.program < b.program)));
    REQUIRE(runU(a.program, 1000).steps == a.steps);
  }
  CHECK(halting.front().program == bs("11"));
}

TEST_CASE("enumerate budgets") {
  CHECK(enumerate({0, 1000}).empty());
  CHECK(enumerate({12, 0}).empty());
  CHECK_THROWS_AS(enumerate({22, 100}), BudgetOverflowError);
  CHECK_NOTHROW(enumerate({21, 4}));
  CHECK_THROWS_AS(enumerate({10, 100, 1024}), BudgetOverflowError);
  CHECK_NOTHROW(enumerate({9, 100, 1024}));
  CHECK_THROWS_AS(enumerate({64, 1}), BudgetOverflowError);

  for (std::size_t len : {0u, 4u, 8u, 11u}) {
    for (std::uint64_t steps : {0u, 5u, 20u, 200u}) {
      const MachineGraph small = enumerate({len, steps});
      const MachineGraph large = enumerate({len + 2, steps * 3 + 1});
      const auto a = entrySet(small);
      const auto b = entrySet(large);
      REQUIRE(std::includes(b.begin(), b.end(), a.begin(), a.end()));
      REQUIRE(checkPrefixFree(small.domain()));
      REQUIRE(enumerate({len, steps}) == small);
    }
  }
}

TEST_CASE("defaultCeiling honours PREFIXLAB_CEILING") {
  ::setenv("PREFIXLAB_CEILING", "1024", 1);
  CHECK(defaultCeiling() == 1024);
  ::setenv("PREFIXLAB_CEILING", "bogus", 1);
  CHECK(defaultCeiling() == kDefaultCeiling);
  ::unsetenv("PREFIXLAB_CEILING");
  CHECK(defaultCeiling() == kDefaultCeiling);
}

TEST_CASE("approxH") {
  const Budgets budgets{12, 1000};
  const BudgetedUniversal u(budgets);
  const ComplexityEstimate lambda = u.approxH(BitString());
  CHECK(lambda.upperBound <= Complexity(2));
  CHECK(lambda.witness == bs("11"));

  const ComplexityEstimate six = u.approxH(bs("010011"));
  CHECK(six.upperBound <= Complexity(12));
  REQUIRE(six.witness);
  CHECK(runU(*six.witness, budgets.maxSteps).output == bs("010011"));
  CHECK(six.witness->size() == six.upperBound.value());

  // Monotone: shrinking budgets never lowers the bound.
  for (const auto& s : t::allStrings(5)) {
    REQUIRE(approxH(s, {8, 50}).upperBound >= u.approxH(s).upperBound);
  }
}

TEST_CASE("literal ceiling holds up to length 10") {
  const BudgetedUniversal u({18, 64});
  for (const auto& s : t::allStrings(10)) {
    REQUIRE(u.approxH(s).upperBound <= Complexity(literalLength(s.size())));
  }
}

TEST_CASE("approxJointH is approxH of the pair") {
  const BudgetedUniversal u({12, 1000});
  for (std::uint64_t n = 0; n < 16; ++n) {
    for (const auto& s : t::allStrings(3)) {
      REQUIRE(u.approxJointH(n, s).upperBound == u.approxH(pair(stringOf(n), s)).upperBound);
    }
  }
  CHECK(u.approxJointH(0, BitString()).upperBound == u.approxH(BitString()).upperBound);
  CHECK(approxJointH(3, bs("1"), {8, 50}).upperBound >= u.approxJointH(3, bs("1")).upperBound);
}

TEST_CASE("one-sidedness") {
  for (const auto& p : t::allStrings(10)) {
    const RunResult r = runU(p, 200);
    if (!r.output) continue;
    REQUIRE(approxH(*r.output, {p.size(), 200}).upperBound <= Complexity(p.size()));
  }
}

TEST_CASE("approxM") {
  CHECK(approxM({0, 0}).mass.empty());
  CHECK(approxM({12, 0}).total() == Dyadic::zero());

  const BudgetedUniversal u({14, 2000});
  const SemiMeasureEstimate m = u.approxM();
  CHECK(m.massOf(BitString()) >= Dyadic::inversePowerOfTwo(2));
  CHECK(m.total() == kraftSum(u.graph().domain()));
  CHECK(m.total() <= Dyadic::one());
  for (const auto& [s, mass] : m.mass) {
    REQUIRE(mass >= Dyadic::inversePowerOfTwo(u.approxH(s).upperBound.value()));
  }
  const SemiMeasureEstimate smaller = approxM({10, 300});
  for (const auto& [s, mass] : smaller.mass) REQUIRE(mass <= m.massOf(s));
}

TEST_CASE("counting bound on U") {
  const BudgetedUniversal u({16, 2000});
  CHECK(t::countingBoundByScan(u.graph(), 16));
  CHECK(countingBoundHolds(u.graph(), 16));
}
