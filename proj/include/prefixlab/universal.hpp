#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prefixlab/bitstring.hpp"
#include "prefixlab/dyadic.hpp"
#include "prefixlab/machine.hpp"

namespace prefixlab {

// Default cap on the number of candidate programs 2^(maxLen+1).
inline constexpr std::uint64_t kDefaultCeiling = std::uint64_t{1} << 22;

// kDefaultCeiling, or the value of PREFIXLAB_CEILING when set and numeric.
std::uint64_t defaultCeiling();

struct Budgets {
  std::size_t maxProgramLength = 0;
  std::uint64_t maxSteps = 0;
  std::uint64_t ceiling = kDefaultCeiling;
};

// Throws BudgetOverflowError when 2^(maxProgramLength+1) exceeds the ceiling.
void checkCeiling(const Budgets& budgets);

// Opcodes of the bytecode channel, read big-endian in 3-bit groups.
enum class Op : std::uint8_t {
  kReadBit = 0,   // 000  push the next input bit
  kOut0 = 1,      // 001  append 0 to the output
  kOut1 = 2,      // 010  append 1 to the output
  kDupTop = 3,    // 011  push a copy of the top
  kJumpBack = 4,  // 100  pop; if it was 1 restart at the first instruction
  kPush0 = 5,     // 101  push 0
  kFlipTop = 6,   // 110  top ^= 1
  kHalt = 7,      // 111  halt with the current output
};

// Elias gamma code of n >= 1: floor(log2 n) zeros followed by n in binary.
BitString eliasGamma(std::uint64_t n);

// The literal-channel program 1·γ(|s|+1)·s.
BitString literalProgram(const BitString& s);

// One resumable run of U. The interpreter pulls input one bit at a time; when
// it needs a bit it stops with kNeedBit and waits for supply(). Copying an
// Interpreter forks the computation, which is how enumeration explores
// every program prefix once.
class Interpreter {
 public:
  enum class Status { kNeedBit, kHalted, kCrashed, kStepLimit };

  // Runs until the next bit request, halt, crash, or until the step count
  // reaches maxSteps.
  Status run(std::uint64_t maxSteps);
  void supply(bool bit);

  const BitString& consumed() const noexcept { return consumed_; }
  const BitString& output() const noexcept { return output_; }
  std::uint64_t steps() const noexcept { return steps_; }

 private:
  enum class Mode : std::uint8_t { kSelect, kGammaZeros, kGammaValue, kLiteral, kBytecode };

  bool take(bool& bit);

  Mode mode_ = Mode::kSelect;
  std::optional<bool> pending_;
  BitString consumed_;
  BitString output_;
  std::uint64_t steps_ = 0;
  // literal channel
  std::uint32_t gammaZeros_ = 0;
  std::uint32_t gammaRemaining_ = 0;
  std::uint64_t gammaValue_ = 0;
  std::uint64_t literalRemaining_ = 0;
  // bytecode channel
  std::vector<std::uint8_t> code_;
  std::size_t pc_ = 0;
  std::uint8_t opBits_ = 0;
  std::uint8_t opLen_ = 0;
  std::vector<std::uint8_t> stack_;
};

struct RunResult {
  bool halted = false;              // the interpreter reached a halt
  std::optional<BitString> output;  // U(p); defined iff halted having read exactly |p| bits
  std::size_t bitsRead = 0;
  std::uint64_t steps = 0;
};

RunResult runU(const BitString& p, std::uint64_t maxSteps);

struct HaltingProgram {
  BitString program;
  BitString output;
  std::uint64_t steps;
};

// Every program of length <= maxProgramLength that halts within maxSteps,
// ordered by (steps, length-lex program).
std::vector<HaltingProgram> enumerateHalting(const Budgets& budgets);

// The same programs as a validated MachineGraph.
MachineGraph enumerate(const Budgets& budgets);

struct ComplexityEstimate {
  Complexity upperBound;
  std::optional<BitString> witness;
  Budgets budgets;
};

struct SemiMeasureEstimate {
  std::map<BitString, Dyadic> mass;
  Budgets budgets;

  Dyadic massOf(const BitString& s) const;
  Dyadic total() const;
};

// U together with its materialized finite graph at fixed budgets.
class BudgetedUniversal {
 public:
  explicit BudgetedUniversal(const Budgets& budgets);

  const Budgets& budgets() const noexcept { return budgets_; }
  const MachineGraph& graph() const noexcept { return graph_; }

  ComplexityEstimate approxH(const BitString& s) const;
  ComplexityEstimate approxJointH(const Natural& n, const BitString& s) const;
  SemiMeasureEstimate approxM() const;

 private:
  Budgets budgets_;
  MachineGraph graph_;
};

ComplexityEstimate approxH(const BitString& s, const Budgets& budgets);
ComplexityEstimate approxJointH(const Natural& n, const BitString& s, const Budgets& budgets);
SemiMeasureEstimate approxM(const Budgets& budgets);

}  // namespace prefixlab
