#include "prefixlab/universal.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <tuple>

#include "prefixlab/error.hpp"

namespace prefixlab {

std::uint64_t defaultCeiling() {
  if (const char* env = std::getenv("PREFIXLAB_CEILING")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return value;
  }
  return kDefaultCeiling;
}

void checkCeiling(const Budgets& budgets) {
  const bool overflow = budgets.maxProgramLength >= 63 ||
                        (std::uint64_t{1} << (budgets.maxProgramLength + 1)) > budgets.ceiling;
  if (overflow) {
    throw BudgetOverflowError("enumeration of programs up to " + std::to_string(budgets.maxProgramLength) +
                              " bits exceeds the ceiling of " + std::to_string(budgets.ceiling) + " candidates");
  }
}

BitString eliasGamma(std::uint64_t n) {
  if (n == 0) throw std::domain_error("eliasGamma: n must be positive");
  const int top = 63 - __builtin_clzll(n);
  BitString out = BitString::zeros(static_cast<std::size_t>(top));
  for (int i = top; i >= 0; --i) out.push_back(((n >> i) & 1) != 0);
  return out;
}

BitString literalProgram(const BitString& s) {
  BitString p = BitString::ones(1);
  p.append(eliasGamma(s.size() + 1));
  p.append(s);
  return p;
}

void Interpreter::supply(bool bit) { pending_ = bit; }

bool Interpreter::take(bool& bit) {
  if (!pending_) return false;
  bit = *pending_;
  pending_.reset();
  consumed_.push_back(bit);
  return true;
}

Interpreter::Status Interpreter::run(std::uint64_t maxSteps) {
  bool bit = false;
  for (;;) {
    switch (mode_) {
      case Mode::kSelect:
        if (steps_ >= maxSteps) return Status::kStepLimit;
        if (!take(bit)) return Status::kNeedBit;
        ++steps_;
        mode_ = bit ? Mode::kGammaZeros : Mode::kBytecode;
        break;

      case Mode::kGammaZeros:
        if (steps_ >= maxSteps) return Status::kStepLimit;
        if (!take(bit)) return Status::kNeedBit;
        ++steps_;
        if (!bit) {
          // Lengths beyond 2^62 are not representable; no budget reaches them.
          if (++gammaZeros_ > 62) return Status::kCrashed;
        } else {
          gammaValue_ = 1;
          gammaRemaining_ = gammaZeros_;
          mode_ = Mode::kGammaValue;
        }
        break;

      case Mode::kGammaValue:
        if (gammaRemaining_ == 0) {
          literalRemaining_ = gammaValue_ - 1;
          mode_ = Mode::kLiteral;
          break;
        }
        if (steps_ >= maxSteps) return Status::kStepLimit;
        if (!take(bit)) return Status::kNeedBit;
        ++steps_;
        gammaValue_ = (gammaValue_ << 1) | (bit ? 1u : 0u);
        --gammaRemaining_;
        break;

      case Mode::kLiteral:
        if (literalRemaining_ == 0) return Status::kHalted;
        if (steps_ >= maxSteps) return Status::kStepLimit;
        if (!take(bit)) return Status::kNeedBit;
        ++steps_;
        output_.push_back(bit);
        --literalRemaining_;
        break;

      case Mode::kBytecode: {
        if (pc_ == code_.size()) {
          if (opLen_ == 0 && steps_ >= maxSteps) return Status::kStepLimit;
          while (opLen_ < 3) {
            if (!take(bit)) return Status::kNeedBit;
            opBits_ = static_cast<std::uint8_t>((opBits_ << 1) | (bit ? 1 : 0));
            ++opLen_;
          }
          code_.push_back(opBits_);
          opBits_ = 0;
          opLen_ = 0;
        } else if (steps_ >= maxSteps) {
          return Status::kStepLimit;
        }

        switch (static_cast<Op>(code_[pc_])) {
          case Op::kReadBit:
            if (!take(bit)) return Status::kNeedBit;
            stack_.push_back(bit ? 1 : 0);
            ++pc_;
            break;
          case Op::kOut0:
            output_.push_back(false);
            ++pc_;
            break;
          case Op::kOut1:
            output_.push_back(true);
            ++pc_;
            break;
          case Op::kDupTop:
            if (stack_.empty()) return Status::kCrashed;
            stack_.push_back(stack_.back());
            ++pc_;
            break;
          case Op::kJumpBack: {
            if (stack_.empty()) return Status::kCrashed;
            const std::uint8_t top = stack_.back();
            stack_.pop_back();
            pc_ = top != 0 ? 0 : pc_ + 1;
            break;
          }
          case Op::kPush0:
            stack_.push_back(0);
            ++pc_;
            break;
          case Op::kFlipTop:
            if (stack_.empty()) return Status::kCrashed;
            stack_.back() ^= 1;
            ++pc_;
            break;
          case Op::kHalt:
            ++steps_;
            return Status::kHalted;
        }
        ++steps_;
        break;
      }
    }
  }
}

RunResult runU(const BitString& p, std::uint64_t maxSteps) {
  Interpreter interp;
  RunResult result;
  for (;;) {
    const Interpreter::Status status = interp.run(maxSteps);
    if (status == Interpreter::Status::kNeedBit) {
      const std::size_t read = interp.consumed().size();
      if (read == p.size()) break;  // asked for more bits than |p|
      interp.supply(p[read]);
      continue;
    }
    if (status == Interpreter::Status::kHalted) {
      result.halted = true;
      if (interp.consumed().size() == p.size()) result.output = interp.output();
    }
    break;
  }
  result.bitsRead = interp.consumed().size();
  result.steps = interp.steps();
  return result;
}

std::vector<HaltingProgram> enumerateHalting(const Budgets& budgets) {
  checkCeiling(budgets);
  std::vector<HaltingProgram> found;
  std::vector<Interpreter> frontier(1);
  while (!frontier.empty()) {
    Interpreter interp = std::move(frontier.back());
    frontier.pop_back();
    const Interpreter::Status status = interp.run(budgets.maxSteps);
    if (status == Interpreter::Status::kHalted) {
      found.push_back({interp.consumed(), interp.output(), interp.steps()});
    } else if (status == Interpreter::Status::kNeedBit && interp.consumed().size() < budgets.maxProgramLength) {
      Interpreter one = interp;
      one.supply(true);
      interp.supply(false);
      frontier.push_back(std::move(one));
      frontier.push_back(std::move(interp));
    }
  }
  std::sort(found.begin(), found.end(), [](const HaltingProgram& a, const HaltingProgram& b) {
    return std::tie(a.steps, a.program) < std::tie(b.steps, b.program);
  });
  return found;
}

MachineGraph enumerate(const Budgets& budgets) {
  std::vector<HaltingProgram> halting = enumerateHalting(budgets);
  std::vector<Entry> entries;
  entries.reserve(halting.size());
  for (auto& h : halting) entries.push_back({std::move(h.program), std::move(h.output)});
  return MachineGraph(std::move(entries));
}

Dyadic SemiMeasureEstimate::massOf(const BitString& s) const {
  auto it = mass.find(s);
  return it == mass.end() ? Dyadic() : it->second;
}

Dyadic SemiMeasureEstimate::total() const {
  Dyadic sum;
  for (const auto& [s, m] : mass) sum += m;
  return sum;
}

BudgetedUniversal::BudgetedUniversal(const Budgets& budgets) : budgets_(budgets), graph_(enumerate(budgets)) {}

ComplexityEstimate BudgetedUniversal::approxH(const BitString& s) const {
  return {graph_.complexityOf(s), graph_.canonicalProgram(s), budgets_};
}

ComplexityEstimate BudgetedUniversal::approxJointH(const Natural& n, const BitString& s) const {
  return approxH(pair(stringOf(n), s));
}

SemiMeasureEstimate BudgetedUniversal::approxM() const {
  SemiMeasureEstimate estimate{{}, budgets_};
  for (const auto& e : graph_.entries()) estimate.mass[e.symbol] += Dyadic::inversePowerOfTwo(e.codeword.size());
  return estimate;
}

ComplexityEstimate approxH(const BitString& s, const Budgets& budgets) { return BudgetedUniversal(budgets).approxH(s); }

ComplexityEstimate approxJointH(const Natural& n, const BitString& s, const Budgets& budgets) {
  return BudgetedUniversal(budgets).approxJointH(n, s);
}

SemiMeasureEstimate approxM(const Budgets& budgets) { return BudgetedUniversal(budgets).approxM(); }

}  // namespace prefixlab
