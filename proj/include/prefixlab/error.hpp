#pragma once

#include <stdexcept>
#include <string>

namespace prefixlab {

// Base class for every failure raised by the library. The CLI maps the
// concrete subclasses onto its exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed machine-graph text or a bit string containing characters outside
// {0, 1, -}.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A presentation violates the MachineGraph invariants (duplicate codeword,
// prefix violation). Raised at construction time.
class InvalidMachineError : public Error {
 public:
  using Error::Error;
};

class DuplicateCodewordError : public InvalidMachineError {
 public:
  explicit DuplicateCodewordError(const std::string& codeword)
      : InvalidMachineError("duplicate codeword " + codeword), codeword_(codeword) {}

  const std::string& codeword() const noexcept { return codeword_; }

 private:
  std::string codeword_;
};

class PrefixViolationError : public InvalidMachineError {
 public:
  PrefixViolationError(const std::string& prefix, const std::string& extension)
      : InvalidMachineError("prefix violation: " + prefix + " is a prefix of " + extension),
        prefix_(prefix),
        extension_(extension) {}

  const std::string& prefix() const noexcept { return prefix_; }
  const std::string& extension() const noexcept { return extension_; }

 private:
  std::string prefix_;
  std::string extension_;
};

// An enumeration or construction would exceed its configured resource ceiling.
class BudgetOverflowError : public Error {
 public:
  using Error::Error;
};

// A construction's input does not meet its precondition (for example, no
// symbol with two or more codewords).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace prefixlab
