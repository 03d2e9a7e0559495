#pragma once

#include <stdexcept>
#include <string>

namespace colnum {

// Recoverable input problem: bad file, bad flag, invalid combination of
// parameters.  The CLI maps these to exit code 1.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
  ParseError(const std::string& what, int line)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

// Instance too large for an exponential-time exact routine.
struct SizeError : Error {
  explicit SizeError(const std::string& what) : Error(what) {}
};

// A verified construction failed its own certificate check.  This is never
// expected; the CLI maps it to exit code 2.
struct ContractViolation : std::logic_error {
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace colnum
