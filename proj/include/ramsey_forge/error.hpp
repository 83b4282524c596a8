#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ramsey_forge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments or inputs that violate an operation's preconditions.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configured size or enumeration cap would be exceeded. Recoverable: the
/// caller may raise the cap and retry.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string what, unsigned long long requested, unsigned long long cap)
      : Error(std::move(what) + " (requested " + std::to_string(requested) + ", cap " +
              std::to_string(cap) + ")"),
        requested_(requested),
        cap_(cap) {}

  unsigned long long requested() const noexcept { return requested_; }
  unsigned long long cap() const noexcept { return cap_; }

 private:
  unsigned long long requested_;
  unsigned long long cap_;
};

/// A construction precondition failed. Carries the offending vertices
/// (an edge, a clique, ...) so the failure can be audited.
class PreconditionViolation : public InvalidArgument {
 public:
  PreconditionViolation(const std::string& what, std::vector<int> witness)
      : InvalidArgument(what + format_witness(witness)), witness_(std::move(witness)) {}

  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  static std::string format_witness(const std::vector<int>& w) {
    if (w.empty()) return {};
    std::string s = " [witness:";
    for (int v : w) s += " " + std::to_string(v);
    return s + "]";
  }

  std::vector<int> witness_;
};

/// Malformed input file. `line()` is 1-based; 0 means the file as a whole.
class ParseError : public InvalidArgument {
 public:
  ParseError(const std::string& what, int line)
      : InvalidArgument("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ramsey_forge
