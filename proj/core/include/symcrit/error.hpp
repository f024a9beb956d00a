#ifndef SYMCRIT_ERROR_HPP
#define SYMCRIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace symcrit {

/// Classifies every library failure so callers (and the CLI) can map
/// failures to stable exit codes without string matching.
enum class ErrorKind {
  Usage = 1,             // bad arguments to a public entry point
  Verification = 2,      // a certified check on results failed
  PositiveDimensional = 3,
  Parse = 4,             // malformed input file / schema violation
  Domain = 5,            // invariance, dimension or range violations
  Separation = 6,        // random separating elements exhausted retries
  IrrationalRoot = 7,    // fiber roots leave the base field
  Characteristic = 8,    // prime too small for the requested operation
  Internal = 9,          // broken internal invariant (a bug, not bad input)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }
  int exit_code() const { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace symcrit

#endif
