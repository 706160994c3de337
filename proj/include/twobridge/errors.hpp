#ifndef TWOBRIDGE_ERRORS_HPP
#define TWOBRIDGE_ERRORS_HPP

#include <stdexcept>
#include <string>

// Error taxonomy for the whole library. Parse/usage problems and mathematical
// assertion failures are kept in separate branches so the CLI can map them to
// distinct exit codes (1 resp. 2).

namespace twobridge {

// A continued fraction hit a division by zero while being evaluated,
// e.g. [0, 2, -1, 2].
class UndefinedCF : public std::runtime_error {
 public:
  explicit UndefinedCF(const std::string& what) : std::runtime_error(what) {}
};

// Input value outside the documented domain (typically p/q not in (0,1)).
class OutOfRange : public std::domain_error {
 public:
  explicit OutOfRange(const std::string& what) : std::domain_error(what) {}
};

// Conway notation list was empty or contained a nonpositive entry.
class InvalidConway : public std::invalid_argument {
 public:
  explicit InvalidConway(const std::string& what)
      : std::invalid_argument(what) {}
};

// gcd(p, q) != 1 discovered while inverting p mod q. Unreachable for inputs
// that satisfy the documented preconditions; kept so the failure mode has a
// name instead of an assert.
class NotInvertible : public std::logic_error {
 public:
  explicit NotInvertible(const std::string& what) : std::logic_error(what) {}
};

// A rewrite rule would produce a zero term (successor exclusion failed).
class SideConditionViolated : public std::runtime_error {
 public:
  explicit SideConditionViolated(const std::string& what)
      : std::runtime_error(what) {}
};

class PositionOutOfRange : public std::out_of_range {
 public:
  explicit PositionOutOfRange(const std::string& what)
      : std::out_of_range(what) {}
};

// No all-even expansion among the boundary candidates.
class SeifertNotFound : public std::runtime_error {
 public:
  explicit SeifertNotFound(const std::string& what)
      : std::runtime_error(what) {}
};

// More than one all-even expansion where a unique one was required (q odd).
class SeifertNotUnique : public std::runtime_error {
 public:
  explicit SeifertNotUnique(const std::string& what)
      : std::runtime_error(what) {}
};

// The substitution enumeration and the binary-tree enumeration produced
// different boundary sets. Always a bug, never expected for valid input.
class EnginesDisagree : public std::runtime_error {
 public:
  explicit EnginesDisagree(const std::string& what)
      : std::runtime_error(what) {}
};

// A subexpansion with |r| >= 1 appeared below the root of the expansion tree.
// The construction should make this impossible; the check is a tripwire.
class SubexpansionOutOfBounds : public std::logic_error {
 public:
  explicit SubexpansionOutOfBounds(const std::string& what)
      : std::logic_error(what) {}
};

// Malformed command line input ("p/q" expected, or a flag value).
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace twobridge

#endif  // TWOBRIDGE_ERRORS_HPP
