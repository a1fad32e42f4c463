#ifndef FGC_ERRORS_HPP
#define FGC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fgc {

// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed argument: bad vertex/edge/arc id, bad set, bad parameter.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what) {}
};

// Instance file could not be parsed. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}
  int line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  int line_;
  std::string reason_;
};

// The instance admits no feasible solution (or a requested optimum does not exist).
class Infeasible : public Error {
 public:
  explicit Infeasible(const std::string& what) : Error(what) {}
};

// The digraph has no r-out k-arborescence.
class NoKArborescence : public Error {
 public:
  explicit NoKArborescence(const std::string& what) : Error(what) {}
};

// No common independent set of the requested cardinality exists.
class CardinalityUnreachable : public Error {
 public:
  explicit CardinalityUnreachable(const std::string& what) : Error(what) {}
};

// An arc set claimed to be a k-arborescence failed to split into k
// arc-disjoint arborescences. Signals a solver bug, not bad input.
class NotDecomposable : public Error {
 public:
  explicit NotDecomposable(const std::string& what) : Error(what) {}
};

// Input is too large for an exact/brute-force routine. Never degrade
// silently: an oracle must refuse rather than approximate.
class RefusedScale : public Error {
 public:
  explicit RefusedScale(const std::string& what) : Error(what) {}
};

// Random instance generation could not satisfy the requested constraints.
class GenerationFailed : public Error {
 public:
  explicit GenerationFailed(const std::string& what) : Error(what) {}
};

// Internal certification failed after a solve. Signals a solver bug.
class SolverBug : public Error {
 public:
  explicit SolverBug(const std::string& what) : Error(what) {}
};

}  // namespace fgc

#endif  // FGC_ERRORS_HPP
