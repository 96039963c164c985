#pragma once

#include <stdexcept>
#include <string>

namespace bowvar {

// Every domain invariant the library enforces has a named violation kind, so
// callers (and the CLI) can distinguish bad input from internal bugs.
enum class ErrorKind {
  MalformedDiagram,       // text does not parse as a brane diagram
  SameKind,               // transition requested between two branes of equal type
  NegativeMultiplicity,   // a transition would drive a segment multiplicity below zero
  ExponentOverflow,       // checked 64-bit arithmetic overflowed
  NegativeCoefficient,    // a character expansion produced a negative multiplicity
  NegativeMargin,         // margins outside the feasible range
  MarginMismatch,         // a table's margins disagree with the requested ones
  InvalidTies,            // tie multiset does not cover segments with the right multiplicity
  SigmaLengthMismatch,    // twist vector length differs from the D5 count
  NotAPair,               // requested row/column triple is not a 01- or 10-pattern
  NotSeparated,           // operation requires a separated diagram
  Blocked,                // surgery rejected by the rightmost-column constraint
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Surgery rejection carries the two numbers that decide it: how many
// rightmost-column boxes the site holds and how many the constraint demands.
class BlockedError : public Error {
 public:
  BlockedError(long long available, long long required)
      : Error(ErrorKind::Blocked,
              "site has " + std::to_string(available) + " rightmost-column box(es), needs " +
                  std::to_string(required)),
        available_(available),
        required_(required) {}

  long long available() const { return available_; }
  long long required() const { return required_; }

 private:
  long long available_;
  long long required_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedDiagram: return "MalformedDiagram";
    case ErrorKind::SameKind: return "SameKind";
    case ErrorKind::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
    case ErrorKind::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorKind::NegativeMargin: return "NegativeMargin";
    case ErrorKind::MarginMismatch: return "MarginMismatch";
    case ErrorKind::InvalidTies: return "InvalidTies";
    case ErrorKind::SigmaLengthMismatch: return "SigmaLengthMismatch";
    case ErrorKind::NotAPair: return "NotAPair";
    case ErrorKind::NotSeparated: return "NotSeparated";
    case ErrorKind::Blocked: return "Blocked";
  }
  return "UnknownError";
}

}  // namespace bowvar
