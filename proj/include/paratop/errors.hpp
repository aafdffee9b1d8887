#pragma once

#include <stdexcept>
#include <string>

namespace paratop {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Topology construction rejected: the empty set or the full set is missing.
struct MissingExtremes : Error {
  using Error::Error;
};

/// Topology construction rejected: a union or intersection of two listed
/// sets is not itself listed.  The message names the violating pair.
struct NotClosedUnderOps : Error {
  using Error::Error;
};

struct EmptyCarrier : Error {
  using Error::Error;
};

struct SizeMismatch : Error {
  using Error::Error;
};

/// A valuation set breaks the mode invariant (closed in paraconsistent
/// models, open in paracomplete ones).  The message names the proposition.
struct ValuationNotClosed : Error {
  using Error::Error;
};
struct ValuationNotOpen : Error {
  using Error::Error;
};

/// A formula uses a negation that its model's mode does not admit.
struct ModeMismatch : Error {
  using Error::Error;
};
struct WrongMode : Error {
  using Error::Error;
};

struct AlgebraOverflow : Error {
  using Error::Error;
};
struct MapSpaceOverflow : Error {
  using Error::Error;
};
struct NotHomeomorphism : Error {
  using Error::Error;
};
struct PreconditionFailed : Error {
  using Error::Error;
};

struct SyntaxError : Error {
  int line;
  int column;
  SyntaxError(int line_, int column_, const std::string& what)
      : Error("syntax error at " + std::to_string(line_) + ":" +
              std::to_string(column_) + ": " + what),
        line(line_),
        column(column_) {}
};

}  // namespace paratop
