/**
 * Exception types shared across the library. Every error carries a
 * human-readable message; structured witnesses (offending elements,
 * pairs, triples) are exposed as members where callers need them.
 */

#ifndef SKEWDER_ERRORS_HPP
#define SKEWDER_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skewder {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Relation closure produced a directed cycle over distinct elements. */
class CycleError : public Error {
 public:
  CycleError(std::string a, std::string b)
      : Error("relation closure violates antisymmetry: cycle through '" + a +
              "' and '" + b + "'"),
        first(std::move(a)),
        second(std::move(b)) {}
  std::string first, second;
};

class UnknownElementError : public Error {
 public:
  explicit UnknownElementError(const std::string& token)
      : Error("unknown element '" + token + "'"), element(token) {}
  std::string element;
};

class NotBijectiveError : public Error {
 public:
  using Error::Error;
};

class NotOrderPreservingError : public Error {
 public:
  NotOrderPreservingError(std::string x, std::string y)
      : Error("map is not order-preserving on the pair ('" + x + "', '" + y +
              "')"),
        first(std::move(x)),
        second(std::move(y)) {}
  std::string first, second;
};

class NotAllComparableError : public Error {
 public:
  explicit NotAllComparableError(const std::string& token)
      : Error("element '" + token + "' is not comparable to every element"),
        element(token) {}
  std::string element;
};

class DivisionByZeroError : public Error {
 public:
  DivisionByZeroError() : Error("division by zero") {}
};

/** Scalars or elements from different fields were combined. */
class MixedFieldsError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

class NotComparableError : public Error {
 public:
  NotComparableError(std::string x, std::string y)
      : Error("elements '" + x + "' and '" + y + "' satisfy neither x <= y"),
        first(std::move(x)),
        second(std::move(y)) {}
  std::string first, second;
};

/** Operands live on different posets (or fields) and cannot be combined. */
class MismatchError : public Error {
 public:
  using Error::Error;
};

class NotInvertibleError : public Error {
 public:
  explicit NotInvertibleError(const std::string& token)
      : Error("element is not invertible: zero diagonal entry at '" + token +
              "'"),
        element(token) {}
  std::string element;
};

class ZeroEntryError : public Error {
 public:
  ZeroEntryError(std::string x, std::string y)
      : Error("zero entry at comparable pair ('" + x + "', '" + y + "')"),
        first(std::move(x)),
        second(std::move(y)) {}
  std::string first, second;
};

class NotMultiplicativeError : public Error {
 public:
  NotMultiplicativeError(std::string x, std::string y, std::string z)
      : Error("multiplicativity fails on the triple ('" + x + "', '" + y +
              "', '" + z + "')"),
        first(std::move(x)),
        second(std::move(y)),
        third(std::move(z)) {}
  std::string first, second, third;
};

/** Two saturated chains between the same endpoints force different values. */
class PathInconsistentError : public Error {
 public:
  PathInconsistentError(std::string x, std::string y,
                        std::vector<std::string> chain_a,
                        std::vector<std::string> chain_b)
      : Error("cover values are inconsistent between '" + x + "' and '" + y +
              "'"),
        first(std::move(x)),
        second(std::move(y)),
        chain1(std::move(chain_a)),
        chain2(std::move(chain_b)) {}
  std::string first, second;
  std::vector<std::string> chain1, chain2;
};

class VanishingViolationError : public Error {
 public:
  VanishingViolationError(std::string x, std::string y)
      : Error("value must vanish at ('" + x + "', '" + y + "')"),
        first(std::move(x)),
        second(std::move(y)) {}
  std::string first, second;
};

class CocycleViolationError : public Error {
 public:
  CocycleViolationError(std::string x, std::string y, std::string z)
      : Error("additivity fails on the triple ('" + x + "', '" + y + "', '" +
              z + "')"),
        first(std::move(x)),
        second(std::move(y)),
        third(std::move(z)) {}
  std::string first, second, third;
};

class NotADerivationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line_no, int column_no)
      : Error("parse error at line " + std::to_string(line_no) + ", column " +
              std::to_string(column_no) + ": " + what),
        line(line_no),
        column(column_no) {}
  explicit ParseError(const std::string& what) : Error(what), line(0), column(0) {}
  int line, column;
};

}  // namespace skewder

#endif  // SKEWDER_ERRORS_HPP
