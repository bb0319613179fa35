#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace factorum {

enum class ErrorKind {
  Syntax,
  UndeclaredGenerator,
  DuplicateGenerator,
  EmptyRelationSide,
  InvalidArgument,
  BudgetExceeded,
  InstanceTooLarge,
  GroupTooLarge,
  NotAtom,
  DetTooLarge,
  NotAlmostPrimeLike,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, int line, int column, const std::string& message)
      : Error(kind, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Certification of a computed value.
enum class Cert { Exact, LowerBound, Unknown };

const char* to_string(Cert c);

inline Cert weaker(Cert a, Cert b) { return static_cast<int>(a) > static_cast<int>(b) ? a : b; }

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);
  std::string str() const;
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

}  // namespace factorum
