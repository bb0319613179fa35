#include "factorum/core.hpp"

#include <numeric>

namespace factorum {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::UndeclaredGenerator: return "UndeclaredGenerator";
    case ErrorKind::DuplicateGenerator: return "DuplicateGenerator";
    case ErrorKind::EmptyRelationSide: return "EmptyRelationSide";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::NotAtom: return "NotAtom";
    case ErrorKind::DetTooLarge: return "DetTooLarge";
    case ErrorKind::NotAlmostPrimeLike: return "NotAlmostPrimeLike";
  }
  return "Error";
}

const char* to_string(Cert c) {
  switch (c) {
    case Cert::Exact: return "exact";
    case Cert::LowerBound: return "lower-bound";
    case Cert::Unknown: return "unknown";
  }
  return "unknown";
}

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

std::string Rational::str() const { return std::to_string(num) + "/" + std::to_string(den); }

}  // namespace factorum
