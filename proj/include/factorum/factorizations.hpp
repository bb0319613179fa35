#pragma once

#include <string>
#include <vector>

#include "factorum/core.hpp"
#include "factorum/handle.hpp"

namespace factorum {

// Cap on the number of factorizations held for one element.
inline constexpr std::size_t kMaxFactorizations = 2'000'000;

// Z*(a): all rigid factorizations, sorted lexicographically by atom order.
// For commutative handles this expands permutable factorizations into all
// distinct orderings.
const FactorizationSet& rigid_factorizations(SemigroupHandle& h, ElemId a);

// One representative per permutable class. For commutative handles the
// representatives are non-decreasing atom sequences and Z* is never built.
const FactorizationSet& permutable_representatives(SemigroupHandle& h, ElemId a);

PermFactorization perm_class(SemigroupHandle& h, const Factorization& z);

struct PermSet {
  std::vector<PermFactorization> items;  // sorted, distinct
  bool complete = true;
};

PermSet permutable_factorizations(SemigroupHandle& h, ElemId a);

struct LengthSet {
  std::vector<int> lengths;  // ascending
  std::vector<int> delta;    // ascending
  Rational elasticity;
  bool complete = true;
};

LengthSet make_length_set(std::vector<int> lengths);
LengthSet length_profile(SemigroupHandle& h, ElemId a);

std::string show_factorization(SemigroupHandle& h, const Factorization& z);
std::vector<std::string> factorization_strings(SemigroupHandle& h, const Factorization& z);
std::string show_perm(SemigroupHandle& h, const PermFactorization& z);

// Product of the atoms, composed left to right.
ElemId compose(SemigroupHandle& h, const Factorization& z);

}  // namespace factorum
