#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace factorum {

using ElemId = std::uint32_t;

// Ordered sequence of atoms. Empty only for units.
using Factorization = std::vector<ElemId>;

// Sorted multiset of associate-class keys.
using PermFactorization = std::vector<std::uint64_t>;

struct LeftDivisor {
  ElemId atom;
  ElemId quotient;
};

struct DivisorList {
  std::vector<LeftDivisor> items;
  bool complete = true;
};

struct FactorizationSet {
  std::vector<Factorization> items;
  bool complete = true;
};

// Capability contract shared by presentations, block monoids and matrix
// semigroups. Elements are interned; ids are local to one handle. A handle
// caches results and is meant to be used from one thread at a time.
class SemigroupHandle {
 public:
  virtual ~SemigroupHandle() = default;

  virtual ElemId identity() const = 0;
  virtual ElemId multiply(ElemId x, ElemId y) = 0;
  virtual bool is_unit(ElemId x) = 0;
  // False when the element's representation came from a truncated search.
  virtual bool certified(ElemId x) = 0;
  // Atoms u (one representative per right-associate class) with x = u * q.
  virtual DivisorList left_divisors(ElemId x) = 0;
  // Key of the associate class of an atom. Keys are canonical, so sorting
  // by key is deterministic.
  virtual std::uint64_t atom_class(ElemId atom) = 0;
  virtual std::string show(ElemId x) = 0;
  virtual std::string show_class(std::uint64_t key) = 0;
  // Deterministic order on atoms used to sort factorizations.
  virtual bool atom_less(ElemId a, ElemId b) = 0;
  virtual bool is_commutative() const { return false; }
  virtual std::size_t max_factorization_length() const { return 64; }

  std::unordered_map<ElemId, FactorizationSet> rigid_cache;
  std::unordered_map<ElemId, FactorizationSet> perm_cache;
};

}  // namespace factorum
