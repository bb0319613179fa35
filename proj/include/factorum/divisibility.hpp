#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "factorum/core.hpp"
#include "factorum/handle.hpp"
#include "factorum/semigroup.hpp"

namespace factorum {

enum class DivisibilityKind { LeftRight, Permutation };

struct DivResult {
  bool value = false;
  Cert cert = Cert::Exact;
};

bool submultiset(const PermFactorization& small, const PermFactorization& big);

// b |_p a: some permutable factorization of b embeds into one of a.
DivResult divides_perm(SemigroupHandle& h, ElemId b, ElemId a);
// b |_{l-r} a: a in HbH, i.e. some rigid factorization of a contains one of
// b as a contiguous block.
DivResult divides_lr(SemigroupHandle& h, ElemId b, ElemId a);
DivResult divides(SemigroupHandle& h, DivisibilityKind kind, ElemId b, ElemId a);

struct PrimeLikeReport {
  bool counterexample = false;
  ElemId element = 0;
  Factorization with_q;
  Factorization without_q;
  std::size_t elements_checked = 0;
  Cert cert = Cert::Exact;
};

// q occurs in one rigid factorization of a iff it occurs in all of them,
// checked over the given elements.
PrimeLikeReport almost_prime_like(SemigroupHandle& h, ElemId q, const std::vector<ElemId>& elements);

struct ValuationSet {
  std::vector<int> values;
  bool complete = true;
};

ValuationSet valuation_set(SemigroupHandle& h, ElemId q, ElemId a);

struct PrimeLikeVerdict {
  bool prime_like = true;
  ElemId witness = 0;  // element with a non-singleton valuation set
  ValuationSet witness_values;
  std::size_t elements_checked = 0;
  Cert cert = Cert::Exact;
};

// Throws NotAlmostPrimeLike when q fails the almost-prime-like test.
PrimeLikeVerdict is_prime_like(SemigroupHandle& h, ElemId q, const std::vector<ElemId>& elements);

enum class OmegaMode { Atoms, NonUnits };

struct OmegaReport {
  bool applicable = false;  // divisor |_p element
  int value = 0;
  Cert cert = Cert::Exact;
  ElemId element = 0;
  std::vector<ElemId> decomposition;  // worst factorization or decomposition
  std::vector<ElemId> subproduct;     // a minimal divisible permuted subproduct of it
  std::size_t elements_checked = 0;
};

OmegaReport omega(SemigroupHandle& h, ElemId a, ElemId b);
// Least k such that some k of the given factors, in some order, have a
// product divisible by b; the ordering found is stored in witness.
int min_divisible_subproduct(SemigroupHandle& h, const std::vector<ElemId>& parts, ElemId b,
                             std::vector<ElemId>* witness = nullptr);
// Decompositions of a into at most max_factors non-units (presentations only).
OmegaReport omega_nonunits(PresentationSemigroup& s, ElemId a, ElemId b, int max_factors);
OmegaReport omega_semigroup(SemigroupHandle& h, const std::vector<ElemId>& elements, ElemId b, OmegaMode mode,
                            int max_factors = 4);

struct TameReport {
  int value = 0;
  Cert cert = Cert::Exact;
  ElemId element = 0;
  bool pattern_divides = false;
  PermFactorization worst;    // z attaining the maximum
  PermFactorization nearest;  // closest z' containing the pattern
  std::size_t elements_checked = 0;
};

TameReport tame_degree(SemigroupHandle& h, ElemId a, const PermFactorization& pattern);
TameReport tame_semigroup(SemigroupHandle& h, const std::vector<ElemId>& elements, ElemId atom);

// Exhaustive semigroup-level omega_p(S, b) and t_p(S, b) over every class of
// words of length <= max_length, using letter-count vectors of the
// factorizations. The tame part is computed only when b is an atom.
struct ScanResult {
  OmegaReport omega;
  TameReport tame;
  std::vector<Word> omega_witness;  // class representative and factorization word
  std::vector<Word> tame_witness;   // class representative
  std::size_t classes = 0;
  std::size_t open_classes = 0;
};

ScanResult divisibility_scan(PresentationSemigroup& s, ElemId b, int max_length);
// Several divisors sharing the same two passes over the word classes.
std::vector<ScanResult> divisibility_scan(PresentationSemigroup& s, const std::vector<ElemId>& divisors, int max_length);

}  // namespace factorum
