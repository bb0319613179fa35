#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "factorum/core.hpp"
#include "factorum/distances.hpp"
#include "factorum/handle.hpp"

namespace factorum {

enum class Variant { Plain, Equal, Adjacent, Monotone, InFibers };

const char* to_string(Variant v);
Variant parse_variant(const std::string& s);

struct CatenaryReport {
  int value = 0;
  bool infinite = false;
  DistanceKind kind = DistanceKind::Permutable;
  Variant variant = Variant::Plain;
  Cert cert = Cert::Exact;
  ElemId element = 0;
  std::size_t factorizations = 0;
  // Chain realizing the bound between the worst pair (consecutive steps
  // within `value`).
  std::vector<Factorization> chain;
  // Pair whose connection forces the value.
  std::optional<std::pair<Factorization, Factorization>> blocking;
};

CatenaryReport catenary(SemigroupHandle& h, ElemId a, DistanceKind kind);
CatenaryReport equal_catenary(SemigroupHandle& h, ElemId a, DistanceKind kind);
CatenaryReport adjacent_catenary(SemigroupHandle& h, ElemId a, DistanceKind kind);
CatenaryReport monotone_catenary(SemigroupHandle& h, ElemId a, DistanceKind kind);
CatenaryReport catenary_variant(SemigroupHandle& h, ElemId a, DistanceKind kind, Variant v);

// Direct search for the least N such that any two factorizations are joined
// by a monotone N-chain. Limited to at most 12 factorizations.
int monotone_catenary_direct(SemigroupHandle& h, ElemId a, DistanceKind kind);

// Classes of the permutable fiber relation: z ~ z' iff the images of their
// atoms under phi agree as multisets. phi maps an atom to the associate
// class of its image.
using AtomImage = std::function<std::uint64_t(ElemId)>;
CatenaryReport catenary_in_fibers(SemigroupHandle& h, ElemId a, DistanceKind kind, const AtomImage& phi);

// Maximum over the given elements; the report names the worst element.
CatenaryReport semigroup_catenary(SemigroupHandle& h, const std::vector<ElemId>& elements, DistanceKind kind,
                                  Variant v, const AtomImage& phi = nullptr);

// Least N such that the threshold graph with edges <= N is connected, via
// Prim's algorithm on the complete graph. Also returns the worst edge.
struct Bottleneck {
  int value = 0;
  int u = 0;
  int v = 0;
  std::vector<int> path;  // MST path between u and v
};

Bottleneck bottleneck(int n, const std::function<int(int, int)>& weight);

}  // namespace factorum
