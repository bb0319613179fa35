#pragma once

#include <random>
#include <string>
#include <vector>

#include "factorum/handle.hpp"

namespace factorum {

enum class DistanceKind { Length, Permutable, Rigid };

const char* to_string(DistanceKind k);
DistanceKind parse_distance_kind(const std::string& s);

int length_distance(const Factorization& z, const Factorization& zp);
int perm_distance(const PermFactorization& z, const PermFactorization& zp);

struct Block {
  int start_z;
  int start_zp;
  int length;
};

struct Alignment {
  std::vector<Block> blocks;
  std::vector<int> gap_costs;  // nonzero gap costs in order
  int cost = 0;
};

// Minimum-cost block alignment: common blocks appear in order in both
// sequences; every nontrivial gap pair (p, q) costs max(p, q).
Alignment rigid_alignment(const Factorization& z, const Factorization& zp);
int rigid_distance(const Factorization& z, const Factorization& zp);

// Exhaustive search over explicit block decompositions. Combined length
// must be at most 10.
int rigid_distance_oracle(const Factorization& z, const Factorization& zp);

int distance(SemigroupHandle& h, DistanceKind kind, const Factorization& z, const Factorization& zp);

struct AxiomReport {
  bool ok = true;
  std::string violation;
  std::size_t pairs = 0;
  std::size_t triples = 0;
  std::size_t translations = 0;
};

// Checks (D1)-(D5) over all factorization pairs/triples of each element and
// random two-sided translations by atom sequences drawn from `atoms`.
AxiomReport verify_axioms(DistanceKind kind, SemigroupHandle& h, const std::vector<ElemId>& elements,
                          const std::vector<ElemId>& atoms, std::mt19937_64& rng,
                          std::size_t translations_per_pair = 2);

}  // namespace factorum
