#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "factorum/catenary.hpp"
#include "factorum/handle.hpp"

namespace factorum {

inline constexpr int kMaxGroupOrder = 64;

// C_{n_1} + ... + C_{n_k}. Elements are mixed-radix indices with the first
// coordinate most significant, so index order is lexicographic order of
// coordinate vectors.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<int> orders);
  // "3", "2,2"; "1" or "" is the trivial group.
  static FiniteAbelianGroup parse(const std::string& text);

  const std::vector<int>& orders() const { return orders_; }
  int order() const { return order_; }
  int exponent() const;
  std::vector<int> coords(int x) const;
  int index(const std::vector<int>& coords) const;
  int add(int x, int y) const;
  int neg(int x) const;
  int element_order(int x) const;
  // Invariant factors d_1 | d_2 | ... with every d_i > 1.
  std::vector<int> invariant_factors() const;
  std::string show(int x) const;
  std::string name() const;

 private:
  std::vector<int> orders_;
  std::vector<int> stride_;
  int order_ = 1;
};

// Sorted multiset of group element indices.
using Sequence = std::vector<int>;

int sequence_sum(const FiniteAbelianGroup& g, const Sequence& s);
std::string show_sequence(const FiniteAbelianGroup& g, const Sequence& s);
Sequence parse_sequence(const FiniteAbelianGroup& g, const std::string& text);

// Minimal zero-sum sequences over `subset` (all of G when empty), sorted by
// length and then lexicographically.
std::vector<Sequence> block_atoms(const FiniteAbelianGroup& g, const std::vector<int>& subset = {});
int davenport(const FiniteAbelianGroup& g, const std::vector<int>& subset = {});

// B(G_P) as a commutative handle. Element ids are interned zero-sum
// sequences; id 0 is the empty sequence.
class BlockMonoid final : public SemigroupHandle {
 public:
  explicit BlockMonoid(FiniteAbelianGroup g, std::vector<int> subset = {});

  const FiniteAbelianGroup& group() const { return g_; }
  const std::vector<Sequence>& atom_sequences() const { return atoms_; }
  const std::vector<int>& subset() const { return subset_; }
  // Throws InvalidArgument unless s is a zero-sum sequence over the subset.
  ElemId element(Sequence s);
  const Sequence& sequence(ElemId x) const { return seqs_.at(x); }
  ElemId atom(std::size_t i) const { return atom_ids_.at(i); }

  ElemId identity() const override { return 0; }
  ElemId multiply(ElemId x, ElemId y) override;
  bool is_unit(ElemId x) override { return x == 0; }
  bool certified(ElemId) override { return true; }
  DivisorList left_divisors(ElemId x) override;
  std::uint64_t atom_class(ElemId atom) override;
  std::string show(ElemId x) override { return show_sequence(g_, seqs_.at(x)); }
  std::string show_class(std::uint64_t key) override { return show_sequence(g_, atoms_.at(key)); }
  bool atom_less(ElemId a, ElemId b) override { return atom_class(a) < atom_class(b); }
  bool is_commutative() const override { return true; }
  std::size_t max_factorization_length() const override { return 4096; }

 private:
  ElemId intern(Sequence s);

  FiniteAbelianGroup g_;
  std::vector<int> subset_;
  std::vector<Sequence> atoms_;
  std::vector<ElemId> atom_ids_;
  std::vector<Sequence> seqs_;
  std::map<Sequence, ElemId> index_;
  std::map<ElemId, std::uint64_t> atom_key_;
};

// All zero-sum sequences over the subset with 1 <= length <= max_length.
std::vector<Sequence> zero_sum_sequences(const FiniteAbelianGroup& g, const std::vector<int>& subset, int max_length);

struct BlockCatenaryReport {
  CatenaryReport catenary;  // worst element
  Sequence witness;
  int max_length = 0;
  int davenport = 0;
  std::size_t elements_checked = 0;
  bool truncated = false;
};

// Maximum of c_p over zero-sum sequences of length <= max_length (default
// 2 D(G_P)). A lower bound for c_p(B(G_P)).
BlockCatenaryReport block_catenary(const FiniteAbelianGroup& g, const std::vector<int>& subset = {},
                                   int max_length = 0, std::size_t max_elements = 200'000);

struct OrderBoundReport {
  int bound = 0;
  int computed = 0;             // max(2, block catenary lower bound)
  int classified = -1;          // value from the small-group classification, -1 if none
  std::string classification;   // "d_sim-factorial", "|C| <= 2", "value 3", "value 4", "unclassified"
  std::vector<int> invariant_factors;
  Cert cert = Cert::LowerBound;
  BlockCatenaryReport detail;
};

OrderBoundReport maximal_order_bound(const FiniteAbelianGroup& c, std::size_t max_elements = 200'000);

}  // namespace factorum
