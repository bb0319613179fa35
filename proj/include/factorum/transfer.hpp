#pragma once

#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "factorum/factorizations.hpp"
#include "factorum/handle.hpp"
#include "factorum/presentation.hpp"
#include "factorum/semigroup.hpp"

namespace factorum {

// Relations of the abelianization: sorted sides, trivial and repeated
// relations removed.
Presentation abelian_presentation(const Presentation& p);

// Commutative semigroup given by the same generators and relations. Words
// are kept sorted, so a word stands for its multiset of letters.
class AbelianSemigroup final : public SemigroupHandle {
 public:
  explicit AbelianSemigroup(const Presentation& p);
  AbelianSemigroup(const Presentation& p, Budget b);

  const Presentation& presentation() const { return p_; }
  ElemId element(Word w);
  ElemId parse(std::string_view text) { return element(p_.word(text)); }
  // pi(x) for an element of the non-commutative semigroup.
  ElemId image(const PresentationSemigroup& s, ElemId x) { return element(s.canonical(x)); }
  const ClassInfo& info(ElemId x) const { return classes_.at(x); }
  // False once two congruent words were seen to lose congruence after
  // cancelling a common atom.
  bool cancellative_within_budget() const { return cancellative_; }
  bool atom_letter(int g);

  ElemId identity() const override { return 0; }
  ElemId multiply(ElemId x, ElemId y) override;
  bool is_unit(ElemId x) override { return x == 0; }
  bool certified(ElemId x) override { return classes_.at(x).closed; }
  DivisorList left_divisors(ElemId x) override;
  std::uint64_t atom_class(ElemId atom) override;
  std::string show(ElemId x) override { return p_.show(classes_.at(x).canonical); }
  std::string show_class(std::uint64_t key) override { return p_.letter(static_cast<int>(key)); }
  bool atom_less(ElemId a, ElemId b) override { return atom_class(a) < atom_class(b); }
  bool is_commutative() const override { return true; }
  std::size_t max_factorization_length() const override {
    return static_cast<std::size_t>(budget_.max_word_length);
  }

 private:
  ClassInfo ball(const Word& sorted) const;

  Presentation p_;
  Budget budget_;
  std::deque<ClassInfo> classes_;
  std::unordered_map<Word, ElemId> index_;
  std::unordered_map<ElemId, DivisorList> divisor_cache_;
  std::vector<int> atom_letter_;  // -1 unknown, 0 no, 1 yes
  bool cancellative_ = true;
};

struct EquivWitness {
  Factorization za;
  Factorization zb;
  std::vector<int> sigma;  // za[i] ~ zb[sigma[i]]
};

struct EquivResult {
  bool related = false;
  std::optional<EquivWitness> witness;
  Cert cert = Cert::Exact;
};

EquivResult equiv_p(SemigroupHandle& h, ElemId a, ElemId b);

struct ExwtCounterexample {
  ElemId a = 0;
  ElemId b = 0;
  Factorization unmatched;  // factorization of a with no permutable match in Z*(b)
};

struct ExwtReport {
  bool pass = true;
  std::vector<ExwtCounterexample> counterexamples;
  bool transitive = true;
  std::vector<ElemId> transitivity_witness;  // a ~ b ~ c with a !~ c
  bool length_obstruction = false;           // pi(a) = pi(b) but L(a) != L(b)
  ElemId obstruction_a = 0;
  ElemId obstruction_b = 0;
  bool cancellative_within_budget = true;
  std::size_t elements = 0;
  std::size_t related_pairs = 0;
  Cert cert = Cert::Exact;
  std::vector<std::string> assumptions;
};

// Checks, over all classes with a member of length <= seed_length, that
// a ~_p b implies equal permutable factorization sets.
ExwtReport check_exwt(PresentationSemigroup& s, AbelianSemigroup& ab, int seed_length);

struct LengthMapReport {
  bool exists = false;
  bool t1 = false;
  bool t2 = false;
  std::size_t elements_checked = 0;
  std::string counterexample;
};

// The word-length map to (N_0, +), defined when every relation preserves
// length; verified on the classes with a member of length <= seed_length.
LengthMapReport length_map(PresentationSemigroup& s, int seed_length);

}  // namespace factorum
