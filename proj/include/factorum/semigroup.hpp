#pragma once

#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "factorum/handle.hpp"
#include "factorum/presentation.hpp"

namespace factorum {

struct ClassInfo {
  Word canonical;
  std::vector<Word> members;  // shortlex order
  bool closed = false;
};

enum class Tri { Yes, No, Unknown };

const char* to_string(Tri t);

struct AtomTest {
  Tri answer = Tri::Unknown;
  Word left;  // witness split on No
  Word right;
};

// Finitely presented semigroup <X|R> with an adjoined identity (the empty
// word), explored through bounded congruence balls.
class PresentationSemigroup final : public SemigroupHandle {
 public:
  explicit PresentationSemigroup(Presentation p);
  PresentationSemigroup(Presentation p, Budget b);

  const Presentation& presentation() const { return p_; }
  const Budget& budget() const { return budget_; }
  bool adyan() const { return adyan_; }
  std::vector<std::string> warnings() const;

  ElemId element(const Word& w);
  ElemId parse(std::string_view text) { return element(p_.word(text)); }
  const ClassInfo& info(ElemId x) const { return classes_.at(x); }
  const Word& canonical(ElemId x) const { return classes_.at(x).canonical; }

  AtomTest is_atom(ElemId x);
  // Generator g is an atom (its class consists of one-letter words only).
  bool atom_letter(int g);
  // Canonical atom letter of g's class, or -1 if g is not an atom.
  int atom_letter_class(int g);

  // Classes having a member of length <= seed_length (nonempty words),
  // sorted by canonical form; complete is false if any ball was truncated.
  std::vector<ElemId> enumerate_elements(int seed_length, bool* complete = nullptr);
  std::vector<ElemId> enumerate_elements(bool* complete = nullptr) {
    return enumerate_elements(budget_.max_word_length, complete);
  }
  std::vector<ElemId> enumerate_atoms(bool* complete = nullptr);

  ElemId identity() const override { return 0; }
  ElemId multiply(ElemId x, ElemId y) override;
  bool is_unit(ElemId x) override { return x == 0; }
  bool certified(ElemId x) override { return classes_.at(x).closed; }
  DivisorList left_divisors(ElemId x) override;
  std::uint64_t atom_class(ElemId atom) override;
  std::string show(ElemId x) override { return p_.show(canonical(x)); }
  std::string show_class(std::uint64_t key) override { return p_.letter(static_cast<int>(key)); }
  bool atom_less(ElemId a, ElemId b) override { return shortlex_less(canonical(a), canonical(b)); }
  std::size_t max_factorization_length() const override {
    return static_cast<std::size_t>(budget_.max_word_length);
  }

 private:
  Presentation p_;
  Budget budget_;
  bool adyan_;
  std::deque<ClassInfo> classes_;  // stable references
  std::unordered_map<Word, ElemId> index_;
  std::unordered_map<ElemId, DivisorList> divisor_cache_;
  std::vector<int> atom_letter_class_;  // -2 = not computed
};

// Partition of all words of length 1..max_length into congruence classes,
// computed with union-find over single relation applications. A class is
// closed when no member rewrites to a word longer than max_length. Classes
// are reported with members in shortlex order; the callback may be invoked
// for millions of classes.
using ClassCallback = std::function<void(const std::vector<Word>& members, bool closed)>;

void scan_word_classes(const Presentation& p, int max_length, const ClassCallback& fn,
                       std::size_t max_words = 40'000'000);

}  // namespace factorum
