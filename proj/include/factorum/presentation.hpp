#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "factorum/core.hpp"

namespace factorum {

// A word over a presentation's alphabet: one char per generator index.
using Word = std::string;

bool shortlex_less(const Word& a, const Word& b);

struct Budget {
  int max_word_length = 12;
  std::size_t max_ball_size = 100000;
};

struct Relation {
  Word lhs;
  Word rhs;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Relation> relations;
  Budget budget;

  int index_of(std::string_view name) const;
  // Whitespace-separated generator names. When every generator name is a
  // single character, compact tokens such as "abc" are split into letters.
  // "1" and the empty string denote the empty word.
  Word word(std::string_view text) const;
  std::string show(const Word& w) const;
  std::string letter(int g) const { return generators.at(static_cast<std::size_t>(g)); }
  bool length_preserving() const;
  int longest_side() const;
  void validate_budget(const Budget& b) const;
};

Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::string& path);

struct AdyanReport {
  std::vector<std::pair<int, int>> left_edges;
  std::vector<std::pair<int, int>> right_edges;
  bool left_forest = true;
  bool right_forest = true;
  bool is_adyan = true;
};

AdyanReport check_adyan(const Presentation& p);

struct CongruenceBall {
  Word seed;
  std::vector<Word> members;  // shortlex order
  bool closed = false;
};

CongruenceBall congruence_ball(const Presentation& p, const Word& w, const Budget& b);

enum class Equality { Equal, NotEqual, Unknown };

const char* to_string(Equality e);

Equality equal(const Presentation& p, const Word& w1, const Word& w2, const Budget& b);

// Calls f(rewritten) for every single relation application to w, in both
// directions and at every position.
template <class F>
void for_each_rewrite(const Presentation& p, const Word& w, F&& f) {
  for (const Relation& r : p.relations) {
    for (int dir = 0; dir < 2; ++dir) {
      const Word& from = dir == 0 ? r.lhs : r.rhs;
      const Word& to = dir == 0 ? r.rhs : r.lhs;
      for (std::size_t pos = w.find(from); pos != Word::npos; pos = w.find(from, pos + 1)) {
        Word next;
        next.reserve(w.size() - from.size() + to.size());
        next.append(w, 0, pos);
        next.append(to);
        next.append(w, pos + from.size(), Word::npos);
        f(next);
      }
    }
  }
}

}  // namespace factorum
