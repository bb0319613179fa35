#include <doctest.h>

#include "factorum/factorizations.hpp"
#include "factorum/semigroup.hpp"

using namespace factorum;

namespace {

std::vector<std::string> rigid_strings(PresentationSemigroup& s, ElemId x) {
  std::vector<std::string> out;
  for (const Factorization& z : rigid_factorizations(s, x).items) out.push_back(show_factorization(s, z));
  std::sort(out.begin(), out.end());
  return out;
}

std::string lengths(const LengthSet& l) {
  std::string s;
  for (int x : l.lengths) s += std::to_string(x) + " ";
  return s;
}

}  // namespace

TEST_CASE("rigid factorizations") {
  PresentationSemigroup t(parse_presentation("gens: a b c\nrel: a b c = c b\n"));
  CHECK(rigid_strings(t, t.parse("abc")) == std::vector<std::string>{"[a, b, c]", "[c, b]"});
  PresentationSemigroup f(parse_presentation("gens: a b\n"));
  CHECK(rigid_strings(f, f.parse("aaa")) == std::vector<std::string>{"[a, a, a]"});
  PresentationSemigroup e(parse_presentation("gens: a b\nrel: a b = b a a\n"));
  CHECK(rigid_strings(e, e.parse("ab")) == std::vector<std::string>{"[a, b]", "[b, a, a]"});
  CHECK(lengths(length_profile(e, e.parse("ab"))) == "2 3 ");
}

TEST_CASE("permutable factorizations") {
  PresentationSemigroup t(parse_presentation("gens: a b c\nrel: a b c = c b\n"));
  CHECK(permutable_factorizations(t, t.parse("abc")).items.size() == 2);
  PresentationSemigroup s(parse_presentation("gens: a b\nrel: a a b b = b b a a\n"));
  ElemId x = s.parse("aabb");
  CHECK(rigid_factorizations(s, x).items.size() == 2);
  CHECK(permutable_factorizations(s, x).items.size() == 1);
  ElemId a = s.parse("a");
  CHECK(permutable_factorizations(s, a).items.size() == 1);
  CHECK(rigid_factorizations(s, a).items.size() == 1);
}

TEST_CASE("length sets") {
  for (int n : {3, 4}) {
    std::string text = "gens: a b\nrel: a b = b";
    for (int i = 0; i < n - 1; ++i) text += " a";
    PresentationSemigroup s(parse_presentation(text + "\n"), Budget{40, 100000});
    for (int m = 1; m <= 3; ++m) {
      LengthSet l = length_profile(s, s.parse(std::string(static_cast<std::size_t>(m), 'a') + "b"));
      std::vector<int> expect;
      for (int k = 0; k <= m; ++k) expect.push_back(m + 1 + k * (n - 2));
      CHECK(l.lengths == expect);
      CHECK(l.delta == std::vector<int>{n - 2});
      CHECK(l.elasticity == Rational(m * (n - 1) + 1, m + 1));
    }
  }
  PresentationSemigroup t(parse_presentation("gens: a b c\nrel: a b c = c b\n"));
  LengthSet atom = length_profile(t, t.parse("a"));
  CHECK(atom.lengths == std::vector<int>{1});
  CHECK(atom.delta.empty());
  CHECK(atom.elasticity == Rational(1, 1));
  PresentationSemigroup w(parse_presentation("gens: a b c d e\nrel: a b c = d e\n"));
  CHECK(length_profile(w, w.parse("abc")).lengths == std::vector<int>{2, 3});
  CHECK(length_profile(w, w.parse("bac")).lengths == std::vector<int>{3});
}

TEST_CASE("factorization properties on explored elements") {
  for (const char* text : {"gens: a b c\nrel: a b c = c b\n", "gens: a b c d\nrel: a b = c d\n", "gens: a b\nrel: a b a = b a b\n",
                           "gens: a b\n"}) {
    PresentationSemigroup s(parse_presentation(text));
    const bool free = s.presentation().relations.empty();
    for (ElemId x : s.enumerate_elements(5)) {
      const FactorizationSet& zs = rigid_factorizations(s, x);
      PermSet ps = permutable_factorizations(s, x);
      CHECK(ps.items.size() <= zs.items.size());
      for (const Factorization& z : zs.items) {
        CHECK(compose(s, z) == x);
        PermFactorization c = perm_class(s, z);
        CHECK(std::count(ps.items.begin(), ps.items.end(), c) == 1);
      }
      LengthSet l = length_profile(s, x);
      CHECK(l.delta.empty() == (l.lengths.size() <= 1));
      if (free) CHECK(zs.items.size() == 1);
    }
  }
}
