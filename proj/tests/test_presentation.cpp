#include <doctest.h>

#include <random>

#include "factorum/presentation.hpp"
#include "factorum/semigroup.hpp"
#include "oracles.hpp"

using namespace factorum;

namespace {

Word random_word(std::mt19937_64& rng, int gens, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), letter(0, gens - 1);
  Word w;
  for (int i = len(rng); i > 0; --i) w.push_back(static_cast<char>(letter(rng)));
  return w;
}

}  // namespace

TEST_CASE("parse presentations") {
  Presentation p = parse_presentation("gens: a b c\nrel: a b c = c b\n");
  CHECK(p.generators == std::vector<std::string>{"a", "b", "c"});
  REQUIRE(p.relations.size() == 1);
  CHECK(p.show(p.relations[0].lhs) == "abc");
  CHECK(p.show(p.relations[0].rhs) == "cb");
  CHECK(p.budget.max_word_length == 12);
  CHECK(p.budget.max_ball_size == 100000);

  Presentation free = parse_presentation("gens: a\n");
  CHECK(free.relations.empty());

  Presentation b = parse_presentation("# comment\ngens: x y\nrel: x y = y x  # trailing\nbudget: max_word_length=7 max_ball_size=50\n");
  CHECK(b.budget.max_word_length == 7);
  CHECK(b.budget.max_ball_size == 50);
}

TEST_CASE("parse errors") {
  auto kind_of = [](const char* text) {
    try {
      parse_presentation(text);
    } catch (const Error& e) {
      return e.kind();
    }
    FAIL("no error");
    return ErrorKind::Syntax;
  };
  CHECK(kind_of("gens: a b\nrel: a b = 1\n") == ErrorKind::EmptyRelationSide);
  CHECK(kind_of("gens: a b\nrel: a z = b\n") == ErrorKind::UndeclaredGenerator);
  CHECK(kind_of("gens: a a\n") == ErrorKind::DuplicateGenerator);
  CHECK(kind_of("gens: a\nrel: a a\n") == ErrorKind::Syntax);
}

TEST_CASE("adyan graphs") {
  CHECK(check_adyan(parse_presentation("gens: a b\nrel: a b a = b\n")).is_adyan);
  AdyanReport r = check_adyan(parse_presentation("gens: a b\nrel: a b a = b\n"));
  CHECK(r.left_edges.size() == 1);
  CHECK(r.right_edges.size() == 1);
  CHECK(check_adyan(parse_presentation("gens: a b c d e\nrel: a b = c d\nrel: c e d e = b a\n")).is_adyan);
  AdyanReport free = check_adyan(parse_presentation("gens: a b\n"));
  CHECK(free.is_adyan);
  CHECK(free.left_edges.empty());
  CHECK(check_adyan(parse_presentation("gens: a b\nrel: a b = b a\n")).is_adyan);
  CHECK_FALSE(check_adyan(parse_presentation("gens: a b\nrel: a b = b a\nrel: a a = b b\n")).is_adyan);
}

TEST_CASE("congruence balls") {
  Presentation t = parse_presentation("gens: a b c\nrel: a b c = c b\n");
  CongruenceBall ball = congruence_ball(t, t.word("abc"), t.budget);
  CHECK(ball.closed);
  REQUIRE(ball.members.size() == 2);
  CHECK(t.show(ball.members[0]) == "cb");
  CHECK(t.show(ball.members[1]) == "abc");

  Presentation f = parse_presentation("gens: a b\n");
  CongruenceBall fb = congruence_ball(f, f.word("ab"), f.budget);
  CHECK(fb.closed);
  CHECK(fb.members.size() == 1);

  Presentation e = parse_presentation("gens: a b\nrel: a b = b a a\n");
  CongruenceBall eb = congruence_ball(e, e.word("ab"), Budget{3, 1000});
  CHECK(eb.closed);
  CHECK(eb.members.size() == 2);
  CongruenceBall starved = congruence_ball(e, e.word("ab"), Budget{2, 1000});
  CHECK_FALSE(starved.closed);
}

TEST_CASE("equality") {
  Presentation t = parse_presentation("gens: a b c\nrel: a b c = c b\n");
  CHECK(equal(t, t.word("abc"), t.word("cb"), t.budget) == Equality::Equal);
  CHECK(equal(t, t.word("ab"), t.word("ab"), t.budget) == Equality::Equal);
  Presentation l = parse_presentation("gens: a b c d\nrel: a b = c d\n");
  CHECK(equal(l, l.word("ab"), l.word("dc"), l.budget) == Equality::NotEqual);
  Presentation grow = parse_presentation("gens: a b\nrel: a b a = b\n");
  CHECK(equal(grow, grow.word("b"), grow.word("a"), Budget{5, 1000}) == Equality::Unknown);
}

TEST_CASE("balls agree with a brute-force closure") {
  const std::vector<std::pair<std::string, std::string>> rels = {{std::string("\0\1", 2), std::string("\2\3", 2)},
                                                                 {std::string("\2\4\3\4", 4), std::string("\1\0", 2)}};
  Presentation p = parse_presentation("gens: a b c d e\nrel: a b = c d\nrel: c e d e = b a\n");
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Word w = random_word(rng, 5, 7);
    bool closed = false;
    std::set<std::string> expect = oracle::word_class(rels, w, 12, &closed);
    CongruenceBall ball = congruence_ball(p, w, Budget{12, 100000});
    CHECK(ball.closed == closed);
    CHECK(std::set<std::string>(ball.members.begin(), ball.members.end()) == expect);
  }
}

TEST_CASE("union-find scan matches per-word closure") {
  Presentation p = parse_presentation("gens: a b\nrel: a a b b = b b a a\n");
  std::size_t classes = 0, words = 0;
  bool ok = true;
  scan_word_classes(p, 8, [&](const std::vector<Word>& members, bool closed) {
    ++classes;
    words += members.size();
    std::set<std::string> expect = oracle::word_class({{std::string("\0\0\1\1", 4), std::string("\1\1\0\0", 4)}}, members.front(), 8);
    if (!closed || expect != std::set<std::string>(members.begin(), members.end())) ok = false;
  });
  CHECK(ok);
  CHECK(words == (1u << 9) - 2);
  CHECK(classes < words);
}

TEST_CASE("semigroup handle on presentations") {
  PresentationSemigroup t(parse_presentation("gens: a b c\nrel: a b c = c b\n"));
  for (const char* g : {"a", "b", "c"}) CHECK(t.is_atom(t.parse(g)).answer == Tri::Yes);
  CHECK(t.enumerate_atoms().size() == 3);
  DivisorList d = t.left_divisors(t.parse("abc"));
  REQUIRE(d.items.size() == 2);
  CHECK(t.show(d.items[0].atom) == "a");
  CHECK(t.show(d.items[0].quotient) == "bc");
  CHECK(t.show(d.items[1].atom) == "c");
  CHECK(t.show(d.items[1].quotient) == "b");

  PresentationSemigroup f(parse_presentation("gens: a\n"));
  CHECK(f.is_atom(f.parse("a")).answer == Tri::Yes);
  CHECK(f.enumerate_elements(3).size() == 3);

  PresentationSemigroup s(parse_presentation("gens: a b\nrel: a b a = b\n"), Budget{9, 10000});
  AtomTest b = s.is_atom(s.parse("b"));
  CHECK(b.answer == Tri::No);
  CHECK(s.multiply(s.element(b.left), s.element(b.right)) == s.parse("b"));

  PresentationSemigroup o(parse_presentation("gens: a b c d e\nrel: a b = c d\nrel: c e d e = b a\n"));
  CHECK(o.enumerate_atoms().size() == 5);
}

TEST_CASE("canonical forms and soundness") {
  Presentation p = parse_presentation("gens: a b c\nrel: a b c = c b\n");
  PresentationSemigroup s(p);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Word x = random_word(rng, 3, 4), y = random_word(rng, 3, 4), w = random_word(rng, 3, 3);
    ElemId ex = s.element(x);
    const Word& c = s.canonical(ex);
    CHECK(s.canonical(s.element(c)) == c);
    for (const Word& m : s.info(ex).members) CHECK_FALSE(shortlex_less(m, c));
    if (s.element(x) == s.element(y)) {
      CHECK(s.element(x + w) == s.element(y + w));
      CHECK(s.element(w + x) == s.element(w + y));
    }
    if (s.element(w + x) == s.element(w + y)) CHECK(ex == s.element(y));
  }
}

TEST_CASE("closed balls are closed under rewriting") {
  Presentation p = parse_presentation("gens: a b c\nrel: a b a = b a a a b c\n");
  CongruenceBall ball = congruence_ball(p, p.word("abaaba"), Budget{24, 100000});
  REQUIRE(ball.closed);
  std::set<Word> members(ball.members.begin(), ball.members.end());
  for (const Word& m : ball.members) {
    for_each_rewrite(p, m, [&](const Word& next) { CHECK(members.count(next) == 1); });
  }
}
