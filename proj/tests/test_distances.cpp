#include <doctest.h>

#include <random>

#include "factorum/distances.hpp"
#include "factorum/factorizations.hpp"
#include "factorum/semigroup.hpp"
#include "oracles.hpp"

using namespace factorum;

TEST_CASE("worked distances") {
  PresentationSemigroup t(parse_presentation("gens: a b c\nrel: a b c = c b\n"));
  Factorization z{t.parse("a"), t.parse("b"), t.parse("c")}, zp{t.parse("c"), t.parse("b")};
  CHECK(distance(t, DistanceKind::Permutable, z, zp) == 1);
  CHECK(distance(t, DistanceKind::Length, z, zp) == 1);
  for (DistanceKind k : {DistanceKind::Length, DistanceKind::Permutable, DistanceKind::Rigid}) CHECK(distance(t, k, z, z) == 0);

  PresentationSemigroup s(parse_presentation("gens: a b\nrel: a b a = b\n"));
  Factorization x{s.parse("a"), s.parse("b"), s.parse("a")}, y{s.parse("b")};
  CHECK(rigid_distance(x, y) == 2);
  CHECK(rigid_distance_oracle(x, y) == 2);
  CHECK(oracle::rigid_distance(x, y) == 2);

  PresentationSemigroup n2(parse_presentation("gens: a b\nrel: a a b b = b b a a\n"));
  ElemId a = n2.parse("a"), b = n2.parse("b");
  Factorization u{a, a, b, b}, v{b, b, a, a};
  CHECK(rigid_distance(u, v) == 4);
  CHECK(oracle::rigid_distance(u, v) == 4);
  CHECK(distance(n2, DistanceKind::Permutable, u, v) == 0);
}

TEST_CASE("d* dynamic programme against the matching oracle") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> len(0, 5), atom(1, 3);
  for (int i = 0; i < 500; ++i) {
    Factorization z, zp;
    for (int k = len(rng); k > 0; --k) z.push_back(static_cast<ElemId>(atom(rng)));
    for (int k = len(rng); k > 0; --k) zp.push_back(static_cast<ElemId>(atom(rng)));
    const int d = rigid_distance(z, zp);
    CHECK(d == oracle::rigid_distance(z, zp));
    CHECK(d == rigid_distance_oracle(z, zp));
    CHECK(d <= std::max<int>({static_cast<int>(z.size()), static_cast<int>(zp.size()), 1}));
    CHECK((d == 0) == (z == zp));
    Alignment al = rigid_alignment(z, zp);
    CHECK(al.cost == d);
  }
}

TEST_CASE("distance axioms and coarseness") {
  std::mt19937_64 rng(5);
  for (const char* text : {"gens: a b c\nrel: a b c = c b\n", "gens: a b c d\nrel: a b = c d\n", "gens: a b\nrel: a b = b a a\n"}) {
    PresentationSemigroup s(parse_presentation(text), Budget{14, 100000});
    std::vector<ElemId> elems = s.enumerate_elements(5);
    std::vector<ElemId> atoms = s.enumerate_atoms();
    for (DistanceKind k : {DistanceKind::Length, DistanceKind::Permutable, DistanceKind::Rigid}) {
      AxiomReport r = verify_axioms(k, s, elems, atoms, rng);
      CHECK_MESSAGE(r.ok, r.violation);
    }
    for (ElemId x : elems) {
      const auto& zs = rigid_factorizations(s, x).items;
      for (const Factorization& z : zs) {
        for (const Factorization& zp : zs) {
          const int dl = length_distance(z, zp), dp = distance(s, DistanceKind::Permutable, z, zp), ds = rigid_distance(z, zp);
          CHECK(dl <= dp);
          CHECK(dp <= ds);
          CHECK((dp == 0) == (perm_class(s, z) == perm_class(s, zp)));
        }
      }
    }
  }
}
