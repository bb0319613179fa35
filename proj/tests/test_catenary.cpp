#include <doctest.h>

#include "factorum/catenary.hpp"
#include "factorum/distances.hpp"
#include "factorum/factorizations.hpp"
#include "factorum/matrix.hpp"
#include "factorum/semigroup.hpp"
#include "factorum/zerosum.hpp"
#include "oracles.hpp"

using namespace factorum;

namespace {

int oracle_catenary(SemigroupHandle& h, ElemId x, DistanceKind k) {
  const auto& zs = rigid_factorizations(h, x).items;
  std::vector<std::vector<int>> w(zs.size(), std::vector<int>(zs.size(), 0));
  for (std::size_t i = 0; i < zs.size(); ++i) {
    for (std::size_t j = 0; j < zs.size(); ++j) w[i][j] = distance(h, k, zs[i], zs[j]);
  }
  return oracle::minimax_catenary(w);
}

}  // namespace

TEST_CASE("worked catenary degrees") {
  PresentationSemigroup t(parse_presentation("gens: a b c\nrel: a b c = c b\n"));
  ElemId x = t.parse("abc");
  CatenaryReport r = catenary(t, x, DistanceKind::Permutable);
  CHECK(r.value == 1);
  CHECK(r.cert == Cert::Exact);
  CHECK(equal_catenary(t, x, DistanceKind::Permutable).value == 0);
  CHECK(adjacent_catenary(t, x, DistanceKind::Permutable).value == 1);
  CHECK(monotone_catenary(t, x, DistanceKind::Permutable).value == 1);
  for (Variant v : {Variant::Plain, Variant::Equal, Variant::Adjacent, Variant::Monotone}) {
    CHECK(catenary_variant(t, t.parse("a"), DistanceKind::Rigid, v).value == 0);
  }

  PresentationSemigroup n2(parse_presentation("gens: a b\nrel: a a b b = b b a a\n"));
  CHECK(catenary(n2, n2.parse("aabb"), DistanceKind::Permutable).value == 0);
  CHECK(catenary(n2, n2.parse("aabb"), DistanceKind::Rigid).value == 4);

  PresentationSemigroup e(parse_presentation("gens: a b\nrel: a b = b a a a\n"), Budget{20, 100000});
  CHECK(catenary(e, e.parse("aab"), DistanceKind::Permutable).value == 2);
}

TEST_CASE("bottleneck value is exact") {
  for (const char* text : {"gens: a b c\nrel: a b c = c b\n", "gens: a b c d\nrel: a b = c d\n", "gens: a b\nrel: a b = b a a\n",
                           "gens: a b\nrel: a a b b = b b a a\n"}) {
    PresentationSemigroup s(parse_presentation(text), Budget{14, 100000});
    for (ElemId x : s.enumerate_elements(6)) {
      for (DistanceKind k : {DistanceKind::Length, DistanceKind::Permutable, DistanceKind::Rigid}) {
        CatenaryReport r = catenary(s, x, k);
        CHECK(r.value == oracle_catenary(s, x, k));
        for (std::size_t i = 0; i + 1 < r.chain.size(); ++i) CHECK(distance(s, k, r.chain[i], r.chain[i + 1]) <= r.value);
      }
    }
  }
}

TEST_CASE("catenary inequalities") {
  for (const char* text : {"gens: a b c\nrel: a b c = c b\n", "gens: a b\nrel: a b = b a a\n", "gens: a b c\nrel: b a a = a a c\n"}) {
    PresentationSemigroup s(parse_presentation(text), Budget{16, 100000});
    for (ElemId x : s.enumerate_elements(5)) {
      LengthSet l = length_profile(s, x);
      const int sup = l.lengths.empty() ? 0 : l.lengths.back();
      for (DistanceKind k : {DistanceKind::Length, DistanceKind::Permutable, DistanceKind::Rigid}) {
        const int c = catenary(s, x, k).value;
        const int eq = equal_catenary(s, x, k).value, adj = adjacent_catenary(s, x, k).value;
        const int mon = monotone_catenary(s, x, k).value;
        CHECK(c <= mon);
        CHECK(mon <= std::max(sup, 0));
        CHECK(mon == std::max(eq, adj));
        if (rigid_factorizations(s, x).items.size() <= 12) CHECK(mon == monotone_catenary_direct(s, x, k));
        const bool one_class = permutable_factorizations(s, x).items.size() == 1;
        if (k == DistanceKind::Permutable) CHECK((c == 0) == one_class);
        if (!l.delta.empty()) CHECK(l.delta.back() <= c);
        if (c <= 1) CHECK(l.delta.size() <= 1);
      }
    }
  }
}

TEST_CASE("catenary in fibers") {
  FiniteAbelianGroup g({3});
  BlockMonoid b(g);
  for (const Sequence& s : zero_sum_sequences(g, b.subset(), 6)) {
    ElemId x = b.element(s);
    CHECK(catenary_in_fibers(b, x, DistanceKind::Rigid, [&](ElemId u) { return b.atom_class(u); }).value <= 2);
  }
  PresentationSemigroup t(parse_presentation("gens: a\n"));
  CHECK(catenary_in_fibers(t, t.parse("aa"), DistanceKind::Rigid, [&](ElemId u) { return t.atom_class(u); }).value == 0);

  TriangularSemigroup tri(2);
  for (Int a : {2, 4, 6}) {
    for (Int b : {0, 1, 3}) {
      for (Int d : {1, 2, 3}) {
        IntMatrix m(2);
        m(0, 0) = a;
        m(0, 1) = b;
        m(1, 1) = d;
        ElemId x = tri.element(m);
        const auto delta = [&](ElemId u) {
          std::uint64_t key = 0;
          for (Int v : delta_map(tri.matrix(u))) key = key * 1000 + static_cast<std::uint64_t>(v);
          return key;
        };
        const int c = catenary(tri, x, DistanceKind::Rigid).value;
        CHECK(c <= std::max(0, catenary_in_fibers(tri, x, DistanceKind::Rigid, delta).value));
      }
    }
  }
}
