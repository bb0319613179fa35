#include <doctest.h>

#include <random>

#include "factorum/divisibility.hpp"
#include "factorum/factorizations.hpp"
#include "factorum/semigroup.hpp"

using namespace factorum;

namespace {

const char* kOmega = "gens: a b c d e\nrel: a b = c d\nrel: c e d e = b a\n";

std::string tame_text(int n) {
  std::string an;
  for (int i = 0; i < n - 1; ++i) an += " a";
  return "gens: a b c\nrel: b" + an + " =" + an + " c\n";
}

}  // namespace

TEST_CASE("divisibility relations") {
  PresentationSemigroup s(parse_presentation(kOmega));
  ElemId a = s.parse("a");
  CHECK(divides_perm(s, a, s.parse("cd")).value);
  CHECK(divides_perm(s, a, a).value);
  CHECK(divides_perm(s, a, s.parse("cede")).value);
  CHECK_FALSE(divides_perm(s, a, s.parse("ed")).value);
  CHECK(submultiset({1, 2}, {1, 2, 2}));
  CHECK_FALSE(submultiset({1, 1}, {1, 2}));

  std::vector<ElemId> atoms = s.enumerate_atoms();
  for (ElemId u : atoms) {
    CHECK_FALSE(divides_perm(s, u, s.identity()).value);
    CHECK_FALSE(divides_lr(s, u, s.identity()).value);
    for (ElemId v : atoms) CHECK(divides_perm(s, u, v).value == (u == v));
    for (ElemId x : s.enumerate_elements(4)) CHECK(divides_perm(s, u, x).value == divides_lr(s, u, x).value);
  }
  std::mt19937_64 rng(9);
  std::vector<ElemId> elems = s.enumerate_elements(3);
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  for (int i = 0; i < 200; ++i) {
    ElemId x = elems[pick(rng)], y = elems[pick(rng)];
    for (ElemId u : atoms) {
      if (divides_perm(s, u, x).value) CHECK(divides_perm(s, u, s.multiply(x, y)).value);
      if (divides_perm(s, u, y).value) CHECK(divides_perm(s, u, s.multiply(x, y)).value);
      if (divides_lr(s, u, x).value) CHECK(divides_lr(s, u, s.multiply(y, x)).value);
    }
  }
}

TEST_CASE("almost prime-like atoms and valuations") {
  PresentationSemigroup w(parse_presentation("gens: a b c\nrel: a b a = b a a a b c\n"), Budget{34, 2000000});
  std::vector<ElemId> elems = w.enumerate_elements(7);
  CHECK_FALSE(almost_prime_like(w, w.parse("a"), elems).counterexample);
  CHECK_FALSE(almost_prime_like(w, w.parse("b"), elems).counterexample);
  PrimeLikeReport c = almost_prime_like(w, w.parse("c"), elems);
  REQUIRE(c.counterexample);
  CHECK(w.show(c.element) == "aba");
  ElemId aba = w.parse("aba");
  CHECK(valuation_set(w, w.parse("a"), aba).values == std::vector<int>{2, 3});
  CHECK(valuation_set(w, w.parse("b"), aba).values == std::vector<int>{1, 2});
  CHECK(valuation_set(w, w.parse("c"), w.parse("c")).values == std::vector<int>{1});
  CHECK_THROWS_AS(is_prime_like(w, w.parse("c"), elems), Error);

  PresentationSemigroup f(parse_presentation("gens: a b\n"));
  std::vector<ElemId> fe = f.enumerate_elements(4);
  PrimeLikeReport fa = almost_prime_like(f, f.parse("a"), fe);
  CHECK_FALSE(fa.counterexample);
  CHECK(fa.cert == Cert::Exact);
  CHECK(is_prime_like(f, f.parse("a"), fe).prime_like);

  PresentationSemigroup l(parse_presentation("gens: a b c d\nrel: a b = c d\n"));
  PrimeLikeReport la = almost_prime_like(l, l.parse("a"), l.enumerate_elements(2));
  REQUIRE(la.counterexample);
  CHECK(l.show(la.element) == "ab");

  PresentationSemigroup p(parse_presentation("gens: a b\nrel: a a = b a a b\n"), Budget{14, 100000});
  std::vector<ElemId> pe = p.enumerate_elements(4);
  CHECK(is_prime_like(p, p.parse("a"), pe).prime_like);
  CHECK(permutable_factorizations(p, p.parse("aa")).items.size() > 1);
}

TEST_CASE("almost prime-like atoms divide some atom of every product") {
  PresentationSemigroup w(parse_presentation("gens: a b c\nrel: a b a = b a a a b c\n"), Budget{34, 2000000});
  ElemId a = w.parse("a");
  for (ElemId x : w.enumerate_elements(5)) {
    if (!divides_perm(w, a, x).value) continue;
    for (const Factorization& z : rigid_factorizations(w, x).items) CHECK(std::count(z.begin(), z.end(), a) > 0);
  }
}

TEST_CASE("omega") {
  PresentationSemigroup s(parse_presentation(kOmega));
  ElemId a = s.parse("a");
  OmegaReport r = omega_semigroup(s, s.enumerate_elements(4), a, OmegaMode::Atoms);
  CHECK(r.value == 2);
  std::vector<ElemId> parts{s.parse("ce"), s.parse("d"), s.parse("e")};
  CHECK(compose(s, parts) == s.parse("ba"));
  CHECK(min_divisible_subproduct(s, parts, a) == 3);
  OmegaReport nu = omega_nonunits(s, s.parse("ba"), a, 3);
  CHECK(nu.value >= 3);
  for (ElemId x : s.enumerate_elements(3)) {
    OmegaReport o = omega(s, x, a);
    if (!o.applicable) continue;
    CHECK(o.value <= omega_nonunits(s, x, a, 3).value);
  }

  PresentationSemigroup f(parse_presentation("gens: a b\n"));
  CHECK(omega_semigroup(f, f.enumerate_elements(4), f.parse("a"), OmegaMode::Atoms).value == 1);
}

TEST_CASE("tame degrees and omega by scan") {
  PresentationSemigroup s(parse_presentation(tame_text(3)), Budget{12, 100000});
  std::vector<ScanResult> r = divisibility_scan(s, {s.parse("a"), s.parse("b"), s.parse("c")}, 12);
  CHECK(r[0].open_classes == 0);
  CHECK(r[0].tame.value == 0);
  CHECK(r[1].tame.value == 1);
  CHECK(r[2].tame.value == 1);
  CHECK(r[0].omega.value == 1);
  CHECK(r[1].omega.value == 3);
  CHECK(r[2].omega.value == 3);

  PresentationSemigroup braid(parse_presentation("gens: a b\nrel: a b a = b a b\n"));
  std::vector<ScanResult> br = divisibility_scan(braid, {braid.parse("a"), braid.parse("b")}, 10);
  CHECK(br[0].tame.value == 0);
  CHECK(br[1].tame.value == 0);

  std::vector<ElemId> elems = braid.enumerate_elements(5);
  TameReport ta = tame_semigroup(braid, elems, braid.parse("a"));
  CHECK(ta.value == 0);
  for (ElemId x : elems) {
    if (permutable_factorizations(braid, x).items.size() != 1) continue;
    CHECK(tame_degree(braid, x, perm_class(braid, {braid.parse("a")})).value == 0);
  }
}

TEST_CASE("scan agrees with factorization-based omega on small windows") {
  PresentationSemigroup s(parse_presentation(tame_text(2)), Budget{8, 100000});
  ElemId b = s.parse("b");
  ScanResult r = divisibility_scan(s, b, 8);
  OmegaReport direct = omega_semigroup(s, s.enumerate_elements(8), b, OmegaMode::Atoms);
  CHECK(r.omega.value == direct.value);
}
