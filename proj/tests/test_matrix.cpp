#include <doctest.h>

#include <random>

#include "factorum/distances.hpp"
#include "factorum/divisibility.hpp"
#include "factorum/factorizations.hpp"
#include "factorum/matrix.hpp"
#include "oracles.hpp"

using namespace factorum;

namespace {

IntMatrix tri2(Int a, Int b, Int d) {
  IntMatrix m(2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 1) = d;
  return m;
}

std::vector<IntMatrix> tri2_sample(Int max_det, Int max_entry) {
  std::vector<IntMatrix> out;
  for (Int a = -max_entry; a <= max_entry; ++a) {
    for (Int d = -max_entry; d <= max_entry; ++d) {
      const Int det = a * d < 0 ? -a * d : a * d;
      if (det <= 1 || det > max_det) continue;
      for (Int b = -max_entry; b <= max_entry; ++b) out.push_back(tri2(a, b, d));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("matrix basics") {
  IntMatrix m = IntMatrix::parse("2 5; 0 3");
  CHECK(m.str() == "[[2,5],[0,3]]");
  CHECK(m.det() == 6);
  CHECK(m.upper_triangular());
  CHECK(m * m.adjugate() == IntMatrix::diagonal({6, 6}));
  CHECK_THROWS_AS(IntMatrix::parse("1 2; 3"), Error);
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK(prime_factors(60) == std::vector<Int>{2, 2, 3, 5});
}

TEST_CASE("triangular atoms") {
  std::optional<AtomProfile> p = tri_is_atom(IntMatrix::diagonal({2, 1}));
  REQUIRE(p);
  CHECK(p->m == 1);
  CHECK(p->p == 2);
  CHECK_FALSE(tri_is_atom(IntMatrix::diagonal({2, 3})));
  CHECK_FALSE(tri_is_atom(IntMatrix::identity(2)));
  for (Int a = -8; a <= 8; ++a) {
    for (Int d = -8; d <= 8; ++d) {
      if (a == 0 || d == 0) continue;
      for (Int b = -8; b <= 8; ++b) CHECK(tri_is_atom(tri2(a, b, d)).has_value() == oracle::tri2_atom(a, b, d));
    }
  }
}

TEST_CASE("associate normal forms") {
  for (const char* text : {"2 5; 0 1", "2 0; 0 1", "1 7; 0 3", "-3 4; 0 1", "1 0 0; 0 5 3; 0 0 1"}) {
    IntMatrix a = IntMatrix::parse(text);
    NormalForm nf = tri_associate_normal_form(a);
    CHECK(nf.left * a * nf.right == nf.form);
    CHECK(is_unimodular(nf.left));
    CHECK(is_unimodular(nf.right));
  }
  CHECK(tri_associate_normal_form(IntMatrix::parse("2 5; 0 1")).form == IntMatrix::diagonal({2, 1}));
  CHECK(tri_associate_normal_form(IntMatrix::diagonal({2, 1})).form == IntMatrix::diagonal({2, 1}));
  NormalForm q = tri_associate_normal_form(IntMatrix::parse("1 7; 0 3"));
  CHECK(q.form == IntMatrix::diagonal({1, 3}));
  CHECK(q.profile.m == 2);
  CHECK(atoms_associated(IntMatrix::parse("2 5; 0 1"), IntMatrix::parse("2 0; 0 1")));
  CHECK_FALSE(atoms_associated(IntMatrix::diagonal({2, 1}), IntMatrix::diagonal({1, 2})));
  CHECK(atoms_associated(IntMatrix::diagonal({1, 3}), IntMatrix::diagonal({1, 3})));
}

TEST_CASE("delta map") {
  CHECK(delta_map(IntMatrix::diagonal({2, 3})) == std::vector<Int>{2, 3});
  CHECK(delta_map(IntMatrix::parse("2 5; 0 3")) == std::vector<Int>{2, 3});
  CHECK(delta_map(IntMatrix::identity(3)) == std::vector<Int>{1, 1, 1});
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> e(-6, 6);
  for (int i = 0; i < 200; ++i) {
    IntMatrix x = tri2(e(rng), e(rng), e(rng)), y = tri2(e(rng), e(rng), e(rng));
    std::vector<Int> dx = delta_map(x), dy = delta_map(y), dxy = delta_map(x * y);
    for (std::size_t k = 0; k < 2; ++k) CHECK(dxy[k] == dx[k] * dy[k]);
  }
}

TEST_CASE("triangular left divisors") {
  TriangularSemigroup h(2);
  ElemId a = h.element(IntMatrix::diagonal({1, 4}));
  DivisorList d = h.left_divisors(a);
  REQUIRE(d.items.size() == 1);
  CHECK(h.matrix(d.items[0].atom) == IntMatrix::diagonal({1, 2}));
  CHECK(h.matrix(d.items[0].quotient) == IntMatrix::diagonal({1, 2}));
  std::set<std::uint64_t> classes;
  for (Int x : {0, 1}) {
    IntMatrix u = tri2(1, x, 2), q = tri2(1, -2 * x, 2);
    CHECK(u * q == IntMatrix::diagonal({1, 4}));
    classes.insert(h.atom_class(h.element(u)));
  }
  CHECK(classes.size() == 1);

  ElemId atom = h.element(IntMatrix::diagonal({3, 1}));
  DivisorList da = h.left_divisors(atom);
  REQUIRE(da.items.size() == 1);
  CHECK(h.is_unit(da.items[0].quotient));

  ElemId x = h.element(IntMatrix::diagonal({2, 3}));
  const auto& zs = rigid_factorizations(h, x).items;
  CHECK(zs.size() >= 2);
  for (const Factorization& z : zs) {
    for (const Factorization& zp : zs) CHECK(distance(h, DistanceKind::Permutable, z, zp) == 0);
  }
  CHECK_THROWS_AS(h.left_divisors(h.element(IntMatrix::diagonal({1 << 20, 1}))), Error);
}

TEST_CASE("permutable factoriality of T_2(Z)") {
  TriangularSemigroup h(2);
  for (const IntMatrix& m : tri2_sample(24, 8)) {
    ElemId x = h.element(m);
    PermSet ps = permutable_factorizations(h, x);
    CHECK(ps.items.size() == 1);
    CHECK(length_profile(h, x).lengths == std::vector<int>{oracle::big_omega(m.det())});
  }
}

TEST_CASE("omega of atoms in T_2(Z)") {
  TriangularSemigroup h(2);
  std::vector<ElemId> elems;
  for (const IntMatrix& m : tri2_sample(12, 4)) elems.push_back(h.element(m));
  for (const IntMatrix& u : {IntMatrix::diagonal({2, 1}), IntMatrix::diagonal({1, 3}), tri2(3, 1, 1)}) {
    CHECK(omega_semigroup(h, elems, h.element(u), OmegaMode::Atoms).value == 1);
  }
}

TEST_CASE("Smith normal form") {
  SnfResult d = snf(IntMatrix::diagonal({2, 3}));
  CHECK(d.c == IntMatrix::diagonal({6, 1}));
  CHECK(d.u * d.c * d.v == IntMatrix::diagonal({2, 3}));
  SnfResult id = snf(IntMatrix::identity(2));
  CHECK(id.c == IntMatrix::identity(2));
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> e(-30, 30);
  for (int i = 0; i < 500; ++i) {
    IntMatrix a(2);
    for (Int& v : a.a) v = e(rng);
    if (a.det() == 0) continue;
    SnfResult r = snf(a);
    CHECK(r.u * r.c * r.v == a);
    CHECK(is_unimodular(r.u));
    CHECK(is_unimodular(r.v));
    CHECK(r.c.diagonal_only());
    const Int g = oracle::gcd(oracle::gcd(a(0, 0), a(0, 1)), oracle::gcd(a(1, 0), a(1, 1)));
    const Int det = a.det() < 0 ? -a.det() : a.det();
    CHECK(r.c(1, 1) == g);
    CHECK(r.c(0, 0) == det / g);
  }
  for (int i = 0; i < 100; ++i) {
    IntMatrix a(3);
    for (Int& v : a.a) v = e(rng) / 3;
    if (a.det() == 0) continue;
    SnfResult r = snf(a);
    CHECK(r.u * r.c * r.v == a);
    CHECK(r.c(1, 1) % r.c(2, 2) == 0);
    CHECK(r.c(0, 0) % r.c(1, 1) == 0);
    SnfResult rev = reverse_snf(r);
    CHECK(rev.u * rev.c * rev.v == a);
  }
}

TEST_CASE("full matrix atoms and lengths") {
  CHECK(full_is_atom(IntMatrix::parse("0 2; 1 0")));
  CHECK_FALSE(full_is_atom(IntMatrix::diagonal({2, 3})));
  FullMatrixSemigroup h(2);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> e(-7, 7);
  for (int i = 0; i < 300; ++i) {
    IntMatrix a(2);
    for (Int& v : a.a) v = e(rng);
    const Int det = a.det() < 0 ? -a.det() : a.det();
    if (det == 0 || det > 40) continue;
    ElemId x = h.element(a);
    CHECK(length_profile(h, x).lengths == std::vector<int>{oracle::big_omega(det)});
    CHECK(full_is_atom(a) == (oracle::big_omega(det) == 1));
    CHECK(det_transfer(a) == det);
  }
}

TEST_CASE("transfer homomorphisms") {
  TriangularSemigroup t(2);
  std::vector<ElemId> te;
  for (const IntMatrix& m : tri2_sample(30, 6)) te.push_back(t.element(m));
  TransferReport tr = verify_transfer(t, te, [&](ElemId x) { return delta_image(t.matrix(x)); });
  CHECK(tr.wt2);
  CHECK(tr.isoatomic);
  CHECK(tr.t1);

  FullMatrixSemigroup f(2);
  std::vector<ElemId> fe;
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> e(-6, 6);
  while (fe.size() < 300) {
    IntMatrix a(2);
    for (Int& v : a.a) v = e(rng);
    const Int det = a.det() < 0 ? -a.det() : a.det();
    if (det > 1 && det <= 30) fe.push_back(f.element(a));
  }
  TransferReport fr = verify_transfer(f, fe, [&](ElemId x) { return det_image(f.matrix(x)); });
  CHECK(fr.ok());
}
