#include "factorum/regression.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "factorum/catenary.hpp"
#include "factorum/distances.hpp"
#include "factorum/divisibility.hpp"
#include "factorum/factorizations.hpp"
#include "factorum/matrix.hpp"
#include "factorum/presentation.hpp"
#include "factorum/semigroup.hpp"
#include "factorum/transfer.hpp"
#include "factorum/zerosum.hpp"

namespace factorum {

const char* to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::Pass: return "PASS";
    case CaseStatus::Fail: return "FAIL";
    case CaseStatus::Incomplete: return "INCOMPLETE";
  }
  return "FAIL";
}

CaseStatus summarize(const std::vector<Check>& checks) {
  bool incomplete = false;
  for (const Check& c : checks) {
    if (!c.ok && c.certified) return CaseStatus::Fail;
    if (!c.certified) incomplete = true;
  }
  return incomplete ? CaseStatus::Incomplete : CaseStatus::Pass;
}

namespace {

std::string set_str(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct Ctx {
  const RegressionOptions& opts;
  std::vector<Check> checks;
  // Set once a budget override shrinks the window of this case.
  bool starved = false;

  Budget budget(int len, std::size_t ball = 2'000'000) {
    Budget b;
    b.max_word_length = opts.budget_len.value_or(len);
    b.max_ball_size = opts.budget_ball.value_or(ball);
    if (b.max_word_length < len || b.max_ball_size < ball) starved = true;
    return b;
  }
  int seed_len(int wanted) {
    if (opts.budget_len && *opts.budget_len < wanted) {
      starved = true;
      return *opts.budget_len;
    }
    return wanted;
  }

  void check(std::string name, std::string expected, std::string computed, bool certified = true) {
    bool ok = expected == computed;
    checks.push_back({std::move(name), std::move(expected), std::move(computed), ok, certified && !starved});
  }
  void check_bool(std::string name, bool value, bool certified = true, std::string detail = "") {
    checks.push_back({std::move(name), "yes", value ? "yes" + detail : "no" + detail, value, certified && !starved});
  }
};

PresentationSemigroup semigroup(const char* text, const Budget& b) { return PresentationSemigroup(parse_presentation(text), b); }

// <a,b,c | abc = cb>
void case_abc_cb(Ctx& c) {
  PresentationSemigroup s = semigroup("gens: a b c\nrel: a b c = c b\n", c.budget(12));
  ElemId x = s.parse("abc");
  LengthSet l = length_profile(s, x);
  const bool cert = l.complete && s.certified(x);
  c.check("L(abc)", "{2,3}", set_str(l.lengths), cert);
  c.check("Delta(abc)", "{1}", set_str(l.delta), cert);
  CatenaryReport cp = catenary(s, x, DistanceKind::Permutable);
  c.check("c_p(abc)", "1", std::to_string(cp.value), cp.cert == Cert::Exact);
  Factorization z{s.parse("a"), s.parse("b"), s.parse("c")};
  Factorization zp{s.parse("c"), s.parse("b")};
  c.check("d_p([a,b,c],[c,b])", "1", std::to_string(distance(s, DistanceKind::Permutable, z, zp)));
}

// <a,b | aba = b>
void case_aba_b(Ctx& c) {
  PresentationSemigroup s = semigroup("gens: a b\nrel: a b a = b\n", c.budget(12));
  ElemId a = s.parse("a"), b = s.parse("b");
  Factorization z{a, b, a}, zp{b};
  c.check_bool("[a,b,a] and [b] factor the same element", compose(s, z) == compose(s, zp));
  c.check("d*([a,b,a],[b])", "2", std::to_string(rigid_distance(z, zp)));
  Alignment al = rigid_alignment(z, zp);
  c.check("alignment blocks", "1", std::to_string(al.blocks.size()));
}

// <a,b | a^n b^n = b^n a^n>
void case_anbn(Ctx& c) {
  for (int n : {2, 3}) {
    const std::string an(static_cast<std::size_t>(n), 'a'), bn(static_cast<std::size_t>(n), 'b');
    std::string text = "gens: a b\nrel: ";
    for (char ch : an + bn) text += std::string(1, ch) + " ";
    text += "= ";
    for (char ch : bn + an) text += std::string(1, ch) + " ";
    text += "\n";
    PresentationSemigroup s = semigroup(text.c_str(), c.budget(4 * n + 4));
    bool complete = true;
    std::vector<ElemId> elems = s.enumerate_elements(c.seed_len(2 * n + 4), &complete);
    int worst = 0;
    bool exact = complete;
    for (ElemId x : elems) {
      CatenaryReport r = catenary(s, x, DistanceKind::Permutable);
      worst = std::max(worst, r.value);
      exact = exact && r.cert == Cert::Exact;
    }
    const std::string tag = "n=" + std::to_string(n);
    c.check(tag + " max c_p over " + std::to_string(elems.size()) + " elements of length <= " + std::to_string(2 * n + 4), "0",
            std::to_string(worst), exact);
    CatenaryReport star = catenary(s, s.parse(an + bn), DistanceKind::Rigid);
    c.check(tag + " c*(a^n b^n)", std::to_string(2 * n), std::to_string(star.value), star.cert == Cert::Exact);
  }
}

// <a,b,c,d,e | ab = cd, cede = ba>
void case_omega_differs(Ctx& c) {
  PresentationSemigroup s = semigroup("gens: a b c d e\nrel: a b = c d\nrel: c e d e = b a\n", c.budget(12));
  bool complete = true;
  std::vector<ElemId> elems = s.enumerate_elements(c.seed_len(6), &complete);
  for (ElemId x : elems) complete = complete && s.certified(x);
  ElemId a = s.parse("a");
  OmegaReport r = omega_semigroup(s, elems, a, OmegaMode::Atoms);
  c.check("omega_p(S,a) over products of <= 6 atoms", "2", std::to_string(r.value), complete && r.cert != Cert::Unknown);
  std::vector<ElemId> parts{s.parse("ce"), s.parse("d"), s.parse("e")};
  ElemId prod = compose(s, parts);
  c.check_bool("ce*d*e = cede = ba", prod == s.parse("cede") && prod == s.parse("ba"));
  c.check_bool("a |_p cede", divides_perm(s, a, prod).value);
  std::vector<ElemId> witness;
  int k = min_divisible_subproduct(s, parts, a, &witness);
  c.check("least permuted subproduct of (ce,d,e) divisible by a", "3", std::to_string(k), s.certified(prod));
  OmegaReport nu = omega_nonunits(s, prod, a, 3);
  c.check_bool("omega'_p(S,a) >= 3", nu.value >= 3 && k >= 3, true, " (" + std::to_string(std::max(nu.value, k)) + ")");
}

// <a,b,c | b a^{n-1} = a^{n-1} c>
void case_tame(Ctx& c) {
  for (int n : {2, 3, 4}) {
    const std::string an(static_cast<std::size_t>(n - 1), 'a');
    std::string text = "gens: a b c\nrel: b ";
    for (char ch : an) text += std::string(1, ch) + " ";
    text += "= ";
    for (char ch : an) text += std::string(1, ch) + " ";
    text += "c\n";
    const int len = c.seed_len(3 * n + 3);
    PresentationSemigroup s = semigroup(text.c_str(), c.budget(len));
    std::vector<ScanResult> r = divisibility_scan(s, {s.parse("a"), s.parse("b"), s.parse("c")}, len);
    const bool cert = r[0].open_classes == 0 && len == 3 * n + 3;
    const std::string tag = "n=" + std::to_string(n) + " ";
    c.check(tag + "t_p(S,a)", "0", std::to_string(r[0].tame.value), cert);
    c.check(tag + "t_p(S,b)", "1", std::to_string(r[1].tame.value), cert);
    c.check(tag + "t_p(S,c)", "1", std::to_string(r[2].tame.value), cert);
    c.check(tag + "omega_p(S,a)", "1", std::to_string(r[0].omega.value), cert);
    c.check(tag + "omega_p(S,b)", std::to_string(n), std::to_string(r[1].omega.value), cert);
    c.check(tag + "omega_p(S,c)", std::to_string(n), std::to_string(r[2].omega.value), cert);
  }
}

// <a,b | ab = b a^{n-1}>
void case_elastic(Ctx& c) {
  for (int n : {3, 4}) {
    for (int m : {1, 2, 3}) {
      int growth = 1;
      for (int i = 0; i < m; ++i) growth *= n - 1;
      std::string text = "gens: a b\nrel: a b = b";
      for (int i = 0; i < n - 1; ++i) text += " a";
      text += "\n";
      PresentationSemigroup s = semigroup(text.c_str(), c.budget(m + growth + 2));
      const std::string w = std::string(static_cast<std::size_t>(m), 'a') + "b";
      ElemId x = s.parse(w);
      LengthSet l = length_profile(s, x);
      const bool cert = l.complete && s.certified(x);
      std::vector<int> expect;
      for (int k = 0; k <= m; ++k) expect.push_back(m + 1 + k * (n - 2));
      const std::string tag = "n=" + std::to_string(n) + " m=" + std::to_string(m) + " ";
      c.check(tag + "L(a^m b)", set_str(expect), set_str(l.lengths), cert);
      c.check(tag + "sup L", std::to_string(m * (n - 1) + 1), l.lengths.empty() ? "-" : std::to_string(l.lengths.back()), cert);
      c.check(tag + "rho", Rational(m * (n - 1) + 1, m + 1).str(), l.elasticity.str(), cert);
      CatenaryReport cp = catenary(s, x, DistanceKind::Permutable);
      c.check(tag + "c_p(a^m b)", std::to_string(n - 2), std::to_string(cp.value), cp.cert == Cert::Exact);
      bool complete = true;
      std::vector<ElemId> elems = s.enumerate_elements(c.seed_len(m + 1), &complete);
      for (ElemId e : elems) complete = complete && s.certified(e);
      OmegaReport om = omega_semigroup(s, elems, x, OmegaMode::Atoms);
      c.check(tag + "omega_p(S,a^m b) [window: length <= " + std::to_string(m + 1) + "]", std::to_string(m + 1),
              std::to_string(om.value), complete && om.cert != Cert::Unknown);
    }
  }
}

// <a,b,c | aba = ba^3bc>
void case_weird_primes(Ctx& c) {
  PresentationSemigroup s = semigroup("gens: a b c\nrel: a b a = b a a a b c\n", c.budget(34));
  bool complete = true;
  std::vector<ElemId> elems = s.enumerate_elements(c.seed_len(10), &complete);
  for (ElemId x : elems) complete = complete && s.certified(x);
  PrimeLikeReport pa = almost_prime_like(s, s.parse("a"), elems);
  PrimeLikeReport pb = almost_prime_like(s, s.parse("b"), elems);
  PrimeLikeReport pc = almost_prime_like(s, s.parse("c"), elems);
  c.check("a almost prime-like up to length 10", "yes", yes_no(!pa.counterexample), complete && pa.cert == Cert::Exact);
  c.check("b almost prime-like up to length 10", "yes", yes_no(!pb.counterexample), complete && pb.cert == Cert::Exact);
  c.check("c counterexample", "aba", pc.counterexample ? s.show(pc.element) : "none", complete || pc.counterexample);
  ElemId aba = s.parse("aba");
  ValuationSet va = valuation_set(s, s.parse("a"), aba);
  ValuationSet vb = valuation_set(s, s.parse("b"), aba);
  c.check("V_a(aba)", "{2,3}", set_str(va.values), va.complete);
  c.check("V_b(aba)", "{1,2}", set_str(vb.values), vb.complete);
}

// <a,b | aba = bab>
void case_braid(Ctx& c) {
  const int len = c.seed_len(12);
  PresentationSemigroup s = semigroup("gens: a b\nrel: a b a = b a b\n", c.budget(len));
  std::vector<ScanResult> r = divisibility_scan(s, {s.parse("a"), s.parse("b")}, len);
  const bool cert = r[0].open_classes == 0;
  c.check("t_p(S,a) up to length " + std::to_string(len), "0", std::to_string(r[0].tame.value), cert);
  c.check("t_p(S,b) up to length " + std::to_string(len), "0", std::to_string(r[1].tame.value), cert);
  PermSet zp = permutable_factorizations(s, s.parse("aba"));
  c.check_bool("|Z_p(aba)| >= 2", zp.items.size() >= 2, true, " (" + std::to_string(zp.items.size()) + ")");
}

// <a,b,c,d | ab = cd>
void case_length_map(Ctx& c) {
  PresentationSemigroup s = semigroup("gens: a b c d\nrel: a b = c d\n", c.budget(12));
  AbelianSemigroup ab(s.presentation(), c.budget(12));
  ExwtReport r = check_exwt(s, ab, c.seed_len(4));
  ElemId x = s.parse("ab"), y = s.parse("dc");
  std::string found = "none";
  for (const ExwtCounterexample& ce : r.counterexamples) {
    if (ce.a == x && ce.b == y) found = "(ab, dc) unmatched " + show_factorization(s, ce.unmatched);
  }
  c.check("check_exwt counterexample", "(ab, dc) unmatched [a, b]", found);
  LengthMapReport lm = length_map(s, c.seed_len(6));
  c.check("length map exists", "yes", yes_no(lm.exists));
  c.check("length map (T1)", "yes", yes_no(lm.t1));
  c.check("length map (T2)", "yes", yes_no(lm.t2));
}

// <a,b,c,d,e | abc = de>
void case_no_weak_transfer(Ctx& c) {
  PresentationSemigroup s = semigroup("gens: a b c d e\nrel: a b c = d e\n", c.budget(12));
  AbelianSemigroup ab(s.presentation(), c.budget(12));
  ElemId x = s.parse("abc"), y = s.parse("bac");
  LengthSet lx = length_profile(s, x), ly = length_profile(s, y);
  c.check("L(abc)", "{2,3}", set_str(lx.lengths), lx.complete);
  c.check("L(bac)", "{3}", set_str(ly.lengths), ly.complete);
  c.check("pi(abc) = pi(bac)", "yes", yes_no(ab.image(s, x) == ab.image(s, y)));
  ExwtReport r = check_exwt(s, ab, c.seed_len(3));
  c.check("no-weak-transfer verdict", "yes", yes_no(r.length_obstruction && !r.pass));
}

void case_zero_sum(Ctx& c) {
  for (int n = 1; n <= 8; ++n) {
    c.check("D(C" + std::to_string(n) + ")", std::to_string(n), std::to_string(davenport(FiniteAbelianGroup({n}))));
  }
  c.check("D(C2+C2)", "3", std::to_string(davenport(FiniteAbelianGroup({2, 2}))));
  c.check("D(C3+C3)", "5", std::to_string(davenport(FiniteAbelianGroup({3, 3}))));
  for (const std::vector<int>& g : {std::vector<int>{3}, std::vector<int>{2, 2}}) {
    FiniteAbelianGroup grp(g);
    BlockCatenaryReport r = block_catenary(grp);
    c.check("c_p(B(" + grp.name() + ")) within length " + std::to_string(r.max_length), "3", std::to_string(r.catenary.value), !r.truncated);
    c.check_bool("witness element for " + grp.name(), r.catenary.blocking.has_value() && r.catenary.value == 3, true,
                 " " + show_sequence(grp, r.witness));
  }
  OrderBoundReport t = maximal_order_bound(FiniteAbelianGroup(std::vector<int>{}));
  c.check("order bound, trivial C", "2 (d_sim-factorial)", std::to_string(t.bound) + " (" + t.classification + ")");
  OrderBoundReport c2 = maximal_order_bound(FiniteAbelianGroup({2}));
  c.check("order bound, C2", "2 (|C| <= 2)", std::to_string(c2.bound) + " (" + c2.classification + ")");
}

bool divisor_atom(MatrixSemigroup& h, ElemId x) {
  if (h.is_unit(x)) return false;
  for (const LeftDivisor& d : h.left_divisors(x).items) {
    if (!h.is_unit(d.quotient)) return false;
  }
  return true;
}

void case_triangular(Ctx& c) {
  TriangularSemigroup t(2);
  std::vector<ElemId> sample;
  for (Int a = -16; a <= 16; ++a) {
    for (Int d = -16; d <= 16; ++d) {
      const Int det = std::llabs(a * d);
      if (det <= 1 || det > 64) continue;
      for (Int b = -16; b <= 16; ++b) {
        IntMatrix m(2);
        m(0, 0) = a;
        m(0, 1) = b;
        m(1, 1) = d;
        sample.push_back(t.element(m));
      }
    }
  }
  std::size_t pairs = 0;
  bool factorial = true;
  std::string bad;
  for (ElemId x : sample) {
    const FactorizationSet& fs = rigid_factorizations(t, x);
    std::vector<PermFactorization> cls;
    for (const Factorization& z : fs.items) cls.push_back(perm_class(t, z));
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        ++pairs;
        if (perm_distance(cls[i], cls[j]) != 0 && factorial) {
          factorial = false;
          bad = t.show(x);
        }
      }
    }
  }
  c.check("matrices sampled", "yes", yes_no(sample.size() > 10000), true);
  c.check_bool("d_p = 0 on all pairs of rigid factorizations", factorial, true,
               " (" + std::to_string(pairs) + " pairs" + (bad.empty() ? "" : ", " + bad) + ")");
  std::vector<FreeImage> targets;
  for (Int d1 = 1; d1 <= 16; ++d1) {
    for (Int d2 = 1; d2 <= 16; ++d2) {
      if (d1 * d2 > 1 && d1 * d2 <= 64) targets.push_back(delta_image(IntMatrix::diagonal({d1, d2})));
    }
  }
  TransferReport tr = verify_transfer(t, sample, [&](ElemId x) { return delta_image(t.matrix(x)); }, targets);
  c.check("delta (T1)", "yes", yes_no(tr.t1));
  c.check("delta (WT2)", "yes", yes_no(tr.wt2));
  c.check("delta isoatomic", "yes", yes_no(tr.isoatomic));
  std::mt19937_64 rng(c.opts.seed);
  std::uniform_int_distribution<int> entry(-16, 16), dim(2, 3), small(-13, 13);
  int agree = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = dim(rng);
    TriangularSemigroup h(n);
    IntMatrix m(n);
    do {
      for (int r = 0; r < n; ++r) {
        m(r, r) = n == 3 ? small(rng) : entry(rng);
        for (int k = r + 1; k < n; ++k) m(r, k) = entry(rng);
      }
    } while (m.det() == 0);
    if (tri_is_atom(m).has_value() == divisor_atom(h, h.element(m))) ++agree;
  }
  c.check("tri_is_atom agrees with divisor structure on random matrices", "1000/1000", std::to_string(agree) + "/1000");
}

void case_full_matrix(Ctx& c) {
  std::mt19937_64 rng(c.opts.seed + 1);
  std::uniform_int_distribution<int> wide(-20, 20), narrow(-9, 9);
  int snf_ok = 0;
  for (int i = 0; i < 1000; ++i) {
    IntMatrix a(2);
    do {
      for (Int& v : a.a) v = wide(rng);
    } while (a.det() == 0);
    SnfResult r = snf(a);
    bool ok = r.u * r.c * r.v == a && is_unimodular(r.u) && is_unimodular(r.v) && r.c.diagonal_only() &&
              std::llabs(r.c.det()) == std::llabs(a.det());
    for (int k = 0; k + 1 < 2 && ok; ++k) ok = r.c(k + 1, k + 1) > 0 && r.c(k, k) % r.c(k + 1, k + 1) == 0;
    if (ok) ++snf_ok;
  }
  c.check("SNF A = U C V, unimodular, descending chain", "1000/1000", std::to_string(snf_ok) + "/1000");
  FullMatrixSemigroup h(2);
  std::vector<ElemId> sample;
  while (sample.size() < 1000) {
    IntMatrix a(2);
    for (Int& v : a.a) v = narrow(rng);
    const Int d = std::llabs(a.det());
    if (d == 0 || d > 60) continue;
    sample.push_back(h.element(a));
  }
  int lengths_ok = 0, atom_ok = 0;
  for (ElemId x : sample) {
    const Int d = std::llabs(h.matrix(x).det());
    const int omega = static_cast<int>(prime_factors(d).size());
    LengthSet l = length_profile(h, x);
    if (l.lengths == std::vector<int>{omega} || (d == 1 && l.lengths == std::vector<int>{0})) ++lengths_ok;
    if (full_is_atom(h.matrix(x)) == (is_prime(d)) && is_prime(d) == divisor_atom(h, x)) ++atom_ok;
  }
  c.check("L(A) = {Omega(|det A|)}, |det| <= 60", "1000/1000", std::to_string(lengths_ok) + "/1000");
  c.check("atom iff |det| prime", "1000/1000", std::to_string(atom_ok) + "/1000");
  TransferReport tr = verify_transfer(h, sample, [&](ElemId x) { return det_image(h.matrix(x)); });
  c.check("det transfer and isoatomic on the sample", "yes", yes_no(tr.ok()), true);
}

struct AxiomSource {
  const char* text;
  int len;
  int seed;
};

void case_axioms(Ctx& c) {
  const std::vector<AxiomSource> sources = {
      {"gens: a b c\nrel: a b c = c b\n", 12, 5},
      {"gens: a b\nrel: a b a = b\n", 9, 5},
      {"gens: a b\nrel: a a b b = b b a a\n", 12, 6},
      {"gens: a b\nrel: a a a b b b = b b b a a a\n", 14, 6},
      {"gens: a b c d e\nrel: a b = c d\nrel: c e d e = b a\n", 12, 4},
      {"gens: a b c\nrel: b a a = a a c\n", 12, 5},
      {"gens: a b\nrel: a b = b a a\n", 16, 4},
      {"gens: a b c\nrel: a b a = b a a a b c\n", 20, 5},
      {"gens: a b\nrel: a b a = b a b\n", 12, 6},
  };
  std::mt19937_64 rng(c.opts.seed + 2);
  bool axioms_ok = true, chain_ok = true, delta_ok = true;
  std::string axiom_msg;
  std::size_t pairs = 0, elements = 0;
  std::vector<std::pair<Factorization, Factorization>> small_pairs;
  for (const AxiomSource& src : sources) {
    PresentationSemigroup s = semigroup(src.text, c.budget(src.len));
    std::vector<ElemId> elems = s.enumerate_elements(c.seed_len(src.seed));
    std::vector<ElemId> atoms = s.enumerate_atoms();
    elements += elems.size();
    for (DistanceKind k : {DistanceKind::Length, DistanceKind::Permutable, DistanceKind::Rigid}) {
      AxiomReport r = verify_axioms(k, s, elems, atoms, rng, 1);
      pairs += r.pairs;
      if (!r.ok && axioms_ok) {
        axioms_ok = false;
        axiom_msg = std::string(to_string(k)) + ": " + r.violation;
      }
    }
    for (ElemId x : elems) {
      const std::vector<Factorization>& zs = rigid_factorizations(s, x).items;
      const std::size_t n = std::min<std::size_t>(zs.size(), 40);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          const int dl = length_distance(zs[i], zs[j]);
          const int dp = distance(s, DistanceKind::Permutable, zs[i], zs[j]);
          const int ds = rigid_distance(zs[i], zs[j]);
          if (!(dl <= dp && dp <= ds)) chain_ok = false;
          if (zs[i].size() + zs[j].size() <= 10) small_pairs.push_back({zs[i], zs[j]});
        }
      }
      if (zs.size() > 40) continue;
      LengthSet l = length_profile(s, x);
      const int sup_delta = l.delta.empty() ? 0 : l.delta.back();
      for (DistanceKind k : {DistanceKind::Length, DistanceKind::Permutable, DistanceKind::Rigid}) {
        if (sup_delta > catenary(s, x, k).value) delta_ok = false;
      }
    }
  }
  c.check_bool("(D1)-(D5) for d_len, d_p, d*", axioms_ok, true,
               " (" + std::to_string(elements) + " elements, " + std::to_string(pairs) + " pairs" +
                   (axiom_msg.empty() ? "" : "; " + axiom_msg) + ")");
  c.check_bool("d_len <= d_p <= d*", chain_ok);
  int agree = 0;
  const int trials = small_pairs.empty() ? 0 : 500;
  std::uniform_int_distribution<std::size_t> pick(0, small_pairs.empty() ? 0 : small_pairs.size() - 1);
  for (int i = 0; i < trials; ++i) {
    const auto& [z, zp] = small_pairs[pick(rng)];
    if (rigid_distance(z, zp) == rigid_distance_oracle(z, zp)) ++agree;
  }
  c.check("d* DP = recursive oracle on random same-product pairs", "500/500", std::to_string(agree) + "/" + std::to_string(trials));
  c.check_bool("sup Delta(a) <= c_d(a) on explored elements", delta_ok);
}

using CaseFn = std::function<void(Ctx&)>;

struct CaseDef {
  CaseInfo info;
  CaseFn fn;
};

const std::vector<CaseDef>& defs() {
  static const std::vector<CaseDef> d = {
      {{1, "abc-cb", "<a,b,c | abc=cb>: lengths, catenary, d_p"}, case_abc_cb},
      {{2, "aba-b", "<a,b | aba=b>: rigid distance"}, case_aba_b},
      {{3, "anbn", "<a,b | a^n b^n = b^n a^n>: c_p = 0, c* = 2n"}, case_anbn},
      {{4, "omega-differs", "<a,b,c,d,e | ab=cd, cede=ba>: omega_p vs omega'_p"}, case_omega_differs},
      {{5, "tame", "<a,b,c | ba^{n-1} = a^{n-1}c>: t_p and omega_p"}, case_tame},
      {{6, "elastic", "<a,b | ab = ba^{n-1}>: lengths, elasticity, c_p, omega_p"}, case_elastic},
      {{7, "weird-primes", "<a,b,c | aba = ba^3bc>: almost prime-like elements"}, case_weird_primes},
      {{8, "braid", "<a,b | aba=bab>: tame degrees"}, case_braid},
      {{9, "length-map", "<a,b,c,d | ab=cd>: weak transfer counterexample, length map"}, case_length_map},
      {{10, "no-weak-transfer", "<a,b,c,d,e | abc=de>: length obstruction"}, case_no_weak_transfer},
      {{11, "zero-sum", "zero-sum sequences: Davenport constants, block catenary"}, case_zero_sum},
      {{12, "triangular", "T_2(Z): permutable factoriality, delta transfer, atoms"}, case_triangular},
      {{13, "full-matrix", "M_2(Z): Smith normal form, lengths, atoms"}, case_full_matrix},
      {{14, "axioms", "distance axioms, coarseness, d* oracle, Delta vs catenary"}, case_axioms},
  };
  return d;
}

}  // namespace

const std::vector<CaseInfo>& regression_cases() {
  static const std::vector<CaseInfo> infos = [] {
    std::vector<CaseInfo> v;
    for (const CaseDef& d : defs()) v.push_back(d.info);
    return v;
  }();
  return infos;
}

CaseResult run_case(const std::string& which, const RegressionOptions& opts) {
  for (const CaseDef& d : defs()) {
    if (d.info.id != which && std::to_string(d.info.number) != which) continue;
    const auto start = std::chrono::steady_clock::now();
    Ctx ctx{opts, {}};
    try {
      d.fn(ctx);
    } catch (const Error& e) {
      ctx.checks.push_back({"computation", "completed", std::string(to_string(e.kind())) + ": " + e.what(), false,
                            e.kind() != ErrorKind::BudgetExceeded && e.kind() != ErrorKind::InstanceTooLarge});
    }
    CaseResult r;
    r.number = d.info.number;
    r.id = d.info.id;
    r.title = d.info.title;
    r.checks = std::move(ctx.checks);
    r.status = summarize(r.checks);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown regression case '" + which + "'");
}

}  // namespace factorum
