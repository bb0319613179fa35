#include <doctest.h>

#include "factorum/catenary.hpp"
#include "factorum/divisibility.hpp"
#include "factorum/factorizations.hpp"
#include "factorum/regression.hpp"
#include "factorum/semigroup.hpp"

using namespace factorum;

TEST_CASE("truncated searches are never reported exact") {
  PresentationSemigroup s(parse_presentation("gens: a b\nrel: a b = b a a a\n"), Budget{6, 100000});
  ElemId x = s.parse("aab");
  CHECK_FALSE(s.certified(x));
  CHECK_FALSE(length_profile(s, x).complete);
  CHECK(catenary(s, x, DistanceKind::Permutable).cert != Cert::Exact);

  PresentationSemigroup t(parse_presentation("gens: a b c\nrel: a b a = b a a a b c\n"), Budget{8, 100000});
  bool complete = true;
  std::vector<ElemId> elems = t.enumerate_elements(4, &complete);
  CHECK(almost_prime_like(t, t.parse("a"), elems).cert != Cert::Exact);

  PresentationSemigroup u(parse_presentation("gens: a b\nrel: a b a = b\n"), Budget{9, 3});
  CHECK_FALSE(u.certified(u.parse("b")));
}

TEST_CASE("regression statuses") {
  CHECK(summarize({{"x", "1", "1", true, true}}) == CaseStatus::Pass);
  CHECK(summarize({{"x", "1", "2", false, true}}) == CaseStatus::Fail);
  CHECK(summarize({{"x", "1", "2", false, false}, {"y", "1", "1", true, true}}) == CaseStatus::Incomplete);
  CHECK(regression_cases().size() == 14);

  CHECK(run_case("abc-cb").status == CaseStatus::Pass);
  CHECK(run_case("1").id == "abc-cb");
  RegressionOptions starved;
  starved.budget_len = 6;
  CaseResult r = run_case("weird-primes", starved);
  CHECK(r.status == CaseStatus::Incomplete);
  for (const Check& c : r.checks) CHECK_FALSE(c.certified);
  CHECK_THROWS_AS(run_case("nope"), Error);
}
