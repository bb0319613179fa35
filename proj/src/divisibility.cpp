#include "factorum/divisibility.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "factorum/distances.hpp"
#include "factorum/factorizations.hpp"

namespace factorum {

bool submultiset(const PermFactorization& small, const PermFactorization& big) {
  std::size_t j = 0;
  for (std::uint64_t x : small) {
    while (j < big.size() && big[j] < x) ++j;
    if (j == big.size() || big[j] != x) return false;
    ++j;
  }
  return true;
}

namespace {

Cert cert_of(SemigroupHandle& h, ElemId x, bool complete) {
  return complete && h.certified(x) ? Cert::Exact : Cert::Unknown;
}

}  // namespace

DivResult divides_perm(SemigroupHandle& h, ElemId b, ElemId a) {
  PermSet pb = permutable_factorizations(h, b);
  PermSet pa = permutable_factorizations(h, a);
  DivResult r;
  for (const auto& x : pb.items) {
    for (const auto& y : pa.items) {
      if (submultiset(x, y)) {
        r.value = true;
        return r;
      }
    }
  }
  r.cert = weaker(cert_of(h, a, pa.complete), cert_of(h, b, pb.complete));
  return r;
}

DivResult divides_lr(SemigroupHandle& h, ElemId b, ElemId a) {
  DivResult r;
  if (h.is_unit(b)) {
    r.value = true;
    return r;
  }
  const FactorizationSet& fb = rigid_factorizations(h, b);
  const FactorizationSet& fa = rigid_factorizations(h, a);
  for (const Factorization& x : fb.items) {
    for (const Factorization& y : fa.items) {
      if (std::search(y.begin(), y.end(), x.begin(), x.end()) != y.end()) {
        r.value = true;
        return r;
      }
    }
  }
  r.cert = weaker(cert_of(h, a, fa.complete), cert_of(h, b, fb.complete));
  return r;
}

DivResult divides(SemigroupHandle& h, DivisibilityKind kind, ElemId b, ElemId a) {
  return kind == DivisibilityKind::Permutation ? divides_perm(h, b, a) : divides_lr(h, b, a);
}

PrimeLikeReport almost_prime_like(SemigroupHandle& h, ElemId q, const std::vector<ElemId>& elements) {
  PrimeLikeReport rep;
  const std::uint64_t cq = h.atom_class(q);
  auto has_q = [&](const Factorization& z) {
    return std::any_of(z.begin(), z.end(), [&](ElemId u) { return h.atom_class(u) == cq; });
  };
  for (ElemId a : elements) {
    ++rep.elements_checked;
    const FactorizationSet& fs = rigid_factorizations(h, a);
    if (!fs.complete || !h.certified(a)) rep.cert = Cert::LowerBound;
    const Factorization* with = nullptr;
    const Factorization* without = nullptr;
    for (const Factorization& z : fs.items) {
      if (has_q(z)) {
        if (!with) with = &z;
      } else if (!without) {
        without = &z;
      }
    }
    if (with && without) {
      rep.counterexample = true;
      rep.element = a;
      rep.with_q = *with;
      rep.without_q = *without;
      rep.cert = Cert::Exact;
      return rep;
    }
  }
  return rep;
}

ValuationSet valuation_set(SemigroupHandle& h, ElemId q, ElemId a) {
  ValuationSet v;
  const std::uint64_t cq = h.atom_class(q);
  const FactorizationSet& fs = permutable_representatives(h, a);
  v.complete = fs.complete && h.certified(a);
  for (const Factorization& z : fs.items) {
    v.values.push_back(static_cast<int>(std::count_if(z.begin(), z.end(), [&](ElemId u) { return h.atom_class(u) == cq; })));
  }
  std::sort(v.values.begin(), v.values.end());
  v.values.erase(std::unique(v.values.begin(), v.values.end()), v.values.end());
  return v;
}

PrimeLikeVerdict is_prime_like(SemigroupHandle& h, ElemId q, const std::vector<ElemId>& elements) {
  PrimeLikeReport apl = almost_prime_like(h, q, elements);
  if (apl.counterexample) {
    throw Error(ErrorKind::NotAlmostPrimeLike, h.show(q) + " is not almost prime-like (witness " + h.show(apl.element) + ")");
  }
  PrimeLikeVerdict out;
  out.cert = apl.cert;
  for (ElemId a : elements) {
    ++out.elements_checked;
    ValuationSet v = valuation_set(h, q, a);
    if (v.values.size() > 1) {
      out.prime_like = false;
      out.witness = a;
      out.witness_values = v;
      out.cert = Cert::Exact;
      return out;
    }
  }
  return out;
}

namespace {

constexpr std::size_t kMaxOrderings = 50000;

// Minimal permuted subproducts divisible by a fixed b.
class SubproductSearch {
 public:
  SubproductSearch(SemigroupHandle& h, ElemId b) : h_(h), b_(b) {}

  // Returns the minimal k and a witness ordering.
  int min_k(const std::vector<ElemId>& parts, std::vector<ElemId>& witness) {
    const int n = static_cast<int>(parts.size());
    for (int k = 0; k <= n; ++k) {
      std::set<std::vector<ElemId>> tried;
      std::vector<int> idx(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
      while (true) {
        std::vector<ElemId> m;
        for (int i : idx) m.push_back(parts[static_cast<std::size_t>(i)]);
        std::sort(m.begin(), m.end());
        if (tried.insert(m).second) {
          const auto& g = good(m);
          if (g) {
            witness = *g;
            return k;
          }
        }
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i) - 1] + 1;
      }
    }
    witness = parts;
    return n;
  }

  bool exhausted() const { return exhausted_; }

 private:
  const std::optional<std::vector<ElemId>>& good(const std::vector<ElemId>& sorted) {
    if (auto it = memo_.find(sorted); it != memo_.end()) return it->second;
    std::optional<std::vector<ElemId>> found;
    std::vector<ElemId> m = sorted;
    std::size_t tried = 0;
    do {
      if (++tried > kMaxOrderings) {
        exhausted_ = true;
        break;
      }
      ElemId prod = compose(h_, m);
      if (divides_perm(h_, b_, prod).value) {
        found = m;
        break;
      }
    } while (std::next_permutation(m.begin(), m.end()));
    return memo_.emplace(sorted, std::move(found)).first->second;
  }

  SemigroupHandle& h_;
  ElemId b_;
  std::map<std::vector<ElemId>, std::optional<std::vector<ElemId>>> memo_;
  bool exhausted_ = false;
};

void consider(OmegaReport& rep, SubproductSearch& search, ElemId a, const std::vector<ElemId>& parts) {
  std::vector<ElemId> witness;
  int k = search.min_k(parts, witness);
  if (k > rep.value || rep.decomposition.empty()) {
    rep.value = std::max(rep.value, k);
    rep.element = a;
    rep.decomposition = parts;
    rep.subproduct = witness;
  }
}

}  // namespace

int min_divisible_subproduct(SemigroupHandle& h, const std::vector<ElemId>& parts, ElemId b, std::vector<ElemId>* witness) {
  SubproductSearch search(h, b);
  std::vector<ElemId> w;
  int k = search.min_k(parts, w);
  if (witness) *witness = w;
  return k;
}

OmegaReport omega(SemigroupHandle& h, ElemId a, ElemId b) {
  OmegaReport rep;
  rep.element = a;
  rep.elements_checked = 1;
  DivResult d = divides_perm(h, b, a);
  rep.applicable = d.value;
  if (!d.value) {
    rep.cert = d.cert;
    return rep;
  }
  const FactorizationSet& fs = permutable_representatives(h, a);
  SubproductSearch search(h, b);
  // Sub-multisets are order-free, so one representative per permutable
  // class gives the same minima as all of Z*(a).
  for (const Factorization& z : fs.items) consider(rep, search, a, z);
  rep.cert = fs.complete && h.certified(a) ? Cert::Exact : Cert::LowerBound;
  if (search.exhausted()) rep.cert = Cert::Unknown;
  return rep;
}

OmegaReport omega_nonunits(PresentationSemigroup& s, ElemId a, ElemId b, int max_factors) {
  OmegaReport rep;
  rep.element = a;
  rep.elements_checked = 1;
  DivResult d = divides_perm(s, b, a);
  rep.applicable = d.value;
  if (!d.value) {
    rep.cert = d.cert;
    return rep;
  }
  const std::vector<Word> members = s.info(a).members;
  std::set<std::vector<ElemId>> seen;
  SubproductSearch search(s, b);
  for (const Word& m : members) {
    const int len = static_cast<int>(m.size());
    for (int t = 1; t <= std::min(max_factors, len); ++t) {
      // Cut points 0 < c_1 < ... < c_{t-1} < len.
      std::vector<int> cuts(static_cast<std::size_t>(t - 1));
      for (int i = 0; i < t - 1; ++i) cuts[static_cast<std::size_t>(i)] = i + 1;
      while (true) {
        std::vector<ElemId> parts;
        int prev = 0;
        for (int c : cuts) {
          parts.push_back(s.element(m.substr(static_cast<std::size_t>(prev), static_cast<std::size_t>(c - prev))));
          prev = c;
        }
        parts.push_back(s.element(m.substr(static_cast<std::size_t>(prev))));
        if (seen.insert(parts).second) consider(rep, search, a, parts);
        int pos = t - 2;
        while (pos >= 0 && cuts[static_cast<std::size_t>(pos)] == len - (t - 1) + pos) --pos;
        if (pos < 0) break;
        ++cuts[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < t - 1; ++i) cuts[static_cast<std::size_t>(i)] = cuts[static_cast<std::size_t>(i) - 1] + 1;
      }
    }
  }
  rep.cert = s.certified(a) ? Cert::LowerBound : Cert::Unknown;
  if (search.exhausted()) rep.cert = Cert::Unknown;
  return rep;
}

OmegaReport omega_semigroup(SemigroupHandle& h, const std::vector<ElemId>& elements, ElemId b, OmegaMode mode,
                            int max_factors) {
  OmegaReport best;
  best.cert = Cert::LowerBound;
  auto* pres = dynamic_cast<PresentationSemigroup*>(&h);
  if (mode == OmegaMode::NonUnits && !pres && !h.is_commutative()) {
    throw Error(ErrorKind::InvalidArgument, "non-unit decompositions are only enumerated for presentations");
  }
  for (ElemId a : elements) {
    OmegaReport r = (mode == OmegaMode::NonUnits && pres) ? omega_nonunits(*pres, a, b, max_factors) : omega(h, a, b);
    ++best.elements_checked;
    if (r.cert == Cert::Unknown) best.cert = Cert::Unknown;
    if (!r.applicable) continue;
    if (!best.applicable || r.value > best.value) {
      std::size_t checked = best.elements_checked;
      Cert c = best.cert;
      best = r;
      best.elements_checked = checked;
      best.cert = c;
    }
  }
  return best;
}

TameReport tame_degree(SemigroupHandle& h, ElemId a, const PermFactorization& pattern) {
  TameReport rep;
  rep.element = a;
  rep.elements_checked = 1;
  PermSet zs = permutable_factorizations(h, a);
  rep.cert = zs.complete && h.certified(a) ? Cert::Exact : Cert::LowerBound;
  std::vector<const PermFactorization*> qualifying;
  for (const auto& z : zs.items) {
    if (submultiset(pattern, z)) qualifying.push_back(&z);
  }
  if (qualifying.empty()) return rep;
  rep.pattern_divides = true;
  bool first = true;
  for (const auto& z : zs.items) {
    int best = std::numeric_limits<int>::max();
    const PermFactorization* arg = nullptr;
    for (const auto* zp : qualifying) {
      int d = perm_distance(z, *zp);
      if (d < best) {
        best = d;
        arg = zp;
      }
    }
    if (first || best > rep.value) {
      rep.value = best;
      rep.worst = z;
      rep.nearest = *arg;
      first = false;
    }
  }
  return rep;
}

TameReport tame_semigroup(SemigroupHandle& h, const std::vector<ElemId>& elements, ElemId atom) {
  TameReport best;
  best.cert = Cert::LowerBound;
  const PermFactorization pattern{h.atom_class(atom)};
  bool first = true;
  for (ElemId a : elements) {
    TameReport r = tame_degree(h, a, pattern);
    ++best.elements_checked;
    if (first || r.value > best.value) {
      std::size_t checked = best.elements_checked;
      best = r;
      best.elements_checked = checked;
      best.cert = Cert::LowerBound;
      first = false;
    }
  }
  return best;
}

std::vector<ScanResult> divisibility_scan(PresentationSemigroup& s, const std::vector<ElemId>& divisors, int max_length) {
  const Presentation& p = s.presentation();
  const int k = static_cast<int>(p.generators.size());
  // Letters grouped by atom class; dims index the distinct classes.
  std::vector<int> dim_of_letter(static_cast<std::size_t>(k), -1);
  std::vector<int> class_letters;
  for (int g = 0; g < k; ++g) {
    int c = s.atom_letter_class(g);
    if (c < 0) continue;
    auto it = std::find(class_letters.begin(), class_letters.end(), c);
    if (it == class_letters.end()) {
      class_letters.push_back(c);
      it = class_letters.end() - 1;
    }
    dim_of_letter[static_cast<std::size_t>(g)] = static_cast<int>(it - class_letters.begin());
  }
  const std::size_t r = class_letters.size();
  const std::uint64_t radix = static_cast<std::uint64_t>(max_length) + 1;
  std::uint64_t table = 1;
  for (std::size_t i = 0; i < r; ++i) {
    table *= radix;
    if (table > 50'000'000) throw Error(ErrorKind::BudgetExceeded, "letter-count table too large");
  }
  std::vector<std::uint64_t> stride(r, 1);
  for (std::size_t i = 1; i < r; ++i) stride[i] = stride[i - 1] * radix;

  using Counts = std::vector<int>;
  auto counts_of = [&](const Word& w, Counts& c) {
    c.assign(r, 0);
    for (char ch : w) {
      int d = dim_of_letter[static_cast<unsigned char>(ch)];
      if (d < 0) return false;
      ++c[static_cast<std::size_t>(d)];
    }
    return true;
  };
  auto index_of = [&](const Counts& c) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < r; ++i) v += static_cast<std::uint64_t>(c[i]) * stride[i];
    return v;
  };
  auto leq = [](const Counts& x, const Counts& y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] > y[i]) return false;
    }
    return true;
  };
  auto dp = [](const Counts& x, const Counts& y) {
    int common = 0, sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      common += std::min(x[i], y[i]);
      sx += x[i];
      sy += y[i];
    }
    return std::max(sx - common, sy - common);
  };

  struct State {
    std::vector<Counts> patterns;  // divisor factorizations as count vectors
    bool atom_divisor = false;
    std::vector<char> good;
    std::vector<int> min_good;
    ScanResult out;
  };
  std::vector<State> st(divisors.size());
  for (std::size_t t = 0; t < divisors.size(); ++t) {
    State& d = st[t];
    for (const auto& z : permutable_factorizations(s, divisors[t]).items) {
      Counts c(r, 0);
      bool ok = true;
      for (std::uint64_t key : z) {
        int dim = dim_of_letter[static_cast<std::size_t>(key)];
        if (dim < 0) {
          ok = false;
          break;
        }
        ++c[static_cast<std::size_t>(dim)];
      }
      if (ok) d.patterns.push_back(c);
    }
    d.atom_divisor = d.patterns.size() == 1 && std::accumulate(d.patterns[0].begin(), d.patterns[0].end(), 0) == 1 &&
                     s.is_atom(divisors[t]).answer == Tri::Yes;
    d.good.assign(table, 0);
    d.out.omega.cert = Cert::LowerBound;
    d.out.tame.cert = Cert::LowerBound;
  }
  bool open_atom_class = false;
  std::size_t classes = 0, open_classes = 0;

  auto divisible = [&](const State& d, const std::vector<Counts>& zp) {
    for (const Counts& z : zp) {
      for (const Counts& x : d.patterns) {
        if (leq(x, z)) return true;
      }
    }
    return false;
  };

  Counts c;
  scan_word_classes(p, max_length, [&](const std::vector<Word>& members, bool closed) {
    ++classes;
    std::vector<Counts> zp;
    for (const Word& m : members) {
      if (!counts_of(m, c)) continue;
      if (std::find(zp.begin(), zp.end(), c) == zp.end()) zp.push_back(c);
    }
    if (!closed) {
      ++open_classes;
      if (!zp.empty()) open_atom_class = true;
      return;
    }
    for (State& d : st) {
      const bool div = divisible(d, zp);
      if (div) {
        for (const Counts& z : zp) d.good[index_of(z)] = 1;
      }
      if (!d.atom_divisor || zp.empty()) continue;
      ScanResult& out = d.out;
      ++out.tame.elements_checked;
      int value = 0;
      const Counts* worst = nullptr;
      const Counts* nearest = nullptr;
      if (div) {
        for (const Counts& z : zp) {
          int best = std::numeric_limits<int>::max();
          const Counts* arg = nullptr;
          for (const Counts& y : zp) {
            if (!leq(d.patterns[0], y)) continue;
            int dist = dp(z, y);
            if (dist < best) {
              best = dist;
              arg = &y;
            }
          }
          if (!worst || best > value) {
            value = best;
            worst = &z;
            nearest = arg;
          }
        }
      }
      if (out.tame_witness.empty() || value > out.tame.value) {
        out.tame.value = value;
        out.tame.pattern_divides = div;
        out.tame_witness = {members.front()};
        out.tame.worst.clear();
        out.tame.nearest.clear();
        if (worst) {
          for (std::size_t i = 0; i < r; ++i) {
            for (int j = 0; j < (*worst)[i]; ++j) out.tame.worst.push_back(static_cast<std::uint64_t>(class_letters[i]));
            for (int j = 0; j < (*nearest)[i]; ++j) out.tame.nearest.push_back(static_cast<std::uint64_t>(class_letters[i]));
          }
        }
      }
    }
  });

  // min_good[v]: least size of a divisible sub-multiset of v.
  constexpr int kInf = std::numeric_limits<int>::max() / 2;
  for (State& d : st) {
    d.min_good.assign(table, kInf);
    Counts v(r, 0);
    for (std::uint64_t idx = 0; idx < table; ++idx) {
      int total = 0;
      for (int x : v) total += x;
      int best = d.good[idx] ? total : kInf;
      for (std::size_t i = 0; i < r; ++i) {
        if (v[i] > 0) best = std::min(best, d.min_good[idx - stride[i]]);
      }
      d.min_good[idx] = best;
      for (std::size_t i = 0; i < r; ++i) {
        if (++v[i] < static_cast<int>(radix)) break;
        v[i] = 0;
      }
    }
    std::vector<char>().swap(d.good);
  }

  scan_word_classes(p, max_length, [&](const std::vector<Word>& members, bool closed) {
    if (!closed) return;
    std::vector<Counts> zp;
    std::vector<const Word*> words;
    for (const Word& m : members) {
      if (!counts_of(m, c)) continue;
      if (std::find(zp.begin(), zp.end(), c) == zp.end()) {
        zp.push_back(c);
        words.push_back(&m);
      }
    }
    if (zp.empty()) return;
    for (State& d : st) {
      if (!divisible(d, zp)) continue;
      ScanResult& out = d.out;
      ++out.omega.elements_checked;
      for (std::size_t i = 0; i < zp.size(); ++i) {
        int v = d.min_good[index_of(zp[i])];
        if (!out.omega.applicable || v > out.omega.value) {
          out.omega.applicable = true;
          out.omega.value = v;
          out.omega_witness = {members.front(), *words[i]};
        }
      }
    }
  });

  std::vector<ScanResult> results;
  for (State& d : st) {
    d.out.classes = classes;
    d.out.open_classes = open_classes;
    if (open_atom_class) {
      d.out.omega.cert = Cert::Unknown;
      d.out.tame.cert = Cert::Unknown;
    }
    results.push_back(std::move(d.out));
  }
  return results;
}

ScanResult divisibility_scan(PresentationSemigroup& s, ElemId b, int max_length) {
  return divisibility_scan(s, std::vector<ElemId>{b}, max_length).front();
}

}  // namespace factorum
