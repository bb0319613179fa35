#include "factorum/transfer.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "factorum/core.hpp"

namespace factorum {

Presentation abelian_presentation(const Presentation& p) {
  Presentation out;
  out.generators = p.generators;
  out.budget = p.budget;
  std::set<std::pair<Word, Word>> seen;
  for (const Relation& r : p.relations) {
    Word l = r.lhs, rr = r.rhs;
    std::sort(l.begin(), l.end());
    std::sort(rr.begin(), rr.end());
    if (l == rr) continue;
    if (shortlex_less(rr, l)) std::swap(l, rr);
    if (seen.insert({l, rr}).second) out.relations.push_back({l, rr});
  }
  return out;
}

AbelianSemigroup::AbelianSemigroup(const Presentation& p) : AbelianSemigroup(p, p.budget) {}

AbelianSemigroup::AbelianSemigroup(const Presentation& p, Budget b) : p_(abelian_presentation(p)), budget_(b) {
  p_.validate_budget(b);
  atom_letter_.assign(p_.generators.size(), -1);
  element(Word{});
}

ClassInfo AbelianSemigroup::ball(const Word& sorted) const {
  ClassInfo info;
  info.closed = true;
  std::set<Word> seen{sorted};
  std::vector<Word> queue{sorted};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Word w = queue[head];
    for (const Relation& r : p_.relations) {
      for (int dir = 0; dir < 2; ++dir) {
        const Word& from = dir == 0 ? r.lhs : r.rhs;
        const Word& to = dir == 0 ? r.rhs : r.lhs;
        if (!std::includes(w.begin(), w.end(), from.begin(), from.end())) continue;
        Word rest;
        std::set_difference(w.begin(), w.end(), from.begin(), from.end(), std::back_inserter(rest));
        Word next;
        std::merge(rest.begin(), rest.end(), to.begin(), to.end(), std::back_inserter(next));
        if (static_cast<int>(next.size()) > budget_.max_word_length) {
          info.closed = false;
          continue;
        }
        if (seen.count(next)) continue;
        if (seen.size() >= budget_.max_ball_size) {
          info.closed = false;
          continue;
        }
        seen.insert(next);
        queue.push_back(next);
      }
    }
  }
  info.members.assign(seen.begin(), seen.end());
  std::sort(info.members.begin(), info.members.end(), shortlex_less);
  info.canonical = info.members.front();
  return info;
}

ElemId AbelianSemigroup::element(Word w) {
  std::sort(w.begin(), w.end());
  if (auto it = index_.find(w); it != index_.end()) return it->second;
  if (static_cast<int>(w.size()) > budget_.max_word_length) {
    throw Error(ErrorKind::BudgetExceeded, "word longer than max_word_length");
  }
  ClassInfo info = ball(w);
  const ElemId id = static_cast<ElemId>(classes_.size());
  for (const Word& m : info.members) index_.emplace(m, id);
  classes_.push_back(std::move(info));
  return id;
}

ElemId AbelianSemigroup::multiply(ElemId x, ElemId y) { return element(classes_.at(x).canonical + classes_.at(y).canonical); }

bool AbelianSemigroup::atom_letter(int g) {
  int& v = atom_letter_.at(static_cast<std::size_t>(g));
  if (v < 0) {
    const ClassInfo& c = classes_.at(element(Word(1, static_cast<char>(g))));
    v = std::all_of(c.members.begin(), c.members.end(), [](const Word& m) { return m.size() == 1; }) ? 1 : 0;
  }
  return v == 1;
}

std::uint64_t AbelianSemigroup::atom_class(ElemId atom) {
  const Word& w = classes_.at(atom).canonical;
  if (w.size() != 1 || !atom_letter(static_cast<unsigned char>(w[0]))) {
    throw Error(ErrorKind::NotAtom, show(atom) + " is not an atom");
  }
  return static_cast<unsigned char>(w[0]);
}

DivisorList AbelianSemigroup::left_divisors(ElemId x) {
  if (auto it = divisor_cache_.find(x); it != divisor_cache_.end()) return it->second;
  DivisorList out;
  out.complete = classes_.at(x).closed;
  const std::vector<Word> members = classes_.at(x).members;
  std::map<ElemId, ElemId> quotient_of;
  for (const Word& m : members) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i > 0 && m[i] == m[i - 1]) continue;
      if (!atom_letter(static_cast<unsigned char>(m[i]))) continue;
      ElemId u = element(Word(1, m[i]));
      Word rest = m;
      rest.erase(i, 1);
      ElemId q = element(rest);
      auto [it, fresh] = quotient_of.emplace(u, q);
      if (!fresh && it->second != q) {
        cancellative_ = false;
        out.items.push_back({u, q});
      } else if (fresh) {
        out.items.push_back({u, q});
      }
    }
  }
  std::sort(out.items.begin(), out.items.end(), [](const LeftDivisor& a, const LeftDivisor& b) {
    return a.atom != b.atom ? a.atom < b.atom : a.quotient < b.quotient;
  });
  out.items.erase(std::unique(out.items.begin(), out.items.end(),
                              [](const LeftDivisor& a, const LeftDivisor& b) { return a.atom == b.atom && a.quotient == b.quotient; }),
                  out.items.end());
  return divisor_cache_.emplace(x, std::move(out)).first->second;
}

EquivResult equiv_p(SemigroupHandle& h, ElemId a, ElemId b) {
  EquivResult r;
  const FactorizationSet& fa = rigid_factorizations(h, a);
  const FactorizationSet& fb = rigid_factorizations(h, b);
  for (const Factorization& za : fa.items) {
    PermFactorization ca = perm_class(h, za);
    for (const Factorization& zb : fb.items) {
      if (zb.size() != za.size() || perm_class(h, zb) != ca) continue;
      EquivWitness w{za, zb, {}};
      std::vector<char> used(zb.size(), 0);
      for (ElemId u : za) {
        for (std::size_t j = 0; j < zb.size(); ++j) {
          if (!used[j] && h.atom_class(zb[j]) == h.atom_class(u)) {
            used[j] = 1;
            w.sigma.push_back(static_cast<int>(j));
            break;
          }
        }
      }
      r.related = true;
      r.witness = std::move(w);
      return r;
    }
  }
  r.cert = fa.complete && fb.complete && h.certified(a) && h.certified(b) ? Cert::Exact : Cert::Unknown;
  return r;
}

ExwtReport check_exwt(PresentationSemigroup& s, AbelianSemigroup& ab, int seed_length) {
  ExwtReport rep;
  rep.assumptions.push_back("the abelianization is cancellative (checked only within the explored ball)");
  rep.assumptions.push_back("the abelianization has no non-trivial units");
  bool complete = true;
  std::vector<ElemId> elems = s.enumerate_elements(seed_length, &complete);
  if (!complete) rep.cert = Cert::LowerBound;
  rep.elements = elems.size();

  std::vector<PermSet> zp(elems.size());
  std::map<PermFactorization, std::vector<std::size_t>> bucket;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    zp[i] = permutable_factorizations(s, elems[i]);
    if (!zp[i].complete) rep.cert = Cert::LowerBound;
    for (const auto& c : zp[i].items) bucket[c].push_back(i);
  }
  std::vector<std::set<std::size_t>> related(elems.size());
  for (const auto& [c, list] : bucket) {
    for (std::size_t x : list) {
      for (std::size_t y : list) related[x].insert(y);
    }
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j : related[i]) {
      if (j <= i) continue;
      ++rep.related_pairs;
      for (int dir = 0; dir < 2; ++dir) {
        const std::size_t x = dir == 0 ? i : j;
        const std::size_t y = dir == 0 ? j : i;
        for (const Factorization& z : rigid_factorizations(s, elems[x]).items) {
          PermFactorization c = perm_class(s, z);
          if (std::binary_search(zp[y].items.begin(), zp[y].items.end(), c)) continue;
          rep.pass = false;
          rep.counterexamples.push_back({elems[x], elems[y], z});
          break;
        }
      }
    }
  }
  for (std::size_t b = 0; b < elems.size() && rep.transitive; ++b) {
    for (std::size_t a : related[b]) {
      for (std::size_t c : related[b]) {
        if (!related[a].count(c)) {
          rep.transitive = false;
          rep.transitivity_witness = {elems[a], elems[b], elems[c]};
          break;
        }
      }
      if (!rep.transitive) break;
    }
  }
  std::map<ElemId, std::pair<std::size_t, std::vector<int>>> by_image;
  for (std::size_t i = 0; i < elems.size() && !rep.length_obstruction; ++i) {
    ElemId img = ab.image(s, elems[i]);
    std::vector<int> lens = length_profile(s, elems[i]).lengths;
    auto [it, fresh] = by_image.emplace(img, std::make_pair(i, lens));
    if (!fresh && it->second.second != lens) {
      rep.length_obstruction = true;
      rep.obstruction_a = elems[it->second.first];
      rep.obstruction_b = elems[i];
    }
  }
  if (rep.length_obstruction) rep.pass = false;
  rep.cancellative_within_budget = ab.cancellative_within_budget();
  return rep;
}

LengthMapReport length_map(PresentationSemigroup& s, int seed_length) {
  LengthMapReport rep;
  const Presentation& p = s.presentation();
  rep.exists = p.length_preserving();
  if (!rep.exists) return rep;
  rep.t1 = true;
  rep.t2 = true;
  bool complete = true;
  std::vector<ElemId> elems = s.enumerate_elements(seed_length, &complete);
  std::set<std::size_t> hit;
  for (ElemId a : elems) {
    ++rep.elements_checked;
    const ClassInfo& c = s.info(a);
    const std::size_t len = c.canonical.size();
    hit.insert(len);
    for (const Word& m : c.members) {
      if (m.size() != len) {
        rep.t1 = false;
        rep.counterexample = p.show(c.canonical) + ": length is not well defined";
      }
    }
    if (len == 0) {
      rep.t1 = false;
      rep.counterexample = "a non-unit maps to 0";
    }
    // Lifting: every atom maps to 1 and every split of len is realised by
    // a prefix of the canonical word.
    for (const Factorization& z : rigid_factorizations(s, a).items) {
      if (z.size() != len) {
        rep.t2 = false;
        rep.counterexample = show_factorization(s, z) + " has length different from " + std::to_string(len);
      }
    }
    for (std::size_t k = 0; k <= len; ++k) {
      ElemId x = s.element(c.canonical.substr(0, k));
      ElemId y = s.element(c.canonical.substr(k));
      if (s.multiply(x, y) != a || s.canonical(x).size() != k) rep.t2 = false;
    }
  }
  for (std::size_t n = 1; n <= static_cast<std::size_t>(seed_length); ++n) {
    if (!hit.count(n)) {
      rep.t1 = false;
      rep.counterexample = "length " + std::to_string(n) + " is not attained";
    }
  }
  return rep;
}

}  // namespace factorum
