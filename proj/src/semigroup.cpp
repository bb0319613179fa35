#include "factorum/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace factorum {

const char* to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "Yes";
    case Tri::No: return "No";
    case Tri::Unknown: return "Unknown";
  }
  return "Unknown";
}

PresentationSemigroup::PresentationSemigroup(Presentation p) : PresentationSemigroup(p, p.budget) {}

PresentationSemigroup::PresentationSemigroup(Presentation p, Budget b)
    : p_(std::move(p)), budget_(b), adyan_(check_adyan(p_).is_adyan) {
  p_.validate_budget(budget_);
  atom_letter_class_.assign(p_.generators.size(), -2);
  classes_.push_back({Word{}, {Word{}}, true});
  index_.emplace(Word{}, 0);
}

std::vector<std::string> PresentationSemigroup::warnings() const {
  std::vector<std::string> out;
  if (!adyan_) out.push_back("presentation is not Adyan; cancellativity is assumed, not certified");
  return out;
}

ElemId PresentationSemigroup::element(const Word& w) {
  if (auto it = index_.find(w); it != index_.end()) return it->second;
  CongruenceBall ball = congruence_ball(p_, w, budget_);
  const auto id = static_cast<ElemId>(classes_.size());
  for (const Word& m : ball.members) index_.emplace(m, id);
  classes_.push_back({ball.members.front(), std::move(ball.members), ball.closed});
  return id;
}

ElemId PresentationSemigroup::multiply(ElemId x, ElemId y) {
  if (x == 0) return y;
  if (y == 0) return x;
  return element(canonical(x) + canonical(y));
}

int PresentationSemigroup::atom_letter_class(int g) {
  int& slot = atom_letter_class_.at(static_cast<std::size_t>(g));
  if (slot != -2) return slot;
  const ClassInfo& c = info(element(Word(1, static_cast<char>(g))));
  bool single = c.closed && std::all_of(c.members.begin(), c.members.end(), [](const Word& m) { return m.size() == 1; });
  slot = single ? static_cast<unsigned char>(c.canonical[0]) : -1;
  return slot;
}

bool PresentationSemigroup::atom_letter(int g) { return atom_letter_class(g) >= 0; }

std::uint64_t PresentationSemigroup::atom_class(ElemId atom) {
  return static_cast<unsigned char>(canonical(atom).at(0));
}

AtomTest PresentationSemigroup::is_atom(ElemId x) {
  AtomTest t;
  if (x == 0) {
    t.answer = Tri::No;
    return t;
  }
  const ClassInfo& c = info(x);
  for (const Word& m : c.members) {
    if (m.size() >= 2) {
      t.answer = Tri::No;
      t.left = m.substr(0, 1);
      t.right = m.substr(1);
      return t;
    }
  }
  t.answer = c.closed ? Tri::Yes : Tri::Unknown;
  return t;
}

DivisorList PresentationSemigroup::left_divisors(ElemId x) {
  if (auto it = divisor_cache_.find(x); it != divisor_cache_.end()) return it->second;
  DivisorList out;
  if (x != 0) {
    const ClassInfo& c = info(x);
    out.complete = c.closed;
    // Copy: element() below may grow the class table.
    std::vector<Word> members = c.members;
    for (const Word& m : members) {
      int a = atom_letter_class(static_cast<unsigned char>(m[0]));
      if (a < 0) continue;
      ElemId atom = element(Word(1, static_cast<char>(a)));
      ElemId q = element(m.substr(1));
      bool dup = std::any_of(out.items.begin(), out.items.end(),
                             [&](const LeftDivisor& d) { return d.atom == atom && d.quotient == q; });
      if (!dup) out.items.push_back({atom, q});
    }
    std::sort(out.items.begin(), out.items.end(), [&](const LeftDivisor& l, const LeftDivisor& r) {
      if (l.atom != r.atom) return shortlex_less(canonical(l.atom), canonical(r.atom));
      return shortlex_less(canonical(l.quotient), canonical(r.quotient));
    });
  }
  divisor_cache_.emplace(x, out);
  return out;
}

std::vector<ElemId> PresentationSemigroup::enumerate_elements(int seed_length, bool* complete) {
  const int k = static_cast<int>(p_.generators.size());
  std::vector<ElemId> ids;
  std::vector<char> seen;
  bool all_closed = true;
  for (int len = 1; len <= seed_length; ++len) {
    Word w(static_cast<std::size_t>(len), 0);
    while (true) {
      ElemId id = element(w);
      if (id >= seen.size()) seen.resize(id + 1, 0);
      if (!seen[id]) {
        seen[id] = 1;
        ids.push_back(id);
        all_closed = all_closed && info(id).closed;
      }
      int pos = len - 1;
      while (pos >= 0 && w[static_cast<std::size_t>(pos)] == k - 1) w[static_cast<std::size_t>(pos--)] = 0;
      if (pos < 0) break;
      ++w[static_cast<std::size_t>(pos)];
    }
  }
  std::sort(ids.begin(), ids.end(), [&](ElemId a, ElemId b) { return shortlex_less(canonical(a), canonical(b)); });
  if (complete) *complete = all_closed;
  return ids;
}

std::vector<ElemId> PresentationSemigroup::enumerate_atoms(bool* complete) {
  // An atom's class contains only one-letter words, so length-1 seeds suffice.
  bool all = true;
  std::vector<ElemId> out;
  for (ElemId x : enumerate_elements(1, &all)) {
    Tri t = is_atom(x).answer;
    if (t == Tri::Yes) out.push_back(x);
    if (t == Tri::Unknown) all = false;
  }
  if (complete) *complete = all;
  return out;
}

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = b;  // the smaller index becomes the root
  }
};

// Words of length lo..hi indexed by offset[len] + base-k value.
void scan_layer(const Presentation& p, int lo, int hi, bool check_escape, const ClassCallback& fn,
                std::size_t max_words) {
  const std::uint64_t k = p.generators.size();
  std::vector<std::uint64_t> pw(static_cast<std::size_t>(hi) + 1, 1);
  for (int i = 1; i <= hi; ++i) pw[static_cast<std::size_t>(i)] = pw[static_cast<std::size_t>(i) - 1] * k;
  std::vector<std::uint64_t> offset(static_cast<std::size_t>(hi) + 2, 0);
  for (int len = lo; len <= hi; ++len) {
    offset[static_cast<std::size_t>(len) + 1] = offset[static_cast<std::size_t>(len)] + pw[static_cast<std::size_t>(len)];
    if (offset[static_cast<std::size_t>(len) + 1] > max_words) {
      throw Error(ErrorKind::BudgetExceeded, "word space too large for exhaustive class scan");
    }
  }
  const std::size_t n = offset[static_cast<std::size_t>(hi) + 1] - offset[static_cast<std::size_t>(lo)];
  const std::uint64_t base = offset[static_cast<std::size_t>(lo)];
  UnionFind uf(n);
  std::vector<char> escaped(check_escape ? n : 0, 0);

  auto index_of = [&](const Word& w) {
    std::uint64_t v = 0;
    for (char c : w) v = v * k + static_cast<unsigned char>(c);
    return offset[w.size()] + v - base;
  };
  auto decode = [&](std::uint64_t idx, Word& w) {
    idx += base;
    std::size_t len = static_cast<std::size_t>(lo);
    while (idx >= offset[len + 1]) ++len;
    std::uint64_t v = idx - offset[len];
    w.assign(len, 0);
    for (std::size_t i = len; i-- > 0;) {
      w[i] = static_cast<char>(v % k);
      v /= k;
    }
  };

  Word w;
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    decode(idx, w);
    for (const Relation& r : p.relations) {
      for (int dir = 0; dir < (check_escape ? 2 : 1); ++dir) {
        const Word& from = dir == 0 ? r.lhs : r.rhs;
        const Word& to = dir == 0 ? r.rhs : r.lhs;
        for (std::size_t pos = w.find(from); pos != Word::npos; pos = w.find(from, pos + 1)) {
          std::size_t new_len = w.size() - from.size() + to.size();
          if (static_cast<int>(new_len) > hi) {
            escaped[idx] = 1;
            continue;
          }
          Word next = w.substr(0, pos) + to + w.substr(pos + from.size());
          uf.unite(static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(index_of(next)));
        }
      }
    }
  }

  std::vector<std::uint32_t> start(n + 1, 0);
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    std::uint32_t r = uf.find(static_cast<std::uint32_t>(idx));
    uf.parent[idx] = r;
    ++start[r + 1];
  }
  for (std::size_t i = 0; i < n; ++i) start[i + 1] += start[i];
  std::vector<std::uint32_t> order(n);
  {
    std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
    for (std::uint64_t idx = 0; idx < n; ++idx) order[fill[uf.parent[idx]]++] = static_cast<std::uint32_t>(idx);
  }
  std::vector<Word> members;
  for (std::uint64_t root = 0; root < n; ++root) {
    if (uf.parent[root] != root) continue;
    members.clear();
    bool closed = true;
    for (std::uint32_t i = start[root]; i < start[root + 1]; ++i) {
      Word m;
      decode(order[i], m);
      members.push_back(std::move(m));
      if (check_escape && escaped[order[i]]) closed = false;
    }
    fn(members, closed);
  }
}

}  // namespace

void scan_word_classes(const Presentation& p, int max_length, const ClassCallback& fn, std::size_t max_words) {
  if (p.length_preserving()) {
    for (int len = 1; len <= max_length; ++len) scan_layer(p, len, len, false, fn, max_words);
  } else {
    scan_layer(p, 1, max_length, true, fn, max_words);
  }
}

}  // namespace factorum
