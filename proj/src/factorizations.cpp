#include "factorum/factorizations.hpp"

#include <algorithm>
#include <unordered_set>

namespace factorum {

namespace {

bool seq_less(SemigroupHandle& h, const Factorization& a, const Factorization& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [&](ElemId x, ElemId y) { return h.atom_less(x, y); });
}

void sort_unique(SemigroupHandle& h, std::vector<Factorization>& v) {
  std::sort(v.begin(), v.end(), [&](const Factorization& a, const Factorization& b) { return seq_less(h, a, b); });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

class Search {
 public:
  Search(SemigroupHandle& h, bool commutative, std::unordered_map<ElemId, FactorizationSet>& cache)
      : h_(h), commutative_(commutative), cache_(cache) {}

  const FactorizationSet& run(ElemId a) {
    static const FactorizationSet kEmpty{{}, false};
    const FactorizationSet* r = visit(a, 0);
    return r ? *r : kEmpty;
  }

 private:
  // Returns nullptr when the search is cut by a cycle or the depth bound.
  const FactorizationSet* visit(ElemId a, std::size_t depth) {
    if (auto it = cache_.find(a); it != cache_.end()) return &it->second;
    if (h_.is_unit(a)) return &cache_.emplace(a, FactorizationSet{{Factorization{}}, true}).first->second;
    if (on_stack_.count(a) || depth >= h_.max_factorization_length()) return nullptr;
    on_stack_.insert(a);
    FactorizationSet out;
    DivisorList divs = h_.left_divisors(a);
    out.complete = divs.complete && h_.certified(a);
    for (const LeftDivisor& d : divs.items) {
      const FactorizationSet* sub = visit(d.quotient, depth + 1);
      if (!sub) {
        out.complete = false;
        continue;
      }
      out.complete = out.complete && sub->complete;
      for (const Factorization& f : sub->items) {
        if (commutative_ && !f.empty() && h_.atom_less(f.front(), d.atom)) continue;
        if (out.items.size() >= kMaxFactorizations) {
          out.complete = false;
          break;
        }
        Factorization z;
        z.reserve(f.size() + 1);
        z.push_back(d.atom);
        z.insert(z.end(), f.begin(), f.end());
        out.items.push_back(std::move(z));
      }
    }
    on_stack_.erase(a);
    sort_unique(h_, out.items);
    return &cache_.emplace(a, std::move(out)).first->second;
  }

  SemigroupHandle& h_;
  bool commutative_;
  std::unordered_map<ElemId, FactorizationSet>& cache_;
  std::unordered_set<ElemId> on_stack_;
};

}  // namespace

const FactorizationSet& permutable_representatives(SemigroupHandle& h, ElemId a) {
  if (auto it = h.perm_cache.find(a); it != h.perm_cache.end()) return it->second;
  if (h.is_commutative()) {
    Search s(h, true, h.perm_cache);
    return s.run(a);
  }
  const FactorizationSet& rigid = rigid_factorizations(h, a);
  FactorizationSet out;
  out.complete = rigid.complete;
  std::vector<PermFactorization> seen;
  for (const Factorization& z : rigid.items) {
    PermFactorization c = perm_class(h, z);
    if (std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
    seen.push_back(std::move(c));
    out.items.push_back(z);
  }
  return h.perm_cache.emplace(a, std::move(out)).first->second;
}

const FactorizationSet& rigid_factorizations(SemigroupHandle& h, ElemId a) {
  if (auto it = h.rigid_cache.find(a); it != h.rigid_cache.end()) return it->second;
  if (!h.is_commutative()) {
    Search s(h, false, h.rigid_cache);
    return s.run(a);
  }
  const FactorizationSet& reps = permutable_representatives(h, a);
  FactorizationSet out;
  out.complete = reps.complete;
  auto less = [&](ElemId x, ElemId y) { return h.atom_less(x, y); };
  for (Factorization z : reps.items) {
    std::sort(z.begin(), z.end(), less);
    do {
      if (out.items.size() >= kMaxFactorizations) {
        out.complete = false;
        break;
      }
      out.items.push_back(z);
    } while (std::next_permutation(z.begin(), z.end(), less));
  }
  sort_unique(h, out.items);
  return h.rigid_cache.emplace(a, std::move(out)).first->second;
}

PermFactorization perm_class(SemigroupHandle& h, const Factorization& z) {
  PermFactorization c;
  c.reserve(z.size());
  for (ElemId u : z) c.push_back(h.atom_class(u));
  std::sort(c.begin(), c.end());
  return c;
}

PermSet permutable_factorizations(SemigroupHandle& h, ElemId a) {
  const FactorizationSet& reps = permutable_representatives(h, a);
  PermSet out;
  out.complete = reps.complete;
  for (const Factorization& z : reps.items) out.items.push_back(perm_class(h, z));
  std::sort(out.items.begin(), out.items.end());
  out.items.erase(std::unique(out.items.begin(), out.items.end()), out.items.end());
  return out;
}

LengthSet make_length_set(std::vector<int> lengths) {
  LengthSet out;
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
  out.lengths = lengths;
  for (std::size_t i = 1; i < lengths.size(); ++i) out.delta.push_back(lengths[i] - lengths[i - 1]);
  std::sort(out.delta.begin(), out.delta.end());
  out.delta.erase(std::unique(out.delta.begin(), out.delta.end()), out.delta.end());
  if (!lengths.empty() && lengths.front() > 0) {
    out.elasticity = Rational(lengths.back(), lengths.front());
  }
  return out;
}

LengthSet length_profile(SemigroupHandle& h, ElemId a) {
  const FactorizationSet& reps = permutable_representatives(h, a);
  std::vector<int> lengths;
  for (const Factorization& z : reps.items) lengths.push_back(static_cast<int>(z.size()));
  LengthSet out = make_length_set(std::move(lengths));
  out.complete = reps.complete;
  return out;
}

std::vector<std::string> factorization_strings(SemigroupHandle& h, const Factorization& z) {
  std::vector<std::string> out;
  for (ElemId u : z) out.push_back(h.show(u));
  return out;
}

std::string show_factorization(SemigroupHandle& h, const Factorization& z) {
  std::string out = "[";
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (i) out += ", ";
    out += h.show(z[i]);
  }
  return out + "]";
}

std::string show_perm(SemigroupHandle& h, const PermFactorization& z) {
  std::string out = "{";
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (i) out += ", ";
    out += h.show_class(z[i]);
  }
  return out + "}";
}

ElemId compose(SemigroupHandle& h, const Factorization& z) {
  ElemId x = h.identity();
  for (ElemId u : z) x = h.multiply(x, u);
  return x;
}

}  // namespace factorum
