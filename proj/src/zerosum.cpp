#include "factorum/zerosum.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "factorum/core.hpp"
#include "factorum/factorizations.hpp"

namespace factorum {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> orders) {
  for (int n : orders) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "cyclic orders must be >= 1");
    if (n > 1) orders_.push_back(n);
  }
  stride_.assign(orders_.size(), 1);
  long long total = 1;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    stride_[i] = static_cast<int>(total);
    total *= orders_[i];
    if (total > kMaxGroupOrder) throw Error(ErrorKind::GroupTooLarge, "group order exceeds " + std::to_string(kMaxGroupOrder));
  }
  order_ = static_cast<int>(total);
}

FiniteAbelianGroup FiniteAbelianGroup::parse(const std::string& text) {
  std::vector<int> orders;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      int n = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      orders.push_back(n);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::InvalidArgument, "bad group order '" + item + "'");
    }
  }
  return FiniteAbelianGroup(orders);
}

int FiniteAbelianGroup::exponent() const {
  int e = 1;
  for (int n : orders_) e = std::lcm(e, n);
  return e;
}

std::vector<int> FiniteAbelianGroup::coords(int x) const {
  std::vector<int> c(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) c[i] = (x / stride_[i]) % orders_[i];
  return c;
}

int FiniteAbelianGroup::index(const std::vector<int>& c) const {
  if (c.size() != orders_.size()) throw Error(ErrorKind::InvalidArgument, "wrong number of coordinates");
  int x = 0;
  for (std::size_t i = 0; i < c.size(); ++i) x += (((c[i] % orders_[i]) + orders_[i]) % orders_[i]) * stride_[i];
  return x;
}

int FiniteAbelianGroup::add(int x, int y) const {
  int r = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    int a = (x / stride_[i]) % orders_[i];
    int b = (y / stride_[i]) % orders_[i];
    r += ((a + b) % orders_[i]) * stride_[i];
  }
  return r;
}

int FiniteAbelianGroup::neg(int x) const {
  int r = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    int a = (x / stride_[i]) % orders_[i];
    r += ((orders_[i] - a) % orders_[i]) * stride_[i];
  }
  return r;
}

int FiniteAbelianGroup::element_order(int x) const {
  int k = 1;
  for (int y = x; y != 0; y = add(y, x)) ++k;
  return x == 0 ? 1 : k;
}

std::vector<int> FiniteAbelianGroup::invariant_factors() const {
  // Prime-power parts per prime, largest first, recombined column by column.
  std::map<int, std::vector<int>> parts;
  for (int n : orders_) {
    for (int p = 2; n > 1; ++p) {
      int q = 1;
      while (n % p == 0) {
        n /= p;
        q *= p;
      }
      if (q > 1) parts[p].push_back(q);
    }
  }
  std::size_t width = 0;
  for (auto& [p, v] : parts) {
    std::sort(v.rbegin(), v.rend());
    width = std::max(width, v.size());
  }
  std::vector<int> out(width, 1);
  for (auto& [p, v] : parts) {
    for (std::size_t i = 0; i < v.size(); ++i) out[i] *= v[i];
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string FiniteAbelianGroup::show(int x) const {
  std::vector<int> c = coords(x);
  if (c.empty()) return "0";
  if (c.size() == 1) return std::to_string(c[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

std::string FiniteAbelianGroup::name() const {
  if (orders_.empty()) return "C1";
  std::string s;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) s += "+";
    s += "C" + std::to_string(orders_[i]);
  }
  return s;
}

int sequence_sum(const FiniteAbelianGroup& g, const Sequence& s) {
  int sum = 0;
  for (int x : s) sum = g.add(sum, x);
  return sum;
}

std::string show_sequence(const FiniteAbelianGroup& g, const Sequence& s) {
  if (s.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < s.size();) {
    std::size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    if (!out.empty()) out += " ";
    out += g.show(s[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

Sequence parse_sequence(const FiniteAbelianGroup& g, const std::string& text) {
  Sequence s;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    int mult = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      try {
        mult = std::stoi(tok.substr(caret + 1));
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::Syntax, "bad exponent in '" + tok + "'");
      }
      tok = tok.substr(0, caret);
    }
    std::string body;
    for (char c : tok) {
      if (c != '(' && c != ')') body += c;
    }
    std::vector<int> c;
    std::istringstream parts(body);
    std::string item;
    while (std::getline(parts, item, ',')) {
      try {
        c.push_back(std::stoi(item));
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::Syntax, "bad group element '" + tok + "'");
      }
    }
    if (g.orders().empty() && c == std::vector<int>{0}) c.clear();
    int x = g.index(c);
    for (int k = 0; k < mult; ++k) s.push_back(x);
  }
  std::sort(s.begin(), s.end());
  return s;
}

namespace {

std::vector<int> normalize_subset(const FiniteAbelianGroup& g, const std::vector<int>& subset) {
  std::vector<int> out = subset;
  if (out.empty()) {
    out.resize(static_cast<std::size_t>(g.order()));
    std::iota(out.begin(), out.end(), 0);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (int x : out) {
    if (x < 0 || x >= g.order()) throw Error(ErrorKind::InvalidArgument, "subset element outside the group");
  }
  return out;
}

// Subset-sum sets as bitmasks over the group (order <= 64).
std::uint64_t shift(const FiniteAbelianGroup& g, std::uint64_t mask, int h) {
  std::uint64_t out = 0;
  for (int x = 0; x < g.order(); ++x) {
    if (mask >> x & 1) out |= std::uint64_t{1} << g.add(x, h);
  }
  return out;
}

void extend_free(const FiniteAbelianGroup& g, const std::vector<int>& nonzero, const std::vector<char>& allowed,
                 Sequence& s, std::uint64_t sums, int sum, std::vector<Sequence>& out) {
  // s is zero-sum free and nonempty; closing it with -sigma(s) gives an atom.
  int close = g.neg(sum);
  if (allowed[static_cast<std::size_t>(close)] && close >= s.back()) {
    Sequence a = s;
    a.push_back(close);
    out.push_back(std::move(a));
  }
  for (int h : nonzero) {
    if (h < s.back()) continue;
    std::uint64_t next = sums | shift(g, sums, h) | (std::uint64_t{1} << h);
    if (next & 1) continue;
    s.push_back(h);
    extend_free(g, nonzero, allowed, s, next, g.add(sum, h), out);
    s.pop_back();
  }
}

bool sequence_less(const Sequence& a, const Sequence& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

std::vector<Sequence> block_atoms(const FiniteAbelianGroup& g, const std::vector<int>& subset) {
  std::vector<int> sub = normalize_subset(g, subset);
  std::vector<char> allowed(static_cast<std::size_t>(g.order()), 0);
  for (int x : sub) allowed[static_cast<std::size_t>(x)] = 1;
  std::vector<Sequence> out;
  if (allowed[0]) out.push_back({0});
  std::vector<int> nonzero;
  for (int x : sub) {
    if (x != 0) nonzero.push_back(x);
  }
  for (int h : nonzero) {
    Sequence s{h};
    extend_free(g, nonzero, allowed, s, std::uint64_t{1} << h, h, out);
  }
  std::sort(out.begin(), out.end(), sequence_less);
  return out;
}

int davenport(const FiniteAbelianGroup& g, const std::vector<int>& subset) {
  int d = 0;
  for (const Sequence& a : block_atoms(g, subset)) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

BlockMonoid::BlockMonoid(FiniteAbelianGroup g, std::vector<int> subset)
    : g_(std::move(g)), subset_(normalize_subset(g_, subset)) {
  atoms_ = block_atoms(g_, subset_);
  intern({});
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    ElemId id = intern(atoms_[i]);
    atom_ids_.push_back(id);
    atom_key_[id] = i;
  }
}

ElemId BlockMonoid::intern(Sequence s) {
  if (auto it = index_.find(s); it != index_.end()) return it->second;
  ElemId id = static_cast<ElemId>(seqs_.size());
  index_.emplace(s, id);
  seqs_.push_back(std::move(s));
  return id;
}

ElemId BlockMonoid::element(Sequence s) {
  std::sort(s.begin(), s.end());
  for (int x : s) {
    if (!std::binary_search(subset_.begin(), subset_.end(), x)) {
      throw Error(ErrorKind::InvalidArgument, "term " + g_.show(x) + " outside the declared subset");
    }
  }
  if (sequence_sum(g_, s) != 0) throw Error(ErrorKind::InvalidArgument, "sequence " + show_sequence(g_, s) + " is not zero-sum");
  return intern(std::move(s));
}

ElemId BlockMonoid::multiply(ElemId x, ElemId y) {
  Sequence s;
  const Sequence& a = seqs_.at(x);
  const Sequence& b = seqs_.at(y);
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(s));
  return intern(std::move(s));
}

DivisorList BlockMonoid::left_divisors(ElemId x) {
  DivisorList out;
  const Sequence s = seqs_.at(x);
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const Sequence& a = atoms_[i];
    if (!std::includes(s.begin(), s.end(), a.begin(), a.end())) continue;
    Sequence rest;
    std::set_difference(s.begin(), s.end(), a.begin(), a.end(), std::back_inserter(rest));
    ElemId q = intern(std::move(rest));
    out.items.push_back({atom_ids_[i], q});
  }
  return out;
}

std::uint64_t BlockMonoid::atom_class(ElemId atom) {
  auto it = atom_key_.find(atom);
  if (it == atom_key_.end()) throw Error(ErrorKind::NotAtom, show(atom) + " is not an atom");
  return it->second;
}

std::vector<Sequence> zero_sum_sequences(const FiniteAbelianGroup& g, const std::vector<int>& subset, int max_length) {
  std::vector<int> sub = normalize_subset(g, subset);
  std::vector<Sequence> out;
  Sequence s;
  auto rec = [&](auto&& self, std::size_t from, int sum) -> void {
    if (!s.empty() && sum == 0) out.push_back(s);
    if (static_cast<int>(s.size()) == max_length) return;
    for (std::size_t i = from; i < sub.size(); ++i) {
      s.push_back(sub[i]);
      self(self, i, g.add(sum, sub[i]));
      s.pop_back();
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end(), sequence_less);
  return out;
}

BlockCatenaryReport block_catenary(const FiniteAbelianGroup& g, const std::vector<int>& subset, int max_length,
                                   std::size_t max_elements) {
  BlockMonoid b(g, subset);
  BlockCatenaryReport rep;
  rep.davenport = 0;
  for (const Sequence& a : b.atom_sequences()) rep.davenport = std::max(rep.davenport, static_cast<int>(a.size()));
  rep.max_length = max_length > 0 ? max_length : 2 * rep.davenport;
  rep.catenary.cert = Cert::LowerBound;
  rep.catenary.kind = DistanceKind::Permutable;
  bool first = true;
  for (const Sequence& s : zero_sum_sequences(g, b.subset(), rep.max_length)) {
    if (rep.elements_checked >= max_elements) {
      rep.truncated = true;
      break;
    }
    ++rep.elements_checked;
    ElemId x = b.element(s);
    CatenaryReport c = catenary(b, x, DistanceKind::Permutable);
    if (first || c.value > rep.catenary.value) {
      rep.catenary = c;
      rep.witness = s;
      first = false;
    }
  }
  rep.catenary.cert = Cert::LowerBound;
  return rep;
}

OrderBoundReport maximal_order_bound(const FiniteAbelianGroup& c, std::size_t max_elements) {
  OrderBoundReport rep;
  rep.invariant_factors = c.invariant_factors();
  rep.detail = block_catenary(c, {}, 0, max_elements);
  rep.computed = std::max(2, rep.detail.catenary.value);
  const std::vector<int>& f = rep.invariant_factors;
  using V = std::vector<int>;
  if (c.order() == 1) {
    rep.classification = "d_sim-factorial";
    rep.classified = 2;
  } else if (c.order() <= 2) {
    rep.classification = "|C| <= 2";
    rep.classified = 2;
  } else if (f == V{3} || f == V{2, 2} || f == V{3, 3}) {
    rep.classification = "value 3";
    rep.classified = 3;
  } else if (f == V{4} || f == V{2, 4} || f == V{2, 2, 2} || f == V{3, 3, 3}) {
    rep.classification = "value 4";
    rep.classified = 4;
  } else {
    rep.classification = "unclassified";
  }
  if (rep.classified >= 0) {
    rep.bound = rep.classified;
    rep.cert = Cert::Exact;
  } else {
    rep.bound = rep.computed;
    rep.cert = Cert::LowerBound;
  }
  return rep;
}

}  // namespace factorum
