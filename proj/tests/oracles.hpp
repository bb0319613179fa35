#pragma once

// Brute-force reference implementations used only by the tests. None of
// them calls into the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// Finite abelian group as tuples; elements are indexed with the first
// coordinate most significant.
struct Group {
  std::vector<int> orders;

  int size() const {
    int n = 1;
    for (int o : orders) n *= o;
    return n;
  }
  std::vector<int> tuple(int x) const {
    std::vector<int> t(orders.size());
    for (std::size_t i = orders.size(); i-- > 0;) {
      t[i] = x % orders[i];
      x /= orders[i];
    }
    return t;
  }
  int index(const std::vector<int>& t) const {
    int x = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) x = x * orders[i] + t[i];
    return x;
  }
  int add(int x, int y) const {
    std::vector<int> a = tuple(x), b = tuple(y);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + b[i]) % orders[i];
    return index(a);
  }
};

inline bool subset_sums_to_zero(const Group& g, const std::vector<int>& seq, bool proper) {
  const std::size_t n = seq.size();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    if (proper && mask == full) continue;
    int s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) s = g.add(s, seq[i]);
    }
    if (s == 0) return true;
  }
  return false;
}

inline bool is_minimal_zero_sum(const Group& g, const std::vector<int>& seq) {
  if (seq.empty()) return false;
  int s = 0;
  for (int x : seq) s = g.add(s, x);
  return s == 0 && !subset_sums_to_zero(g, seq, true);
}

// 1 + the longest zero-sum free sequence, by exhaustive search.
inline int davenport(const Group& g) {
  int best = 0;
  std::vector<int> seq;
  std::function<void(int)> grow = [&](int from) {
    best = std::max(best, static_cast<int>(seq.size()));
    for (int x = from; x < g.size(); ++x) {
      seq.push_back(x);
      if (!subset_sums_to_zero(g, seq, false)) grow(x);
      seq.pop_back();
    }
  };
  grow(0);
  return best + 1;
}

// Factorizations of a zero-sum sequence into minimal zero-sum subsequences,
// each returned as a sorted list of sorted atoms.
inline std::set<std::vector<std::vector<int>>> block_factorizations(const Group& g, std::vector<int> seq) {
  std::set<std::vector<std::vector<int>>> out;
  std::sort(seq.begin(), seq.end());
  std::vector<std::vector<int>> parts;
  std::function<void(std::vector<int>)> split = [&](std::vector<int> rest) {
    if (rest.empty()) {
      std::vector<std::vector<int>> f = parts;
      std::sort(f.begin(), f.end());
      out.insert(f);
      return;
    }
    const int first = rest.front();
    const std::vector<int> tail(rest.begin() + 1, rest.end());
    const std::size_t n = tail.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<int> atom{first}, left;
      for (std::size_t i = 0; i < n; ++i) (mask >> i & 1 ? atom : left).push_back(tail[i]);
      std::sort(atom.begin(), atom.end());
      if (!is_minimal_zero_sum(g, atom)) continue;
      parts.push_back(atom);
      split(left);
      parts.pop_back();
    }
  };
  split(seq);
  return out;
}

// d* by enumerating every order-preserving matching of equal atoms. A gap
// between matched positions costs max(gap in z, gap in z').
inline int rigid_distance(const std::vector<std::uint32_t>& z, const std::vector<std::uint32_t>& zp) {
  if (z == zp) return 0;
  int best = std::numeric_limits<int>::max();
  std::function<void(int, int, int)> go = [&](int i, int j, int cost) {
    const int tail = std::max(static_cast<int>(z.size()) - i, static_cast<int>(zp.size()) - j);
    best = std::min(best, cost + tail);
    for (int a = i; a < static_cast<int>(z.size()); ++a) {
      for (int b = j; b < static_cast<int>(zp.size()); ++b) {
        if (z[static_cast<std::size_t>(a)] == zp[static_cast<std::size_t>(b)]) go(a + 1, b + 1, cost + std::max(a - i, b - j));
      }
    }
  };
  go(0, 0, 0);
  return best;
}

// Congruence class of w under two-sided rewriting, words up to max_len.
// Relations use the same one-char-per-generator encoding as the input.
inline std::set<std::string> word_class(const std::vector<std::pair<std::string, std::string>>& rels, const std::string& w,
                                        std::size_t max_len, bool* closed = nullptr) {
  std::set<std::string> seen{w};
  std::vector<std::string> todo{w};
  if (closed) *closed = true;
  while (!todo.empty()) {
    std::string cur = todo.back();
    todo.pop_back();
    for (const auto& [l, r] : rels) {
      for (int dir = 0; dir < 2; ++dir) {
        const std::string& from = dir ? r : l;
        const std::string& to = dir ? l : r;
        for (std::size_t pos = cur.find(from); pos != std::string::npos; pos = cur.find(from, pos + 1)) {
          std::string next = cur.substr(0, pos) + to + cur.substr(pos + from.size());
          if (next.size() > max_len) {
            if (closed) *closed = false;
            continue;
          }
          if (seen.insert(next).second) todo.push_back(next);
        }
      }
    }
  }
  return seen;
}

inline std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

inline int big_omega(std::int64_t n) {
  n = n < 0 ? -n : n;
  int k = 0;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      n /= p;
      ++k;
    }
  }
  return n > 1 ? k + 1 : k;
}

// [[a,b],[0,d]] is an atom of T_2(Z) iff it is a non-unit and no
// factorization B*C into non-units exists. B is taken up to right units:
// B = [[x,y],[0,z]] with x | a, z | d, x, z > 0 and 0 <= y < x.
inline bool tri2_atom(std::int64_t a, std::int64_t b, std::int64_t d) {
  const std::int64_t det = a * d;
  if (det == 1 || det == -1) return false;
  const std::int64_t aa = a < 0 ? -a : a, dd = d < 0 ? -d : d;
  for (std::int64_t x = 1; x <= aa; ++x) {
    if (aa % x) continue;
    for (std::int64_t z = 1; z <= dd; ++z) {
      if (dd % z) continue;
      if (x * z == 1 || x * z == aa * dd) continue;
      for (std::int64_t y = 0; y < x; ++y) {
        // C = B^{-1} A = [[a/x, (b - y d / z) / x], [0, d/z]]
        const std::int64_t num = b - y * (d / z);
        if (num % x == 0) return false;
      }
    }
  }
  return true;
}

// All-pairs minimax path over a complete graph; returns the largest
// bottleneck between any two vertices.
inline int minimax_catenary(const std::vector<std::vector<int>>& w) {
  const std::size_t n = w.size();
  std::vector<std::vector<int>> m = w;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m[i][j] = std::min(m[i][j], std::max(m[i][k], m[k][j]));
    }
  }
  int worst = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) worst = std::max(worst, m[i][j]);
    }
  }
  return worst;
}

}  // namespace oracle
