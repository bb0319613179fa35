#include "factorum/distances.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "factorum/core.hpp"
#include "factorum/factorizations.hpp"

namespace factorum {

const char* to_string(DistanceKind k) {
  switch (k) {
    case DistanceKind::Length: return "len";
    case DistanceKind::Permutable: return "perm";
    case DistanceKind::Rigid: return "rigid";
  }
  return "perm";
}

DistanceKind parse_distance_kind(const std::string& s) {
  if (s == "len" || s == "length") return DistanceKind::Length;
  if (s == "perm" || s == "p" || s == "permutable") return DistanceKind::Permutable;
  if (s == "rigid" || s == "star" || s == "*") return DistanceKind::Rigid;
  throw Error(ErrorKind::InvalidArgument, "unknown distance kind '" + s + "'");
}

int length_distance(const Factorization& z, const Factorization& zp) {
  return std::abs(static_cast<int>(z.size()) - static_cast<int>(zp.size()));
}

int perm_distance(const PermFactorization& z, const PermFactorization& zp) {
  int common = 0;
  std::size_t i = 0, j = 0;
  while (i < z.size() && j < zp.size()) {
    if (z[i] == zp[j]) {
      ++common;
      ++i;
      ++j;
    } else if (z[i] < zp[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return std::max(static_cast<int>(z.size()) - common, static_cast<int>(zp.size()) - common);
}

namespace {

int gap(int p, int q) { return p + q == 0 ? 0 : std::max(p, q); }

}  // namespace

Alignment rigid_alignment(const Factorization& z, const Factorization& zp) {
  const int n = static_cast<int>(z.size());
  const int m = static_cast<int>(zp.size());
  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  // dp[i][j]: cheapest alignment of z[0..i) and zp[0..j) whose last match is (i-1, j-1).
  std::vector<std::vector<int>> dp(static_cast<std::size_t>(n) + 1, std::vector<int>(static_cast<std::size_t>(m) + 1, kInf));
  std::vector<std::vector<std::pair<int, int>>> prev(static_cast<std::size_t>(n) + 1,
                                                     std::vector<std::pair<int, int>>(static_cast<std::size_t>(m) + 1, {0, 0}));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m; ++j) {
      if (z[static_cast<std::size_t>(i) - 1] != zp[static_cast<std::size_t>(j) - 1]) continue;
      int best = gap(i - 1, j - 1);
      std::pair<int, int> from{0, 0};
      for (int a = i - 1; a >= 1; --a) {
        for (int b = j - 1; b >= 1; --b) {
          int v = dp[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
          if (v >= kInf) continue;
          v += gap(i - a - 1, j - b - 1);
          if (v < best) {
            best = v;
            from = {a, b};
          }
        }
      }
      dp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = best;
      prev[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = from;
    }
  }
  int best = gap(n, m);
  std::pair<int, int> last{0, 0};
  for (int i = n; i >= 1; --i) {
    for (int j = m; j >= 1; --j) {
      int v = dp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (v >= kInf) continue;
      v += gap(n - i, m - j);
      if (v < best) {
        best = v;
        last = {i, j};
      }
    }
  }
  Alignment out;
  out.cost = best;
  std::vector<std::pair<int, int>> matches;
  for (auto cur = last; cur.first != 0; cur = prev[static_cast<std::size_t>(cur.first)][static_cast<std::size_t>(cur.second)]) {
    matches.push_back(cur);
  }
  std::reverse(matches.begin(), matches.end());
  int pi = 0, pj = 0;
  for (auto [i, j] : matches) {
    if (!out.blocks.empty() && i - 1 == pi && j - 1 == pj && (pi != 0 || pj != 0)) {
      ++out.blocks.back().length;
    } else {
      if (int g = gap(i - 1 - pi, j - 1 - pj); g > 0) out.gap_costs.push_back(g);
      out.blocks.push_back({i - 1, j - 1, 1});
    }
    pi = i;
    pj = j;
  }
  if (int g = gap(n - pi, m - pj); g > 0) out.gap_costs.push_back(g);
  return out;
}

int rigid_distance(const Factorization& z, const Factorization& zp) { return rigid_alignment(z, zp).cost; }

namespace {

int oracle_rec(const Factorization& z, std::size_t i, const Factorization& zp, std::size_t j) {
  const int rest_z = static_cast<int>(z.size() - i);
  const int rest_zp = static_cast<int>(zp.size() - j);
  int best = gap(rest_z, rest_zp);
  for (std::size_t p = 0; i + p < z.size(); ++p) {
    for (std::size_t q = 0; j + q < zp.size(); ++q) {
      const int g = gap(static_cast<int>(p), static_cast<int>(q));
      if (g >= best) continue;
      for (std::size_t len = 1; i + p + len <= z.size() && j + q + len <= zp.size(); ++len) {
        if (z[i + p + len - 1] != zp[j + q + len - 1]) break;
        best = std::min(best, g + oracle_rec(z, i + p + len, zp, j + q + len));
      }
    }
  }
  return best;
}

}  // namespace

int rigid_distance_oracle(const Factorization& z, const Factorization& zp) {
  if (z.size() + zp.size() > 10) throw Error(ErrorKind::InstanceTooLarge, "oracle limited to combined length 10");
  return oracle_rec(z, 0, zp, 0);
}

int distance(SemigroupHandle& h, DistanceKind kind, const Factorization& z, const Factorization& zp) {
  switch (kind) {
    case DistanceKind::Length: return length_distance(z, zp);
    case DistanceKind::Permutable: return perm_distance(perm_class(h, z), perm_class(h, zp));
    case DistanceKind::Rigid: return rigid_distance(z, zp);
  }
  return 0;
}

AxiomReport verify_axioms(DistanceKind kind, SemigroupHandle& h, const std::vector<ElemId>& elements,
                          const std::vector<ElemId>& atoms, std::mt19937_64& rng, std::size_t translations_per_pair) {
  AxiomReport rep;
  auto fail = [&](const std::string& axiom, const Factorization& a, const Factorization& b) {
    if (!rep.ok) return;
    rep.ok = false;
    rep.violation = axiom + " fails for " + show_factorization(h, a) + " and " + show_factorization(h, b);
  };
  auto random_seq = [&](std::size_t max_len) {
    Factorization s;
    if (atoms.empty()) return s;
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
    for (std::size_t n = len_dist(rng); n > 0; --n) s.push_back(atoms[pick(rng)]);
    return s;
  };
  for (ElemId a : elements) {
    const std::vector<Factorization> zs = rigid_factorizations(h, a).items;
    const std::size_t n = std::min<std::size_t>(zs.size(), 40);
    for (std::size_t i = 0; i < n && rep.ok; ++i) {
      const Factorization& z = zs[i];
      if (distance(h, kind, z, z) != 0) fail("(D1)", z, z);
      for (std::size_t j = 0; j < n && rep.ok; ++j) {
        const Factorization& zp = zs[j];
        const int d = distance(h, kind, z, zp);
        ++rep.pairs;
        if (d != distance(h, kind, zp, z)) fail("(D2)", z, zp);
        const int lo = length_distance(z, zp);
        const int hi = std::max({static_cast<int>(z.size()), static_cast<int>(zp.size()), 1});
        if (d < lo || d > hi) fail("(D5)", z, zp);
        for (std::size_t k = 0; k < n && rep.ok; ++k) {
          ++rep.triples;
          if (d > distance(h, kind, z, zs[k]) + distance(h, kind, zs[k], zp)) fail("(D3)", z, zp);
        }
        for (std::size_t t = 0; t < translations_per_pair && rep.ok; ++t) {
          Factorization x = random_seq(3), y = random_seq(3);
          Factorization l = x, r = x;
          l.insert(l.end(), z.begin(), z.end());
          l.insert(l.end(), y.begin(), y.end());
          r.insert(r.end(), zp.begin(), zp.end());
          r.insert(r.end(), y.begin(), y.end());
          ++rep.translations;
          if (distance(h, kind, l, r) != d) fail("(D4)", l, r);
        }
      }
    }
    if (!rep.ok) break;
  }
  return rep;
}

}  // namespace factorum
