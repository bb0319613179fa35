#include "factorum/catenary.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include "factorum/factorizations.hpp"

namespace factorum {

const char* to_string(Variant v) {
  switch (v) {
    case Variant::Plain: return "plain";
    case Variant::Equal: return "equal";
    case Variant::Adjacent: return "adjacent";
    case Variant::Monotone: return "monotone";
    case Variant::InFibers: return "in_fibers";
  }
  return "plain";
}

Variant parse_variant(const std::string& s) {
  if (s == "plain") return Variant::Plain;
  if (s == "equal" || s == "eq") return Variant::Equal;
  if (s == "adjacent" || s == "adj") return Variant::Adjacent;
  if (s == "monotone" || s == "mon") return Variant::Monotone;
  if (s == "in_fibers" || s == "fibers") return Variant::InFibers;
  throw Error(ErrorKind::InvalidArgument, "unknown catenary variant '" + s + "'");
}

Bottleneck bottleneck(int n, const std::function<int(int, int)>& weight) {
  Bottleneck out;
  if (n <= 1) {
    if (n == 1) out.path = {0};
    return out;
  }
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> best(static_cast<std::size_t>(n), kInf), parent(static_cast<std::size_t>(n), -1);
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  best[0] = 0;
  out.value = -1;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int i = 0; i < n; ++i) {
      if (!in[static_cast<std::size_t>(i)] && (pick < 0 || best[static_cast<std::size_t>(i)] < best[static_cast<std::size_t>(pick)])) pick = i;
    }
    in[static_cast<std::size_t>(pick)] = 1;
    if (parent[static_cast<std::size_t>(pick)] >= 0 && best[static_cast<std::size_t>(pick)] > out.value) {
      out.value = best[static_cast<std::size_t>(pick)];
      out.u = parent[static_cast<std::size_t>(pick)];
      out.v = pick;
    }
    for (int i = 0; i < n; ++i) {
      if (in[static_cast<std::size_t>(i)]) continue;
      int w = weight(pick, i);
      if (w < best[static_cast<std::size_t>(i)]) {
        best[static_cast<std::size_t>(i)] = w;
        parent[static_cast<std::size_t>(i)] = pick;
      }
    }
  }
  if (out.value < 0) out.value = 0;
  // Path between u and v in the tree: walk both to the root.
  auto to_root = [&](int x) {
    std::vector<int> p{x};
    while (parent[static_cast<std::size_t>(p.back())] >= 0) p.push_back(parent[static_cast<std::size_t>(p.back())]);
    return p;
  };
  std::vector<int> pu = to_root(out.u), pv = to_root(out.v);
  while (pu.size() > 1 && pv.size() > 1 && pu[pu.size() - 2] == pv[pv.size() - 2]) {
    pu.pop_back();
    pv.pop_back();
  }
  if (pu.back() == pv.back()) pv.pop_back();
  out.path = pu;
  out.path.insert(out.path.end(), pv.rbegin(), pv.rend());
  return out;
}

namespace {

// Factorizations that chains range over.
const FactorizationSet& nodes(SemigroupHandle& h, ElemId a, DistanceKind kind) {
  if (h.is_commutative() && kind != DistanceKind::Rigid) return permutable_representatives(h, a);
  return rigid_factorizations(h, a);
}

struct Graph {
  std::vector<Factorization> zs;
  std::vector<PermFactorization> classes;
  std::vector<std::vector<int>> d;

  Graph(SemigroupHandle& h, const std::vector<Factorization>& items, DistanceKind kind) : zs(items) {
    const std::size_t n = zs.size();
    if (kind == DistanceKind::Permutable) {
      for (const Factorization& z : zs) classes.push_back(perm_class(h, z));
    }
    d.assign(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        int v = 0;
        switch (kind) {
          case DistanceKind::Length: v = length_distance(zs[i], zs[j]); break;
          case DistanceKind::Permutable: v = perm_distance(classes[i], classes[j]); break;
          case DistanceKind::Rigid: v = rigid_distance(zs[i], zs[j]); break;
        }
        d[i][j] = d[j][i] = v;
      }
    }
  }
};

CatenaryReport base_report(SemigroupHandle& h, ElemId a, DistanceKind kind, Variant v, const FactorizationSet& fs) {
  CatenaryReport r;
  r.kind = kind;
  r.variant = v;
  r.element = a;
  r.factorizations = fs.items.size();
  r.cert = fs.complete && h.certified(a) ? Cert::Exact : Cert::LowerBound;
  if (fs.items.empty()) r.cert = Cert::Unknown;
  return r;
}

// Bottleneck within a subset of nodes; updates the report if larger.
void bottleneck_on(const Graph& g, const std::vector<int>& subset, CatenaryReport& r) {
  if (subset.size() < 2) return;
  Bottleneck b = bottleneck(static_cast<int>(subset.size()), [&](int i, int j) {
    return g.d[static_cast<std::size_t>(subset[static_cast<std::size_t>(i)])][static_cast<std::size_t>(subset[static_cast<std::size_t>(j)])];
  });
  if (b.value > r.value || (r.chain.empty() && b.value == r.value)) {
    r.value = b.value;
    r.chain.clear();
    for (int i : b.path) r.chain.push_back(g.zs[static_cast<std::size_t>(subset[static_cast<std::size_t>(i)])]);
    r.blocking = std::make_pair(g.zs[static_cast<std::size_t>(subset[static_cast<std::size_t>(b.u)])],
                                g.zs[static_cast<std::size_t>(subset[static_cast<std::size_t>(b.v)])]);
  }
}

std::vector<int> all_indices(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i);
  return v;
}

}  // namespace

CatenaryReport catenary(SemigroupHandle& h, ElemId a, DistanceKind kind) {
  const FactorizationSet& fs = nodes(h, a, kind);
  CatenaryReport r = base_report(h, a, kind, Variant::Plain, fs);
  Graph g(h, fs.items, kind);
  bottleneck_on(g, all_indices(g.zs.size()), r);
  return r;
}

CatenaryReport equal_catenary(SemigroupHandle& h, ElemId a, DistanceKind kind) {
  const FactorizationSet& fs = nodes(h, a, kind);
  CatenaryReport r = base_report(h, a, kind, Variant::Equal, fs);
  Graph g(h, fs.items, kind);
  std::map<std::size_t, std::vector<int>> by_len;
  for (std::size_t i = 0; i < g.zs.size(); ++i) by_len[g.zs[i].size()].push_back(static_cast<int>(i));
  for (const auto& [len, idx] : by_len) bottleneck_on(g, idx, r);
  return r;
}

CatenaryReport adjacent_catenary(SemigroupHandle& h, ElemId a, DistanceKind kind) {
  const FactorizationSet& fs = nodes(h, a, kind);
  CatenaryReport r = base_report(h, a, kind, Variant::Adjacent, fs);
  Graph g(h, fs.items, kind);
  std::map<std::size_t, std::vector<int>> by_len;
  for (std::size_t i = 0; i < g.zs.size(); ++i) by_len[g.zs[i].size()].push_back(static_cast<int>(i));
  for (auto it = by_len.begin(); it != by_len.end() && std::next(it) != by_len.end(); ++it) {
    const auto& lo = it->second;
    const auto& hi = std::next(it)->second;
    int best = std::numeric_limits<int>::max();
    std::pair<int, int> arg{0, 0};
    for (int i : lo) {
      for (int j : hi) {
        int v = g.d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (v < best) {
          best = v;
          arg = {i, j};
        }
      }
    }
    if (best > r.value || r.chain.empty()) {
      r.value = std::max(r.value, best);
      r.chain = {g.zs[static_cast<std::size_t>(arg.first)], g.zs[static_cast<std::size_t>(arg.second)]};
      r.blocking = std::make_pair(r.chain[0], r.chain[1]);
    }
  }
  return r;
}

CatenaryReport monotone_catenary(SemigroupHandle& h, ElemId a, DistanceKind kind) {
  CatenaryReport eq = equal_catenary(h, a, kind);
  CatenaryReport adj = adjacent_catenary(h, a, kind);
  CatenaryReport r = adj.value > eq.value ? adj : eq;
  r.variant = Variant::Monotone;
  return r;
}

CatenaryReport catenary_variant(SemigroupHandle& h, ElemId a, DistanceKind kind, Variant v) {
  switch (v) {
    case Variant::Plain: return catenary(h, a, kind);
    case Variant::Equal: return equal_catenary(h, a, kind);
    case Variant::Adjacent: return adjacent_catenary(h, a, kind);
    case Variant::Monotone: return monotone_catenary(h, a, kind);
    case Variant::InFibers:
      return catenary_in_fibers(h, a, kind, [&](ElemId u) { return h.atom_class(u); });
  }
  return catenary(h, a, kind);
}

int monotone_catenary_direct(SemigroupHandle& h, ElemId a, DistanceKind kind) {
  const FactorizationSet& fs = nodes(h, a, kind);
  if (fs.items.size() > 12) throw Error(ErrorKind::InstanceTooLarge, "direct monotone search limited to 12 factorizations");
  Graph g(h, fs.items, kind);
  const std::size_t n = g.zs.size();
  int max_d = 0;
  for (const auto& row : g.d) for (int v : row) max_d = std::max(max_d, v);
  // A monotone chain from s to t (|s| <= |t|) uses non-decreasing lengths,
  // so every step stays within [|s|, |t|].
  auto reachable = [&](std::size_t s, std::size_t t, int bound) {
    std::vector<char> seen(n, 0);
    std::deque<std::size_t> q{s};
    seen[s] = 1;
    while (!q.empty()) {
      std::size_t x = q.front();
      q.pop_front();
      if (x == t) return true;
      for (std::size_t y = 0; y < n; ++y) {
        if (seen[y] || g.zs[y].size() < g.zs[x].size() || g.zs[y].size() > g.zs[t].size() || g.d[x][y] > bound) continue;
        seen[y] = 1;
        q.push_back(y);
      }
    }
    return false;
  };
  auto connected = [&](int bound) {
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = 0; t < n; ++t) {
        if (g.zs[s].size() <= g.zs[t].size() && !reachable(s, t, bound)) return false;
      }
    }
    return true;
  };
  for (int bound = 0; bound <= max_d; ++bound) {
    if (connected(bound)) return bound;
  }
  return max_d;
}

CatenaryReport catenary_in_fibers(SemigroupHandle& h, ElemId a, DistanceKind kind, const AtomImage& phi) {
  const FactorizationSet& fs = nodes(h, a, kind);
  CatenaryReport r = base_report(h, a, kind, Variant::InFibers, fs);
  Graph g(h, fs.items, kind);
  std::map<std::vector<std::uint64_t>, std::vector<int>> fibers;
  for (std::size_t i = 0; i < g.zs.size(); ++i) {
    std::vector<std::uint64_t> img;
    for (ElemId u : g.zs[i]) img.push_back(phi(u));
    std::sort(img.begin(), img.end());
    fibers[img].push_back(static_cast<int>(i));
  }
  for (const auto& [img, idx] : fibers) bottleneck_on(g, idx, r);
  return r;
}

CatenaryReport semigroup_catenary(SemigroupHandle& h, const std::vector<ElemId>& elements, DistanceKind kind,
                                  Variant v, const AtomImage& phi) {
  CatenaryReport best;
  best.kind = kind;
  best.variant = v;
  best.cert = Cert::LowerBound;
  bool first = true;
  for (ElemId a : elements) {
    if (h.is_unit(a)) continue;
    CatenaryReport r = (v == Variant::InFibers && phi) ? catenary_in_fibers(h, a, kind, phi) : catenary_variant(h, a, kind, v);
    if (first || r.value > best.value) {
      best.value = r.value;
      best.element = r.element;
      best.chain = r.chain;
      best.blocking = r.blocking;
      best.factorizations = r.factorizations;
      first = false;
    }
  }
  return best;
}

}  // namespace factorum
