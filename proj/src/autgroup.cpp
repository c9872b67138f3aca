#include "eigenpoly/autgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace eigenpoly {

namespace {

// Initial vertex invariant: degree + sorted distance profile, then refined
// to an equitable partition by neighbor-color counts (1-dim WL).
std::vector<int> equitable_colors(const Graph& g, const DistanceMatrix& dm) {
  const int n = g.n();
  std::vector<int> color(n, 0);
  {
    std::map<std::pair<int, std::vector<int>>, std::vector<int>> cells;
    for (int i = 0; i < n; ++i) {
      std::vector<int> profile = dm.dist[i];
      std::sort(profile.begin(), profile.end());
      cells[{g.degree(i), std::move(profile)}].push_back(i);
    }
    int c = 0;
    for (auto& [key, members] : cells) {
      for (int v : members) color[v] = c;
      ++c;
    }
  }
  for (;;) {
    std::map<std::pair<int, std::vector<int>>, std::vector<int>> cells;
    for (int i = 0; i < n; ++i) {
      std::vector<int> sig;
      sig.reserve(g.degree(i));
      for (int j : g.neighbors(i)) sig.push_back(color[j]);
      std::sort(sig.begin(), sig.end());
      cells[{color[i], std::move(sig)}].push_back(i);
    }
    if (static_cast<int>(cells.size()) == *std::max_element(color.begin(), color.end()) + 1) {
      bool stable = true;
      int c = 0;
      std::vector<int> next(n);
      for (auto& [key, members] : cells) {
        for (int v : members) next[v] = c;
        ++c;
      }
      for (int i = 0; i < n && stable; ++i) stable = next[i] == color[i];
      color = next;
      if (stable) return color;
    } else {
      int c = 0;
      for (auto& [key, members] : cells) {
        for (int v : members) color[v] = c;
        ++c;
      }
    }
  }
}

struct Searcher {
  const Graph& g;
  const std::vector<std::vector<int>>& dist;
  std::vector<int> color;
  int n;

  std::vector<int> image;      // partial map, -1 = unassigned
  std::vector<char> used;      // image used flags

  Searcher(const Graph& g_, const DistanceMatrix& dm, std::vector<int> col)
      : g(g_), dist(dm.dist), color(std::move(col)), n(g_.n()) {}

  bool consistent(int v, int w) const {
    if (color[v] != color[w]) return false;
    for (int x = 0; x < n; ++x) {
      if (image[x] >= 0 && dist[v][x] != dist[w][image[x]]) return false;
    }
    return true;
  }

  // Next vertex to branch on: most mapped neighbors, smallest index tiebreak.
  int pick() const {
    int best = -1, best_score = -1;
    for (int v = 0; v < n; ++v) {
      if (image[v] >= 0) continue;
      int score = 0;
      for (int u : g.neighbors(v))
        if (image[u] >= 0) ++score;
      if (score > best_score) {
        best = v;
        best_score = score;
      }
    }
    return best;
  }

  bool extend() {
    int v = pick();
    if (v < 0) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || !consistent(v, w)) continue;
      image[v] = w;
      used[w] = 1;
      if (extend()) return true;
      image[v] = -1;
      used[w] = 0;
    }
    return false;
  }

  // An automorphism with image[prefix] pinned as given, or empty.
  std::vector<int> find(const std::vector<std::pair<int, int>>& pinned) {
    image.assign(n, -1);
    used.assign(n, 0);
    for (auto [v, w] : pinned) {
      if (image[v] >= 0 || used[w] || !consistent(v, w)) return {};
      image[v] = w;
      used[w] = 1;
    }
    if (!extend()) return {};
    return image;
  }
};

std::vector<int> orbit_of(int seed, const std::vector<std::vector<int>>& gens, int n) {
  std::vector<char> in(n, 0);
  std::vector<int> stack{seed}, orbit{seed};
  in[seed] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& p : gens) {
      if (!in[p[v]]) {
        in[p[v]] = 1;
        orbit.push_back(p[v]);
        stack.push_back(p[v]);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

}  // namespace

AutGroup automorphisms(const Graph& g, int search_bound) {
  const int n = g.n();
  if (n > search_bound)
    throw std::invalid_argument("automorphisms: graph exceeds search bound of " +
                                std::to_string(search_bound));
  AutGroup aut;
  aut.n = n;
  if (n == 0) return aut;

  DistanceMatrix dm = distances(g);
  Searcher s(g, dm, equitable_colors(g, dm));

  // Stabilizer chain along the base 0,1,...,n-1. At level b we collect
  // generators fixing 0..b-1 pointwise; the found orbit of b equals the
  // true orbit because every candidate image is tried by a complete search.
  std::vector<std::pair<int, int>> pinned;
  std::vector<std::vector<std::vector<int>>> level_gens(n);
  for (int b = 0; b < n; ++b) {
    std::vector<std::vector<int>> fixing;  // generators fixing 0..b-1
    for (int lvl = b; lvl < n; ++lvl)
      for (auto& p : level_gens[lvl]) fixing.push_back(p);

    // candidate images must share the refined color and the distance
    // profile over the pinned prefix
    auto feasible = [&](int u) {
      if (s.color[b] != s.color[u]) return false;
      for (int i = 0; i < b; ++i)
        if (dm.dist[b][i] != dm.dist[u][i]) return false;
      return true;
    };

    auto orbit = orbit_of(b, fixing, n);
    for (int u = 0; u < n; ++u) {
      if (u == b || std::binary_search(orbit.begin(), orbit.end(), u)) continue;
      if (!feasible(u)) continue;
      pinned.emplace_back(b, u);
      auto perm = s.find(pinned);
      pinned.pop_back();
      if (!perm.empty()) {
        level_gens[b].push_back(perm);
        fixing.push_back(std::move(perm));
        orbit = orbit_of(b, fixing, n);
      }
    }
    aut.order *= static_cast<std::uint64_t>(orbit.size());
    pinned.emplace_back(b, b);
  }
  for (auto& lvl : level_gens)
    for (auto& p : lvl) aut.generators.push_back(std::move(p));
  if (aut.generators.empty()) {
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    aut.generators.push_back(std::move(id));
  }
  return aut;
}

std::vector<std::vector<int>> closure(const AutGroup& aut, std::uint64_t cap) {
  const int n = aut.n;
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> queue{id};
  for (size_t head = 0; head < queue.size(); ++head) {
    auto cur = queue[head];
    for (const auto& gen : aut.generators) {
      std::vector<int> prod(n);
      for (int i = 0; i < n; ++i) prod[i] = gen[cur[i]];
      if (seen.insert(prod).second) {
        if (seen.size() > cap)
          throw std::runtime_error("closure: group order exceeds cap of " + std::to_string(cap));
        queue.push_back(std::move(prod));
      }
    }
  }
  return queue;
}

TransitivityProfile transitivity(const Graph& g, const AutGroup& aut) {
  const int n = g.n();
  TransitivityProfile t;
  if (n == 0) return t;

  // union-find over orbits of a generator action
  struct UF {
    std::vector<int> p;
    explicit UF(int k) : p(k) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
    int count() {
      int c = 0;
      for (size_t i = 0; i < p.size(); ++i)
        if (find(static_cast<int>(i)) == static_cast<int>(i)) ++c;
      return c;
    }
  };

  UF vuf(n);
  for (const auto& p : aut.generators)
    for (int v = 0; v < n; ++v) vuf.unite(v, p[v]);
  t.vertex_transitive = vuf.count() == 1;

  std::map<std::pair<int, int>, int> eid;
  for (auto e : g.edges()) eid[e] = static_cast<int>(eid.size());
  UF euf(static_cast<int>(eid.size()));
  UF auf(static_cast<int>(2 * eid.size()));
  for (const auto& p : aut.generators) {
    for (auto [i, j] : g.edges()) {
      int a = p[i], b = p[j];
      euf.unite(eid[{i, j}], eid[{std::min(a, b), std::max(a, b)}]);
      int arc = 2 * eid[{i, j}];
      int img = 2 * eid[{std::min(a, b), std::max(a, b)}] + (a < b ? 0 : 1);
      auf.unite(arc, img);
      auf.unite(arc + 1, img ^ 1);
    }
  }
  t.edge_transitive = !g.edges().empty() && euf.count() == 1;
  t.arc_transitive = !g.edges().empty() && auf.count() == 1;
  t.half_transitive = t.vertex_transitive && t.edge_transitive && !t.arc_transitive;

  DistanceMatrix dm = distances(g);
  t.connected = dm.connected;
  if (!dm.connected) {
    t.distance_transitive = false;
    t.reason = "disconnected graph";
    return t;
  }
  // one orbit on each D_delta of ordered pairs, delta = 1..diam
  t.orbit_counts.assign(dm.diameter, 0);
  bool all_single = t.vertex_transitive;
  for (int delta = 1; delta <= dm.diameter; ++delta) {
    std::map<std::pair<int, int>, int> pid;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (dm.dist[i][j] == delta) pid[{i, j}] = static_cast<int>(pid.size());
    UF puf(static_cast<int>(pid.size()));
    for (const auto& p : aut.generators)
      for (auto& [pr, id] : pid) puf.unite(id, pid[{p[pr.first], p[pr.second]}]);
    int c = pid.empty() ? 0 : puf.count();
    t.orbit_counts[delta - 1] = c;
    if (c != 1) all_single = false;
  }
  t.distance_transitive = all_single;
  if (!all_single && t.reason.empty()) t.reason = "multiple orbits on a distance class";
  return t;
}

}  // namespace eigenpoly
