// Copyright 2026 The implrep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Small exhaustive reference implementations used to cross-check the library.
// They favour obviousness over speed and are meant for graphs with at most a
// dozen or so vertices.

#pragma once

#include <algorithm>
#include <functional>
#include <queue>
#include <vector>

#include "implrep/graph.hpp"

namespace implrep::testing_support {

// Dense 0/1 adjacency over combined ids.
inline std::vector<std::vector<int>> dense(const BipartiteGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (auto [l, r] : g.edges()) {
    m[l][g.n_left() + r] = 1;
    m[g.n_left() + r][l] = 1;
  }
  return m;
}

inline std::vector<std::vector<int>> dense(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = 1;
  return m;
}

// Largest k with distinct a_1..a_k (from `a_pool`) and b_1..b_k (from
// `b_pool`) such that a_i ~ b_j and b_i !~ a_j whenever i < j.
inline int brute_chain(const std::vector<std::vector<int>>& adj, const std::vector<int>& a_pool,
                       const std::vector<int>& b_pool) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> as, bs;
  std::vector<char> used(n, 0);
  int best = 0;
  std::function<void()> extend = [&]() {
    best = std::max(best, static_cast<int>(as.size()));
    for (int a : a_pool) {
      if (used[a]) continue;
      for (int b : b_pool) {
        if (used[b] || b == a) continue;
        bool ok = true;
        for (std::size_t i = 0; i < as.size() && ok; ++i) {
          ok = adj[as[i]][b] == 1 && adj[bs[i]][a] == 0;
        }
        if (!ok) continue;
        used[a] = used[b] = 1;
        as.push_back(a);
        bs.push_back(b);
        extend();
        as.pop_back();
        bs.pop_back();
        used[a] = used[b] = 0;
      }
    }
  };
  extend();
  return best;
}

inline int brute_chain(const BipartiteGraph& g) {
  std::vector<int> left, right;
  for (int v = 0; v < g.vertex_count(); ++v) (g.side(v) == Side::Left ? left : right).push_back(v);
  return brute_chain(dense(g), left, right);
}

inline int brute_chain(const Graph& g) {
  std::vector<int> all(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
  return brute_chain(dense(g), all, all);
}

// Whether an edge-asteroid triple exists: three edges such that any two of
// them lie on a path avoiding the closed neighbourhoods of the third edge's
// endpoints.
inline bool brute_has_eat(const BipartiteGraph& g) {
  const auto adj = dense(g);
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (auto [l, r] : g.edges()) edges.emplace_back(l, g.n_left() + r);
  auto joined = [&](std::pair<int, int> e1, std::pair<int, int> e2, std::pair<int, int> avoid) {
    std::vector<char> allowed(n, 1);
    for (int v = 0; v < n; ++v) {
      if (v == avoid.first || v == avoid.second || adj[v][avoid.first] || adj[v][avoid.second]) {
        allowed[v] = 0;
      }
    }
    for (int v : {e1.first, e1.second, e2.first, e2.second}) {
      if (!allowed[v]) return false;
    }
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(e1.first);
    seen[e1.first] = 1;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w = 0; w < n; ++w) {
        if (adj[v][w] && allowed[w] && !seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
      }
    }
    return seen[e2.first] == 1;
  };
  const std::size_t m = edges.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        if (joined(edges[i], edges[j], edges[k]) && joined(edges[j], edges[k], edges[i]) &&
            joined(edges[i], edges[k], edges[j])) {
          return true;
        }
      }
    }
  }
  return false;
}

// max over non-empty vertex subsets of the minimum degree inside the subset.
inline int brute_degeneracy(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  int best = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int low = n;
    for (int v = 0; v < n; ++v) {
      if (!(mask >> v & 1u)) continue;
      int d = 0;
      for (int w = 0; w < n; ++w) d += (mask >> w & 1u) && adj[v][w];
      low = std::min(low, d);
    }
    best = std::max(best, low);
  }
  return best;
}

// Induced copy of `pattern` in `host` respecting sides, in either orientation.
inline bool brute_contains_induced(const BipartiteGraph& host, const BipartiteGraph& pattern) {
  const auto h = dense(host);
  const auto p = dense(pattern);
  const int hn = host.vertex_count();
  const int pn = pattern.vertex_count();
  for (int flip = 0; flip < 2; ++flip) {
    std::vector<int> image;
    std::vector<char> used(hn, 0);
    std::function<bool()> place = [&]() {
      const int i = static_cast<int>(image.size());
      if (i == pn) return true;
      for (int v = 0; v < hn; ++v) {
        if (used[v]) continue;
        const bool same = host.side(v) == pattern.side(i);
        if (same == (flip == 1)) continue;
        bool ok = true;
        for (int j = 0; j < i && ok; ++j) ok = h[v][image[j]] == p[i][j];
        if (!ok) continue;
        used[v] = 1;
        image.push_back(v);
        if (place()) return true;
        image.pop_back();
        used[v] = 0;
      }
      return false;
    };
    if (place()) return true;
  }
  return false;
}

// Every connected component is complete bipartite between its two sides.
inline bool brute_is_equivalence(const BipartiteGraph& g) {
  const auto comps = connected_components(g);
  for (const auto& c : comps) {
    for (int u : c) {
      for (int v : c) {
        if (g.side(u) == Side::Left && g.side(v) == Side::Right && !g.adjacent(u, v)) return false;
      }
    }
  }
  return true;
}

}  // namespace implrep::testing_support
