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

#include "implrep/oracles.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "implrep/errors.hpp"

namespace implrep {
namespace {

// Shared depth-first search for a chain. cand_a holds vertices that may still
// serve as the next a (non-adjacent to every earlier b), cand_b those that may
// serve as the next b (adjacent to every earlier a).
class ChainSearch {
 public:
  ChainSearch(const std::vector<Bits>& adjacency, int cap) : adj_(adjacency), cap_(cap) {}

  ChainIndex run(const Bits& cand_a, const Bits& cand_b) {
    if (cap_ > 0) recurse(cand_a, cand_b);
    return best_;
  }

 private:
  void recurse(const Bits& cand_a, const Bits& cand_b) {
    const int k = static_cast<int>(cur_.a.size());
    if (k > best_.k) {
      best_.k = k;
      best_.witness = cur_;
    }
    if (best_.k >= cap_) return;
    const auto room = std::min(cand_a.count(), cand_b.count());
    if (k + static_cast<int>(room) <= best_.k) return;
    // The pair (a_i, b_i) itself is unconstrained: b only has to be adjacent
    // to the earlier a's, which cand_b already guarantees.
    for (auto a = cand_a.find_first(); a != Bits::npos; a = cand_a.find_next(a)) {
      const Bits later_b = cand_b & adj_[a];
      for (auto b = cand_b.find_first(); b != Bits::npos; b = cand_b.find_next(b)) {
        if (a == b) continue;
        Bits na = cand_a - adj_[b];
        na.reset(a);
        na.reset(b);
        Bits nb = later_b;
        nb.reset(a);
        nb.reset(b);
        cur_.a.push_back(static_cast<VertexId>(a));
        cur_.b.push_back(static_cast<VertexId>(b));
        recurse(na, nb);
        cur_.a.pop_back();
        cur_.b.pop_back();
        if (best_.k >= cap_) return;
      }
    }
  }

  const std::vector<Bits>& adj_;
  int cap_;
  ChainIndex best_;
  ChainWitness cur_;
};

std::vector<Bits> adjacency_of(const BipartiteGraph& g) {
  std::vector<Bits> adj;
  adj.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) adj.push_back(g.neighbour_bits(v));
  return adj;
}

std::vector<Bits> adjacency_of(const Graph& g) {
  std::vector<Bits> adj;
  adj.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) adj.push_back(g.neighbour_bits(v));
  return adj;
}

template <class G>
bool check_chain(const G& g, const ChainWitness& w) {
  if (w.a.size() != w.b.size()) return false;
  std::vector<int> all(w.a.begin(), w.a.end());
  all.insert(all.end(), w.b.begin(), w.b.end());
  for (int v : all) {
    if (v < 0 || v >= g.vertex_count()) return false;
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
  const std::size_t k = w.a.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!g.adjacent(w.a[i], w.b[j])) return false;
      if (g.adjacent(w.b[i], w.a[j])) return false;
    }
  }
  return true;
}

// Graph given by adjacency bitsets and an optional 0/1 colouring (-1 = none).
struct Labelled {
  std::vector<Bits> adj;
  std::vector<int> colour;
  int size() const { return static_cast<int>(adj.size()); }
  int degree(int v) const { return static_cast<int>(adj[v].count()); }
};

Labelled labelled(const BipartiteGraph& g) {
  Labelled l{adjacency_of(g), {}};
  for (VertexId v = 0; v < g.vertex_count(); ++v) l.colour.push_back(g.side(v) == Side::Left ? 0 : 1);
  return l;
}

Labelled labelled(const Graph& g) {
  return Labelled{adjacency_of(g), std::vector<int>(g.vertex_count(), -1)};
}

class InducedSearch {
 public:
  InducedSearch(const Labelled& host, const Labelled& pattern) : host_(host), pat_(pattern) {
    order_pattern();
  }

  std::optional<Embedding> find(bool swap_colours) {
    swap_ = swap_colours;
    image_.assign(pat_.size(), -1);
    used_.assign(host_.size(), false);
    if (extend(0)) return image_;
    return std::nullopt;
  }

 private:
  // Connected-first order: each vertex after the first has as many already
  // placed neighbours as possible, so candidate lists stay short.
  void order_pattern() {
    const int n = pat_.size();
    std::vector<bool> placed(n, false);
    for (int step = 0; step < n; ++step) {
      int best = -1;
      int best_links = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (int u : order_) links += pat_.adj[v].test(u) ? 1 : 0;
        if (links > best_links || (links == best_links && pat_.degree(v) > pat_.degree(best))) {
          best = v;
          best_links = links;
        }
      }
      placed[best] = true;
      anchor_.push_back(-1);
      for (int u : order_) {
        if (pat_.adj[best].test(u)) {
          anchor_.back() = u;
          break;
        }
      }
      order_.push_back(best);
    }
  }

  bool colour_ok(int p, int h) const {
    if (pat_.colour[p] < 0) return true;
    return (pat_.colour[p] ^ (swap_ ? 1 : 0)) == host_.colour[h];
  }

  bool extend(std::size_t pos) {
    if (pos == order_.size()) return true;
    const int p = order_[pos];
    auto try_host = [&](int h) {
      if (used_[h] || !colour_ok(p, h) || host_.degree(h) < pat_.degree(p)) return false;
      for (std::size_t i = 0; i < pos; ++i) {
        const int q = order_[i];
        if (pat_.adj[p].test(q) != host_.adj[h].test(image_[q])) return false;
      }
      image_[p] = h;
      used_[h] = true;
      if (extend(pos + 1)) return true;
      used_[h] = false;
      image_[p] = -1;
      return false;
    };
    if (anchor_[pos] >= 0) {
      const Bits& cands = host_.adj[image_[anchor_[pos]]];
      for (auto h = cands.find_first(); h != Bits::npos; h = cands.find_next(h)) {
        if (try_host(static_cast<int>(h))) return true;
      }
    } else {
      for (int h = 0; h < host_.size(); ++h) {
        if (try_host(h)) return true;
      }
    }
    return false;
  }

  const Labelled& host_;
  const Labelled& pat_;
  std::vector<int> order_;
  std::vector<int> anchor_;
  bool swap_ = false;
  std::vector<int> image_;
  std::vector<bool> used_;
};

void check_pattern_size(int n) {
  if (n > kMaxPatternVertices) {
    throw CapacityError("pattern has " + std::to_string(n) + " vertices; the limit is " +
                        std::to_string(kMaxPatternVertices));
  }
}

Bits blocked_set(const BipartiteGraph& g, const Edge& e, EatOptions options) {
  Bits blocked = g.neighbour_bits(e.first) | g.neighbour_bits(e.second);
  if (!options.open_neighbourhoods) {
    blocked.set(e.first);
    blocked.set(e.second);
  }
  return blocked;
}

// Component label of every vertex of G - blocked (-1 for blocked vertices).
std::vector<int> components_avoiding(const BipartiteGraph& g, const Bits& blocked) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int next = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (blocked.test(s) || comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbours(v)) {
        if (!blocked.test(w) && comp[w] < 0) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

// Shortest path in G - blocked from {e.first, e.second} to {f.first, f.second},
// extended so it contains both edges.
std::vector<VertexId> path_through(const BipartiteGraph& g, const Bits& blocked, const Edge& e,
                                   const Edge& f) {
  const int n = g.vertex_count();
  std::vector<int> parent(n, -2);
  std::deque<VertexId> queue;
  for (VertexId s : {e.first, e.second}) {
    parent[s] = -1;
    queue.push_back(s);
  }
  VertexId hit = -1;
  while (!queue.empty() && hit < 0) {
    const VertexId v = queue.front();
    queue.pop_front();
    if (v == f.first || v == f.second) {
      hit = v;
      break;
    }
    for (VertexId w : g.neighbours(v)) {
      if (!blocked.test(w) && parent[w] == -2) {
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  if (hit < 0) return {};
  std::vector<VertexId> core;
  for (VertexId v = hit; v >= 0; v = parent[v]) core.push_back(v);
  std::reverse(core.begin(), core.end());
  // core runs from an endpoint of e to an endpoint of f; add the other ends.
  std::vector<VertexId> path;
  path.push_back(core.front() == e.first ? e.second : e.first);
  path.insert(path.end(), core.begin(), core.end());
  path.push_back(core.back() == f.first ? f.second : f.first);
  return path;
}

bool path_has_edge(const std::vector<VertexId>& path, const Edge& e) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if ((path[i] == e.first && path[i + 1] == e.second) || (path[i] == e.second && path[i + 1] == e.first)) {
      return true;
    }
  }
  return false;
}

template <class G>
Degeneracy peel(const G& g) {
  const int n = g.vertex_count();
  std::vector<int> residual(n);
  for (int v = 0; v < n; ++v) residual[v] = g.degree(v);
  std::vector<bool> removed(n, false);
  Degeneracy d;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (!removed[v] && (pick < 0 || residual[v] < residual[pick])) pick = v;
    }
    d.value = std::max(d.value, residual[pick]);
    d.order.push_back(pick);
    removed[pick] = true;
    for (int w : g.neighbours(pick)) {
      if (!removed[w]) --residual[w];
    }
  }
  return d;
}

}  // namespace

ChainIndex chain_index(const BipartiteGraph& g, int cap) {
  const auto adj = adjacency_of(g);
  Bits left(g.vertex_count());
  Bits right(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) (g.side(v) == Side::Left ? left : right).set(v);
  return ChainSearch(adj, cap).run(left, right);
}

ChainIndex chain_index(const Graph& g, int cap) {
  const auto adj = adjacency_of(g);
  Bits all(g.vertex_count());
  all.set();
  return ChainSearch(adj, cap).run(all, all);
}

bool is_chain_witness(const BipartiteGraph& g, const ChainWitness& w) {
  for (std::size_t i = 0; i < w.a.size() && i < w.b.size(); ++i) {
    if (w.a[i] < 0 || w.a[i] >= g.vertex_count() || w.b[i] < 0 || w.b[i] >= g.vertex_count()) return false;
    if (g.side(w.a[i]) != Side::Left || g.side(w.b[i]) != Side::Right) return false;
  }
  return check_chain(g, w);
}

bool is_chain_witness(const Graph& g, const ChainWitness& w) { return check_chain(g, w); }

std::optional<Embedding> contains_induced(const BipartiteGraph& host, const BipartiteGraph& pattern) {
  check_pattern_size(pattern.vertex_count());
  if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
  const Labelled h = labelled(host);
  const Labelled p = labelled(pattern);
  InducedSearch search(h, p);
  if (auto e = search.find(false)) return e;
  return search.find(true);
}

std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern) {
  check_pattern_size(pattern.vertex_count());
  if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
  const Labelled h = labelled(host);
  const Labelled p = labelled(pattern);
  return InducedSearch(h, p).find(false);
}

std::optional<EatWitness> has_edge_asteroid_triple(const BipartiteGraph& g, EatOptions options) {
  std::vector<Edge> edges;
  for (const auto& [l, r] : g.edges()) edges.emplace_back(g.left_id(l), g.right_id(r));
  const std::size_t m = edges.size();
  if (m < 3) return std::nullopt;

  // comp[f][e]: component of edge e in G - N(f), or -1 if e touches N(f).
  // Two unblocked edges lie on a common path avoiding N(f) iff they share a
  // component (join them through a spanning tree of that component).
  std::vector<Bits> blocked;
  std::vector<std::vector<int>> comp(m, std::vector<int>(m, -1));
  blocked.reserve(m);
  for (std::size_t f = 0; f < m; ++f) {
    blocked.push_back(blocked_set(g, edges[f], options));
    const auto label = components_avoiding(g, blocked[f]);
    for (std::size_t e = 0; e < m; ++e) {
      const int a = label[edges[e].first];
      if (a >= 0 && label[edges[e].second] >= 0) comp[f][e] = a;
    }
  }
  for (std::size_t e1 = 0; e1 < m; ++e1) {
    for (std::size_t e2 = e1 + 1; e2 < m; ++e2) {
      if (comp[e1][e2] < 0) continue;
      for (std::size_t e3 = e2 + 1; e3 < m; ++e3) {
        if (comp[e3][e1] < 0 || comp[e3][e1] != comp[e3][e2]) continue;
        if (comp[e2][e1] < 0 || comp[e2][e1] != comp[e2][e3]) continue;
        if (comp[e1][e2] != comp[e1][e3]) continue;
        EatWitness w;
        w.edges = {edges[e1], edges[e2], edges[e3]};
        const std::array<std::size_t, 3> ids = {e1, e2, e3};
        for (int i = 0; i < 3; ++i) {
          const std::size_t p = ids[(i + 1) % 3];
          const std::size_t q = ids[(i + 2) % 3];
          w.paths[i] = path_through(g, blocked[ids[i]], edges[std::min(p, q)], edges[std::max(p, q)]);
        }
        return w;
      }
    }
  }
  return std::nullopt;
}

bool is_eat_witness(const BipartiteGraph& g, const EatWitness& w, EatOptions options) {
  const int n = g.vertex_count();
  for (const Edge& e : w.edges) {
    if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n || !g.adjacent(e.first, e.second)) {
      return false;
    }
  }
  for (int i = 0; i < 3; ++i) {
    const auto& path = w.paths[i];
    if (path.empty()) return false;
    const Bits blocked = blocked_set(g, w.edges[i], options);
    for (std::size_t j = 0; j < path.size(); ++j) {
      if (path[j] < 0 || path[j] >= n || blocked.test(path[j])) return false;
      if (j + 1 < path.size() && !g.adjacent(path[j], path[j + 1])) return false;
    }
    std::vector<VertexId> sorted = path;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (!path_has_edge(path, w.edges[(i + 1) % 3]) || !path_has_edge(path, w.edges[(i + 2) % 3])) return false;
  }
  return true;
}

Degeneracy degeneracy(const Graph& g) { return peel(g); }

Degeneracy degeneracy(const BipartiteGraph& g) { return peel(g); }

std::optional<std::vector<Biclique>> is_equivalence_graph(const BipartiteGraph& g) {
  std::vector<Biclique> parts;
  for (const auto& comp : connected_components(g)) {
    Biclique b;
    for (VertexId v : comp) {
      (g.side(v) == Side::Left ? b.left : b.right).push_back(g.index(v));
    }
    for (int l : b.left) {
      if (g.degree(g.left_id(l)) != static_cast<int>(b.right.size())) return std::nullopt;
    }
    parts.push_back(std::move(b));
  }
  return parts;
}

}  // namespace implrep
