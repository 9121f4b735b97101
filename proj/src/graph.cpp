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

#include "implrep/graph.hpp"

#include "implrep/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace implrep {

BipartiteGraph::BipartiteGraph(int n_left, int n_right, std::vector<std::pair<int, int>> edges)
    : n_left_(n_left), n_right_(n_right), edges_(std::move(edges)) {
  if (n_left < 0 || n_right < 0) throw PreconditionError("negative side size");
  std::sort(edges_.begin(), edges_.end());
  const int n = n_left + n_right;
  adj_.assign(n, {});
  bits_.assign(n, Bits(n));
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto [l, r] = edges_[i];
    if (l < 0 || l >= n_left || r < 0 || r >= n_right) {
      throw PreconditionError("edge (" + std::to_string(l) + "," + std::to_string(r) + ") out of range");
    }
    if (i > 0 && edges_[i - 1] == edges_[i]) {
      throw PreconditionError("duplicate edge (" + std::to_string(l) + "," + std::to_string(r) + ")");
    }
    const VertexId u = l;
    const VertexId v = n_left + r;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    bits_[u].set(v);
    bits_[v].set(u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw PreconditionError("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    if (u == v) throw PreconditionError("self-loop at " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw PreconditionError("duplicate edge (" + std::to_string(dup->first) + "," +
                            std::to_string(dup->second) + ")");
  }
  edges_ = std::move(edges);
  adj_.assign(n, {});
  bits_.assign(n, Bits(n));
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    bits_[u].set(v);
    bits_[v].set(u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

BipartiteGraph bipartite_complement(const BipartiteGraph& g) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(g.n_left()) * g.n_right() - g.edge_count());
  for (int l = 0; l < g.n_left(); ++l) {
    for (int r = 0; r < g.n_right(); ++r) {
      if (!g.has_edge(l, r)) edges.emplace_back(l, r);
    }
  }
  return BipartiteGraph(g.n_left(), g.n_right(), std::move(edges));
}

BipartiteGraph semi_induced(const Graph& g, std::span<const int> x, std::span<const int> y) {
  std::vector<int> xs(x.begin(), x.end());
  std::vector<int> ys(y.begin(), y.end());
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  for (int v : xs) {
    if (v < 0 || v >= g.vertex_count()) throw PreconditionError("vertex out of range");
  }
  for (int v : ys) {
    if (v < 0 || v >= g.vertex_count()) throw PreconditionError("vertex out of range");
  }
  std::vector<int> common;
  std::set_intersection(xs.begin(), xs.end(), ys.begin(), ys.end(), std::back_inserter(common));
  if (!common.empty()) throw PreconditionError("X and Y overlap at vertex " + std::to_string(common[0]));
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (g.adjacent(xs[i], ys[j])) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return BipartiteGraph(static_cast<int>(xs.size()), static_cast<int>(ys.size()), std::move(edges));
}

SubBipartite induced_subgraph(const BipartiteGraph& g, std::span<const VertexId> vertices) {
  std::vector<VertexId> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> local(g.vertex_count(), -1);
  int n_left = 0;
  for (VertexId v : sorted) {
    if (v < 0 || v >= g.vertex_count()) throw PreconditionError("vertex out of range");
    if (g.side(v) == Side::Left) local[v] = n_left++;
  }
  int n_right = 0;
  for (VertexId v : sorted) {
    if (g.side(v) == Side::Right) local[v] = n_right++;
  }
  std::vector<std::pair<int, int>> edges;
  for (VertexId v : sorted) {
    if (g.side(v) != Side::Left) continue;
    for (VertexId w : g.neighbours(v)) {
      if (local[w] >= 0) edges.emplace_back(local[v], local[w]);
    }
  }
  SubBipartite out{BipartiteGraph(n_left, n_right, std::move(edges)), {}};
  out.origin.assign(n_left + n_right, -1);
  for (VertexId v : sorted) {
    const int id = g.side(v) == Side::Left ? local[v] : n_left + local[v];
    out.origin[id] = v;
  }
  return out;
}

namespace {

template <class G>
std::vector<std::vector<int>> components_of(const G& g) {
  const int n = g.vertex_count();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.neighbours(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  // Seeds are scanned in increasing order, so the list is already sorted by minimum.
  return out;
}

}  // namespace

std::vector<std::vector<VertexId>> connected_components(const BipartiteGraph& g) { return components_of(g); }

std::vector<std::vector<int>> connected_components(const Graph& g) { return components_of(g); }

bool is_connected(const BipartiteGraph& g) { return connected_components(g).size() <= 1; }

Graph as_graph(const BipartiteGraph& g) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edge_count());
  for (auto [l, r] : g.edges()) edges.emplace_back(g.left_id(l), g.right_id(r));
  return Graph(g.vertex_count(), std::move(edges));
}

}  // namespace implrep
