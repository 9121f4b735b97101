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

#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace implrep {

// Vertices of a BipartiteGraph are addressed either per side (0-based index on
// that side) or by a combined id: left i -> i, right j -> n_left + j.
using VertexId = int;
using Bits = boost::dynamic_bitset<std::uint64_t>;

enum class Side : std::uint8_t { Left = 0, Right = 1 };

constexpr Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

// G = (X, Y, E) with a fixed bipartition. Immutable after construction; edges
// are kept sorted by (left, right).
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  // Throws PreconditionError on out-of-range endpoints or duplicate edges.
  BipartiteGraph(int n_left, int n_right, std::vector<std::pair<int, int>> edges);

  int n_left() const { return n_left_; }
  int n_right() const { return n_right_; }
  int vertex_count() const { return n_left_ + n_right_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  VertexId left_id(int i) const { return i; }
  VertexId right_id(int j) const { return n_left_ + j; }
  Side side(VertexId v) const { return v < n_left_ ? Side::Left : Side::Right; }
  int index(VertexId v) const { return v < n_left_ ? v : v - n_left_; }

  bool has_edge(int left, int right) const { return bits_[left].test(n_left_ + right); }
  bool adjacent(VertexId u, VertexId v) const { return bits_[u].test(v); }
  const std::vector<VertexId>& neighbours(VertexId v) const { return adj_[v]; }
  int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }
  const Bits& neighbour_bits(VertexId v) const { return bits_[v]; }

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.n_left_ == b.n_left_ && a.n_right_ == b.n_right_ && a.edges_ == b.edges_;
  }

 private:
  int n_left_ = 0;
  int n_right_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<Bits> bits_;
};

// Simple undirected loop-free graph; edges stored as sorted (u < v) pairs.
class Graph {
 public:
  Graph() = default;
  // Throws PreconditionError on loops, out-of-range ids or duplicates
  // (u,v) and (v,u) count as the same edge.
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(int u, int v) const { return bits_[u].test(v); }
  const std::vector<int>& neighbours(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const Bits& neighbour_bits(int v) const { return bits_[v]; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<Bits> bits_;
};

// A bipartite graph carved out of a larger one. origin[v] is the id, in the
// parent graph, of local combined id v.
struct SubBipartite {
  BipartiteGraph graph;
  std::vector<VertexId> origin;
};

BipartiteGraph bipartite_complement(const BipartiteGraph& g);

// G[X, Y]: left side = X sorted ascending, right side = Y sorted ascending.
// Throws PreconditionError when X and Y overlap.
BipartiteGraph semi_induced(const Graph& g, std::span<const int> x, std::span<const int> y);

// Induced subgraph on a set of combined ids; sides are inherited and local ids
// keep the parent's relative order (left vertices first).
SubBipartite induced_subgraph(const BipartiteGraph& g, std::span<const VertexId> vertices);

// Canonical components: each sorted, list sorted by minimum vertex id.
std::vector<std::vector<VertexId>> connected_components(const BipartiteGraph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_connected(const BipartiteGraph& g);

// Forget the bipartition; vertex ids become the combined ids.
Graph as_graph(const BipartiteGraph& g);

}  // namespace implrep
