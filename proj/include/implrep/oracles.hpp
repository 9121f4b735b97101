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

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "implrep/graph.hpp"

namespace implrep {

// Ground-truth brute-force oracles for the structural quantities the protocols
// rely on. All of them are exponential or polynomial of high degree and are
// meant for desk-scale instances.

// a_1..a_k, b_1..b_k with a_i ~ b_j and b_i !~ a_j for every i < j.
// For bipartite graphs a is drawn from the left side and b from the right side
// (the chain pattern of the bipartite adjacency matrix); ids are combined ids.
struct ChainWitness {
  std::vector<VertexId> a;
  std::vector<VertexId> b;
  int size() const { return static_cast<int>(a.size()); }
};

struct ChainIndex {
  int k = 0;
  ChainWitness witness;
};

inline constexpr int kDefaultChainCap = 8;

// Returns min(ch(G), cap). Exact search with bitset pruning.
ChainIndex chain_index(const BipartiteGraph& g, int cap = kDefaultChainCap);
ChainIndex chain_index(const Graph& g, int cap = kDefaultChainCap);

bool is_chain_witness(const BipartiteGraph& g, const ChainWitness& w);
bool is_chain_witness(const Graph& g, const ChainWitness& w);

inline constexpr int kMaxPatternVertices = 12;

// embedding[p] = host vertex of pattern vertex p. For bipartite graphs the
// embedding maps sides to sides, possibly with the two sides swapped.
using Embedding = std::vector<int>;

// Throws CapacityError if the pattern has more than kMaxPatternVertices.
std::optional<Embedding> contains_induced(const BipartiteGraph& host, const BipartiteGraph& pattern);
std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern);

using Edge = std::pair<VertexId, VertexId>;

// paths[i] is a path containing the two edges other than edges[i] and avoiding
// the neighbourhoods of both endpoints of edges[i].
struct EatWitness {
  std::array<Edge, 3> edges;
  std::array<std::vector<VertexId>, 3> paths;
};

struct EatOptions {
  // Avoid N(u) ∪ N(v) instead of N[u] ∪ N[v]. For an edge uv both sets are
  // equal; the flag exists so the two readings can be compared.
  bool open_neighbourhoods = false;
};

std::optional<EatWitness> has_edge_asteroid_triple(const BipartiteGraph& g, EatOptions options = {});
bool is_eat_witness(const BipartiteGraph& g, const EatWitness& w, EatOptions options = {});

// Min-degree peeling, ties broken by smallest id. value = max residual degree
// of a removed vertex.
struct Degeneracy {
  int value = 0;
  std::vector<int> order;
};

Degeneracy degeneracy(const Graph& g);
Degeneracy degeneracy(const BipartiteGraph& g);

// Per-side indices of one complete bipartite component.
struct Biclique {
  std::vector<int> left;
  std::vector<int> right;
};

// The biclique partition (components ordered by smallest combined id) iff every
// connected component is complete bipartite. Isolated vertices are singletons.
std::optional<std::vector<Biclique>> is_equivalence_graph(const BipartiteGraph& g);

}  // namespace implrep
