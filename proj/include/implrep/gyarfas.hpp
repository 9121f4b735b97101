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

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "implrep/graph.hpp"

namespace implrep {

struct Bag {
  int id = 0;
  int depth = 0;
  int parent = -1;                // -1 for the root bag
  std::optional<VertexId> hook;   // vertex of the parent bag; none for the root
  std::vector<VertexId> vertices; // sorted combined ids
};

// Rooted tree of bags over one connected component of the owner graph.
// Bag 0 is the root. Trees produced by gyarfas_decompose have bags numbered in
// breadth-first order; hand-built trees (for checking the verifier) may be
// arbitrary and are only required to have in-range vertex ids and parents.
class GyarfasTree {
 public:
  // domain = the vertex set the tree is meant to cover; empty means all of
  // the owner's vertices. Throws PreconditionError for malformed bag records.
  GyarfasTree(std::shared_ptr<const BipartiteGraph> owner, std::vector<Bag> bags,
              std::vector<VertexId> domain = {});

  const BipartiteGraph& owner() const { return *owner_; }
  const std::shared_ptr<const BipartiteGraph>& owner_ptr() const { return owner_; }
  const std::vector<VertexId>& domain() const { return domain_; }

  int bag_count() const { return static_cast<int>(bags_.size()); }
  const std::vector<Bag>& bags() const { return bags_; }
  const Bag& bag(int id) const { return bags_[id]; }
  const std::vector<int>& children(int id) const { return children_[id]; }

  // Bag holding v, or -1 when v is not covered.
  int bag_of(VertexId v) const { return bag_of_[v]; }
  int depth_of(VertexId v) const { return bags_[bag_of_[v]].depth; }
  VertexId root_vertex() const { return bags_[0].vertices.front(); }

  // Strict ancestor test; follows parent links.
  bool is_ancestor(int ancestor, int bag) const;
  // Parent, grandparent, ..., root.
  std::vector<int> ancestors(int bag) const;
  // Vertices of the bag and all of its descendants.
  std::vector<VertexId> subtree_vertices(int bag) const;

 private:
  std::shared_ptr<const BipartiteGraph> owner_;
  std::vector<Bag> bags_;
  std::vector<VertexId> domain_;
  std::vector<std::vector<int>> children_;
  std::vector<int> bag_of_;
};

// Decomposition of a connected graph from the given root.
// Throws PreconditionError if g is disconnected or root is out of range.
GyarfasTree gyarfas_decompose(const BipartiteGraph& g, VertexId root);
GyarfasTree gyarfas_decompose(std::shared_ptr<const BipartiteGraph> g, VertexId root);

// Decomposition of the component containing root; other components are left
// uncovered.
GyarfasTree decompose_component(std::shared_ptr<const BipartiteGraph> g, VertexId root);

// Root choice used throughout: the smallest left vertex of the component, or
// its smallest vertex if it has no left vertex.
VertexId default_root(const BipartiteGraph& g, std::span<const VertexId> component);

// One tree per component (in canonical component order).
std::vector<GyarfasTree> gyarfas_forest(const BipartiteGraph& g);

struct Violation {
  // 0: tree structure (root, parents, depths); 1: partition; 2: singleton
  // root; 3: edges between ancestor and descendant bags; 4: bag plus
  // descendants connected; 5: hook adjacent to the bag and to none of its
  // strict descendants; 6: each bag on one side, sides alternating with depth.
  int clause = 0;
  std::string detail;
};

struct DecompositionReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool violates(int clause) const;
  std::string to_string() const;
};

DecompositionReport verify_decomposition(const GyarfasTree& t);

// Number of strict ancestors of `bag` (excluding the parent unless
// include_parent) with an edge into `bag`, and which they are.
struct BackDegree {
  int count = 0;
  std::vector<int> ancestors;
};

BackDegree back_degree(const GyarfasTree& t, int bag, bool include_parent);
int max_back_degree(const GyarfasTree& t, bool include_parent);

// G_B: the bag plus those descendants whose depth parity differs from its own.
SubBipartite parity_subgraph(const GyarfasTree& t, int bag);

// v, hook(bag(v)), hook(parent), ..., root vertex.
std::vector<VertexId> hook_path(const GyarfasTree& t, VertexId v);

bool is_induced_path(const BipartiteGraph& g, std::span<const VertexId> path);

// Lines "bag <id> <depth> <parent|-1> <hook|-1> : <vertices>", vertices as
// L<i> / R<j>. A non-negative component index prefixes ids with "<k>.".
std::string dump(const GyarfasTree& t, int component = -1);
std::string vertex_token(const BipartiteGraph& g, VertexId v);

}  // namespace implrep
