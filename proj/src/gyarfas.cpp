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

#include "implrep/gyarfas.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <utility>

#include "implrep/errors.hpp"

namespace implrep {
namespace {

// Components of the subgraph induced by `vertices` (canonically ordered).
std::vector<std::vector<VertexId>> components_within(const BipartiteGraph& g, const std::vector<VertexId>& vertices) {
  std::vector<char> inside(g.vertex_count(), 0);
  for (VertexId v : vertices) inside[v] = 1;
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> stack;
  for (VertexId s : vertices) {
    if (inside[s] != 1) continue;
    std::vector<VertexId> comp;
    inside[s] = 2;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (VertexId w : g.neighbours(v)) {
        if (inside[w] == 1) {
          inside[w] = 2;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

bool induces_connected(const BipartiteGraph& g, const std::vector<VertexId>& vertices) {
  if (vertices.empty()) return true;
  return components_within(g, vertices).size() == 1;
}

std::string bag_label(int id, int component) {
  if (id < 0) return "-1";
  if (component < 0) return std::to_string(id);
  return std::to_string(component) + "." + std::to_string(id);
}

}  // namespace

GyarfasTree::GyarfasTree(std::shared_ptr<const BipartiteGraph> owner, std::vector<Bag> bags,
                         std::vector<VertexId> domain)
    : owner_(std::move(owner)), bags_(std::move(bags)), domain_(std::move(domain)) {
  if (!owner_) throw PreconditionError("decomposition tree needs an owner graph");
  if (bags_.empty() || bags_[0].vertices.empty()) throw PreconditionError("decomposition tree needs a non-empty root bag");
  const int n = owner_->vertex_count();
  if (domain_.empty()) {
    for (VertexId v = 0; v < n; ++v) domain_.push_back(v);
  }
  std::sort(domain_.begin(), domain_.end());
  children_.assign(bags_.size(), {});
  bag_of_.assign(n, -1);
  for (std::size_t i = 0; i < bags_.size(); ++i) {
    Bag& b = bags_[i];
    if (b.id != static_cast<int>(i)) throw PreconditionError("bag ids must equal their positions");
    if (b.parent < -1 || b.parent >= static_cast<int>(bags_.size())) throw PreconditionError("bag parent out of range");
    if (b.hook && (*b.hook < 0 || *b.hook >= n)) throw PreconditionError("hook vertex out of range");
    std::sort(b.vertices.begin(), b.vertices.end());
    for (VertexId v : b.vertices) {
      if (v < 0 || v >= n) throw PreconditionError("bag vertex out of range");
      if (bag_of_[v] < 0) bag_of_[v] = static_cast<int>(i);
    }
    if (b.parent >= 0 && b.parent != static_cast<int>(i)) children_[b.parent].push_back(static_cast<int>(i));
  }
  for (VertexId v : domain_) {
    if (v < 0 || v >= n) throw PreconditionError("domain vertex out of range");
  }
}

bool GyarfasTree::is_ancestor(int ancestor, int bag) const {
  int cur = bags_[bag].parent;
  for (int steps = 0; cur >= 0 && steps <= bag_count(); ++steps) {
    if (cur == ancestor) return true;
    cur = bags_[cur].parent;
  }
  return false;
}

std::vector<int> GyarfasTree::ancestors(int bag) const {
  std::vector<int> out;
  int cur = bags_[bag].parent;
  while (cur >= 0 && static_cast<int>(out.size()) <= bag_count()) {
    out.push_back(cur);
    cur = bags_[cur].parent;
  }
  return out;
}

std::vector<VertexId> GyarfasTree::subtree_vertices(int bag) const {
  std::vector<VertexId> out;
  std::vector<int> stack = {bag};
  std::vector<char> seen(bags_.size(), 0);
  while (!stack.empty()) {
    const int b = stack.back();
    stack.pop_back();
    if (seen[b]) continue;
    seen[b] = 1;
    out.insert(out.end(), bags_[b].vertices.begin(), bags_[b].vertices.end());
    for (int c : children_[b]) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GyarfasTree decompose_component(std::shared_ptr<const BipartiteGraph> g, VertexId root) {
  if (!g) throw PreconditionError("decomposition needs a graph");
  if (root < 0 || root >= g->vertex_count()) throw PreconditionError("root vertex out of range");
  std::vector<VertexId> domain;
  for (const auto& comp : components_within(*g, [&] {
         std::vector<VertexId> all(g->vertex_count());
         for (VertexId v = 0; v < g->vertex_count(); ++v) all[v] = v;
         return all;
       }())) {
    if (std::binary_search(comp.begin(), comp.end(), root)) domain = comp;
  }

  std::vector<Bag> bags;
  bags.push_back(Bag{0, 0, -1, std::nullopt, {root}});
  struct Work {
    int bag;
    std::vector<VertexId> vertices;
  };
  std::deque<Work> queue;
  std::vector<VertexId> rest;
  for (VertexId v : domain) {
    if (v != root) rest.push_back(v);
  }
  for (auto& c : components_within(*g, rest)) queue.push_back({0, std::move(c)});

  while (!queue.empty()) {
    Work w = std::move(queue.front());
    queue.pop_front();
    const Bag parent = bags[w.bag];
    std::vector<char> in_c(g->vertex_count(), 0);
    for (VertexId v : w.vertices) in_c[v] = 1;
    VertexId hook = -1;
    for (VertexId h : parent.vertices) {
      const auto& nb = g->neighbours(h);
      if (std::any_of(nb.begin(), nb.end(), [&](VertexId x) { return in_c[x] != 0; })) {
        hook = h;
        break;
      }
    }
    Bag child;
    child.id = static_cast<int>(bags.size());
    child.depth = parent.depth + 1;
    child.parent = parent.id;
    child.hook = hook;
    for (VertexId x : g->neighbours(hook)) {
      if (in_c[x]) child.vertices.push_back(x);
    }
    std::sort(child.vertices.begin(), child.vertices.end());
    std::vector<VertexId> remaining;
    for (VertexId v : w.vertices) {
      if (!g->adjacent(hook, v)) remaining.push_back(v);
    }
    const int child_id = child.id;
    bags.push_back(std::move(child));
    for (auto& c : components_within(*g, remaining)) queue.push_back({child_id, std::move(c)});
  }
  return GyarfasTree(std::move(g), std::move(bags), std::move(domain));
}

GyarfasTree gyarfas_decompose(std::shared_ptr<const BipartiteGraph> g, VertexId root) {
  if (!g) throw PreconditionError("decomposition needs a graph");
  if (!is_connected(*g)) throw PreconditionError("graph is disconnected; decompose each component separately");
  return decompose_component(std::move(g), root);
}

GyarfasTree gyarfas_decompose(const BipartiteGraph& g, VertexId root) {
  return gyarfas_decompose(std::make_shared<const BipartiteGraph>(g), root);
}

VertexId default_root(const BipartiteGraph& g, std::span<const VertexId> component) {
  if (component.empty()) throw PreconditionError("empty component has no root");
  VertexId best = -1;
  for (VertexId v : component) {
    if (g.side(v) == Side::Left && (best < 0 || v < best)) best = v;
  }
  if (best >= 0) return best;
  return *std::min_element(component.begin(), component.end());
}

std::vector<GyarfasTree> gyarfas_forest(const BipartiteGraph& g) {
  auto owner = std::make_shared<const BipartiteGraph>(g);
  std::vector<GyarfasTree> trees;
  for (const auto& comp : connected_components(g)) trees.push_back(decompose_component(owner, default_root(g, comp)));
  return trees;
}

bool DecompositionReport::violates(int clause) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.clause == clause; });
}

std::string DecompositionReport::to_string() const {
  if (violations.empty()) return "ok\n";
  std::ostringstream out;
  for (const auto& v : violations) out << "clause " << v.clause << ": " << v.detail << "\n";
  return out.str();
}

DecompositionReport verify_decomposition(const GyarfasTree& t) {
  DecompositionReport report;
  auto fail = [&](int clause, std::string detail) { report.violations.push_back({clause, std::move(detail)}); };
  const BipartiteGraph& g = t.owner();
  const int nb = t.bag_count();

  // Structure: one root, depths follow parents, no cycles.
  bool structure_ok = true;
  for (int i = 0; i < nb; ++i) {
    const Bag& b = t.bag(i);
    if (i == 0) {
      if (b.parent != -1 || b.depth != 0) {
        fail(0, "bag 0 must be the root at depth 0");
        structure_ok = false;
      }
      continue;
    }
    if (b.parent < 0 || b.parent == i) {
      fail(0, "bag " + std::to_string(i) + " has no valid parent");
      structure_ok = false;
    } else if (b.depth != t.bag(b.parent).depth + 1) {
      fail(0, "bag " + std::to_string(i) + " depth is not parent depth + 1");
      structure_ok = false;
    }
  }
  if (!structure_ok) return report;

  // Clause 1: the bags partition the domain.
  std::vector<int> hits(g.vertex_count(), 0);
  for (const Bag& b : t.bags()) {
    if (b.vertices.empty()) fail(1, "bag " + std::to_string(b.id) + " is empty");
    for (VertexId v : b.vertices) ++hits[v];
  }
  std::vector<char> in_domain(g.vertex_count(), 0);
  for (VertexId v : t.domain()) in_domain[v] = 1;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (in_domain[v] && hits[v] == 0) fail(1, "vertex " + vertex_token(g, v) + " is in no bag");
    if (hits[v] > 1) fail(1, "vertex " + vertex_token(g, v) + " is in " + std::to_string(hits[v]) + " bags");
    if (!in_domain[v] && hits[v] > 0) fail(1, "vertex " + vertex_token(g, v) + " lies outside the decomposed component");
  }

  // Clause 2: singleton root.
  if (t.bag(0).vertices.size() != 1) fail(2, "root bag has " + std::to_string(t.bag(0).vertices.size()) + " vertices");

  // Clause 3: every edge joins a bag to one of its strict ancestors.
  for (const auto& [l, r] : g.edges()) {
    const VertexId u = g.left_id(l);
    const VertexId v = g.right_id(r);
    const int bu = t.bag_of(u);
    const int bv = t.bag_of(v);
    if (bu < 0 || bv < 0) continue;
    if (bu == bv || !(t.is_ancestor(bu, bv) || t.is_ancestor(bv, bu))) {
      fail(3, "edge " + vertex_token(g, u) + "-" + vertex_token(g, v) + " joins bags " + std::to_string(bu) +
                  " and " + std::to_string(bv) + " that are not in ancestor relation");
    }
  }

  // Clause 4: every bag together with its descendants induces a connected graph.
  for (int i = 0; i < nb; ++i) {
    if (!induces_connected(g, t.subtree_vertices(i))) fail(4, "bag " + std::to_string(i) + " with descendants is disconnected");
  }

  // Clause 5: hooks.
  for (int i = 1; i < nb; ++i) {
    const Bag& b = t.bag(i);
    if (!b.hook) {
      fail(5, "bag " + std::to_string(i) + " has no hook");
      continue;
    }
    const VertexId h = *b.hook;
    const auto& pv = t.bag(b.parent).vertices;
    if (!std::binary_search(pv.begin(), pv.end(), h)) {
      fail(5, "hook of bag " + std::to_string(i) + " is not in its parent bag");
    }
    for (VertexId v : b.vertices) {
      if (!g.adjacent(h, v)) fail(5, "hook of bag " + std::to_string(i) + " misses " + vertex_token(g, v));
    }
    for (VertexId v : t.subtree_vertices(i)) {
      if (t.bag_of(v) != i && g.adjacent(h, v)) {
        fail(5, "hook of bag " + std::to_string(i) + " sees descendant " + vertex_token(g, v));
      }
    }
  }

  // Alternation: bags are one-sided and sides alternate with depth.
  const Side root_side = g.side(t.bag(0).vertices.front());
  for (const Bag& b : t.bags()) {
    const Side expected = b.depth % 2 == 0 ? root_side : opposite(root_side);
    for (VertexId v : b.vertices) {
      if (g.side(v) != expected) {
        fail(6, "bag " + std::to_string(b.id) + " holds " + vertex_token(g, v) + " on the wrong side");
        break;
      }
    }
  }
  return report;
}

BackDegree back_degree(const GyarfasTree& t, int bag, bool include_parent) {
  BackDegree out;
  const BipartiteGraph& g = t.owner();
  for (int a : t.ancestors(bag)) {
    if (!include_parent && a == t.bag(bag).parent) continue;
    bool linked = false;
    for (VertexId u : t.bag(a).vertices) {
      for (VertexId v : t.bag(bag).vertices) linked = linked || g.adjacent(u, v);
    }
    if (linked) out.ancestors.push_back(a);
  }
  out.count = static_cast<int>(out.ancestors.size());
  return out;
}

int max_back_degree(const GyarfasTree& t, bool include_parent) {
  int best = 0;
  for (int i = 0; i < t.bag_count(); ++i) best = std::max(best, back_degree(t, i, include_parent).count);
  return best;
}

SubBipartite parity_subgraph(const GyarfasTree& t, int bag) {
  const int parity = t.bag(bag).depth % 2;
  std::vector<VertexId> keep = t.bag(bag).vertices;
  std::vector<int> stack(t.children(bag).begin(), t.children(bag).end());
  while (!stack.empty()) {
    const int b = stack.back();
    stack.pop_back();
    if (t.bag(b).depth % 2 != parity) keep.insert(keep.end(), t.bag(b).vertices.begin(), t.bag(b).vertices.end());
    for (int c : t.children(b)) stack.push_back(c);
  }
  std::sort(keep.begin(), keep.end());
  return induced_subgraph(t.owner(), keep);
}

std::vector<VertexId> hook_path(const GyarfasTree& t, VertexId v) {
  std::vector<VertexId> path = {v};
  for (int b = t.bag_of(v); b >= 0 && t.bag(b).parent >= 0; b = t.bag(b).parent) {
    path.push_back(*t.bag(b).hook);
  }
  return path;
}

bool is_induced_path(const BipartiteGraph& g, std::span<const VertexId> path) {
  for (std::size_t i = 0; i < path.size(); ++i) {
    for (std::size_t j = i + 1; j < path.size(); ++j) {
      if (path[i] == path[j]) return false;
      if (g.adjacent(path[i], path[j]) != (j == i + 1)) return false;
    }
  }
  return true;
}

std::string vertex_token(const BipartiteGraph& g, VertexId v) {
  return (g.side(v) == Side::Left ? "L" : "R") + std::to_string(g.index(v));
}

std::string dump(const GyarfasTree& t, int component) {
  std::ostringstream out;
  for (const Bag& b : t.bags()) {
    out << "bag " << bag_label(b.id, component) << " " << b.depth << " " << bag_label(b.parent, component) << " "
        << (b.hook ? vertex_token(t.owner(), *b.hook) : std::string("-1")) << " :";
    for (VertexId v : b.vertices) out << " " << vertex_token(t.owner(), v);
    out << "\n";
  }
  return out.str();
}

}  // namespace implrep
