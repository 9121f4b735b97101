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

#include "implrep/protocol.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "implrep/errors.hpp"
#include "implrep/gyarfas.hpp"
#include "implrep/oracles.hpp"

namespace implrep {

EqOperand::EqOperand(OperandTag tag, std::initializer_list<std::int64_t> fields) {
  bytes_.push_back(static_cast<char>(tag));
  for (std::int64_t f : fields) {
    auto u = static_cast<std::uint64_t>(f);
    for (int i = 0; i < 8; ++i) {
      bytes_.push_back(static_cast<char>(u & 0xff));
      u >>= 8;
    }
  }
}

std::string EqOperand::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (char c : bytes_) {
    const auto b = static_cast<unsigned char>(c);
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

std::string ProtocolRun::dump() const {
  std::ostringstream out;
  for (const auto& e : transcript) {
    if (e.kind == TranscriptEvent::Kind::Bit) {
      out << "B " << (e.value ? 1 : 0) << " " << (e.sender == Party::Alice ? "A" : "B") << "\n";
    } else {
      out << "Q " << e.alice_operand.hex() << " " << e.bob_operand.hex() << " " << (e.value ? 1 : 0) << "\n";
    }
  }
  out << "OUT " << (adjacent ? "+1" : "-1") << "\n";
  return out.str();
}

namespace detail {

class Session {
 public:
  bool send_bit(Party sender, bool value) {
    TranscriptEvent e;
    e.kind = TranscriptEvent::Kind::Bit;
    e.sender = sender;
    e.value = value;
    run_.transcript.push_back(std::move(e));
    ++run_.meter.bits_sent;
    return value;
  }

  bool query(EqOperand alice, EqOperand bob) {
    TranscriptEvent e;
    e.kind = TranscriptEvent::Kind::Query;
    e.value = alice == bob;
    e.alice_operand = std::move(alice);
    e.bob_operand = std::move(bob);
    const bool answer = e.value;
    run_.transcript.push_back(std::move(e));
    ++run_.meter.eq_calls;
    return answer;
  }

  // Operands named by the party that computes them rather than by role.
  bool query_from(Party first, EqOperand first_op, EqOperand second_op) {
    return first == Party::Alice ? query(std::move(first_op), std::move(second_op))
                                 : query(std::move(second_op), std::move(first_op));
  }

  void enter(int depth) { run_.meter.recursion_depth = std::max(run_.meter.recursion_depth, depth); }

  ProtocolRun finish(bool adjacent) {
    run_.adjacent = adjacent;
    return std::move(run_);
  }

 private:
  ProtocolRun run_;
};

// What the protocol needs from one decomposition tree: for every bag the
// ancestors with an edge into it (parent included, shallowest first) and its
// depth-1 ancestor.
struct TreeInfo {
  explicit TreeInfo(GyarfasTree t) : tree(std::move(t)) {
    const int nb = tree.bag_count();
    scan.resize(nb);
    depth_one.assign(nb, -1);
    for (int b = 0; b < nb; ++b) {
      auto anc = back_degree(tree, b, true).ancestors;
      std::reverse(anc.begin(), anc.end());
      scan[b] = std::move(anc);
      scan_length = std::max(scan_length, scan[b].size());
      int cur = b;
      while (cur >= 0 && tree.bag(cur).depth > 1) cur = tree.bag(cur).parent;
      if (cur >= 0 && tree.bag(cur).depth == 1) depth_one[b] = cur;
    }
  }

  GyarfasTree tree;
  std::vector<std::vector<int>> scan;
  std::size_t scan_length = 0;
  std::vector<int> depth_one;
};

struct ChildLink {
  std::unique_ptr<Plan> plan;
  std::vector<VertexId> local;  // parent graph id -> child id, -1 if absent
};

class DepthOnePlan;

class ComponentPlan {
 public:
  ComponentPlan(std::shared_ptr<const BipartiteGraph> g, std::vector<VertexId> vertices);
  ~ComponentPlan();

  const TreeInfo& info() const { return info_; }
  const ChildLink& parity_child(int bag) const;
  const DepthOnePlan& depth_one(int bag) const;
  void collect(std::vector<GyarfasProtocol::RecursionEdge>& out) const;

 private:
  std::shared_ptr<const BipartiteGraph> graph_;
  std::vector<VertexId> vertices_;
  TreeInfo info_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::unique_ptr<ChildLink>> parity_;
  mutable std::map<int, std::unique_ptr<DepthOnePlan>> depth_one_;
};

class Plan {
 public:
  explicit Plan(std::shared_ptr<const BipartiteGraph> g) : graph(std::move(g)) {
    const int n = graph->vertex_count();
    if (auto parts = is_equivalence_graph(*graph)) {
      biclique.emplace(n, -1);
      for (std::size_t k = 0; k < parts->size(); ++k) {
        for (int l : (*parts)[k].left) (*biclique)[graph->left_id(l)] = static_cast<int>(k);
        for (int r : (*parts)[k].right) (*biclique)[graph->right_id(r)] = static_cast<int>(k);
      }
      return;
    }
    component.assign(n, -1);
    auto comps = connected_components(*graph);
    for (std::size_t k = 0; k < comps.size(); ++k) {
      for (VertexId v : comps[k]) component[v] = static_cast<int>(k);
      components.push_back(std::make_unique<ComponentPlan>(graph, std::move(comps[k])));
    }
  }

  void collect(std::vector<GyarfasProtocol::RecursionEdge>& out) const {
    for (const auto& c : components) c->collect(out);
  }

  std::shared_ptr<const BipartiteGraph> graph;
  std::optional<std::vector<int>> biclique;
  std::vector<int> component;
  std::vector<std::unique_ptr<ComponentPlan>> components;
};

std::unique_ptr<ChildLink> make_child(const SubBipartite& sub, int parent_vertex_count) {
  auto link = std::make_unique<ChildLink>();
  link->local.assign(parent_vertex_count, -1);
  for (std::size_t i = 0; i < sub.origin.size(); ++i) link->local[sub.origin[i]] = static_cast<VertexId>(i);
  link->plan = std::make_unique<Plan>(std::make_shared<const BipartiteGraph>(sub.graph));
  return link;
}

// Complement step for a depth-1 bag B: the bipartite complement of G_B, split
// into components, each decomposed from its smallest vertex inside B.
class DepthOnePlan {
 public:
  DepthOnePlan(const GyarfasTree& tree, int bag) {
    const SubBipartite gb = parity_subgraph(tree, bag);
    complement = std::make_shared<const BipartiteGraph>(bipartite_complement(gb.graph));
    local.assign(tree.owner().vertex_count(), -1);
    for (std::size_t i = 0; i < gb.origin.size(); ++i) local[gb.origin[i]] = static_cast<VertexId>(i);
    const auto comps = connected_components(*complement);
    component.assign(complement->vertex_count(), -1);
    trees.resize(comps.size());
    for (std::size_t k = 0; k < comps.size(); ++k) {
      VertexId root = -1;
      for (VertexId v : comps[k]) {
        component[v] = static_cast<int>(k);
        const VertexId original = gb.origin[v];
        if (tree.bag_of(original) == bag && (root < 0 || v < root)) root = v;
      }
      if (root >= 0) trees[k] = std::make_unique<TreeInfo>(decompose_component(complement, root));
    }
  }

  const ChildLink& child(int comp, int bag) const {
    std::lock_guard lock(mutex_);
    auto& slot = children_[{comp, bag}];
    if (!slot) slot = make_child(parity_subgraph(trees[comp]->tree, bag), complement->vertex_count());
    return *slot;
  }

  void collect(const BipartiteGraph& parent, std::vector<GyarfasProtocol::RecursionEdge>& out) const {
    std::lock_guard lock(mutex_);
    for (const auto& [key, link] : children_) {
      out.push_back({parent, *link->plan->graph, true});
      link->plan->collect(out);
    }
  }

  std::shared_ptr<const BipartiteGraph> complement;
  std::vector<VertexId> local;  // plan graph id -> complement id
  std::vector<int> component;   // complement id -> component index
  std::vector<std::unique_ptr<TreeInfo>> trees;

 private:
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<ChildLink>> children_;
};

ComponentPlan::ComponentPlan(std::shared_ptr<const BipartiteGraph> g, std::vector<VertexId> vertices)
    : graph_(g), vertices_(std::move(vertices)), info_(decompose_component(g, default_root(*g, vertices_))) {}

ComponentPlan::~ComponentPlan() = default;

const ChildLink& ComponentPlan::parity_child(int bag) const {
  std::lock_guard lock(mutex_);
  auto& slot = parity_[bag];
  if (!slot) slot = make_child(parity_subgraph(info_.tree, bag), graph_->vertex_count());
  return *slot;
}

const DepthOnePlan& ComponentPlan::depth_one(int bag) const {
  std::lock_guard lock(mutex_);
  auto& slot = depth_one_[bag];
  if (!slot) slot = std::make_unique<DepthOnePlan>(info_.tree, bag);
  return *slot;
}

void ComponentPlan::collect(std::vector<GyarfasProtocol::RecursionEdge>& out) const {
  const BipartiteGraph parent = induced_subgraph(*graph_, vertices_).graph;
  std::lock_guard lock(mutex_);
  for (const auto& [bag, link] : parity_) {
    out.push_back({parent, *link->plan->graph, false});
    link->plan->collect(out);
  }
  for (const auto& [bag, d] : depth_one_) d->collect(parent, out);
}

namespace {

constexpr int kMaxNesting = 1 << 12;

// Holder compares each ancestor bag on its scan list (padded to the tree-wide
// length) with the other party's bag.
bool scan(Session& s, Party holder, const TreeInfo& info, int own_bag, int other_bag) {
  const auto& list = info.scan[own_bag];
  for (std::size_t j = 0; j < info.scan_length; ++j) {
    EqOperand mine = j < list.size() ? EqOperand(OperandTag::AncestorBag, {list[j]})
                                     : EqOperand(OperandTag::ScanPad, {holder == Party::Alice ? 0 : 1});
    if (s.query_from(holder, std::move(mine), EqOperand(OperandTag::AncestorBag, {other_bag}))) return true;
  }
  return false;
}

bool solve(const Plan& plan, Session& s, VertexId alice, VertexId bob, bool sides_known, int depth);

bool recurse(const ChildLink& c, Session& s, VertexId alice, VertexId bob, int depth) {
  return solve(*c.plan, s, c.local[alice], c.local[bob], true, depth + 1);
}

// y sits in a depth-1 bag; the question moves to the complement of G_bag(y).
bool depth_one_step(const ComponentPlan& cp, Session& s, Party xp, VertexId x, VertexId y, VertexId alice,
                    VertexId bob, int depth) {
  const TreeInfo& info = cp.info();
  const Party yp = other(xp);
  const int bx = info.tree.bag_of(x);
  const int by = info.tree.bag_of(y);
  if (!s.query_from(xp, EqOperand(OperandTag::DepthOneBag, {info.depth_one[bx]}),
                    EqOperand(OperandTag::DepthOneBag, {by}))) {
    return false;
  }
  const DepthOnePlan& d = cp.depth_one(by);
  const VertexId cx = d.local[x];
  const VertexId cy = d.local[y];
  if (!s.query_from(xp, EqOperand(OperandTag::ComplementComponent, {d.component[cx]}),
                    EqOperand(OperandTag::ComplementComponent, {d.component[cy]}))) {
    return true;
  }
  const int ci = d.component[cy];
  const TreeInfo& yi = *d.trees[ci];
  if (s.send_bit(yp, cy == yi.tree.root_vertex())) {
    return !s.send_bit(xp, yi.tree.depth_of(cx) == 1);
  }
  const int tx = yi.tree.bag_of(cx);
  const int ty = yi.tree.bag_of(cy);
  const VertexId ca = d.local[alice];
  const VertexId cb = d.local[bob];
  if (scan(s, xp, yi, tx, ty)) return !recurse(d.child(ci, ty), s, ca, cb, depth);
  if (scan(s, yp, yi, ty, tx)) return !recurse(d.child(ci, tx), s, ca, cb, depth);
  return true;
}

bool solve(const Plan& plan, Session& s, VertexId alice, VertexId bob, bool sides_known, int depth) {
  if (depth > kMaxNesting) throw std::logic_error("protocol recursion does not terminate");
  s.enter(depth);
  const BipartiteGraph& g = *plan.graph;
  bool opposite_sides = true;
  if (!sides_known) {
    const bool alice_right = s.send_bit(Party::Alice, g.side(alice) == Side::Right);
    opposite_sides = (g.side(bob) == Side::Right) != alice_right;
  }
  if (plan.biclique) {
    EqOperand b = opposite_sides ? EqOperand(OperandTag::Biclique, {(*plan.biclique)[bob]})
                                 : EqOperand(OperandTag::SideMismatch, {});
    return s.query(EqOperand(OperandTag::Biclique, {(*plan.biclique)[alice]}), std::move(b));
  }
  {
    EqOperand b = opposite_sides ? EqOperand(OperandTag::Component, {plan.component[bob]})
                                 : EqOperand(OperandTag::SideMismatch, {});
    if (!s.query(EqOperand(OperandTag::Component, {plan.component[alice]}), std::move(b))) return false;
  }
  const ComponentPlan& cp = *plan.components[plan.component[alice]];
  const TreeInfo& info = cp.info();
  const VertexId root = info.tree.root_vertex();
  const Party xp = g.side(alice) == g.side(root) ? Party::Alice : Party::Bob;
  const Party yp = other(xp);
  const VertexId x = xp == Party::Alice ? alice : bob;
  const VertexId y = xp == Party::Alice ? bob : alice;
  const int bx = info.tree.bag_of(x);
  const int by = info.tree.bag_of(y);

  const bool x_is_root = s.send_bit(xp, x == root);
  const bool y_depth_one = s.send_bit(yp, info.tree.bag(by).depth == 1);
  if (x_is_root) return y_depth_one;
  if (y_depth_one) return depth_one_step(cp, s, xp, x, y, alice, bob, depth);
  if (scan(s, xp, info, bx, by)) return recurse(cp.parity_child(by), s, alice, bob, depth);
  if (scan(s, yp, info, by, bx)) return recurse(cp.parity_child(bx), s, alice, bob, depth);
  return false;
}

void check_vertex(const BipartiteGraph& g, VertexId v) {
  if (v < 0 || v >= g.vertex_count()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
}

}  // namespace
}  // namespace detail

GyarfasProtocol::GyarfasProtocol(BipartiteGraph g)
    : plan_(std::make_unique<detail::Plan>(std::make_shared<const BipartiteGraph>(std::move(g)))) {}

GyarfasProtocol::~GyarfasProtocol() = default;
GyarfasProtocol::GyarfasProtocol(GyarfasProtocol&&) noexcept = default;
GyarfasProtocol& GyarfasProtocol::operator=(GyarfasProtocol&&) noexcept = default;

const BipartiteGraph& GyarfasProtocol::graph() const { return *plan_->graph; }

ProtocolRun GyarfasProtocol::run(VertexId alice, VertexId bob) const {
  detail::check_vertex(graph(), alice);
  detail::check_vertex(graph(), bob);
  detail::Session s;
  const bool adjacent = detail::solve(*plan_, s, alice, bob, false, 1);
  return s.finish(adjacent);
}

bool GyarfasProtocol::run_known_sides(detail::Session& session, VertexId alice, VertexId bob, int depth) const {
  detail::check_vertex(graph(), alice);
  detail::check_vertex(graph(), bob);
  if (graph().side(alice) == graph().side(bob)) throw PreconditionError("inputs must lie on opposite sides");
  return detail::solve(*plan_, session, alice, bob, true, depth);
}

std::vector<GyarfasProtocol::RecursionEdge> GyarfasProtocol::recursion_edges() const {
  std::vector<RecursionEdge> out;
  plan_->collect(out);
  return out;
}

ProtocolRun base_case_protocol(const BipartiteGraph& g, VertexId alice, VertexId bob) {
  if (!is_equivalence_graph(g)) throw PreconditionError("base-case protocol needs an equivalence graph");
  return GyarfasProtocol(g).run(alice, bob);
}

SignRank3Protocol::SignRank3Protocol(const SignRankVectors& v) : decomposition_(signrank3_decompose(v)) {
  for (const auto& piece : decomposition_.pieces) pieces_.push_back(std::make_unique<GyarfasProtocol>(piece.graph));
}

SignRank3Protocol::~SignRank3Protocol() = default;

ProtocolRun SignRank3Protocol::run(int u, int w) const {
  const auto& d = decomposition_;
  if (u < 0 || u >= static_cast<int>(d.u_class.size()) || w < 0 || w >= static_cast<int>(d.w_class.size())) {
    throw PreconditionError("sign-rank input out of range");
  }
  detail::Session s;
  const int uc = s.send_bit(Party::Alice, d.u_class[u] == 1) ? 1 : 0;
  const int high = s.send_bit(Party::Bob, (d.w_class[w] & 2) != 0) ? 2 : 0;
  const int low = s.send_bit(Party::Bob, (d.w_class[w] & 1) != 0) ? 1 : 0;
  const int index = uc * 4 + high + low;
  const GyarfasProtocol& p = *pieces_[index];
  const bool adjacent = p.run_known_sides(s, d.u_local[u], p.graph().right_id(d.w_local[w]), 1);
  return s.finish(adjacent);
}

struct UdgProtocol::Piece {
  CrossCellPiece cells;
  GyarfasProtocol protocol;
};

UdgProtocol::UdgProtocol(UdgRealization r) : realization_(std::move(r)), grid_(realization_) {}

UdgProtocol::~UdgProtocol() = default;

const UdgProtocol::Piece& UdgProtocol::piece(const Cell& a, const Cell& b) const {
  std::lock_guard lock(mutex_);
  auto& slot = pieces_[{a, b}];
  if (!slot) {
    CrossCellPiece cells = cross_cell_piece(realization_, grid_, a, b);
    GyarfasProtocol protocol(cells.complement);
    slot = std::make_unique<Piece>(Piece{std::move(cells), std::move(protocol)});
  }
  return *slot;
}

ProtocolRun UdgProtocol::run(int x, int y) const {
  if (x < 0 || y < 0 || x >= realization_.size() || y >= realization_.size()) {
    throw PreconditionError("unit disk input out of range");
  }
  if (x == y) throw PreconditionError("unit disk protocol needs two distinct points");
  detail::Session s;
  const Cell cx = grid_.cell_of(x);
  const Cell cy = grid_.cell_of(y);
  if (s.query(EqOperand(OperandTag::Cell, {cx.i, cx.j}), EqOperand(OperandTag::Cell, {cy.i, cy.j}))) {
    return s.finish(true);
  }
  // Alice learns Bob's cell (and Bob hers) from which offset matched.
  auto find_offset = [&](OperandTag tag, std::int64_t mine, std::int64_t theirs) -> bool {
    for (int delta = -kCellReach; delta <= kCellReach; ++delta) {
      if (s.query(EqOperand(tag, {mine + delta}), EqOperand(tag, {theirs}))) return true;
    }
    return false;
  };
  if (!find_offset(OperandTag::CellRow, cx.i, cy.i)) return s.finish(false);
  if (!find_offset(OperandTag::CellColumn, cx.j, cy.j)) return s.finish(false);
  const Piece& p = piece(cx, cy);
  const auto& left = p.cells.left_ids;
  const auto& right = p.cells.right_ids;
  const auto lx = static_cast<VertexId>(std::lower_bound(left.begin(), left.end(), x) - left.begin());
  const auto ly = static_cast<VertexId>(std::lower_bound(right.begin(), right.end(), y) - right.begin());
  const bool far = p.protocol.run_known_sides(s, lx, p.protocol.graph().right_id(ly), 1);
  return s.finish(!far);
}

GyarfasInstance::GyarfasInstance(BipartiteGraph g) : graph_(g), protocol_(std::move(g)) {}

int GyarfasInstance::vertex_count() const { return graph_.vertex_count(); }

bool GyarfasInstance::adjacent(int x, int y) const { return graph_.adjacent(x, y); }

ProtocolRun GyarfasInstance::run(int x, int y) const { return protocol_.run(x, y); }

SignRank3Instance::SignRank3Instance(SignRankVectors v) : vectors_(std::move(v)), protocol_(vectors_) {}

int SignRank3Instance::vertex_count() const {
  return static_cast<int>(vectors_.u().size() + vectors_.w().size());
}

bool SignRank3Instance::in_domain(int x, int y) const {
  const int nu = static_cast<int>(vectors_.u().size());
  return x < nu && y >= nu;
}

bool SignRank3Instance::adjacent(int x, int y) const {
  const int nu = static_cast<int>(vectors_.u().size());
  return dot(vectors_.u()[x], vectors_.w()[y - nu]) > 0;
}

ProtocolRun SignRank3Instance::run(int x, int y) const {
  return protocol_.run(x, y - static_cast<int>(vectors_.u().size()));
}

UdgInstance::UdgInstance(UdgRealization r) : protocol_(std::move(r)) {}

int UdgInstance::vertex_count() const { return protocol_.realization().size(); }

bool UdgInstance::adjacent(int x, int y) const {
  const auto& r = protocol_.realization();
  return squared_distance(r.points()[x], r.points()[y]) < r.radius() * r.radius();
}

ProtocolRun UdgInstance::run(int x, int y) const { return protocol_.run(x, y); }

namespace {

void account(AllPairsReport& rep, const ProtocolInstance& inst, int x, int y, const ProtocolRun& run) {
  ++rep.pairs;
  if (run.adjacent != inst.adjacent(x, y)) {
    if (rep.mismatches == 0 || std::pair(x, y) < std::pair(rep.first_bad_x, rep.first_bad_y)) {
      rep.first_bad_x = x;
      rep.first_bad_y = y;
    }
    ++rep.mismatches;
  }
  const int cost = run.meter.total();
  ++rep.cost_histogram[cost];
  rep.max_cost = std::max(rep.max_cost, cost);
  rep.max_bits = std::max(rep.max_bits, run.meter.bits_sent);
  rep.max_eq = std::max(rep.max_eq, run.meter.eq_calls);
  rep.max_recursion_depth = std::max(rep.max_recursion_depth, run.meter.recursion_depth);
}

void merge(AllPairsReport& into, const AllPairsReport& part) {
  into.pairs += part.pairs;
  if (part.mismatches > 0 &&
      (into.mismatches == 0 || std::pair(part.first_bad_x, part.first_bad_y) < std::pair(into.first_bad_x, into.first_bad_y))) {
    into.first_bad_x = part.first_bad_x;
    into.first_bad_y = part.first_bad_y;
  }
  into.mismatches += part.mismatches;
  for (const auto& [c, k] : part.cost_histogram) into.cost_histogram[c] += k;
  into.max_cost = std::max(into.max_cost, part.max_cost);
  into.max_bits = std::max(into.max_bits, part.max_bits);
  into.max_eq = std::max(into.max_eq, part.max_eq);
  into.max_recursion_depth = std::max(into.max_recursion_depth, part.max_recursion_depth);
}

}  // namespace

AllPairsReport run_all_pairs(const ProtocolInstance& inst, int threads,
                             const std::function<void(int, int, const ProtocolRun&)>& visit) {
  const int n = inst.vertex_count();
  AllPairsReport report;
  auto do_row = [&](int x, AllPairsReport& rep, bool with_visit) {
    for (int y = 0; y < n; ++y) {
      if (!inst.in_domain(x, y)) continue;
      const ProtocolRun run = inst.run(x, y);
      account(rep, inst, x, y, run);
      if (with_visit) visit(x, y, run);
    }
  };
  if (visit || threads <= 1) {
    for (int x = 0; x < n; ++x) do_row(x, report, static_cast<bool>(visit));
    return report;
  }
  std::atomic<int> next{0};
  std::vector<AllPairsReport> parts(threads);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (int x = next++; x < n; x = next++) do_row(x, parts[t], false);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (const auto& p : parts) merge(report, p);
  return report;
}

}  // namespace implrep
