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

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "implrep/geometry.hpp"
#include "implrep/graph.hpp"

namespace implrep {

// Two-party deterministic protocols with Equality oracle calls. Each party's
// messages and Eq operands are computed from its own input and the transcript
// so far; the output is a function of the transcript alone.

enum class Party : std::uint8_t { Alice = 0, Bob = 1 };

constexpr Party other(Party p) { return p == Party::Alice ? Party::Bob : Party::Alice; }

enum class OperandTag : std::uint8_t {
  Biclique = 1,
  Component = 2,
  DepthOneBag = 3,
  ComplementComponent = 4,
  AncestorBag = 5,
  ScanPad = 6,
  SideMismatch = 7,
  Cell = 8,
  CellRow = 9,
  CellColumn = 10,
};

// A tagged byte string: one tag byte followed by 8-byte little-endian fields.
class EqOperand {
 public:
  EqOperand() = default;
  EqOperand(OperandTag tag, std::initializer_list<std::int64_t> fields);

  const std::string& bytes() const { return bytes_; }
  std::string hex() const;
  friend bool operator==(const EqOperand&, const EqOperand&) = default;

 private:
  std::string bytes_;
};

struct CostMeter {
  int bits_sent = 0;
  int eq_calls = 0;
  int recursion_depth = 0;  // deepest Gyárfás level entered; 1 = top level
  int total() const { return bits_sent + eq_calls; }
};

struct TranscriptEvent {
  enum class Kind : std::uint8_t { Bit, Query };
  Kind kind = Kind::Bit;
  Party sender = Party::Alice;  // for bits
  bool value = false;           // bit value or Eq answer
  EqOperand alice_operand;      // for queries
  EqOperand bob_operand;
};

struct ProtocolRun {
  std::vector<TranscriptEvent> transcript;
  bool adjacent = false;
  CostMeter meter;

  int output() const { return adjacent ? 1 : -1; }
  // "B <bit> <A|B>", "Q <alice-hex> <bob-hex> <answer>", "OUT <+1|-1>".
  std::string dump() const;
};

namespace detail {
class Session;
class Plan;
}  // namespace detail

// Recursive protocol for a bipartite graph over Gyárfás decompositions.
// Inputs are combined vertex ids; any ordered pair is allowed, including a
// vertex with itself and two vertices of one side (answer: non-adjacent).
class GyarfasProtocol {
 public:
  explicit GyarfasProtocol(BipartiteGraph g);
  ~GyarfasProtocol();
  GyarfasProtocol(GyarfasProtocol&&) noexcept;
  GyarfasProtocol& operator=(GyarfasProtocol&&) noexcept;

  const BipartiteGraph& graph() const;
  ProtocolRun run(VertexId alice, VertexId bob) const;

  // Runs inside an existing session with Alice on the left and Bob on the
  // right, skipping the side bit. Used by protocols that reduce to pieces.
  bool run_known_sides(detail::Session& session, VertexId alice, VertexId bob, int depth) const;

  // Every recursive call materialised so far: the component the call was made
  // from and the graph it recursed on.
  struct RecursionEdge {
    BipartiteGraph parent;
    BipartiteGraph child;
    bool complemented = false;  // reached through a complement step
  };
  std::vector<RecursionEdge> recursion_edges() const;

 private:
  std::unique_ptr<detail::Plan> plan_;
};

// Protocol for equivalence graphs; throws PreconditionError otherwise.
ProtocolRun base_case_protocol(const BipartiteGraph& g, VertexId alice, VertexId bob);

// Alice holds u, Bob holds w; Alice sends the sign of a(u)_3 (1 bit), Bob the
// sign pattern of (b(w)_1, b(w)_2) (2 bits), then both run the Gyárfás protocol
// on the selected piece.
class SignRank3Protocol {
 public:
  explicit SignRank3Protocol(const SignRankVectors& v);
  ~SignRank3Protocol();

  ProtocolRun run(int u, int w) const;
  const SignRank3Decomposition& decomposition() const { return decomposition_; }

 private:
  SignRank3Decomposition decomposition_;
  std::vector<std::unique_ptr<GyarfasProtocol>> pieces_;
};

// Unit disk graph protocol: Eq on grid cells, then Eq scans over row and
// column offsets, then the complemented Gyárfás protocol on the pair of cells.
class UdgProtocol {
 public:
  explicit UdgProtocol(UdgRealization r);
  ~UdgProtocol();

  ProtocolRun run(int x, int y) const;
  const UdgRealization& realization() const { return realization_; }
  const UdgGrid& grid() const { return grid_; }

 private:
  struct Piece;
  const Piece& piece(const Cell& a, const Cell& b) const;

  UdgRealization realization_;
  UdgGrid grid_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<Cell, Cell>, std::unique_ptr<Piece>> pieces_;
};

// Uniform view of a protocol over a vertex set, used for exhaustive checks and
// for building labels.
class ProtocolInstance {
 public:
  virtual ~ProtocolInstance() = default;
  virtual std::string name() const = 0;
  virtual int vertex_count() const = 0;
  // Whether (x, y) is an input of the protocol.
  virtual bool in_domain(int x, int y) const = 0;
  // Ground truth evaluated directly from the input object.
  virtual bool adjacent(int x, int y) const = 0;
  virtual ProtocolRun run(int x, int y) const = 0;
};

// Every ordered pair of combined ids.
class GyarfasInstance : public ProtocolInstance {
 public:
  explicit GyarfasInstance(BipartiteGraph g);
  std::string name() const override { return "gyarfas"; }
  int vertex_count() const override;
  bool in_domain(int, int) const override { return true; }
  bool adjacent(int x, int y) const override;
  ProtocolRun run(int x, int y) const override;
  const GyarfasProtocol& protocol() const { return protocol_; }

 private:
  BipartiteGraph graph_;
  GyarfasProtocol protocol_;
};

// Vertices 0..|U|-1 are U, then W. Alice holds u in U, Bob holds w in W.
class SignRank3Instance : public ProtocolInstance {
 public:
  explicit SignRank3Instance(SignRankVectors v);
  std::string name() const override { return "signrank3"; }
  int vertex_count() const override;
  bool in_domain(int x, int y) const override;
  bool adjacent(int x, int y) const override;
  ProtocolRun run(int x, int y) const override;

 private:
  SignRankVectors vectors_;
  SignRank3Protocol protocol_;
};

// All ordered pairs of distinct points.
class UdgInstance : public ProtocolInstance {
 public:
  explicit UdgInstance(UdgRealization r);
  std::string name() const override { return "udg"; }
  int vertex_count() const override;
  bool in_domain(int x, int y) const override { return x != y; }
  bool adjacent(int x, int y) const override;
  ProtocolRun run(int x, int y) const override;
  const UdgProtocol& protocol() const { return protocol_; }

 private:
  UdgProtocol protocol_;
};

struct AllPairsReport {
  std::size_t pairs = 0;
  std::size_t mismatches = 0;
  int first_bad_x = -1;
  int first_bad_y = -1;
  std::map<int, std::size_t> cost_histogram;
  int max_cost = 0;
  int max_bits = 0;
  int max_eq = 0;
  int max_recursion_depth = 0;
  bool correct() const { return mismatches == 0; }
};

// Runs every in-domain pair, comparing with the ground truth. When a visitor
// is given the pairs are run on one thread in row-major order and the visitor
// sees each (x, y, run).
AllPairsReport run_all_pairs(const ProtocolInstance& inst, int threads = 1,
                             const std::function<void(int, int, const ProtocolRun&)>& visit = {});

}  // namespace implrep
