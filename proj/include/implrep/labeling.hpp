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
#include <iosfwd>
#include <string>
#include <vector>

#include "implrep/protocol.hpp"

namespace implrep {

// Adjacency labels derived from a finished protocol. Every transcript prefix
// reached by some input pair is a node of one global prefix tree; a vertex's
// label holds, for each role it can play, the part of that tree its own runs
// reach together with its contribution at each node (own bit value or a dense
// id of its Eq operand). Two labels are decoded by walking both parts in
// lockstep, so the decoder never needs the graph.

struct Label {
  std::uint32_t bit_length = 0;
  std::vector<std::uint8_t> bytes;
};

struct LabelSet {
  std::uint64_t vertex_count = 0;
  std::uint8_t cost = 0;           // max protocol cost over the instance
  std::uint8_t operand_width = 1;  // bits per Eq operand id
  std::vector<Label> labels;
};

inline constexpr int kDefaultCostCeiling = 16;

struct LabelOptions {
  int cost_ceiling = kDefaultCostCeiling;
};

// Runs every in-domain pair. Throws CapacityError when the measured cost
// exceeds the ceiling and std::logic_error if some party's contribution at a
// transcript prefix is not determined by its own input.
LabelSet build_labels(const ProtocolInstance& inst, LabelOptions options = {});

// A label unpacked into its two prefix-tree parts (either may be absent).
struct ParsedLabel {
  struct Node {
    std::uint8_t kind = 0;       // 0 passive, 1 own bit, 2 Eq, 3 leaf
    std::uint64_t payload = 0;   // bit value, operand id or leaf output
    std::int32_t child[2] = {-1, -1};
  };
  std::vector<Node> alice;
  std::vector<Node> bob;
};

// Throws DecodeError on truncated or malformed bit strings.
ParsedLabel parse_label(const Label& label, std::uint8_t operand_width);

// Alice's part of x against Bob's part of y. Throws DecodeError when either
// part is missing or the walk leaves the recorded prefixes.
bool decode(const ParsedLabel& x, const ParsedLabel& y);
bool decode(const Label& lx, const Label& ly, std::uint8_t operand_width);
inline bool decode(const LabelSet& set, std::size_t x, std::size_t y) {
  return decode(set.labels.at(x), set.labels.at(y), set.operand_width);
}

struct LabelMeasure {
  std::uint32_t max_bits = 0;
  double mean_bits = 0;
  double bits_per_log_n = 0;  // max_bits / ceil(log2 N)
};

LabelMeasure measure(const LabelSet& set);

int ceil_log2(std::uint64_t n);

// File: "IMPLREP1", version byte, N (8 bytes), c (1 byte), operand width
// (1 byte), then per vertex a 4-byte bit length and the packed bits, then an
// 8-byte FNV-1a checksum of everything before it. Integers little-endian.
std::string serialize(const LabelSet& set);
LabelSet deserialize(const std::string& data);

}  // namespace implrep
