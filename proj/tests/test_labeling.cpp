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


#include <gtest/gtest.h>

#include <cmath>

#include "implrep/errors.hpp"
#include "implrep/generators.hpp"
#include "implrep/labeling.hpp"
#include "implrep/protocol.hpp"
#include "implrep/random.hpp"

namespace implrep {
namespace {

std::size_t decode_mismatches(const ProtocolInstance& inst, const LabelSet& set) {
  std::size_t bad = 0;
  for (int x = 0; x < inst.vertex_count(); ++x) {
    for (int y = 0; y < inst.vertex_count(); ++y) {
      if (inst.in_domain(x, y) && decode(set, x, y) != inst.adjacent(x, y)) ++bad;
    }
  }
  return bad;
}

std::uint64_t size_bound(const LabelSet& set) {
  const std::uint64_t c = set.cost;
  return (std::uint64_t{1} << c) * (2 * ceil_log2(set.vertex_count) + 2) + 64;
}

TEST(CeilLog2Test, Values) {
  EXPECT_EQ(ceil_log2(1), 0);
  EXPECT_EQ(ceil_log2(2), 1);
  EXPECT_EQ(ceil_log2(3), 2);
  EXPECT_EQ(ceil_log2(64), 6);
  EXPECT_EQ(ceil_log2(65), 7);
}

TEST(LabelTest, RoundTripOnRandomGraphs) {
  Rng rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    const BipartiteGraph g = random_connected_bipartite(static_cast<int>(rng.uniform_int(1, 9)),
                                                        static_cast<int>(rng.uniform_int(1, 9)),
                                                        rng.unit() * 0.6, rng);
    const GyarfasInstance inst(g);
    const LabelSet set = build_labels(inst, LabelOptions{24});
    EXPECT_EQ(set.vertex_count, static_cast<std::uint64_t>(g.vertex_count()));
    EXPECT_EQ(set.cost, run_all_pairs(inst).max_cost);
    EXPECT_EQ(decode_mismatches(inst, set), 0u) << "trial " << trial;
    EXPECT_LE(measure(set).max_bits, size_bound(set));
  }
}

TEST(LabelTest, EquivalenceGraphLabelsAreShort) {
  Rng rng(52);
  const GyarfasInstance inst(random_equivalence_graph(20, 20, 5, rng));
  const LabelSet set = build_labels(inst);
  EXPECT_LE(set.cost, 2);
  EXPECT_EQ(decode_mismatches(inst, set), 0u);
  EXPECT_LE(measure(set).max_bits, size_bound(set));
}

TEST(LabelTest, SignRankAndUdgInstances) {
  Rng rng(53);
  const SignRank3Instance sr(random_signrank3(8, 8, rng));
  const LabelSet a = build_labels(sr, LabelOptions{40});
  EXPECT_EQ(decode_mismatches(sr, a), 0u);
  const UdgInstance udg(random_udg(30, Rational(4), Rational(2), rng));
  const LabelSet b = build_labels(udg, LabelOptions{40});
  EXPECT_EQ(decode_mismatches(udg, b), 0u);
}

TEST(LabelTest, SingleVertexAndEmpty) {
  const GyarfasInstance one(BipartiteGraph(1, 0, {}));
  const LabelSet set = build_labels(one);
  ASSERT_EQ(set.labels.size(), 1u);
  EXPECT_FALSE(decode(set, 0, 0));
  const GyarfasInstance none(BipartiteGraph(0, 0, {}));
  const LabelSet empty = build_labels(none);
  EXPECT_TRUE(empty.labels.empty());
  EXPECT_EQ(deserialize(serialize(empty)).labels.size(), 0u);
}

TEST(LabelTest, CostCeilingIsEnforced) {
  Rng rng(54);
  const GyarfasInstance inst(random_connected_bipartite(10, 10, 0.3, rng));
  const int cost = run_all_pairs(inst).max_cost;
  ASSERT_GT(cost, 2);
  EXPECT_THROW(build_labels(inst, LabelOptions{cost - 1}), CapacityError);
  EXPECT_NO_THROW(build_labels(inst, LabelOptions{cost}));
}

TEST(LabelTest, SerialiseRoundTrip) {
  Rng rng(55);
  const GyarfasInstance inst(random_connected_bipartite(7, 8, 0.3, rng));
  const LabelSet set = build_labels(inst, LabelOptions{32});
  const std::string bytes = serialize(set);
  EXPECT_EQ(bytes.substr(0, 8), "IMPLREP1");
  EXPECT_EQ(serialize(deserialize(bytes)), bytes);
  const LabelSet back = deserialize(bytes);
  EXPECT_EQ(back.cost, set.cost);
  EXPECT_EQ(back.operand_width, set.operand_width);
  EXPECT_EQ(decode_mismatches(inst, back), 0u);
}

TEST(LabelTest, CorruptFilesAreRejected) {
  Rng rng(56);
  const LabelSet set = build_labels(GyarfasInstance(random_connected_bipartite(5, 5, 0.3, rng)), LabelOptions{32});
  const std::string bytes = serialize(set);
  std::string flipped = bytes;
  flipped[bytes.size() / 2] = static_cast<char>(flipped[bytes.size() / 2] ^ 0x10);
  EXPECT_THROW(deserialize(flipped), ParseError);
  EXPECT_THROW(deserialize(bytes.substr(0, bytes.size() - 3)), ParseError);
  EXPECT_THROW(deserialize("IMPLREP0"), ParseError);
  EXPECT_THROW(deserialize(""), ParseError);
}

TEST(LabelTest, TruncatedLabelRaisesDecodeError) {
  Rng rng(57);
  const LabelSet set = build_labels(GyarfasInstance(random_connected_bipartite(5, 5, 0.3, rng)), LabelOptions{32});
  Label cut = set.labels[0];
  ASSERT_GT(cut.bit_length, 4u);
  cut.bit_length -= 3;
  EXPECT_THROW(parse_label(cut, set.operand_width), DecodeError);
  Label lying = set.labels[0];
  lying.bit_length = static_cast<std::uint32_t>(lying.bytes.size() * 8 + 8);
  EXPECT_THROW(parse_label(lying, set.operand_width), DecodeError);
  EXPECT_THROW(parse_label(set.labels[0], 0), DecodeError);
}

TEST(LabelTest, DecoderNeedsOnlyTheTwoLabels) {
  // Build, serialise and drop everything; decode from the bytes alone and
  // compare against a separately kept adjacency table.
  std::string bytes;
  std::vector<std::vector<bool>> truth;
  {
    Rng rng(58);
    const BipartiteGraph g = random_connected_bipartite(9, 9, 0.25, rng);
    const GyarfasInstance inst(g);
    bytes = serialize(build_labels(inst, LabelOptions{32}));
    truth.assign(g.vertex_count(), std::vector<bool>(g.vertex_count()));
    for (int x = 0; x < g.vertex_count(); ++x) {
      for (int y = 0; y < g.vertex_count(); ++y) truth[x][y] = g.adjacent(x, y);
    }
  }
  const LabelSet set = deserialize(bytes);
  for (std::size_t x = 0; x < truth.size(); ++x) {
    const ParsedLabel px = parse_label(set.labels[x], set.operand_width);
    for (std::size_t y = 0; y < truth.size(); ++y) {
      const ParsedLabel py = parse_label(set.labels[y], set.operand_width);
      EXPECT_EQ(decode(px, py), truth[x][y]);
    }
  }
}

TEST(LabelTest, MeasureReportsBitsPerLogN) {
  Rng rng(59);
  const LabelSet set = build_labels(GyarfasInstance(random_equivalence_graph(32, 32, 4, rng)));
  const LabelMeasure m = measure(set);
  std::uint32_t longest = 0;
  double total = 0;
  for (const auto& l : set.labels) {
    longest = std::max(longest, l.bit_length);
    total += l.bit_length;
  }
  EXPECT_EQ(m.max_bits, longest);
  EXPECT_NEAR(m.mean_bits, total / set.labels.size(), 1e-9);
  EXPECT_NEAR(m.bits_per_log_n, static_cast<double>(longest) / 6.0, 1e-9);
}

TEST(LabelTest, SizeLawOnEquivalenceFamily) {
  double first = 0;
  for (int n : {64, 128, 256, 512}) {
    Rng rng(static_cast<std::uint64_t>(600 + n));
    const GyarfasInstance inst(random_equivalence_graph(n / 2, n / 2, 8, rng));
    const LabelSet set = build_labels(inst);
    const LabelMeasure m = measure(set);
    if (n == 64) first = m.bits_per_log_n;
    EXPECT_LE(m.bits_per_log_n, 2 * first) << "N = " << n;
    EXPECT_LE(m.max_bits, size_bound(set));
  }
}

}  // namespace
}  // namespace implrep
