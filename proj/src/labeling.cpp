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

#include "implrep/labeling.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <string_view>
#include <unordered_map>

#include "implrep/errors.hpp"

namespace implrep {
namespace {

constexpr std::uint8_t kPassive = 0;
constexpr std::uint8_t kOwnBit = 1;
constexpr std::uint8_t kEq = 2;
constexpr std::uint8_t kLeaf = 3;

constexpr char kMagic[] = "IMPLREP1";
constexpr std::uint8_t kVersion = 1;

// Node of the global prefix tree: a node is the sequence of answers so far.
struct TrieNode {
  int child[2] = {-1, -1};
  std::unordered_map<std::string, std::uint32_t> operand_ids;
};

// What one vertex in one role does at a node: the event kind as seen from its
// side and its contribution (own bit, operand id, or leaf output).
struct Step {
  std::uint8_t kind = kPassive;
  std::uint32_t value = 0;
  friend bool operator==(const Step&, const Step&) = default;
};

using RoleRecord = std::unordered_map<int, Step>;

class BitWriter {
 public:
  void put(bool bit) {
    if (bits_ % 8 == 0) bytes_.push_back(0);
    if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (bits_ % 8));
    ++bits_;
  }
  void put_bits(std::uint64_t value, int width) {
    for (int i = width - 1; i >= 0; --i) put(((value >> i) & 1u) != 0);
  }
  Label take() { return Label{bits_, std::move(bytes_)}; }

 private:
  std::uint32_t bits_ = 0;
  std::vector<std::uint8_t> bytes_;
};

class BitReader {
 public:
  explicit BitReader(const Label& l) : label_(l) {
    if (label_.bytes.size() * 8 < label_.bit_length) throw DecodeError("label shorter than its declared length");
  }
  bool get() {
    if (pos_ >= label_.bit_length) throw DecodeError("label ends early");
    const bool bit = (label_.bytes[pos_ / 8] >> (7 - pos_ % 8)) & 1u;
    ++pos_;
    return bit;
  }
  std::uint64_t get_bits(int width) {
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) v = (v << 1) | (get() ? 1u : 0u);
    return v;
  }
  bool done() const { return pos_ == label_.bit_length; }

 private:
  const Label& label_;
  std::uint32_t pos_ = 0;
};

class Builder {
 public:
  explicit Builder(int n) : alice_(n), bob_(n) { nodes_.emplace_back(); }

  void add(int x, int y, const ProtocolRun& run) {
    int node = 0;
    for (const auto& e : run.transcript) {
      bool answer = e.value;
      if (e.kind == TranscriptEvent::Kind::Bit) {
        const Step own{kOwnBit, static_cast<std::uint32_t>(e.value)};
        const bool by_alice = e.sender == Party::Alice;
        record(alice_[x], node, by_alice ? own : Step{});
        record(bob_[y], node, by_alice ? Step{} : own);
      } else {
        record(alice_[x], node, Step{kEq, operand_id(node, e.alice_operand)});
        record(bob_[y], node, Step{kEq, operand_id(node, e.bob_operand)});
        answer = e.alice_operand == e.bob_operand;
      }
      node = child(node, answer);
    }
    const Step leaf{kLeaf, run.adjacent ? 1u : 0u};
    record(alice_[x], node, leaf);
    record(bob_[y], node, leaf);
  }

  int operand_width() const {
    std::size_t widest = 1;
    for (const auto& n : nodes_) widest = std::max(widest, n.operand_ids.size());
    return std::max(1, ceil_log2(widest));
  }

  Label encode(int v, int width) const {
    BitWriter w;
    encode_role(w, alice_[v], width);
    encode_role(w, bob_[v], width);
    return w.take();
  }

 private:
  static void record(RoleRecord& r, int node, Step step) {
    auto [it, inserted] = r.emplace(node, step);
    if (!inserted && !(it->second == step)) {
      throw std::logic_error("a party's next step depends on more than its input and the transcript");
    }
  }

  std::uint32_t operand_id(int node, const EqOperand& op) {
    auto& ids = nodes_[node].operand_ids;
    return ids.emplace(op.bytes(), static_cast<std::uint32_t>(ids.size())).first->second;
  }

  int child(int node, bool answer) {
    int c = nodes_[node].child[answer ? 1 : 0];
    if (c < 0) {
      c = static_cast<int>(nodes_.size());
      nodes_[node].child[answer ? 1 : 0] = c;
      nodes_.emplace_back();
    }
    return c;
  }

  void encode_role(BitWriter& w, const RoleRecord& r, int width) const {
    if (!r.contains(0)) {
      w.put(false);
      return;
    }
    w.put(true);
    encode_node(w, r, width, 0);
  }

  void encode_node(BitWriter& w, const RoleRecord& r, int width, int node) const {
    const TrieNode& n = nodes_[node];
    const Step step = r.at(node);
    w.put_bits(step.kind, 2);
    switch (step.kind) {
      case kLeaf:
        w.put(step.value != 0);
        return;
      case kOwnBit:
        w.put(step.value != 0);
        encode_node(w, r, width, n.child[step.value != 0 ? 1 : 0]);
        return;
      case kEq:
        w.put_bits(step.value, width);
        break;
      default:
        break;
    }
    const bool c0 = n.child[0] >= 0 && r.contains(n.child[0]);
    const bool c1 = n.child[1] >= 0 && r.contains(n.child[1]);
    w.put(c0);
    w.put(c1);
    if (c0) encode_node(w, r, width, n.child[0]);
    if (c1) encode_node(w, r, width, n.child[1]);
  }

  std::vector<TrieNode> nodes_;
  std::vector<RoleRecord> alice_;
  std::vector<RoleRecord> bob_;
};

int parse_node(BitReader& in, std::vector<ParsedLabel::Node>& out, int width, int depth) {
  if (depth > 4096) throw DecodeError("label nests too deeply");
  const int id = static_cast<int>(out.size());
  out.emplace_back();
  ParsedLabel::Node n;
  n.kind = static_cast<std::uint8_t>(in.get_bits(2));
  auto children = [&] {
    const bool c0 = in.get();
    const bool c1 = in.get();
    if (c0) n.child[0] = parse_node(in, out, width, depth + 1);
    if (c1) n.child[1] = parse_node(in, out, width, depth + 1);
  };
  switch (n.kind) {
    case kLeaf:
      n.payload = in.get() ? 1 : 0;
      break;
    case kEq:
      n.payload = in.get_bits(width);
      children();
      break;
    case kOwnBit:
      n.payload = in.get() ? 1 : 0;
      n.child[n.payload] = parse_node(in, out, width, depth + 1);
      break;
    default:
      children();
      break;
  }
  out[id] = n;
  return id;
}

void parse_role(BitReader& in, std::vector<ParsedLabel::Node>& out, int width) {
  if (in.get()) parse_node(in, out, width, 0);
}

void put_le(std::string& out, std::uint64_t v, int bytes) {
  for (int i = 0; i < bytes; ++i) {
    out.push_back(static_cast<char>(v & 0xff));
    v >>= 8;
  }
}

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : data) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

class ByteReader {
 public:
  explicit ByteReader(std::string_view d) : data_(d) {}
  std::uint64_t le(int bytes) {
    need(bytes);
    std::uint64_t v = 0;
    for (int i = 0; i < bytes; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(data_[pos_ + i])) << (8 * i);
    pos_ += bytes;
    return v;
  }
  std::string_view take(std::size_t n) {
    need(n);
    auto s = data_.substr(pos_, n);
    pos_ += n;
    return s;
  }
  std::size_t remaining() const { return data_.size() - pos_; }

 private:
  void need(std::size_t n) const {
    if (data_.size() - pos_ < n) throw ParseError("label file is truncated");
  }
  std::string_view data_;
  std::size_t pos_ = 0;
};

}  // namespace

int ceil_log2(std::uint64_t n) {
  int k = 0;
  while (k < 64 && (std::uint64_t{1} << k) < n) ++k;
  return k;
}

LabelSet build_labels(const ProtocolInstance& inst, LabelOptions options) {
  const int n = inst.vertex_count();
  Builder builder(n);
  int cost = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!inst.in_domain(x, y)) continue;
      const ProtocolRun run = inst.run(x, y);
      cost = std::max(cost, run.meter.total());
      if (cost > options.cost_ceiling) {
        throw CapacityError("protocol cost " + std::to_string(cost) + " exceeds the label cost ceiling " +
                            std::to_string(options.cost_ceiling));
      }
      builder.add(x, y, run);
    }
  }
  LabelSet set;
  set.vertex_count = static_cast<std::uint64_t>(n);
  set.cost = static_cast<std::uint8_t>(std::min(cost, 255));
  set.operand_width = static_cast<std::uint8_t>(builder.operand_width());
  set.labels.reserve(n);
  for (int v = 0; v < n; ++v) set.labels.push_back(builder.encode(v, set.operand_width));
  return set;
}

ParsedLabel parse_label(const Label& label, std::uint8_t operand_width) {
  if (operand_width == 0 || operand_width > 32) throw DecodeError("invalid operand width");
  BitReader in(label);
  ParsedLabel out;
  parse_role(in, out.alice, operand_width);
  parse_role(in, out.bob, operand_width);
  if (!in.done()) throw DecodeError("label has trailing bits");
  return out;
}

bool decode(const ParsedLabel& x, const ParsedLabel& y) {
  const auto& a = x.alice;
  const auto& b = y.bob;
  if (a.empty() || b.empty()) throw DecodeError("label does not cover this role");
  std::size_t i = 0;
  std::size_t j = 0;
  for (std::size_t steps = 0; steps <= a.size() + b.size(); ++steps) {
    const auto& na = a[i];
    const auto& nb = b[j];
    if (na.kind == kLeaf || nb.kind == kLeaf) {
      if (na.kind != nb.kind || na.payload != nb.payload) throw DecodeError("labels disagree at a leaf");
      return na.payload == 1;
    }
    int answer = 0;
    if (na.kind == kOwnBit && nb.kind == kPassive) {
      answer = static_cast<int>(na.payload);
    } else if (na.kind == kPassive && nb.kind == kOwnBit) {
      answer = static_cast<int>(nb.payload);
    } else if (na.kind == kEq && nb.kind == kEq) {
      answer = na.payload == nb.payload ? 1 : 0;
    } else {
      throw DecodeError("labels disagree on the transcript");
    }
    if (na.child[answer] < 0 || nb.child[answer] < 0) throw DecodeError("transcript prefix missing from a label");
    i = static_cast<std::size_t>(na.child[answer]);
    j = static_cast<std::size_t>(nb.child[answer]);
  }
  throw DecodeError("label walk does not terminate");
}

bool decode(const Label& lx, const Label& ly, std::uint8_t operand_width) {
  return decode(parse_label(lx, operand_width), parse_label(ly, operand_width));
}

LabelMeasure measure(const LabelSet& set) {
  LabelMeasure m;
  if (set.labels.empty()) return m;
  double total = 0;
  for (const auto& l : set.labels) {
    m.max_bits = std::max(m.max_bits, l.bit_length);
    total += l.bit_length;
  }
  m.mean_bits = total / static_cast<double>(set.labels.size());
  m.bits_per_log_n = static_cast<double>(m.max_bits) / std::max(1, ceil_log2(set.vertex_count));
  return m;
}

std::string serialize(const LabelSet& set) {
  std::string out(kMagic, 8);
  out.push_back(static_cast<char>(kVersion));
  put_le(out, set.vertex_count, 8);
  out.push_back(static_cast<char>(set.cost));
  out.push_back(static_cast<char>(set.operand_width));
  for (const auto& l : set.labels) {
    put_le(out, l.bit_length, 4);
    out.append(reinterpret_cast<const char*>(l.bytes.data()), (l.bit_length + 7) / 8);
  }
  put_le(out, fnv1a(out), 8);
  return out;
}

LabelSet deserialize(const std::string& data) {
  if (data.size() < 8 + 1 + 8 + 2 + 8 || data.compare(0, 8, kMagic) != 0) throw ParseError("not a label file");
  const std::string_view body(data.data(), data.size() - 8);
  ByteReader tail(std::string_view(data).substr(data.size() - 8));
  if (tail.le(8) != fnv1a(body)) throw ParseError("label file checksum mismatch");
  ByteReader in(body);
  in.take(8);
  if (static_cast<std::uint8_t>(in.le(1)) != kVersion) throw ParseError("unsupported label file version");
  LabelSet set;
  set.vertex_count = in.le(8);
  set.cost = static_cast<std::uint8_t>(in.le(1));
  set.operand_width = static_cast<std::uint8_t>(in.le(1));
  if (set.vertex_count > in.remaining() / 4) throw ParseError("label file is truncated");
  set.labels.reserve(set.vertex_count);
  for (std::uint64_t v = 0; v < set.vertex_count; ++v) {
    Label l;
    l.bit_length = static_cast<std::uint32_t>(in.le(4));
    const auto bytes = in.take((static_cast<std::size_t>(l.bit_length) + 7) / 8);
    l.bytes.assign(bytes.begin(), bytes.end());
    set.labels.push_back(std::move(l));
  }
  if (in.remaining() != 0) throw ParseError("label file has trailing bytes");
  return set;
}

}  // namespace implrep
