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

#include "implrep/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include "implrep/errors.hpp"
#include "implrep/generators.hpp"
#include "implrep/geometry_io.hpp"
#include "implrep/graph_io.hpp"
#include "implrep/gyarfas.hpp"
#include "implrep/labeling.hpp"
#include "implrep/oracles.hpp"
#include "implrep/protocol.hpp"

namespace implrep {
namespace {

struct Config {
  std::uint64_t seed = 1;
  std::string out_path;
  int threads = 1;
  int cost_ceiling = kDefaultCostCeiling;

  FamilySpec family;
  std::string box_text = "8";
  std::string radius_text = "2";

  std::string input;
  std::string labels_path;
  std::string proto;
  bool csv = false;
  std::vector<int> pair;

  std::string oracle;
  std::string pattern_path;
  int cap = kDefaultChainCap;
  bool open_neighbourhoods = false;
  bool json = false;
};

// Text report written either to the --out file or to the output stream.
class Report {
 public:
  std::ostringstream& stream() { return buffer_; }
  void emit(const Config& cfg, std::ostream& out) {
    if (cfg.out_path.empty()) {
      out << buffer_.str();
    } else {
      write_file(cfg.out_path, buffer_.str());
    }
  }

 private:
  std::ostringstream buffer_;
};

std::string fixed3(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << v;
  return s.str();
}

std::string family_alias(const std::string& name) {
  if (name == "P") return "path";
  if (name == "C") return "cycle";
  if (name == "S") return "star";
  if (name == "K") return "biclique";
  if (name == "H") return "half-graph";
  return name;
}

std::string default_proto(const AnyInstance& inst) {
  if (std::holds_alternative<SignRankVectors>(inst)) return "signrank3";
  if (std::holds_alternative<UdgRealization>(inst)) return "udg";
  return "gyarfas";
}

std::unique_ptr<ProtocolInstance> make_instance(AnyInstance inst, std::string proto) {
  if (proto.empty()) proto = default_proto(inst);
  if (proto == "gyarfas") {
    if (auto* g = std::get_if<BipartiteGraph>(&inst)) return std::make_unique<GyarfasInstance>(std::move(*g));
    throw PreconditionError("protocol 'gyarfas' needs a bipartite graph input");
  }
  if (proto == "signrank3") {
    if (auto* v = std::get_if<SignRankVectors>(&inst)) return std::make_unique<SignRank3Instance>(std::move(*v));
    throw PreconditionError("protocol 'signrank3' needs a sign-rank vector input");
  }
  if (proto == "udg") {
    if (auto* r = std::get_if<UdgRealization>(&inst)) return std::make_unique<UdgInstance>(std::move(*r));
    throw PreconditionError("protocol 'udg' needs a unit disk input");
  }
  throw PreconditionError("unknown protocol '" + proto + "'");
}

BipartiteGraph require_bipartite(AnyInstance inst, const std::string& what) {
  if (auto* g = std::get_if<BipartiteGraph>(&inst)) return std::move(*g);
  throw PreconditionError(what + " needs a bipartite graph input");
}

int cmd_gen(const Config& cfg, std::ostream& out) {
  FamilySpec spec = cfg.family;
  spec.family = family_alias(spec.family);
  spec.box = parse_rational(cfg.box_text);
  spec.radius = parse_rational(cfg.radius_text);
  const Generated g = generate(spec, cfg.seed);
  Report r;
  std::visit([&](const auto& x) { r.stream() << to_text(x); }, g);
  r.emit(cfg, out);
  return kExitOk;
}

int cmd_decompose(const Config& cfg, std::ostream& out) {
  const BipartiteGraph g = require_bipartite(parse_instance_text(read_file(cfg.input)), "decompose");
  const auto trees = gyarfas_forest(g);
  Report r;
  auto& s = r.stream();
  bool ok = true;
  s << "components " << trees.size() << "\n";
  for (std::size_t k = 0; k < trees.size(); ++k) {
    const int tag = trees.size() > 1 ? static_cast<int>(k) : -1;
    s << dump(trees[k], tag);
    for (int b = 0; b < trees[k].bag_count(); ++b) {
      s << "backdegree " << (tag >= 0 ? std::to_string(k) + "." : std::string()) << b << " "
        << back_degree(trees[k], b, false).count << " " << back_degree(trees[k], b, true).count << "\n";
    }
    const DecompositionReport rep = verify_decomposition(trees[k]);
    ok = ok && rep.ok();
    if (!rep.ok()) s << rep.to_string();
  }
  s << "verify: " << (ok ? "PASS" : "FAIL") << "\n";
  r.emit(cfg, out);
  return ok ? kExitOk : kExitFailed;
}

int cmd_protocol(const Config& cfg, std::ostream& out) {
  const auto inst = make_instance(parse_instance_text(read_file(cfg.input)), cfg.proto);
  Report r;
  auto& s = r.stream();
  if (!cfg.pair.empty()) {
    const int x = cfg.pair[0], y = cfg.pair[1];
    if (x < 0 || y < 0 || x >= inst->vertex_count() || y >= inst->vertex_count() || !inst->in_domain(x, y)) {
      throw PreconditionError("pair is not an input of this protocol");
    }
    const ProtocolRun run = inst->run(x, y);
    s << run.dump();
    s << "cost " << run.meter.total() << " bits " << run.meter.bits_sent << " eq " << run.meter.eq_calls << " depth "
      << run.meter.recursion_depth << "\n";
    r.emit(cfg, out);
    return run.adjacent == inst->adjacent(x, y) ? kExitOk : kExitFailed;
  }
  const AllPairsReport rep = run_all_pairs(*inst, cfg.threads);
  if (cfg.csv) {
    s << "cost,count\n";
    for (const auto& [c, k] : rep.cost_histogram) s << c << "," << k << "\n";
  } else {
    s << "protocol " << inst->name() << "\n";
    s << "vertices " << inst->vertex_count() << "\n";
    s << "pairs " << rep.pairs << "\n";
    s << "mismatches " << rep.mismatches << "\n";
    s << "max_cost " << rep.max_cost << "\n";
    s << "max_bits " << rep.max_bits << "\n";
    s << "max_eq " << rep.max_eq << "\n";
    s << "max_depth " << rep.max_recursion_depth << "\n";
    for (const auto& [c, k] : rep.cost_histogram) s << "cost " << c << " " << k << "\n";
    if (!rep.correct()) s << "first_mismatch " << rep.first_bad_x << " " << rep.first_bad_y << "\n";
    s << "verdict " << (rep.correct() ? "PASS" : "FAIL") << "\n";
  }
  r.emit(cfg, out);
  return rep.correct() ? kExitOk : kExitFailed;
}

void write_measure(std::ostream& s, const LabelSet& set) {
  const LabelMeasure m = measure(set);
  s << "vertices " << set.vertex_count << "\n";
  s << "cost " << static_cast<int>(set.cost) << "\n";
  s << "operand_width " << static_cast<int>(set.operand_width) << "\n";
  s << "max_bits " << m.max_bits << "\n";
  s << "mean_bits " << fixed3(m.mean_bits) << "\n";
  s << "bits_per_log_n " << fixed3(m.bits_per_log_n) << "\n";
}

int cmd_label(const Config& cfg, std::ostream& out) {
  if (cfg.out_path.empty()) throw PreconditionError("label needs --out for the label file");
  const auto inst = make_instance(parse_instance_text(read_file(cfg.input)), cfg.proto);
  const LabelSet set = build_labels(*inst, {cfg.cost_ceiling});
  write_file(cfg.out_path, serialize(set));
  write_measure(out, set);
  return kExitOk;
}

int cmd_label_verify(const Config& cfg, std::ostream& out) {
  const LabelSet set = deserialize(read_file(cfg.labels_path));
  const auto inst = make_instance(parse_instance_text(read_file(cfg.input)), cfg.proto);
  Report r;
  auto& s = r.stream();
  write_measure(s, set);
  if (set.vertex_count != static_cast<std::uint64_t>(inst->vertex_count())) {
    s << "verdict FAIL (label count differs from the instance)\n";
    r.emit(cfg, out);
    return kExitFailed;
  }
  std::vector<ParsedLabel> parsed;
  parsed.reserve(set.labels.size());
  for (const auto& l : set.labels) parsed.push_back(parse_label(l, set.operand_width));
  std::size_t pairs = 0, mismatches = 0;
  for (int x = 0; x < inst->vertex_count(); ++x) {
    for (int y = 0; y < inst->vertex_count(); ++y) {
      if (!inst->in_domain(x, y)) continue;
      ++pairs;
      if (decode(parsed[x], parsed[y]) != inst->adjacent(x, y)) ++mismatches;
    }
  }
  s << "pairs " << pairs << "\n";
  s << "mismatches " << mismatches << "\n";
  s << "verdict " << (mismatches == 0 ? "PASS" : "FAIL") << "\n";
  r.emit(cfg, out);
  return mismatches == 0 ? kExitOk : kExitFailed;
}

template <class G>
std::string tokens(const G& g, const std::vector<int>& ids) {
  std::string s;
  for (int v : ids) {
    if (!s.empty()) s += ",";
    if constexpr (std::is_same_v<G, BipartiteGraph>) {
      s += vertex_token(g, v);
    } else {
      s += std::to_string(v);
    }
  }
  return s;
}

// key=value lines with --json, "key value" lines otherwise.
class KeyValue {
 public:
  KeyValue(std::ostream& s, bool kv) : s_(s), kv_(kv) {}
  void put(const std::string& key, const std::string& value) { s_ << key << (kv_ ? "=" : " ") << value << "\n"; }

 private:
  std::ostream& s_;
  bool kv_;
};

template <class G>
void oracle_generic(const Config& cfg, const G& g, KeyValue& kv) {
  if (cfg.oracle == "ch") {
    const ChainIndex ch = chain_index(g, cfg.cap);
    kv.put("ch", std::to_string(ch.k));
    kv.put("cap", std::to_string(cfg.cap));
    kv.put("a", tokens(g, ch.witness.a));
    kv.put("b", tokens(g, ch.witness.b));
  } else if (cfg.oracle == "degeneracy") {
    const Degeneracy d = degeneracy(g);
    kv.put("degeneracy", std::to_string(d.value));
    kv.put("order", tokens(g, d.order));
  } else if (cfg.oracle == "induced") {
    if (cfg.pattern_path.empty()) throw PreconditionError("induced oracle needs --pattern");
    AnyInstance p = parse_instance_text(read_file(cfg.pattern_path));
    const G* pattern = std::get_if<G>(&p);
    if (!pattern) throw PreconditionError("pattern must be of the same graph kind as the host");
    const auto emb = contains_induced(g, *pattern);
    kv.put("induced", emb ? "FOUND" : "NONE");
    if (emb) kv.put("embedding", tokens(g, *emb));
  } else {
    throw PreconditionError("oracle '" + cfg.oracle + "' needs a bipartite graph input");
  }
}

int cmd_oracle(const Config& cfg, std::ostream& out) {
  AnyInstance inst = parse_instance_text(read_file(cfg.input));
  Report r;
  KeyValue kv(r.stream(), cfg.json);
  kv.put("oracle", cfg.oracle);
  if (auto* general = std::get_if<Graph>(&inst)) {
    oracle_generic(cfg, *general, kv);
  } else {
    const BipartiteGraph g = require_bipartite(std::move(inst), "oracle");
    if (cfg.oracle == "eat") {
      const auto w = has_edge_asteroid_triple(g, {cfg.open_neighbourhoods});
      kv.put("eat", w ? "FOUND" : "NONE");
      if (w) {
        for (int i = 0; i < 3; ++i) {
          kv.put("edge" + std::to_string(i + 1), vertex_token(g, w->edges[i].first) + "-" + vertex_token(g, w->edges[i].second));
        }
        for (int i = 0; i < 3; ++i) kv.put("path" + std::to_string(i + 1), tokens(g, w->paths[i]));
      }
    } else if (cfg.oracle == "equivgraph") {
      const auto parts = is_equivalence_graph(g);
      kv.put("equivgraph", parts ? "YES" : "NO");
      if (parts) {
        kv.put("bicliques", std::to_string(parts->size()));
        for (std::size_t k = 0; k < parts->size(); ++k) {
          std::vector<int> ids;
          for (int l : (*parts)[k].left) ids.push_back(g.left_id(l));
          for (int rr : (*parts)[k].right) ids.push_back(g.right_id(rr));
          kv.put("biclique" + std::to_string(k), tokens(g, ids));
        }
      }
    } else {
      oracle_generic(cfg, g, kv);
    }
  }
  r.emit(cfg, out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Adjacency protocols, decompositions and labels for structured bipartite graphs", "implrep"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", cfg.seed, "64-bit seed of the mt19937_64 generator");
  app.add_option("--out", cfg.out_path, "output file");
  app.add_option("--threads", cfg.threads, "worker threads for all-pairs runs")->check(CLI::Range(1, 256));
  app.add_option("--cost-ceiling", cfg.cost_ceiling, "largest protocol cost accepted for labels")->check(CLI::Range(0, 255));

  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--family", cfg.family.family, "path|cycle|star|biclique|half-graph|random-bipartite|"
                                                 "random-connected-bipartite|equivalence|udg|signrank3 (aliases P C S K H)")
      ->required();
  gen->add_option("--t", cfg.family.t, "length / size parameter");
  gen->add_option("--s", cfg.family.s, "number of star legs");
  gen->add_option("--n", cfg.family.n, "number of points");
  gen->add_option("--nl", cfg.family.n_left, "left side size");
  gen->add_option("--nr", cfg.family.n_right, "right side size");
  gen->add_option("--p", cfg.family.p, "edge probability");
  gen->add_option("--blocks", cfg.family.blocks, "number of blocks");
  gen->add_option("--box", cfg.box_text, "side of the square holding the points");
  gen->add_option("--r", cfg.radius_text, "disk radius");

  auto* dec = app.add_subcommand("decompose", "decompose a bipartite graph and verify the tree");
  dec->add_option("input", cfg.input, "graph file")->required();

  auto* proto = app.add_subcommand("protocol", "run a protocol on all pairs");
  proto->add_option("input", cfg.input, "instance file")->required();
  proto->add_option("--proto", cfg.proto, "gyarfas|signrank3|udg (default: from the input)");
  proto->add_flag("--csv", cfg.csv, "emit the cost histogram as CSV");
  proto->add_option("--pair", cfg.pair, "print the transcript of one pair x y")->expected(2);

  auto* label = app.add_subcommand("label", "build adjacency labels");
  label->add_option("input", cfg.input, "instance file")->required();
  label->add_option("--proto", cfg.proto, "gyarfas|signrank3|udg (default: from the input)");

  auto* verify = app.add_subcommand("label-verify", "decode every pair of a label file");
  verify->add_option("labels", cfg.labels_path, "label file")->required();
  verify->add_option("input", cfg.input, "instance file")->required();
  verify->add_option("--proto", cfg.proto, "gyarfas|signrank3|udg (default: from the input)");

  auto* oracle = app.add_subcommand("oracle", "evaluate a structural oracle");
  oracle->add_option("name", cfg.oracle, "ch|eat|induced|degeneracy|equivgraph")
      ->required()
      ->check(CLI::IsMember({"ch", "eat", "induced", "degeneracy", "equivgraph"}));
  oracle->add_option("input", cfg.input, "graph file")->required();
  oracle->add_option("--pattern", cfg.pattern_path, "pattern graph for the induced oracle");
  oracle->add_option("--cap", cfg.cap, "chain-index search cap")->check(CLI::Range(0, 64));
  oracle->add_flag("--open-neighbourhoods", cfg.open_neighbourhoods, "avoid open instead of closed neighbourhoods");
  oracle->add_flag("--json", cfg.json, "key=value output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(cfg, out);
    if (*dec) return cmd_decompose(cfg, out);
    if (*proto) return cmd_protocol(cfg, out);
    if (*label) return cmd_label(cfg, out);
    if (*verify) return cmd_label_verify(cfg, out);
    if (*oracle) return cmd_oracle(cfg, out);
  } catch (const CapacityError& e) {
    err << "refused: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DecodeError& e) {
    err << "decode error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace implrep
