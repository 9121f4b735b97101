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

#include "implrep/graph_io.hpp"

#include "implrep/errors.hpp"
#include "line_reader.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace implrep {

AnyGraph parse_graph(std::istream& in) {
  LineReader r(in);
  if (!r.next()) throw ParseError("empty graph file");
  const auto& tok = r.tokens();
  bool bipartite;
  long long n_left = 0, n_right = 0, n = 0, m = 0;
  if (tok[0] == "bipartite" && tok.size() == 4) {
    bipartite = true;
    n_left = r.integer(1);
    n_right = r.integer(2);
    m = r.integer(3);
  } else if (tok[0] == "graph" && tok.size() == 3) {
    bipartite = false;
    n = r.integer(1);
    m = r.integer(2);
  } else {
    r.fail("bad header");
  }
  if (n_left < 0 || n_right < 0 || n < 0 || m < 0) throw ParseError("negative count in header");
  std::vector<std::pair<int, int>> edges;
  while (r.next()) {
    if (tok[0] != "e" || tok.size() != 3) r.fail("expected 'e <u> <v>'");
    const long long u = r.integer(1), v = r.integer(2);
    const long long lim_u = bipartite ? n_left : n;
    const long long lim_v = bipartite ? n_right : n;
    if (u < 0 || v < 0 || u >= lim_u || v >= lim_v) r.fail("vertex id out of range");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError("header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  try {
    if (bipartite) return BipartiteGraph(static_cast<int>(n_left), static_cast<int>(n_right), std::move(edges));
    return Graph(static_cast<int>(n), std::move(edges));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

AnyGraph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

BipartiteGraph parse_bipartite_text(const std::string& text) {
  AnyGraph g = parse_graph_text(text);
  if (auto* b = std::get_if<BipartiteGraph>(&g)) return std::move(*b);
  throw ParseError("expected a bipartite graph");
}

std::string to_text(const BipartiteGraph& g) {
  std::ostringstream out;
  out << "bipartite " << g.n_left() << ' ' << g.n_right() << ' ' << g.edge_count() << '\n';
  for (auto [l, r] : g.edges()) out << "e " << l << ' ' << r << '\n';
  return out.str();
}

std::string to_text(const Graph& g) {
  std::ostringstream out;
  out << "graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << contents;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace implrep
