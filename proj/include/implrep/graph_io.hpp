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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>

#include "implrep/graph.hpp"

namespace implrep {

// Text format (UTF-8, LF):
//   bipartite <nL> <nR> <m>      or      graph <n> <m>
//   e <u> <v>                            (m lines; bipartite: u left, v right)
// Ids are 0-based. Blank lines and lines starting with '#' are ignored.
using AnyGraph = std::variant<BipartiteGraph, Graph>;

AnyGraph parse_graph(std::istream& in);
AnyGraph parse_graph_text(const std::string& text);
BipartiteGraph parse_bipartite_text(const std::string& text);

std::string to_text(const BipartiteGraph& g);
std::string to_text(const Graph& g);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace implrep
