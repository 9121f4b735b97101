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

#include <iosfwd>
#include <string>
#include <variant>

#include "implrep/geometry.hpp"
#include "implrep/graph.hpp"

namespace implrep {

// Text formats (coordinates are exact rationals such as 3, -7/4 or 0.125):
//   scene <d> <points> <halfspaces>   then "p x_1 .. x_d" and "h w_1 .. w_d t"
//   udg <n> <r>                       then "p x y"
//   signrank <d> <|U|> <|W|>          then "u a_1 .. a_d" and "w b_1 .. b_d"
// Lines starting with '#' are comments.

Scene parse_scene_text(const std::string& text);
UdgRealization parse_udg_text(const std::string& text);
SignRankVectors parse_signrank_text(const std::string& text);

std::string to_text(const Scene& scene);
std::string to_text(const UdgRealization& r);
std::string to_text(const SignRankVectors& v);

using AnyInstance = std::variant<BipartiteGraph, Graph, Scene, UdgRealization, SignRankVectors>;

// Dispatches on the header keyword.
AnyInstance parse_instance_text(const std::string& text);

}  // namespace implrep
