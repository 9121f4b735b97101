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

#include "implrep/geometry_io.hpp"

#include <sstream>
#include <utility>

#include "implrep/errors.hpp"
#include "implrep/graph_io.hpp"
#include "line_reader.hpp"

namespace implrep {
namespace {

Vec read_vec(const LineReader& r, std::size_t first, int dim) {
  Vec v;
  for (int i = 0; i < dim; ++i) v.push_back(r.rational(first + i));
  return v;
}

void write_vec(std::ostringstream& out, const Vec& v) {
  for (const auto& x : v) out << ' ' << format_rational(x);
}

template <class F>
auto wrap_precondition(F&& build) {
  try {
    return build();
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::string first_keyword(const std::string& text) {
  std::istringstream in(text);
  LineReader r(in);
  if (!r.next()) throw ParseError("empty input");
  return r.tokens()[0];
}

}  // namespace

Scene parse_scene_text(const std::string& text) {
  std::istringstream in(text);
  LineReader r(in);
  if (!r.next() || r.tokens()[0] != "scene" || r.tokens().size() != 4) throw ParseError("expected 'scene <d> <points> <halfspaces>'");
  const long long d = r.integer(1), np = r.integer(2), nh = r.integer(3);
  if (d < 1 || np < 0 || nh < 0) r.fail("bad scene header");
  std::vector<Vec> points;
  std::vector<Halfspace> hs;
  while (r.next()) {
    const auto& t = r.tokens();
    if (t[0] == "p" && t.size() == static_cast<std::size_t>(d + 1)) {
      points.push_back(read_vec(r, 1, static_cast<int>(d)));
    } else if (t[0] == "h" && t.size() == static_cast<std::size_t>(d + 2)) {
      hs.push_back({read_vec(r, 1, static_cast<int>(d)), r.rational(d + 1)});
    } else {
      r.fail("expected a point or halfspace line of dimension " + std::to_string(d));
    }
  }
  if (static_cast<long long>(points.size()) != np || static_cast<long long>(hs.size()) != nh) {
    throw ParseError("scene counts do not match its header");
  }
  return wrap_precondition([&] { return Scene(static_cast<int>(d), std::move(points), std::move(hs)); });
}

UdgRealization parse_udg_text(const std::string& text) {
  std::istringstream in(text);
  LineReader r(in);
  if (!r.next() || r.tokens()[0] != "udg" || r.tokens().size() != 3) throw ParseError("expected 'udg <n> <r>'");
  const long long n = r.integer(1);
  const Rational radius = r.rational(2);
  if (n < 0) r.fail("negative point count");
  std::vector<Point2> points;
  while (r.next()) {
    if (r.tokens()[0] != "p" || r.tokens().size() != 3) r.fail("expected 'p <x> <y>'");
    points.push_back({r.rational(1), r.rational(2)});
  }
  if (static_cast<long long>(points.size()) != n) throw ParseError("point count does not match the header");
  return wrap_precondition([&] { return UdgRealization(std::move(points), radius); });
}

SignRankVectors parse_signrank_text(const std::string& text) {
  std::istringstream in(text);
  LineReader r(in);
  if (!r.next() || r.tokens()[0] != "signrank" || r.tokens().size() != 4) {
    throw ParseError("expected 'signrank <d> <|U|> <|W|>'");
  }
  const long long d = r.integer(1), nu = r.integer(2), nw = r.integer(3);
  if (d < 1 || nu < 0 || nw < 0) r.fail("bad sign-rank header");
  std::vector<Vec> u, w;
  while (r.next()) {
    const auto& t = r.tokens();
    if (t.size() != static_cast<std::size_t>(d + 1) || (t[0] != "u" && t[0] != "w")) {
      r.fail("expected a 'u' or 'w' line of dimension " + std::to_string(d));
    }
    (t[0] == "u" ? u : w).push_back(read_vec(r, 1, static_cast<int>(d)));
  }
  if (static_cast<long long>(u.size()) != nu || static_cast<long long>(w.size()) != nw) {
    throw ParseError("vector counts do not match the header");
  }
  return wrap_precondition([&] { return SignRankVectors(static_cast<int>(d), std::move(u), std::move(w)); });
}

std::string to_text(const Scene& scene) {
  std::ostringstream out;
  out << "scene " << scene.dim() << ' ' << scene.points().size() << ' ' << scene.halfspaces().size() << '\n';
  for (const auto& p : scene.points()) {
    out << 'p';
    write_vec(out, p);
    out << '\n';
  }
  for (const auto& h : scene.halfspaces()) {
    out << 'h';
    write_vec(out, h.normal);
    out << ' ' << format_rational(h.threshold) << '\n';
  }
  return out.str();
}

std::string to_text(const UdgRealization& r) {
  std::ostringstream out;
  out << "udg " << r.size() << ' ' << format_rational(r.radius()) << '\n';
  for (const auto& p : r.points()) out << "p " << format_rational(p.x) << ' ' << format_rational(p.y) << '\n';
  return out.str();
}

std::string to_text(const SignRankVectors& v) {
  std::ostringstream out;
  out << "signrank " << v.dim() << ' ' << v.u().size() << ' ' << v.w().size() << '\n';
  for (const auto& a : v.u()) {
    out << 'u';
    write_vec(out, a);
    out << '\n';
  }
  for (const auto& b : v.w()) {
    out << 'w';
    write_vec(out, b);
    out << '\n';
  }
  return out.str();
}

AnyInstance parse_instance_text(const std::string& text) {
  const std::string key = first_keyword(text);
  if (key == "bipartite" || key == "graph") {
    AnyGraph g = parse_graph_text(text);
    if (auto* b = std::get_if<BipartiteGraph>(&g)) return std::move(*b);
    return std::get<Graph>(std::move(g));
  }
  if (key == "scene") return parse_scene_text(text);
  if (key == "udg") return parse_udg_text(text);
  if (key == "signrank") return parse_signrank_text(text);
  throw ParseError("unknown input kind '" + key + "'");
}

}  // namespace implrep
