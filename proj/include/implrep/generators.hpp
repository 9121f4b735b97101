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
#include <string>
#include <variant>
#include <vector>

#include "implrep/geometry.hpp"
#include "implrep/graph.hpp"
#include "implrep/random.hpp"

namespace implrep {

// Deterministic families. Vertices along paths, cycles and star legs are
// placed on sides by parity of their distance from the first vertex, and the
// k-th vertex of a side gets index k on that side.

// P_t with t vertices v_0 .. v_{t-1}.
BipartiteGraph make_path(int t);
// C_t for even t >= 4.
BipartiteGraph make_cycle(int t);
// Subdivided star S_{s,t}: a centre with s legs, each a path of t vertices.
BipartiteGraph make_subdivided_star(int s, int t);
BipartiteGraph make_biclique(int a, int b);
// Half-graph H_k: a_i ~ b_j iff i < j (a on the left, b on the right).
BipartiteGraph make_half_graph(int k);

// Seeded families.
BipartiteGraph random_bipartite(int n_left, int n_right, double p, Rng& rng);
// A random spanning tree plus each remaining pair with probability p.
BipartiteGraph random_connected_bipartite(int n_left, int n_right, double p, Rng& rng);
// Every vertex gets one of `blocks` labels uniformly; equal labels are joined.
BipartiteGraph random_equivalence_graph(int n_left, int n_right, int blocks, Rng& rng);

inline constexpr std::int64_t kCoordinateDenominator = 64;

// n points with coordinates in [0, box) on the 1/64 grid; pairs at distance
// exactly r are re-sampled.
UdgRealization random_udg(int n, const Rational& box, const Rational& radius, Rng& rng);

// Rational unit vectors in R^3 (inverse stereographic projection of small
// rationals), re-sampled until no zero coordinate in u's last entry and no
// zero inner product remain.
SignRankVectors random_signrank3(int n_u, int n_w, Rng& rng);

// Point-halfspace scene in dimension dim whose incidence graph avoids the
// forbidden biclique of verify_incidence_degeneracy for parameter s. Halfspaces
// are shallow (each holds few points); any halfspace completing a forbidden
// biclique is deleted.
Scene random_k_free_scene(int dim, int s, int n_points, int n_halfspaces, Rng& rng);

// n distinct lattice points in [0, box)^2.
std::vector<Point2> random_points(int n, std::int64_t box, Rng& rng);
// Half-open boxes [x, x + 2^(levels - lx)) x [y, y + 2^(levels - ly)) aligned
// to their own size inside [0, 2^levels)^2.
std::vector<Box> random_dyadic_boxes(int n, int levels, Rng& rng);
// n distinct lines: integer slope in [-3, 3] and intercept in [-8, 15], or
// vertical x = c.
std::vector<Line> random_lines(int n, Rng& rng);

using Generated = std::variant<BipartiteGraph, UdgRealization, SignRankVectors>;

struct FamilySpec {
  std::string family;  // path, cycle, star, biclique, half-graph, random-bipartite,
                       // random-connected-bipartite, equivalence, udg, signrank3
  int t = 0;
  int s = 0;
  int n = 0;
  int n_left = 0;
  int n_right = 0;
  int blocks = 1;
  double p = 0.5;
  Rational box{8};
  Rational radius = kDefaultUdgRadius;
};

// Throws PreconditionError on an unknown family or invalid parameters.
Generated generate(const FamilySpec& spec, std::uint64_t seed);

const std::vector<std::string>& family_names();

}  // namespace implrep
