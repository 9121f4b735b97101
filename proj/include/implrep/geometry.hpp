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

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "implrep/graph.hpp"
#include "implrep/rational.hpp"

namespace implrep {

// Exact rational geometry. All predicates are evaluated without rounding.

using Vec = std::vector<Rational>;

Rational dot(const Vec& a, const Vec& b);

// Open upper halfspace {p : <normal, p> > threshold}.
struct Halfspace {
  Vec normal;
  Rational threshold;
};

// Point-halfspace incidence structure. Invariant: no point lies on the
// boundary hyperplane of any halfspace.
class Scene {
 public:
  Scene() = default;
  // Throws PreconditionError on dimension mismatches or boundary points.
  Scene(int dim, std::vector<Vec> points, std::vector<Halfspace> halfspaces);

  int dim() const { return dim_; }
  const std::vector<Vec>& points() const { return points_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
  bool contains(int point, int halfspace) const;

 private:
  int dim_ = 0;
  std::vector<Vec> points_;
  std::vector<Halfspace> halfspaces_;
};

// Left side = points, right side = halfspaces.
BipartiteGraph incidence_graph(const Scene& scene);

// Vectors with u ~ w iff <u, w> > 0. Invariant: no <u, w> = 0.
class SignRankVectors {
 public:
  SignRankVectors() = default;
  SignRankVectors(int dim, std::vector<Vec> u, std::vector<Vec> w);

  int dim() const { return dim_; }
  const std::vector<Vec>& u() const { return u_; }
  const std::vector<Vec>& w() const { return w_; }
  bool adjacent(int u, int w) const { return dot(u_[u], w_[w]) > 0; }

 private:
  int dim_ = 0;
  std::vector<Vec> u_;
  std::vector<Vec> w_;
};

// Left side = U, right side = W.
BipartiteGraph sign_graph(const SignRankVectors& v);

// Dimension reduction by the sign of the last coordinate:
// positive scene: points a'/|a_d| for a_d > 0, halfspaces <x, b'> > -b_d,
// negative scene: points a'/|a_d| for a_d < 0, halfspaces <x, b'> > b_d,
// where a' and b' drop the last coordinate.
struct SignRankSplit {
  Scene positive;
  Scene negative;
  std::vector<int> positive_u;  // U index of each positive point
  std::vector<int> negative_u;
};

// Throws PreconditionError if some a(u) has a zero last coordinate.
SignRankSplit signrank_split(const SignRankVectors& v);

// Sign pattern of a normal vector: bit i (from the most significant) set when
// coordinate i is negative. Zero counts as positive.
int sign_pattern(const Vec& normal);

bool is_positive(const Scene& scene);

struct PositiveGroup {
  int pattern = 0;
  std::vector<int> halfspaces;  // indices into the source scene
  Scene scene;                  // reflected so every normal is positive
};

// Groups halfspaces by sign pattern and reflects the coordinates with negative
// sign so each group becomes a positive scene with the same incidences.
std::vector<PositiveGroup> positive_partition(const Scene& scene);

// Points p -> -p, halfspaces (w, t) -> (w, -t). The incidence graph of the
// result is the bipartite complement of the input's. Requires dim 2 and a
// positive scene (the reflection keeps normals positive).
Scene positive_complement(const Scene& scene);

// One cell of the sign-rank-3 decomposition: points of U class i against the
// halfspaces of W class alpha (sign pattern of (b_1, b_2)).
struct SignRankPiece {
  int u_class = 0;
  int w_class = 0;
  std::vector<int> u_ids;
  std::vector<int> w_ids;
  Scene scene;           // reflected by w_class, so every normal is positive
  BipartiteGraph graph;  // incidence graph of scene, ids local to u_ids / w_ids
};

struct SignRank3Decomposition {
  std::vector<int> u_class;  // 0: a_3 > 0, 1: a_3 < 0
  std::vector<int> w_class;  // sign pattern of (b_1, b_2)
  std::vector<int> u_local;  // index of u inside its piece's u_ids
  std::vector<int> w_local;
  std::array<SignRankPiece, 8> pieces;  // index u_class * 4 + w_class

  const SignRankPiece& piece(int uc, int wc) const { return pieces[uc * 4 + wc]; }
};

SignRank3Decomposition signrank3_decompose(const SignRankVectors& v);

// Replaces a zero last coordinate of each a by epsilon > 0, chosen as
// min |<a, b>| / (2 max |b_d| + 1) over the affected a, so every sign of
// <a, b> is preserved. Throws PreconditionError if an affected <a, b> is zero.
// Returns the epsilon used (0 if no vector needed it).
Rational perturb_last_coordinate(std::vector<Vec>& a, const std::vector<Vec>& b);

// Inverse stereographic projection: a rational point on the unit sphere S^2.
Vec rational_unit_vector(const Rational& s, const Rational& t);

struct Point2 {
  Rational x;
  Rational y;
};

Rational squared_distance(const Point2& a, const Point2& b);

// Unit disk graph realisation: u ~ v iff |u - v| < radius. A pair at distance
// exactly radius is rejected at construction.
class UdgRealization {
 public:
  UdgRealization() = default;
  UdgRealization(std::vector<Point2> points, Rational radius);

  const std::vector<Point2>& points() const { return points_; }
  const Rational& radius() const { return radius_; }
  int size() const { return static_cast<int>(points_.size()); }
  const Graph& graph() const { return graph_; }
  bool adjacent(int u, int v) const { return graph_.adjacent(u, v); }

 private:
  std::vector<Point2> points_;
  Rational radius_;
  Graph graph_;
};

inline const Rational kDefaultUdgRadius{2};

struct Cell {
  std::int64_t i = 0;
  std::int64_t j = 0;
  auto operator<=>(const Cell&) const = default;
};

// Square grid of side radius / 2; a point (x, y) lives in cell
// (floor(x / side), floor(y / side)). Any two points of one cell are adjacent.
class UdgGrid {
 public:
  explicit UdgGrid(const UdgRealization& r);

  const Cell& cell_of(int v) const { return cell_of_[v]; }
  const std::map<Cell, std::vector<int>>& cells() const { return members_; }
  const std::vector<int>& members(const Cell& c) const;
  const Rational& side() const { return side_; }

 private:
  Rational side_;
  std::vector<Cell> cell_of_;
  std::map<Cell, std::vector<int>> members_;
};

// Two points can only be adjacent if their cells differ by at most this much
// in each coordinate.
inline constexpr int kCellReach = 2;

// Cross-cell complement piece: left = members of cell a, right = members of
// cell b, u ~ v iff u and v are NOT adjacent in the unit disk graph.
struct CrossCellPiece {
  std::vector<int> left_ids;
  std::vector<int> right_ids;
  BipartiteGraph complement;
};

CrossCellPiece cross_cell_piece(const UdgRealization& r, const UdgGrid& grid, const Cell& a, const Cell& b);

// sigma(x, y) = (-1, 2x, 2y, -x^2 - y^2), psi(x, y) = (x^2 + y^2 - r^2, x, y, 1),
// so <sigma(a), psi(b)> = r^2 - |a - b|^2.
struct SignRankLift {
  std::vector<Vec> sigma;
  std::vector<Vec> psi;
};

SignRankLift udg_to_signrank4(const UdgRealization& r);

// Degeneracy bound checks for point-halfspace incidence graphs in dimension
// 1..3 that avoid the appropriate forbidden biclique.
struct IncidenceDegeneracyReport {
  int dim = 0;
  int s = 0;
  // d = 1: no K_{s,s}. d = 2, 3: no two points share s halfspaces (K_{2,s}
  // with the 2 on the point side).
  bool k_free = false;
  int degeneracy = 0;
  int bound = 0;               // s - 1, 3(s - 1), 5(s - 1)
  bool within_bound = false;
  std::vector<int> non_extremal;  // points inside the hull of the others
  int max_non_extremal_degree = 0;
  int non_extremal_bound = 0;     // (d + 1)(s - 1); 0 when d = 1
  bool non_extremal_within_bound = true;
};

// The convex-position check costs O(n^(d+2)) exact eliminations and can be
// switched off for large scenes. It only runs for d >= 2, where the point
// side is K_{2,s}-free; a K_{s,s}-free line scene gives no such degree bound.
IncidenceDegeneracyReport verify_incidence_degeneracy(const Scene& scene, int s, bool check_hull = true);

int incidence_degeneracy_bound(int dim, int s);

// Indices of points lying in the convex hull of the remaining points
// (Carathéodory search with exact elimination).
std::vector<int> non_extremal_points(const std::vector<Vec>& points);

// Half-open box [x_lo, x_hi) x [y_lo, y_hi).
struct Box {
  Rational x_lo, x_hi, y_lo, y_hi;
};

// y = slope * x + intercept, or x = intercept when vertical.
struct Line {
  bool vertical = false;
  Rational slope;
  Rational intercept;
};

BipartiteGraph point_box_incidence(const std::vector<Point2>& points, const std::vector<Box>& boxes);
BipartiteGraph point_line_incidence(const std::vector<Point2>& points, const std::vector<Line>& lines);

struct IncidenceMeasure {
  std::size_t edges = 0;
  int degeneracy = 0;
  bool k22_free = false;
};

IncidenceMeasure measure_incidence(const BipartiteGraph& g);

}  // namespace implrep
