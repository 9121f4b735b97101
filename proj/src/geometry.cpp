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

#include "implrep/geometry.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "implrep/errors.hpp"
#include "implrep/oracles.hpp"

namespace implrep {
namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw PreconditionError(message);
}

Vec drop_last(const Vec& v) { return Vec(v.begin(), v.end() - 1); }

Vec scaled(const Vec& v, const Rational& factor) {
  Vec out = v;
  for (auto& x : out) x *= factor;
  return out;
}

Rational abs_of(const Rational& x) { return x < 0 ? Rational(-x) : x; }

// Is p a convex combination of the affinely independent points q?
// Returns false when q is affinely dependent (a smaller subset covers that case).
bool in_simplex(const std::vector<const Vec*>& q, const Vec& p) {
  const std::size_t rows = p.size() + 1;
  const std::size_t cols = q.size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < p.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = (*q[c])[r];
    m[r][cols] = p[r];
  }
  for (std::size_t c = 0; c <= cols; ++c) m[p.size()][c] = 1;

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) return false;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k <= cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r) {
    if (m[r][cols] != 0) return false;
  }
  for (std::size_t c = 0; c < cols; ++c) {
    if (m[c][cols] / m[c][c] < 0) return false;
  }
  return true;
}

bool in_hull_of_subset(const std::vector<Vec>& points, int p, std::size_t size, std::size_t start,
                       std::vector<const Vec*>& chosen) {
  if (chosen.size() == size) return in_simplex(chosen, points[p]);
  for (std::size_t i = start; i < points.size(); ++i) {
    if (static_cast<int>(i) == p) continue;
    chosen.push_back(&points[i]);
    const bool hit = in_hull_of_subset(points, p, size, i + 1, chosen);
    chosen.pop_back();
    if (hit) return true;
  }
  return false;
}

}  // namespace

Rational dot(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "dot product of vectors with different dimensions");
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

Scene::Scene(int dim, std::vector<Vec> points, std::vector<Halfspace> halfspaces)
    : dim_(dim), points_(std::move(points)), halfspaces_(std::move(halfspaces)) {
  require(dim >= 1, "scene dimension must be positive");
  for (const auto& p : points_) require(static_cast<int>(p.size()) == dim_, "point has wrong dimension");
  for (const auto& h : halfspaces_) {
    require(static_cast<int>(h.normal.size()) == dim_, "halfspace normal has wrong dimension");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = 0; j < halfspaces_.size(); ++j) {
      require(dot(points_[i], halfspaces_[j].normal) != halfspaces_[j].threshold,
              "point " + std::to_string(i) + " lies on the boundary of halfspace " + std::to_string(j));
    }
  }
}

bool Scene::contains(int point, int halfspace) const {
  const Halfspace& h = halfspaces_[halfspace];
  return dot(points_[point], h.normal) > h.threshold;
}

BipartiteGraph incidence_graph(const Scene& scene) {
  std::vector<std::pair<int, int>> edges;
  const int np = static_cast<int>(scene.points().size());
  const int nh = static_cast<int>(scene.halfspaces().size());
  for (int i = 0; i < np; ++i) {
    for (int j = 0; j < nh; ++j) {
      if (scene.contains(i, j)) edges.emplace_back(i, j);
    }
  }
  return BipartiteGraph(np, nh, std::move(edges));
}

SignRankVectors::SignRankVectors(int dim, std::vector<Vec> u, std::vector<Vec> w)
    : dim_(dim), u_(std::move(u)), w_(std::move(w)) {
  require(dim >= 1, "sign-rank dimension must be positive");
  for (const auto& a : u_) require(static_cast<int>(a.size()) == dim_, "vector u has wrong dimension");
  for (const auto& b : w_) require(static_cast<int>(b.size()) == dim_, "vector w has wrong dimension");
  for (std::size_t i = 0; i < u_.size(); ++i) {
    for (std::size_t j = 0; j < w_.size(); ++j) {
      require(dot(u_[i], w_[j]) != 0,
              "zero inner product between u" + std::to_string(i) + " and w" + std::to_string(j));
    }
  }
}

BipartiteGraph sign_graph(const SignRankVectors& v) {
  std::vector<std::pair<int, int>> edges;
  const int nu = static_cast<int>(v.u().size());
  const int nw = static_cast<int>(v.w().size());
  for (int i = 0; i < nu; ++i) {
    for (int j = 0; j < nw; ++j) {
      if (v.adjacent(i, j)) edges.emplace_back(i, j);
    }
  }
  return BipartiteGraph(nu, nw, std::move(edges));
}

SignRankSplit signrank_split(const SignRankVectors& v) {
  require(v.dim() >= 2, "sign-rank split needs dimension at least 2");
  const int d = v.dim() - 1;
  std::vector<Vec> pos_points, neg_points;
  SignRankSplit out;
  for (std::size_t i = 0; i < v.u().size(); ++i) {
    const Vec& a = v.u()[i];
    const Rational& last = a.back();
    require(last != 0, "u" + std::to_string(i) + " has a zero last coordinate");
    if (last > 0) {
      pos_points.push_back(scaled(drop_last(a), 1 / last));
      out.positive_u.push_back(static_cast<int>(i));
    } else {
      neg_points.push_back(scaled(drop_last(a), 1 / abs_of(last)));
      out.negative_u.push_back(static_cast<int>(i));
    }
  }
  std::vector<Halfspace> pos_h, neg_h;
  for (const Vec& b : v.w()) {
    pos_h.push_back({drop_last(b), -b.back()});
    neg_h.push_back({drop_last(b), b.back()});
  }
  out.positive = Scene(d, std::move(pos_points), std::move(pos_h));
  out.negative = Scene(d, std::move(neg_points), std::move(neg_h));
  return out;
}

namespace {

// Coordinate i is negated when bit (d - 1 - i) of the pattern is set.
Vec reflect_by_pattern(Vec v, int pattern) {
  const int d = static_cast<int>(v.size());
  for (int i = 0; i < d; ++i) {
    if ((pattern >> (d - 1 - i)) & 1) v[i] = -v[i];
  }
  return v;
}

}  // namespace

int sign_pattern(const Vec& normal) {
  int pattern = 0;
  for (const auto& x : normal) pattern = pattern * 2 + (x < 0 ? 1 : 0);
  return pattern;
}

bool is_positive(const Scene& scene) {
  for (const auto& h : scene.halfspaces()) {
    if (sign_pattern(h.normal) != 0) return false;
  }
  return true;
}

std::vector<PositiveGroup> positive_partition(const Scene& scene) {
  std::map<int, std::vector<int>> groups;
  for (std::size_t j = 0; j < scene.halfspaces().size(); ++j) {
    groups[sign_pattern(scene.halfspaces()[j].normal)].push_back(static_cast<int>(j));
  }
  const int d = scene.dim();
  std::vector<PositiveGroup> out;
  for (auto& [pattern, ids] : groups) {
    std::vector<Vec> points;
    for (const auto& p : scene.points()) points.push_back(reflect_by_pattern(p, pattern));
    std::vector<Halfspace> hs;
    for (int j : ids) {
      hs.push_back({reflect_by_pattern(scene.halfspaces()[j].normal, pattern), scene.halfspaces()[j].threshold});
    }
    out.push_back({pattern, ids, Scene(d, std::move(points), std::move(hs))});
  }
  return out;
}

Scene positive_complement(const Scene& scene) {
  require(scene.dim() == 2, "positive complement is defined for planar scenes");
  require(is_positive(scene), "positive complement needs every normal in the positive quadrant");
  std::vector<Vec> points;
  for (const auto& p : scene.points()) points.push_back(scaled(p, -1));
  std::vector<Halfspace> hs;
  for (const auto& h : scene.halfspaces()) hs.push_back({h.normal, -h.threshold});
  return Scene(2, std::move(points), std::move(hs));
}

SignRank3Decomposition signrank3_decompose(const SignRankVectors& v) {
  require(v.dim() == 3, "sign-rank-3 decomposition needs 3-dimensional vectors");
  SignRank3Decomposition out;
  for (std::size_t i = 0; i < v.u().size(); ++i) {
    const Rational& last = v.u()[i][2];
    require(last != 0, "u" + std::to_string(i) + " has a zero last coordinate");
    out.u_class.push_back(last > 0 ? 0 : 1);
  }
  for (const Vec& b : v.w()) out.w_class.push_back(sign_pattern(drop_last(b)));

  std::array<std::vector<int>, 2> u_members;
  std::array<std::vector<int>, 4> w_members;
  out.u_local.resize(v.u().size());
  out.w_local.resize(v.w().size());
  for (std::size_t i = 0; i < v.u().size(); ++i) {
    auto& m = u_members[out.u_class[i]];
    out.u_local[i] = static_cast<int>(m.size());
    m.push_back(static_cast<int>(i));
  }
  for (std::size_t j = 0; j < v.w().size(); ++j) {
    auto& m = w_members[out.w_class[j]];
    out.w_local[j] = static_cast<int>(m.size());
    m.push_back(static_cast<int>(j));
  }
  for (int uc = 0; uc < 2; ++uc) {
    for (int wc = 0; wc < 4; ++wc) {
      SignRankPiece& piece = out.pieces[uc * 4 + wc];
      piece.u_class = uc;
      piece.w_class = wc;
      piece.u_ids = u_members[uc];
      piece.w_ids = w_members[wc];
      std::vector<Vec> points;
      for (int i : piece.u_ids) {
        const Vec& a = v.u()[i];
        points.push_back(reflect_by_pattern(scaled(drop_last(a), 1 / abs_of(a[2])), wc));
      }
      std::vector<Halfspace> hs;
      for (int j : piece.w_ids) {
        const Vec& b = v.w()[j];
        hs.push_back({reflect_by_pattern(drop_last(b), wc), uc == 0 ? Rational(-b[2]) : b[2]});
      }
      piece.scene = Scene(2, std::move(points), std::move(hs));
      piece.graph = incidence_graph(piece.scene);
    }
  }
  return out;
}

Rational perturb_last_coordinate(std::vector<Vec>& a, const std::vector<Vec>& b) {
  Rational smallest = -1;
  Rational largest_last = 0;
  for (const Vec& y : b) largest_last = std::max(largest_last, abs_of(y.back()));
  for (const Vec& x : a) {
    if (x.back() != 0) continue;
    for (const Vec& y : b) {
      const Rational p = abs_of(dot(x, y));
      require(p != 0, "zero inner product cannot be resolved by perturbation");
      if (smallest < 0 || p < smallest) smallest = p;
    }
  }
  bool affected = false;
  for (const Vec& x : a) affected = affected || x.back() == 0;
  if (!affected) return 0;
  const Rational eps = smallest < 0 ? Rational(1) : smallest / (2 * largest_last + 1);
  for (Vec& x : a) {
    if (x.back() == 0) x.back() = eps;
  }
  return eps;
}

Vec rational_unit_vector(const Rational& s, const Rational& t) {
  const Rational q = s * s + t * t;
  const Rational den = q + 1;
  return Vec{2 * s / den, 2 * t / den, (q - 1) / den};
}

Rational squared_distance(const Point2& a, const Point2& b) {
  const Rational dx = a.x - b.x;
  const Rational dy = a.y - b.y;
  return dx * dx + dy * dy;
}

UdgRealization::UdgRealization(std::vector<Point2> points, Rational radius)
    : points_(std::move(points)), radius_(std::move(radius)) {
  require(radius_ > 0, "unit disk radius must be positive");
  const Rational r2 = radius_ * radius_;
  const int n = static_cast<int>(points_.size());
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const Rational d2 = squared_distance(points_[u], points_[v]);
      require(d2 != r2, "points " + std::to_string(u) + " and " + std::to_string(v) +
                            " are exactly at the threshold distance");
      if (d2 < r2) edges.emplace_back(u, v);
    }
  }
  graph_ = Graph(n, std::move(edges));
}

UdgGrid::UdgGrid(const UdgRealization& r) : side_(r.radius() / 2) {
  for (int v = 0; v < r.size(); ++v) {
    const Point2& p = r.points()[v];
    const Cell c{static_cast<std::int64_t>(floor_of(p.x / side_)), static_cast<std::int64_t>(floor_of(p.y / side_))};
    cell_of_.push_back(c);
    members_[c].push_back(v);
  }
}

const std::vector<int>& UdgGrid::members(const Cell& c) const {
  static const std::vector<int> kEmpty;
  auto it = members_.find(c);
  return it == members_.end() ? kEmpty : it->second;
}

CrossCellPiece cross_cell_piece(const UdgRealization& r, const UdgGrid& grid, const Cell& a, const Cell& b) {
  require(a != b, "cross-cell piece needs two distinct cells");
  CrossCellPiece piece;
  piece.left_ids = grid.members(a);
  piece.right_ids = grid.members(b);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < piece.left_ids.size(); ++i) {
    for (std::size_t j = 0; j < piece.right_ids.size(); ++j) {
      if (!r.adjacent(piece.left_ids[i], piece.right_ids[j])) {
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  piece.complement = BipartiteGraph(static_cast<int>(piece.left_ids.size()),
                                    static_cast<int>(piece.right_ids.size()), std::move(edges));
  return piece;
}

SignRankLift udg_to_signrank4(const UdgRealization& r) {
  SignRankLift lift;
  const Rational r2 = r.radius() * r.radius();
  for (const Point2& p : r.points()) {
    const Rational n2 = p.x * p.x + p.y * p.y;
    lift.sigma.push_back(Vec{-1, 2 * p.x, 2 * p.y, -n2});
    lift.psi.push_back(Vec{n2 - r2, p.x, p.y, 1});
  }
  return lift;
}

int incidence_degeneracy_bound(int dim, int s) {
  switch (dim) {
    case 1:
      return s - 1;
    case 2:
      return 3 * (s - 1);
    case 3:
      return 5 * (s - 1);
    default:
      throw PreconditionError("degeneracy bounds are known for dimensions 1 to 3");
  }
}

std::vector<int> non_extremal_points(const std::vector<Vec>& points) {
  std::vector<int> out;
  if (points.empty()) return out;
  const std::size_t max_size = points.front().size() + 1;
  std::vector<const Vec*> chosen;
  for (int p = 0; p < static_cast<int>(points.size()); ++p) {
    for (std::size_t size = 1; size <= max_size; ++size) {
      if (in_hull_of_subset(points, p, size, 0, chosen)) {
        out.push_back(p);
        break;
      }
    }
  }
  return out;
}

IncidenceDegeneracyReport verify_incidence_degeneracy(const Scene& scene, int s, bool check_hull) {
  require(s >= 2, "forbidden biclique size must be at least 2");
  IncidenceDegeneracyReport report;
  report.dim = scene.dim();
  report.s = s;
  report.bound = incidence_degeneracy_bound(scene.dim(), s);
  const BipartiteGraph g = incidence_graph(scene);
  if (scene.dim() == 1) {
    std::vector<std::pair<int, int>> kss;
    for (int i = 0; i < s; ++i) {
      for (int j = 0; j < s; ++j) kss.emplace_back(i, j);
    }
    report.k_free = !contains_induced(g, BipartiteGraph(s, s, std::move(kss))).has_value();
  } else {
    report.k_free = true;
    for (int p = 0; p < g.n_left() && report.k_free; ++p) {
      for (int q = p + 1; q < g.n_left(); ++q) {
        if (static_cast<int>((g.neighbour_bits(p) & g.neighbour_bits(q)).count()) >= s) {
          report.k_free = false;
          break;
        }
      }
    }
  }
  report.degeneracy = degeneracy(g).value;
  report.within_bound = report.degeneracy <= report.bound;
  if (check_hull && scene.dim() >= 2) {
    report.non_extremal_bound = (scene.dim() + 1) * (s - 1);
    report.non_extremal = non_extremal_points(scene.points());
    for (int p : report.non_extremal) {
      report.max_non_extremal_degree = std::max(report.max_non_extremal_degree, g.degree(p));
    }
    report.non_extremal_within_bound = report.max_non_extremal_degree <= report.non_extremal_bound;
  }
  return report;
}

BipartiteGraph point_box_incidence(const std::vector<Point2>& points, const std::vector<Box>& boxes) {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point2& p = points[i];
    for (std::size_t j = 0; j < boxes.size(); ++j) {
      const Box& b = boxes[j];
      if (b.x_lo <= p.x && p.x < b.x_hi && b.y_lo <= p.y && p.y < b.y_hi) {
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return BipartiteGraph(static_cast<int>(points.size()), static_cast<int>(boxes.size()), std::move(edges));
}

BipartiteGraph point_line_incidence(const std::vector<Point2>& points, const std::vector<Line>& lines) {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point2& p = points[i];
    for (std::size_t j = 0; j < lines.size(); ++j) {
      const Line& l = lines[j];
      const bool on = l.vertical ? p.x == l.intercept : p.y == l.slope * p.x + l.intercept;
      if (on) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return BipartiteGraph(static_cast<int>(points.size()), static_cast<int>(lines.size()), std::move(edges));
}

IncidenceMeasure measure_incidence(const BipartiteGraph& g) {
  IncidenceMeasure m;
  m.edges = g.edge_count();
  m.degeneracy = degeneracy(g).value;
  m.k22_free = !contains_induced(g, BipartiteGraph(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}})).has_value();
  return m;
}

}  // namespace implrep
