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

#include "implrep/generators.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>

#include "implrep/errors.hpp"
#include "implrep/oracles.hpp"

namespace implrep {
namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw PreconditionError(message);
}

// Places vertices on sides by parity and records each vertex's side index.
class ParityBuilder {
 public:
  int add(int parity) {
    const int idx = parity == 0 ? n_left_++ : n_right_++;
    parity_.push_back(parity);
    index_.push_back(idx);
    return static_cast<int>(parity_.size()) - 1;
  }
  void join(int u, int v) {
    if (parity_[u] == 0) {
      edges_.emplace_back(index_[u], index_[v]);
    } else {
      edges_.emplace_back(index_[v], index_[u]);
    }
  }
  BipartiteGraph build() { return BipartiteGraph(n_left_, n_right_, edges_); }

 private:
  int n_left_ = 0;
  int n_right_ = 0;
  std::vector<int> parity_;
  std::vector<int> index_;
  std::vector<std::pair<int, int>> edges_;
};

}  // namespace

BipartiteGraph make_path(int t) {
  require(t >= 1, "path needs at least one vertex");
  ParityBuilder b;
  for (int i = 0; i < t; ++i) {
    b.add(i % 2);
    if (i > 0) b.join(i - 1, i);
  }
  return b.build();
}

BipartiteGraph make_cycle(int t) {
  require(t >= 4 && t % 2 == 0, "bipartite cycle needs an even length of at least 4");
  ParityBuilder b;
  for (int i = 0; i < t; ++i) {
    b.add(i % 2);
    if (i > 0) b.join(i - 1, i);
  }
  b.join(t - 1, 0);
  return b.build();
}

BipartiteGraph make_subdivided_star(int s, int t) {
  require(s >= 1 && t >= 1, "subdivided star needs positive leg count and length");
  ParityBuilder b;
  const int centre = b.add(0);
  for (int leg = 0; leg < s; ++leg) {
    int prev = centre;
    for (int k = 1; k <= t; ++k) {
      const int v = b.add(k % 2);
      b.join(prev, v);
      prev = v;
    }
  }
  return b.build();
}

BipartiteGraph make_biclique(int a, int b) {
  require(a >= 0 && b >= 0, "biclique sides must be non-negative");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.emplace_back(i, j);
  }
  return BipartiteGraph(a, b, std::move(edges));
}

BipartiteGraph make_half_graph(int k) {
  require(k >= 1, "half-graph needs k >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
  }
  return BipartiteGraph(k, k, std::move(edges));
}

BipartiteGraph random_bipartite(int n_left, int n_right, double p, Rng& rng) {
  require(n_left >= 0 && n_right >= 0, "side sizes must be non-negative");
  require(p >= 0 && p <= 1, "edge probability must lie in [0, 1]");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n_left; ++i) {
    for (int j = 0; j < n_right; ++j) {
      if (rng.bernoulli(p)) edges.emplace_back(i, j);
    }
  }
  return BipartiteGraph(n_left, n_right, std::move(edges));
}

BipartiteGraph random_connected_bipartite(int n_left, int n_right, double p, Rng& rng) {
  require(p >= 0 && p <= 1, "edge probability must lie in [0, 1]");
  require(n_left >= 1 && n_right >= 1, "connected bipartite graph needs both sides non-empty");
  const int n = n_left + n_right;
  std::vector<std::vector<bool>> has(n_left, std::vector<bool>(n_right, false));
  std::vector<std::pair<int, int>> edges;
  auto add = [&](int l, int r) {
    if (!has[l][r]) {
      has[l][r] = true;
      edges.emplace_back(l, r);
    }
  };
  // Spanning tree: start from one edge, attach every other vertex to a random
  // already placed vertex of the opposite side.
  std::vector<int> order;
  for (int v = 0; v < n; ++v) order.push_back(v);
  rng.shuffle(order);
  std::vector<int> placed_left, placed_right;
  const auto first_left = std::find_if(order.begin(), order.end(), [&](int v) { return v < n_left; });
  const auto first_right = std::find_if(order.begin(), order.end(), [&](int v) { return v >= n_left; });
  placed_left.push_back(*first_left);
  placed_right.push_back(*first_right - n_left);
  add(placed_left[0], placed_right[0]);
  for (int v : order) {
    if (v == *first_left || v == *first_right) continue;
    if (v < n_left) {
      add(v, placed_right[rng.below(placed_right.size())]);
      placed_left.push_back(v);
    } else {
      add(placed_left[rng.below(placed_left.size())], v - n_left);
      placed_right.push_back(v - n_left);
    }
  }
  for (int i = 0; i < n_left; ++i) {
    for (int j = 0; j < n_right; ++j) {
      if (!has[i][j] && rng.bernoulli(p)) add(i, j);
    }
  }
  std::sort(edges.begin(), edges.end());
  return BipartiteGraph(n_left, n_right, std::move(edges));
}

BipartiteGraph random_equivalence_graph(int n_left, int n_right, int blocks, Rng& rng) {
  require(n_left >= 0 && n_right >= 0, "side sizes must be non-negative");
  require(blocks >= 1, "equivalence graph needs at least one block");
  std::vector<int> left_block(n_left), right_block(n_right);
  for (auto& b : left_block) b = static_cast<int>(rng.below(blocks));
  for (auto& b : right_block) b = static_cast<int>(rng.below(blocks));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n_left; ++i) {
    for (int j = 0; j < n_right; ++j) {
      if (left_block[i] == right_block[j]) edges.emplace_back(i, j);
    }
  }
  return BipartiteGraph(n_left, n_right, std::move(edges));
}

UdgRealization random_udg(int n, const Rational& box, const Rational& radius, Rng& rng) {
  require(n >= 0, "point count must be non-negative");
  require(box > 0 && radius > 0, "box and radius must be positive");
  const Rational steps_exact = box * kCoordinateDenominator;
  const BigInt steps = floor_of(steps_exact);
  require(steps >= 1, "box is smaller than the coordinate grid");
  const auto range = static_cast<std::int64_t>(steps);
  const Rational r2 = radius * radius;
  std::vector<Point2> points;
  while (static_cast<int>(points.size()) < n) {
    const Point2 p{Rational(rng.uniform_int(0, range - 1), kCoordinateDenominator),
                   Rational(rng.uniform_int(0, range - 1), kCoordinateDenominator)};
    const bool on_threshold = std::any_of(points.begin(), points.end(),
                                          [&](const Point2& q) { return squared_distance(p, q) == r2; });
    if (!on_threshold) points.push_back(p);
  }
  return UdgRealization(std::move(points), radius);
}

SignRankVectors random_signrank3(int n_u, int n_w, Rng& rng) {
  require(n_u >= 0 && n_w >= 0, "vector counts must be non-negative");
  constexpr std::int64_t kDen = 16;
  auto sample = [&] {
    return rational_unit_vector(rng.uniform_rational(-3, 3, kDen), rng.uniform_rational(-3, 3, kDen));
  };
  std::vector<Vec> u;
  while (static_cast<int>(u.size()) < n_u) {
    Vec a = sample();
    if (a[2] != 0) u.push_back(std::move(a));
  }
  std::vector<Vec> w;
  while (static_cast<int>(w.size()) < n_w) {
    Vec b = sample();
    const bool clean = std::all_of(u.begin(), u.end(), [&](const Vec& a) { return dot(a, b) != 0; });
    if (clean) w.push_back(std::move(b));
  }
  return SignRankVectors(3, std::move(u), std::move(w));
}

Scene random_k_free_scene(int dim, int s, int n_points, int n_halfspaces, Rng& rng) {
  require(dim >= 1 && dim <= 3, "k-free scenes are generated in dimensions 1 to 3");
  require(s >= 2, "forbidden biclique size must be at least 2");
  constexpr std::int64_t kRange = 64;
  std::vector<Vec> points;
  for (int i = 0; i < n_points; ++i) {
    Vec p;
    for (int c = 0; c < dim; ++c) p.push_back(Rational(rng.uniform_int(-kRange, kRange)));
    points.push_back(std::move(p));
  }
  // A shallow halfspace: random integer normal, threshold half-way between the
  // k-th and (k+1)-th largest projection so exactly k points are inside.
  std::vector<Halfspace> hs;
  for (int j = 0; j < n_halfspaces; ++j) {
    Vec normal;
    bool zero = true;
    while (zero) {
      normal.clear();
      for (int c = 0; c < dim; ++c) {
        normal.push_back(Rational(rng.uniform_int(-8, 8)));
        zero = zero && normal.back() == 0;
      }
      zero = zero || normal.empty();
    }
    std::vector<Rational> proj;
    for (const auto& p : points) proj.push_back(dot(p, normal));
    std::sort(proj.begin(), proj.end(), std::greater<>());
    const int depth = static_cast<int>(rng.uniform_int(1, std::max(1, std::min<int>(2 * s, n_points))));
    Rational threshold;
    if (proj.empty()) {
      threshold = 0;
    } else if (depth >= static_cast<int>(proj.size())) {
      threshold = proj.back() - 1;
    } else if (proj[depth - 1] == proj[depth]) {
      continue;  // ties at the cut; skip this halfspace
    } else {
      threshold = (proj[depth - 1] + proj[depth]) / 2;
    }
    hs.push_back({std::move(normal), threshold});
  }
  // Repair: drop halfspaces until the forbidden biclique disappears. For
  // dimension 1 the biclique is K_{s,s}; otherwise two points sharing s
  // halfspaces.
  auto violating_halfspace = [&](const Scene& scene) -> int {
    const BipartiteGraph g = incidence_graph(scene);
    if (dim == 1) {
      std::vector<std::pair<int, int>> kss;
      for (int i = 0; i < s; ++i) {
        for (int j = 0; j < s; ++j) kss.emplace_back(i, j);
      }
      const auto hit = contains_induced(g, BipartiteGraph(s, s, std::move(kss)));
      if (!hit) return -1;
      for (int v : *hit) {
        if (g.side(v) == Side::Right) return g.index(v);
      }
      return -1;
    }
    for (int p = 0; p < g.n_left(); ++p) {
      for (int q = p + 1; q < g.n_left(); ++q) {
        const Bits common = g.neighbour_bits(p) & g.neighbour_bits(q);
        if (static_cast<int>(common.count()) >= s) return static_cast<int>(common.find_first()) - g.n_left();
      }
    }
    return -1;
  };
  Scene scene(dim, points, hs);
  for (int bad = violating_halfspace(scene); bad >= 0; bad = violating_halfspace(scene)) {
    hs.erase(hs.begin() + bad);
    scene = Scene(dim, points, hs);
  }
  return scene;
}

std::vector<Point2> random_points(int n, std::int64_t box, Rng& rng) {
  require(n >= 0 && box >= 1, "point count must be non-negative and the box positive");
  require(static_cast<std::uint64_t>(n) <= static_cast<std::uint64_t>(box) * static_cast<std::uint64_t>(box),
          "box has fewer lattice points than requested");
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  std::vector<Point2> points;
  while (static_cast<int>(points.size()) < n) {
    const std::int64_t x = rng.uniform_int(0, box - 1);
    const std::int64_t y = rng.uniform_int(0, box - 1);
    if (seen.emplace(x, y).second) points.push_back({Rational(x), Rational(y)});
  }
  return points;
}

std::vector<Box> random_dyadic_boxes(int n, int levels, Rng& rng) {
  require(levels >= 0 && levels <= 30, "dyadic level must lie in [0, 30]");
  std::vector<Box> boxes;
  const std::int64_t full = std::int64_t{1} << levels;
  for (int i = 0; i < n; ++i) {
    const int lx = static_cast<int>(rng.uniform_int(0, levels));
    const int ly = static_cast<int>(rng.uniform_int(0, levels));
    const std::int64_t wx = full >> lx;
    const std::int64_t wy = full >> ly;
    const std::int64_t x = rng.uniform_int(0, (std::int64_t{1} << lx) - 1) * wx;
    const std::int64_t y = rng.uniform_int(0, (std::int64_t{1} << ly) - 1) * wy;
    boxes.push_back({Rational(x), Rational(x + wx), Rational(y), Rational(y + wy)});
  }
  return boxes;
}

std::vector<Line> random_lines(int n, Rng& rng) {
  constexpr std::int64_t kSlopes = 7;      // slopes -3..3
  constexpr std::int64_t kIntercepts = 24;  // intercepts -8..15
  require(n >= 0 && n <= (kSlopes + 1) * kIntercepts, "too many distinct lines requested");
  std::set<std::tuple<bool, std::int64_t, std::int64_t>> seen;
  std::vector<Line> lines;
  while (static_cast<int>(lines.size()) < n) {
    const bool vertical = rng.below(8) == 0;
    const std::int64_t slope = vertical ? 0 : rng.uniform_int(-3, 3);
    const std::int64_t intercept = rng.uniform_int(-8, 15);
    if (!seen.emplace(vertical, slope, intercept).second) continue;
    lines.push_back({vertical, Rational(slope), Rational(intercept)});
  }
  return lines;
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {
      "path", "cycle", "star", "biclique", "half-graph", "random-bipartite", "random-connected-bipartite",
      "equivalence", "udg", "signrank3"};
  return names;
}

Generated generate(const FamilySpec& spec, std::uint64_t seed) {
  Rng rng(seed);
  const std::string& f = spec.family;
  if (f == "path") return make_path(spec.t);
  if (f == "cycle") return make_cycle(spec.t);
  if (f == "star") return make_subdivided_star(spec.s, spec.t);
  if (f == "biclique") return make_biclique(spec.t, spec.t);
  if (f == "half-graph") return make_half_graph(spec.t);
  if (f == "random-bipartite") return random_bipartite(spec.n_left, spec.n_right, spec.p, rng);
  if (f == "random-connected-bipartite") return random_connected_bipartite(spec.n_left, spec.n_right, spec.p, rng);
  if (f == "equivalence") return random_equivalence_graph(spec.n_left, spec.n_right, spec.blocks, rng);
  if (f == "udg") return random_udg(spec.n, spec.box, spec.radius, rng);
  if (f == "signrank3") return random_signrank3(spec.n_left, spec.n_right, rng);
  throw PreconditionError("unknown family '" + f + "'");
}

}  // namespace implrep
