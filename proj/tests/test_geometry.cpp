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


#include <gtest/gtest.h>

#include <cmath>

#include "implrep/errors.hpp"
#include "implrep/generators.hpp"
#include "implrep/geometry.hpp"
#include "implrep/geometry_io.hpp"
#include "implrep/gyarfas.hpp"
#include "implrep/oracles.hpp"
#include "implrep/random.hpp"

namespace implrep {
namespace {

Vec v2(std::int64_t a, std::int64_t b) { return Vec{Rational(a), Rational(b)}; }

Scene random_scene(int dim, int np, int nh, Rng& rng, bool positive) {
  std::vector<Vec> points;
  for (int i = 0; i < np; ++i) {
    Vec p;
    for (int c = 0; c < dim; ++c) p.push_back(rng.uniform_rational(-4, 4, 8));
    points.push_back(p);
  }
  std::vector<Halfspace> hs;
  while (static_cast<int>(hs.size()) < nh) {
    Vec normal;
    for (int c = 0; c < dim; ++c) normal.push_back(Rational(positive ? rng.uniform_int(0, 5) : rng.uniform_int(-5, 5)));
    // Odd numerator over 16 cannot equal a point projection (denominator 8).
    const Rational t(2 * rng.uniform_int(-40, 40) + 1, 16);
    hs.push_back({normal, t});
  }
  return Scene(dim, points, hs);
}

TEST(SceneTest, MembershipAndBoundary) {
  const Scene inside(2, {v2(0, 0)}, {{v2(1, 0), Rational(-1)}});
  EXPECT_TRUE(inside.contains(0, 0));
  const Scene outside(2, {v2(0, 0)}, {{v2(1, 0), Rational(1)}});
  EXPECT_FALSE(outside.contains(0, 0));
  EXPECT_THROW(Scene(2, {v2(1, 0)}, {{v2(1, 0), Rational(1)}}), PreconditionError);
  EXPECT_THROW(Scene(2, {Vec{Rational(1)}}, {}), PreconditionError);
}

TEST(SceneTest, IncidenceGraphMatchesPredicate) {
  Rng rng(61);
  const Scene s = random_scene(3, 10, 12, rng, false);
  const BipartiteGraph g = incidence_graph(s);
  for (int p = 0; p < 10; ++p) {
    for (int h = 0; h < 12; ++h) {
      EXPECT_EQ(g.has_edge(p, h), dot(s.points()[p], s.halfspaces()[h].normal) > s.halfspaces()[h].threshold);
    }
  }
}

TEST(SignRankSplitTest, SingleCoordinateExample) {
  const SignRankVectors v(3, {Vec{Rational(0), Rational(0), Rational(1)}}, {Vec{Rational(0), Rational(0), Rational(1)}});
  const SignRankSplit split = signrank_split(v);
  ASSERT_EQ(split.positive.points().size(), 1u);
  EXPECT_TRUE(split.negative.points().empty());
  EXPECT_TRUE(split.positive.contains(0, 0));
  EXPECT_EQ(split.positive.halfspaces()[0].threshold, -1);
}

TEST(SignRankSplitTest, UnionReconstructsSignMatrix) {
  Rng rng(62);
  for (int trial = 0; trial < 10; ++trial) {
    const SignRankVectors v = random_signrank3(20, 20, rng);
    const SignRankSplit split = signrank_split(v);
    const BipartiteGraph pos = incidence_graph(split.positive);
    const BipartiteGraph neg = incidence_graph(split.negative);
    for (std::size_t i = 0; i < split.positive_u.size(); ++i) {
      for (int w = 0; w < 20; ++w) EXPECT_EQ(pos.has_edge(static_cast<int>(i), w), v.adjacent(split.positive_u[i], w));
    }
    for (std::size_t i = 0; i < split.negative_u.size(); ++i) {
      for (int w = 0; w < 20; ++w) EXPECT_EQ(neg.has_edge(static_cast<int>(i), w), v.adjacent(split.negative_u[i], w));
    }
    EXPECT_EQ(split.positive_u.size() + split.negative_u.size(), 20u);
  }
}

TEST(SignRankSplitTest, ZeroLastCoordinateRejected) {
  const SignRankVectors v(3, {Vec{Rational(1), Rational(0), Rational(0)}}, {Vec{Rational(1), Rational(0), Rational(1)}});
  EXPECT_THROW(signrank_split(v), PreconditionError);
  EXPECT_THROW(signrank3_decompose(v), PreconditionError);
}

TEST(PerturbTest, ZeroLastCoordinatesKeepEverySign) {
  Rng rng(63);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Vec> a, b;
    for (int i = 0; i < 8; ++i) {
      Vec x{Rational(rng.uniform_int(-4, 4)), Rational(rng.uniform_int(-4, 4)),
            rng.bernoulli(0.5) ? Rational(0) : Rational(rng.uniform_int(1, 4))};
      a.push_back(x);
    }
    for (int j = 0; j < 8; ++j) {
      b.push_back(Vec{rng.uniform_rational(-4, 4, 3), rng.uniform_rational(-4, 4, 3), rng.uniform_rational(-4, 4, 3)});
    }
    bool clean = true;
    for (const auto& x : a) {
      for (const auto& y : b) clean = clean && dot(x, y) != 0;
    }
    if (!clean) continue;
    std::vector<Vec> moved = a;
    const Rational eps = perturb_last_coordinate(moved, b);
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_NE(moved[i][2], 0);
      if (a[i][2] == 0) {
        EXPECT_EQ(moved[i][2], eps);
      } else {
        EXPECT_EQ(moved[i], a[i]);
      }
      for (const auto& y : b) EXPECT_EQ(dot(a[i], y) > 0, dot(moved[i], y) > 0);
    }
  }
}

TEST(UnitVectorTest, RationalPointsOnTheSphere) {
  Rng rng(64);
  for (int i = 0; i < 100; ++i) {
    const Vec v = rational_unit_vector(rng.uniform_rational(-3, 3, 16), rng.uniform_rational(-3, 3, 16));
    EXPECT_EQ(dot(v, v), 1);
  }
}

TEST(PositivePartitionTest, Example) {
  const Scene s(2, {v2(7, 7)}, {{v2(1, 2), Rational(1, 2)}, {v2(2, 5), Rational(1, 2)}, {v2(-1, 3), Rational(1, 2)}});
  const auto groups = positive_partition(s);
  ASSERT_EQ(groups.size(), 2u);
  EXPECT_EQ(groups[0].halfspaces, (std::vector<int>{0, 1}));
  EXPECT_EQ(groups[1].halfspaces, (std::vector<int>{2}));
  EXPECT_EQ(sign_pattern(v2(-1, 3)), 2);
  EXPECT_EQ(sign_pattern(v2(1, -3)), 1);
}

TEST(PositivePartitionTest, GroupsArePositiveAndKeepIncidences) {
  Rng rng(65);
  for (int trial = 0; trial < 20; ++trial) {
    const Scene s = random_scene(2, 12, 16, rng, false);
    const BipartiteGraph g = incidence_graph(s);
    std::size_t covered = 0;
    for (const auto& group : positive_partition(s)) {
      EXPECT_TRUE(is_positive(group.scene));
      const auto& hs = group.scene.halfspaces();
      for (const auto& a : hs) {
        for (const auto& b : hs) EXPECT_GE(dot(a.normal, b.normal), 0);
      }
      const BipartiteGraph part = incidence_graph(group.scene);
      for (int p = 0; p < 12; ++p) {
        for (std::size_t k = 0; k < group.halfspaces.size(); ++k) {
          EXPECT_EQ(part.has_edge(p, static_cast<int>(k)), g.has_edge(p, group.halfspaces[k]));
        }
      }
      covered += group.halfspaces.size();
    }
    EXPECT_EQ(covered, 16u);
  }
  const Scene all_positive = random_scene(2, 5, 6, rng, true);
  EXPECT_EQ(positive_partition(all_positive).size(), 1u);
}

TEST(PositiveComplementTest, ComplementsIncidencesAndStaysPositive) {
  const Scene one(2, {v2(1, 2)}, {{v2(1, 1), Rational(1, 2)}});
  const Scene flipped = positive_complement(one);
  EXPECT_EQ(flipped.points()[0], v2(-1, -2));
  EXPECT_EQ(flipped.halfspaces()[0].threshold, Rational(-1, 2));
  Rng rng(66);
  for (int trial = 0; trial < 20; ++trial) {
    const Scene s = random_scene(2, 10, 10, rng, true);
    const Scene c = positive_complement(s);
    EXPECT_TRUE(is_positive(c));
    EXPECT_EQ(incidence_graph(c), bipartite_complement(incidence_graph(s)));
    EXPECT_EQ(incidence_graph(positive_complement(c)), incidence_graph(s));
  }
  EXPECT_THROW(positive_complement(Scene(2, {}, {{v2(-1, 1), Rational(0)}})), PreconditionError);
  EXPECT_THROW(positive_complement(Scene(3, {}, {})), PreconditionError);
}

TEST(PositiveSceneTest, IncidenceGraphsAreEatFree) {
  Rng rng(67);
  for (int trial = 0; trial < 30; ++trial) {
    const Scene s = random_scene(2, 14, 14, rng, true);
    EXPECT_FALSE(has_edge_asteroid_triple(incidence_graph(s)).has_value()) << "trial " << trial;
  }
}

TEST(SignRank3DecomposeTest, PiecesTileAndReconstruct) {
  Rng rng(68);
  for (int trial = 0; trial < 5; ++trial) {
    const SignRankVectors v = random_signrank3(16, 16, rng);
    const SignRank3Decomposition d = signrank3_decompose(v);
    std::vector<std::vector<int>> hits(16, std::vector<int>(16, 0));
    for (const auto& piece : d.pieces) {
      EXPECT_TRUE(is_positive(piece.scene));
      for (std::size_t i = 0; i < piece.u_ids.size(); ++i) {
        for (std::size_t j = 0; j < piece.w_ids.size(); ++j) {
          ++hits[piece.u_ids[i]][piece.w_ids[j]];
          EXPECT_EQ(piece.graph.has_edge(static_cast<int>(i), static_cast<int>(j)),
                    v.adjacent(piece.u_ids[i], piece.w_ids[j]));
        }
      }
      EXPECT_FALSE(has_edge_asteroid_triple(piece.graph).has_value());
      EXPECT_FALSE(has_edge_asteroid_triple(bipartite_complement(piece.graph)).has_value());
    }
    for (const auto& row : hits) {
      for (int h : row) EXPECT_EQ(h, 1);
    }
  }
}

TEST(SignRank3DecomposeTest, EmptyW) {
  Rng rng(69);
  const SignRank3Decomposition d = signrank3_decompose(random_signrank3(5, 0, rng));
  for (const auto& piece : d.pieces) EXPECT_EQ(piece.graph.edge_count(), 0u);
}

TEST(SignRank3DecomposeTest, PieceBackDegreeStaysUnderRegressionBound) {
  constexpr int kBackDegreeRegressionBound = 64;
  Rng rng(70);
  int worst = 0;
  for (int trial = 0; trial < 5; ++trial) {
    const SignRank3Decomposition d = signrank3_decompose(random_signrank3(24, 24, rng));
    for (const auto& piece : d.pieces) {
      for (const auto& t : gyarfas_forest(piece.graph)) worst = std::max(worst, max_back_degree(t, false));
    }
  }
  RecordProperty("max_back_degree", worst);
  EXPECT_LE(worst, kBackDegreeRegressionBound);
}

TEST(UdgTest, AdjacencyIsStrictDistance) {
  const UdgRealization r({{Rational(0), Rational(0)}, {Rational(1), Rational(1)}, {Rational(3), Rational(0)}}, Rational(2));
  EXPECT_TRUE(r.adjacent(0, 1));
  EXPECT_FALSE(r.adjacent(0, 2));
  EXPECT_FALSE(r.adjacent(1, 2));  // squared distance 5 > 4
  EXPECT_THROW(UdgRealization({{Rational(0), Rational(0)}, {Rational(2), Rational(0)}}, Rational(2)),
               PreconditionError);
}

TEST(UdgGridTest, CellsAndShortcuts) {
  const UdgRealization r({{Rational(1, 10), Rational(1, 10)}, {Rational(9, 10), Rational(9, 10)},
                          {Rational(51, 10), Rational(1, 10)}},
                         Rational(2));
  const UdgGrid grid(r);
  EXPECT_EQ(grid.side(), 1);
  EXPECT_EQ(grid.cell_of(0), (Cell{0, 0}));
  EXPECT_EQ(grid.cell_of(1), (Cell{0, 0}));
  EXPECT_EQ(grid.cell_of(2), (Cell{5, 0}));
  EXPECT_TRUE(r.adjacent(0, 1));
  EXPECT_FALSE(r.adjacent(0, 2));
  int offsets = 0;
  for (int di = -kCellReach; di <= kCellReach; ++di) {
    for (int dj = -kCellReach; dj <= kCellReach; ++dj) offsets += (di != 0 || dj != 0) ? 1 : 0;
  }
  EXPECT_EQ(offsets, 24);
}

TEST(UdgGridTest, CellGeometryOnRandomRealizations) {
  Rng rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    const UdgRealization r = random_udg(60, Rational(5), Rational(2), rng);
    const UdgGrid grid(r);
    for (int x = 0; x < r.size(); ++x) {
      for (int y = 0; y < r.size(); ++y) {
        if (x == y) continue;
        const Cell a = grid.cell_of(x);
        const Cell b = grid.cell_of(y);
        if (a == b) EXPECT_TRUE(r.adjacent(x, y));
        if (std::abs(a.i - b.i) > kCellReach || std::abs(a.j - b.j) > kCellReach) EXPECT_FALSE(r.adjacent(x, y));
      }
    }
  }
}

TEST(UdgGridTest, CrossCellComplementsAreEatFree) {
  Rng rng(72);
  int pieces = 0;
  for (int trial = 0; trial < 5; ++trial) {
    const UdgRealization r = random_udg(60, Rational(5), Rational(2), rng);
    const UdgGrid grid(r);
    for (const auto& [a, ma] : grid.cells()) {
      for (const auto& [b, mb] : grid.cells()) {
        if (a == b || std::abs(a.i - b.i) > kCellReach || std::abs(a.j - b.j) > kCellReach) continue;
        const CrossCellPiece p = cross_cell_piece(r, grid, a, b);
        ASSERT_EQ(p.left_ids, ma);
        ASSERT_EQ(p.right_ids, mb);
        for (std::size_t i = 0; i < ma.size(); ++i) {
          for (std::size_t j = 0; j < mb.size(); ++j) {
            EXPECT_NE(p.complement.has_edge(static_cast<int>(i), static_cast<int>(j)), r.adjacent(ma[i], mb[j]));
          }
        }
        EXPECT_FALSE(has_edge_asteroid_triple(p.complement).has_value());
        ++pieces;
      }
    }
  }
  EXPECT_GT(pieces, 100);
}

TEST(LiftTest, InnerProductIdentity) {
  Rng rng(73);
  const UdgRealization r = random_udg(30, Rational(6), Rational(2), rng);
  const SignRankLift lift = udg_to_signrank4(r);
  const Rational r2 = r.radius() * r.radius();
  for (int a = 0; a < r.size(); ++a) {
    EXPECT_EQ(dot(lift.sigma[a], lift.psi[a]), r2);
    for (int b = 0; b < r.size(); ++b) {
      const Rational ip = dot(lift.sigma[a], lift.psi[b]);
      EXPECT_EQ(ip + squared_distance(r.points()[a], r.points()[b]) - r2, 0);
      if (a != b) EXPECT_EQ(ip > 0, r.adjacent(a, b));
    }
  }
}

TEST(IncidenceDegeneracyTest, BoundsPerDimension) {
  Rng rng(74);
  for (int dim = 1; dim <= 3; ++dim) {
    for (int trial = 0; trial < 10; ++trial) {
      const Scene s = random_k_free_scene(dim, 3, 18, 18, rng);
      // The exact hull search is O(n^(d+2)); run it on a few 3D scenes only.
      const bool hull = dim < 3 || trial < 2;
      const IncidenceDegeneracyReport rep = verify_incidence_degeneracy(s, 3, hull);
      EXPECT_TRUE(rep.k_free);
      EXPECT_EQ(rep.bound, incidence_degeneracy_bound(dim, 3));
      EXPECT_TRUE(rep.within_bound) << "dim " << dim << " degeneracy " << rep.degeneracy;
      EXPECT_TRUE(rep.non_extremal_within_bound) << "dim " << dim << " degree " << rep.max_non_extremal_degree;
      EXPECT_EQ(rep.non_extremal_bound, dim == 1 || !hull ? 0 : (dim + 1) * 2);
    }
  }
  EXPECT_EQ(incidence_degeneracy_bound(1, 3), 2);
  EXPECT_EQ(incidence_degeneracy_bound(2, 3), 6);
  EXPECT_EQ(incidence_degeneracy_bound(3, 3), 10);
  EXPECT_THROW(incidence_degeneracy_bound(4, 3), PreconditionError);
}

TEST(IncidenceDegeneracyTest, DetectsForbiddenPattern) {
  // Two points inside the same three halfplanes: K_{2,3}.
  const Scene s(2, {v2(0, 0), v2(1, 0)},
                {{v2(1, 0), Rational(-1)}, {v2(0, 1), Rational(-1)}, {v2(1, 1), Rational(-1)}});
  EXPECT_FALSE(verify_incidence_degeneracy(s, 3).k_free);
}

TEST(NonExtremalTest, HullMembership) {
  const std::vector<Vec> square = {v2(0, 0), v2(4, 0), v2(0, 4), v2(4, 4), v2(1, 1), v2(2, 2)};
  EXPECT_EQ(non_extremal_points(square), (std::vector<int>{4, 5}));
  const std::vector<Vec> segment = {Vec{Rational(0)}, Vec{Rational(3)}, Vec{Rational(1)}};
  EXPECT_EQ(non_extremal_points(segment), std::vector<int>{2});
}

TEST(IncidencePlumbingTest, PointBoxAndPointLine) {
  const std::vector<Point2> pts = {{Rational(1), Rational(1)}, {Rational(5), Rational(5)}};
  const std::vector<Box> boxes = {{Rational(0), Rational(2), Rational(0), Rational(2)},
                                  {Rational(1), Rational(2), Rational(0), Rational(1)}};
  const BipartiteGraph pb = point_box_incidence(pts, boxes);
  EXPECT_TRUE(pb.has_edge(0, 0));
  EXPECT_FALSE(pb.has_edge(0, 1));  // y = 1 is outside the half-open [0, 1)
  EXPECT_FALSE(pb.has_edge(1, 0));
  const std::vector<Line> lines = {{false, Rational(1), Rational(0)}, {true, Rational(0), Rational(5)}};
  const BipartiteGraph pl = point_line_incidence(pts, lines);
  EXPECT_TRUE(pl.has_edge(0, 0));
  EXPECT_TRUE(pl.has_edge(1, 0));
  EXPECT_TRUE(pl.has_edge(1, 1));
  EXPECT_FALSE(pl.has_edge(0, 1));
  EXPECT_TRUE(measure_incidence(pl).k22_free);
}

TEST(IncidencePlumbingTest, RandomPointLineGraphsAreK22Free) {
  Rng rng(75);
  for (int trial = 0; trial < 30; ++trial) {
    const BipartiteGraph g = point_line_incidence(random_points(40, 12, rng), random_lines(30, rng));
    const IncidenceMeasure m = measure_incidence(g);
    EXPECT_TRUE(m.k22_free);
    EXPECT_EQ(m.edges, g.edge_count());
  }
}

TEST(GeometryIoTest, RoundTrips) {
  Rng rng(76);
  const Scene s = random_scene(2, 4, 3, rng, false);
  const Scene s2 = std::get<Scene>(parse_instance_text(to_text(s)));
  EXPECT_EQ(incidence_graph(s2), incidence_graph(s));
  EXPECT_EQ(to_text(s2), to_text(s));
  const UdgRealization u = random_udg(10, Rational(3), Rational(2), rng);
  EXPECT_EQ(to_text(std::get<UdgRealization>(parse_instance_text(to_text(u)))), to_text(u));
  const SignRankVectors v = random_signrank3(3, 4, rng);
  EXPECT_EQ(to_text(std::get<SignRankVectors>(parse_instance_text(to_text(v)))), to_text(v));
  EXPECT_THROW(parse_instance_text("scene 2 1 0\np 1\n"), ParseError);
  EXPECT_THROW(parse_instance_text("udg 2 2\np 0 0\np 2 0\n"), ParseError);
  EXPECT_THROW(parse_instance_text("blob 1\n"), ParseError);
}

}  // namespace
}  // namespace implrep
