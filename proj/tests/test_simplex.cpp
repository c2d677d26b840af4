#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "orthoplex/families.hpp"
#include "orthoplex/simplex.hpp"
#include "support/oracles.hpp"

using namespace orthoplex;

namespace {

Simplex corner(int d) {
  PointList v;
  v.push_back(Point::Zero(d));
  for (int i = 0; i < d; ++i) v.push_back(Point::Unit(d, i));
  return Simplex::from_vertices(d, v);
}

Simplex random_simplex(int d, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  while (true) {
    PointList v(static_cast<std::size_t>(d) + 1, Point(d));
    for (Point& p : v)
      for (int k = 0; k < d; ++k) p(k) = u(gen);
    if (oracle::volume(v) > 0.05 * std::pow(0.5, d)) return Simplex::from_vertices(d, v);
  }
}

std::vector<double> sorted_edges(const Simplex& s) {
  std::vector<double> e;
  for (std::size_t i = 0; i < s.vertex_count(); ++i)
    for (std::size_t j = i + 1; j < s.vertex_count(); ++j) e.push_back(s.edge_length(i, j));
  std::sort(e.begin(), e.end());
  return e;
}

Matrix random_rotation(int d, std::mt19937_64& gen) {
  std::normal_distribution<double> n;
  Matrix a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = n(gen);
  return Eigen::HouseholderQR<Matrix>(a).householderQ();
}

}  // namespace

TEST(FromVertices, UnitCornerIsValid) {
  const Simplex s = corner(3);
  EXPECT_EQ(s.dim(), 3);
  EXPECT_EQ(s.vertex_count(), 4u);
}

TEST(FromVertices, CollinearIsDegenerate) {
  PointList v{Point(Eigen::Vector2d(0, 0)), Point(Eigen::Vector2d(1, 1)), Point(Eigen::Vector2d(2, 2))};
  try {
    Simplex::from_vertices(2, v);
    FAIL() << "expected DegeneracyError";
  } catch (const DegeneracyError& e) {
    EXPECT_LT(e.eigenvalue_ratio(), 1e-10);
  }
}

TEST(FromVertices, ArityErrors) {
  EXPECT_THROW(Simplex::from_vertices(2, {Point::Zero(2), Point::Ones(2)}), InputError);
  EXPECT_THROW(Simplex::from_vertices(2, {Point::Zero(2), Point::Unit(2, 0), Point::Zero(3)}), InputError);
  Point bad = Point::Unit(2, 1);
  bad(0) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(Simplex::from_vertices(2, {Point::Zero(2), Point::Unit(2, 0), bad}), InputError);
  EXPECT_THROW(Simplex::from_vertices(0, {Point::Zero(0)}), InputError);
}

TEST(FromVertices, EquiradialGeneralIsFullRank) {
  const Simplex s = equiradial_general(9, 2, 1).simplex;
  EXPECT_EQ(s.dim(), 9);
  EXPECT_GT(volume(s), 0.0);
}

TEST(Gram, RegularTriangleAboutCenter) {
  const Simplex s = regular(2, std::sqrt(6.0));
  const SymMatrix g = gram(s, (s.vertex(0) + s.vertex(1) + s.vertex(2)) / 3.0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_NEAR(g(i, j), i == j ? 2.0 : -1.0, 1e-13);
}

TEST(Gram, OriginAtFirstVertex) {
  std::mt19937_64 gen(1);
  const Simplex s = random_simplex(4, gen);
  const SymMatrix g = gram(s, s.vertex(0));
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(g(0, i), 0.0);
    EXPECT_EQ(g(i, 0), 0.0);
  }
}

TEST(Gram, RectangularLegsAtCorner) {
  const Simplex s = rectangular({{3.0, 4.0}});
  const SymMatrix g = gram(s, s.vertex(2));
  EXPECT_DOUBLE_EQ(g(0, 0), 9.0);
  EXPECT_DOUBLE_EQ(g(1, 1), 16.0);
  EXPECT_DOUBLE_EQ(g(2, 2), 0.0);
  EXPECT_DOUBLE_EQ(g(0, 1), 0.0);
}

TEST(Volume, Examples) {
  EXPECT_NEAR(volume(corner(3)), 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(volume(regular(3, 1.0)), 0.11785113019775788, 1e-15);
  std::mt19937_64 gen(2);
  const Simplex s = random_simplex(4, gen);
  EXPECT_NEAR(volume(s.scaled(1.7)), std::pow(1.7, 4) * volume(s), 1e-12 * volume(s.scaled(1.7)));
}

TEST(Volume, MatchesCayleyMenger) {
  std::mt19937_64 gen(3);
  for (int d = 2; d <= 7; ++d) {
    const Simplex s = random_simplex(d, gen);
    EXPECT_LT(oracle::rel_diff(volume(s), oracle::volume(s.vertices())), 1e-9) << "d=" << d;
  }
}

TEST(Volume, RigidMotionInvariance) {
  std::mt19937_64 gen(4);
  for (int d = 2; d <= 7; ++d) {
    const Simplex s = random_simplex(d, gen);
    const Matrix q = random_rotation(d, gen);
    PointList v;
    for (const Point& p : s.vertices()) v.push_back(q * p + Point::Constant(d, 3.0));
    EXPECT_LT(oracle::rel_diff(volume(Simplex::from_vertices(d, v)), volume(s)), 1e-10);
  }
}

TEST(Metrics, Fields) {
  const Metrics m = metrics(regular(3, 1.0));
  EXPECT_NEAR(m.volume, 0.11785113019775788, 1e-15);
  EXPECT_NEAR(m.circumradius * m.circumradius, 0.375, 1e-14);
  EXPECT_NEAR(m.inradius, 0.20412414523193145, 1e-14);
  EXPECT_NEAR(m.diameter, 1.0, 1e-14);
  EXPECT_LT(m.inradius, m.circumradius);
}

TEST(Face, RegularFacet) {
  const Simplex s = regular(4, 1.0);
  const IndexList idx{0, 1, 2, 3};
  const Simplex f = face(s, idx);
  EXPECT_EQ(f.dim(), 3);
  for (double e : sorted_edges(f)) EXPECT_NEAR(e, 1.0, 1e-12);
}

TEST(Face, Hypotenuse) {
  const IndexList idx{0, 1};
  const Simplex f = face(rectangular({{3.0, 4.0}}), idx);
  EXPECT_EQ(f.dim(), 1);
  EXPECT_NEAR(f.edge_length(0, 1), 5.0, 1e-12);
}

TEST(Face, EdgeFaceKeepsLength) {
  std::mt19937_64 gen(5);
  const Simplex s = random_simplex(5, gen);
  const IndexList idx{2, 4};
  EXPECT_NEAR(face(s, idx).edge_length(0, 1), s.edge_length(2, 4), 1e-12);
}

TEST(Face, Errors) {
  const Simplex s = regular(3, 1.0);
  EXPECT_THROW(face(s, IndexList{1}), InputError);
  EXPECT_THROW(face(s, IndexList{0, 4}), InputError);
  EXPECT_THROW(face(s, IndexList{1, 1, 2}), InputError);
}

TEST(Face, CompositionConsistency) {
  std::mt19937_64 gen(6);
  for (int trial = 0; trial < 20; ++trial) {
    const Simplex s = random_simplex(6, gen);
    const IndexList outer{0, 2, 3, 5, 6};
    const IndexList inner{1, 3, 4};
    const IndexList composed{outer[1], outer[3], outer[4]};
    const std::vector<double> a = sorted_edges(face(face(s, outer), inner));
    const std::vector<double> b = sorted_edges(face(s, composed));
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_LT(oracle::rel_diff(a[i], b[i]), 1e-9);
  }
}

TEST(AffineCircumsphere, MatchesCayleyMengerInHigherAmbient) {
  std::mt19937_64 gen(7);
  const Simplex s = random_simplex(6, gen);
  const PointList facet = s.facet_vertices(2);
  const Sphere sp = affine_circumsphere(facet);
  EXPECT_LT(oracle::rel_diff(sp.radius, oracle::circumradius(facet)), 1e-9);
  for (const Point& p : facet) EXPECT_LT(oracle::rel_diff((p - sp.center).norm(), sp.radius), 1e-9);
}

TEST(ShapePredicates, RegularAllTrue) {
  for (int d = 2; d <= 10; ++d) {
    const ShapePredicates p = shape_predicates(regular(d, 1.3));
    EXPECT_TRUE(p.is_regular && p.is_equiareal && p.is_equiradial && p.has_well_distributed_edges) << "d=" << d;
  }
}

TEST(ShapePredicates, EquiradialKite) {
  const Simplex k = kite(equiradial_kite(5));
  const ShapePredicates p = shape_predicates(k);
  EXPECT_TRUE(p.is_equiradial);
  EXPECT_FALSE(p.is_regular);
  for (double r : facet_circumradii(k)) EXPECT_NEAR(r, std::sqrt(0.4), 1e-12);
  EXPECT_NEAR(facet_circumradii(k).front(), 0.6324555320336757, 1e-12);
}

TEST(ShapePredicates, RectangularAllFalse) {
  const ShapePredicates p = shape_predicates(rectangular({{3.0, 4.0}}));
  EXPECT_FALSE(p.is_regular || p.is_equiareal || p.is_equiradial || p.has_well_distributed_edges);
}

TEST(ShapePredicates, DisphenoidIsEquifacetalNotRegular) {
  PointList v{Point(Eigen::Vector3d(1, 2, 3)), Point(Eigen::Vector3d(1, -2, -3)), Point(Eigen::Vector3d(-1, 2, -3)),
              Point(Eigen::Vector3d(-1, -2, 3))};
  const ShapePredicates p = shape_predicates(Simplex::from_vertices(3, v));
  EXPECT_FALSE(p.is_regular);
  EXPECT_TRUE(p.is_equiareal && p.is_equiradial && p.has_well_distributed_edges);
}

TEST(DihedralCosines, Examples) {
  const Matrix tri = dihedral_cosines(regular(2, 1.0));
  EXPECT_NEAR(tri(0, 1), 0.5, 1e-14);
  EXPECT_NEAR(tri(1, 2), 0.5, 1e-14);
  const Matrix tet = dihedral_cosines(regular(3, 1.0));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) EXPECT_NEAR(tet(i, j), 1.0 / 3.0, 1e-14);
  // Facets 0, 1, 2 of the corner simplex are the coordinate facets.
  const Matrix rc = dihedral_cosines(rectangular({{1.0, 1.0, 1.0}}));
  EXPECT_NEAR(rc(0, 1), 0.0, 1e-14);
  EXPECT_NEAR(rc(0, 2), 0.0, 1e-14);
  EXPECT_NEAR(rc(1, 2), 0.0, 1e-14);
}

TEST(DihedralCosines, PlanarAnglesAgreeWithLawOfCosines) {
  // In a triangle the dihedral angle at a vertex is the interior angle.
  PointList v{Point(Eigen::Vector2d(0, 0)), Point(Eigen::Vector2d(4, 0)), Point(Eigen::Vector2d(1, 3))};
  const Simplex s = Simplex::from_vertices(2, v);
  const Matrix c = dihedral_cosines(s);
  // Facets 1 and 2 meet at vertex 0.
  const double a2 = s.squared_edge(1, 2), b2 = s.squared_edge(0, 2), c2 = s.squared_edge(0, 1);
  EXPECT_NEAR(c(1, 2), (b2 + c2 - a2) / (2 * std::sqrt(b2 * c2)), 1e-14);
}

TEST(FacetNormals, MinkowskiClosure) {
  std::mt19937_64 gen(8);
  for (int d = 2; d <= 8; ++d) {
    const Simplex s = random_simplex(d, gen);
    const PointList n = facet_normals(s);
    const std::vector<double> v = facet_volumes(s);
    Point sum = Point::Zero(d);
    double scale = 0.0;
    for (std::size_t i = 0; i < n.size(); ++i) {
      sum += v[i] * n[i];
      scale += v[i];
    }
    EXPECT_LT(sum.norm(), 1e-12 * scale) << "d=" << d;
  }
}

TEST(Barycentric, RecoversCombination) {
  std::mt19937_64 gen(9);
  const Simplex s = random_simplex(5, gen);
  Vector w(6);
  w << 0.1, -0.3, 0.5, 0.2, 0.25, 0.25;
  Point x = Point::Zero(5);
  for (int i = 0; i < 6; ++i) x += w(i) * s.vertex(static_cast<std::size_t>(i));
  EXPECT_LT((barycentric(s, x) - w).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(VertexAngle, Classes) {
  const Simplex r = rectangular({{1.0, 2.0, 3.0}});
  EXPECT_EQ(vertex_angle(r, 3), VertexAngle::right);
  EXPECT_EQ(vertex_angle(r, 0), VertexAngle::strongly_acute);
  PointList v{Point(Eigen::Vector2d(0, 0)), Point(Eigen::Vector2d(4, 0)), Point(Eigen::Vector2d(-1, 1))};
  EXPECT_EQ(vertex_angle(Simplex::from_vertices(2, v), 0), VertexAngle::strongly_obtuse);
}
