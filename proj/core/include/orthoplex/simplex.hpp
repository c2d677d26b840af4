#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "orthoplex/numerics.hpp"

namespace orthoplex {

using IndexList = std::vector<std::size_t>;

/// A non-degenerate d-simplex: d+1 affinely independent vertices in d-space.
///
/// Vertex indices are 0-based; vertex A_i of the usual 1-based notation is
/// vertex(i - 1) here, and facet F_i (opposite A_i) is facet(i - 1).
/// Faces produced by face() may have dimension 1; every other constructor
/// in the library produces d >= 2.
class Simplex {
 public:
  /// Validates arity, finiteness and non-degeneracy (every eigenvalue of the
  /// edge-vector Gram matrix must exceed rank_cut * lambda_max).
  static Simplex from_vertices(int dim, PointList vertices, const TolerancePolicy& policy = {});

  int dim() const noexcept { return dim_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const Point& vertex(std::size_t i) const { return vertices_.at(i); }
  const PointList& vertices() const noexcept { return vertices_; }

  double squared_edge(std::size_t i, std::size_t j) const {
    return (vertices_.at(i) - vertices_.at(j)).squaredNorm();
  }
  double edge_length(std::size_t i, std::size_t j) const { return std::sqrt(squared_edge(i, j)); }

  /// The d vertices of facet i (all vertices except i), in order.
  PointList facet_vertices(std::size_t i) const;

  Simplex translated(const Point& offset) const;
  Simplex scaled(double factor) const;

 private:
  Simplex(int dim, PointList vertices) : dim_(dim), vertices_(std::move(vertices)) {}

  int dim_ = 0;
  PointList vertices_;
};

struct Metrics {
  double volume = 0.0;
  double circumradius = 0.0;
  double inradius = 0.0;
  double diameter = 0.0;
};

/// Entry (i, j) is (A_i - origin) . (A_j - origin).
SymMatrix gram(const Simplex& s, const Point& origin);

double volume(const Simplex& s);
double diameter(const Simplex& s);
Metrics metrics(const Simplex& s);

/// k-dimensional volume of the simplex spanned by k+1 points in any ambient
/// dimension, sqrt(det(E^T E)) / k! with E the edge vectors from points[0].
double measure(std::span<const Point> points);

struct Sphere {
  Point center;
  double radius = 0.0;
};

/// Circumsphere of k+1 affinely independent points, with the center inside
/// their affine hull. Works in any ambient dimension.
Sphere affine_circumsphere(std::span<const Point> points);

/// Barycentric coordinates of x with respect to the vertices of s.
Vector barycentric(const Simplex& s, const Point& x);

/// Distance from x to the hyperplane spanned by facet i.
double facet_hyperplane_distance(const Simplex& s, std::size_t i, const Point& x);

/// Orthogonal projection of x onto the affine hull of `points`.
Point project_to_hull(std::span<const Point> points, const Point& x);

/// The face spanned by the listed vertices, re-embedded isometrically into
/// (|indices| - 1)-space. Only pairwise distances are preserved.
Simplex face(const Simplex& s, std::span<const std::size_t> indices, const TolerancePolicy& policy = {});

std::vector<double> facet_volumes(const Simplex& s);
std::vector<double> facet_circumradii(const Simplex& s);
/// Sum of squared edge lengths of each facet.
std::vector<double> facet_squared_edge_sums(const Simplex& s);

struct ShapePredicates {
  bool is_regular = false;
  bool is_equiareal = false;
  bool is_equiradial = false;
  bool has_well_distributed_edges = false;
};

ShapePredicates shape_predicates(const Simplex& s, const TolerancePolicy& policy = {});

/// Foot B_i of the altitude from vertex i onto the affine hull of facet i.
PointList altitude_feet(const Simplex& s);

/// Outward unit normals n_i of the facets, pointing from A_i towards B_i.
PointList facet_normals(const Simplex& s);

/// Symmetric table of cos(phi_ij) = -n_i . n_j, phi_ij being the interior
/// dihedral angle between facets i and j. The diagonal is set to 1.
Matrix dihedral_cosines(const Simplex& s);

enum class VertexAngle { strongly_acute, strongly_obtuse, right, mixed };

/// Classifies the polyhedral angle at vertex i by the signs of
/// (A_i - A_j) . (A_i - A_k) over all j != k distinct from i. Values within
/// rel * |A_i - A_j| |A_i - A_k| of zero count as right angles.
VertexAngle vertex_angle(const Simplex& s, std::size_t i, const TolerancePolicy& policy = {});

}  // namespace orthoplex
