#include "orthoplex/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "orthoplex/centers.hpp"

namespace orthoplex {

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Columns are points[i] - points[0], i >= 1.
Matrix edge_matrix(std::span<const Point> points) {
  const auto k = static_cast<Eigen::Index>(points.size()) - 1;
  Matrix e(points.front().size(), k);
  for (Eigen::Index i = 0; i < k; ++i) e.col(i) = points[static_cast<std::size_t>(i + 1)] - points[0];
  return e;
}

}  // namespace

Simplex Simplex::from_vertices(int dim, PointList vertices, const TolerancePolicy& policy) {
  if (dim < 1) throw InputError("simplex dimension must be at least 1");
  if (vertices.size() != static_cast<std::size_t>(dim) + 1) {
    throw InputError("a " + std::to_string(dim) + "-simplex needs " + std::to_string(dim + 1) +
                     " vertices, got " + std::to_string(vertices.size()));
  }
  for (const Point& v : vertices) {
    if (v.size() != dim) {
      throw InputError("every vertex of a " + std::to_string(dim) + "-simplex needs " +
                       std::to_string(dim) + " coordinates");
    }
    if (!v.allFinite()) throw InputError("vertex coordinates must be finite");
  }

  const Point& last = vertices.back();
  Matrix edges(dim, dim);
  for (int i = 0; i < dim; ++i) edges.col(i) = vertices[static_cast<std::size_t>(i)] - last;
  const Matrix g = edges.transpose() * edges;
  const EigenDecomposition eig = sym_eigen(SymMatrix(g));
  const double lambda_max = eig.values(0);
  const double ratio = lambda_max > 0.0 ? eig.values(dim - 1) / lambda_max : 0.0;
  if (!(ratio > policy.rank_cut())) {
    throw DegeneracyError("degenerate simplex: edge Gram eigenvalue ratio " + std::to_string(ratio) +
                              " is not above rank_cut",
                          ratio);
  }
  return Simplex(dim, std::move(vertices));
}

PointList Simplex::facet_vertices(std::size_t i) const {
  PointList out;
  out.reserve(vertices_.size() - 1);
  for (std::size_t j = 0; j < vertices_.size(); ++j) {
    if (j != i) out.push_back(vertices_[j]);
  }
  return out;
}

Simplex Simplex::translated(const Point& offset) const {
  PointList v = vertices_;
  for (Point& p : v) p += offset;
  return Simplex(dim_, std::move(v));
}

Simplex Simplex::scaled(double factor) const {
  PointList v = vertices_;
  for (Point& p : v) p *= factor;
  return Simplex(dim_, std::move(v));
}

SymMatrix gram(const Simplex& s, const Point& origin) {
  if (origin.size() != s.dim()) throw InputError("gram origin must have length d");
  const auto n = static_cast<Eigen::Index>(s.vertex_count());
  Matrix centered(s.dim(), n);
  for (Eigen::Index i = 0; i < n; ++i) centered.col(i) = s.vertex(static_cast<std::size_t>(i)) - origin;
  return SymMatrix(centered.transpose() * centered);
}

double measure(std::span<const Point> points) {
  if (points.empty()) throw InputError("measure of an empty point set");
  const int k = static_cast<int>(points.size()) - 1;
  if (k == 0) return 1.0;
  const Matrix e = edge_matrix(points);
  const double det = (e.transpose() * e).determinant();
  return std::sqrt(std::max(det, 0.0)) / factorial(k);
}

double volume(const Simplex& s) {
  return measure(s.vertices());
}

double diameter(const Simplex& s) {
  double best = 0.0;
  for (std::size_t i = 0; i < s.vertex_count(); ++i) {
    for (std::size_t j = i + 1; j < s.vertex_count(); ++j) best = std::max(best, s.squared_edge(i, j));
  }
  return std::sqrt(best);
}

Metrics metrics(const Simplex& s) {
  return {volume(s), circumcenter(s).radius, incenter(s).radius, diameter(s)};
}

Sphere affine_circumsphere(std::span<const Point> points) {
  if (points.empty()) throw InputError("circumsphere of an empty point set");
  if (points.size() == 1) return {points[0], 0.0};
  const Matrix e = edge_matrix(points);
  const Matrix m = e.transpose() * e;
  const Vector lambda = m.ldlt().solve(0.5 * m.diagonal());
  Sphere out{points[0] + e * lambda, 0.0};
  for (const Point& p : points) out.radius += (p - out.center).norm();
  out.radius /= static_cast<double>(points.size());
  return out;
}

Vector barycentric(const Simplex& s, const Point& x) {
  if (x.size() != s.dim()) throw InputError("barycentric: point has the wrong dimension");
  const int d = s.dim();
  const Point& last = s.vertex(static_cast<std::size_t>(d));
  Matrix e(d, d);
  for (int i = 0; i < d; ++i) e.col(i) = s.vertex(static_cast<std::size_t>(i)) - last;
  Vector out(d + 1);
  out.head(d) = e.partialPivLu().solve(x - last);
  out(d) = 1.0 - out.head(d).sum();
  return out;
}

double facet_hyperplane_distance(const Simplex& s, std::size_t i, const Point& x) {
  const PointList facet = s.facet_vertices(i);
  return (x - project_to_hull(facet, x)).norm();
}

Point project_to_hull(std::span<const Point> points, const Point& x) {
  if (points.empty()) throw InputError("projection onto an empty hull");
  if (points.size() == 1) return points[0];
  const Matrix e = edge_matrix(points);
  const Vector lambda = (e.transpose() * e).ldlt().solve(e.transpose() * (x - points[0]));
  return points[0] + e * lambda;
}

Simplex face(const Simplex& s, std::span<const std::size_t> indices, const TolerancePolicy& policy) {
  if (indices.size() < 2 || indices.size() > s.vertex_count()) {
    throw InputError("a face needs between 2 and d+1 vertex indices");
  }
  std::vector<bool> seen(s.vertex_count(), false);
  for (std::size_t i : indices) {
    if (i >= s.vertex_count()) throw InputError("face index " + std::to_string(i) + " out of range");
    if (seen[i]) throw InputError("face index " + std::to_string(i) + " repeated");
    seen[i] = true;
  }

  const auto n = static_cast<Eigen::Index>(indices.size());
  Point center = Point::Zero(s.dim());
  for (std::size_t i : indices) center += s.vertex(i);
  center /= static_cast<double>(n);

  Matrix centered(s.dim(), n);
  for (Eigen::Index c = 0; c < n; ++c) centered.col(c) = s.vertex(indices[static_cast<std::size_t>(c)]) - center;
  PointList pts = gram_embed(SymMatrix(centered.transpose() * centered), policy);

  const int k = static_cast<int>(n) - 1;
  if (pts.front().size() != k) {
    throw DegeneracyError("face has numerical rank " + std::to_string(pts.front().size()) + ", expected " +
                              std::to_string(k),
                          0.0);
  }
  return Simplex::from_vertices(k, std::move(pts), policy);
}

std::vector<double> facet_volumes(const Simplex& s) {
  std::vector<double> out;
  for (std::size_t i = 0; i < s.vertex_count(); ++i) out.push_back(measure(s.facet_vertices(i)));
  return out;
}

std::vector<double> facet_circumradii(const Simplex& s) {
  std::vector<double> out;
  for (std::size_t i = 0; i < s.vertex_count(); ++i) out.push_back(affine_circumsphere(s.facet_vertices(i)).radius);
  return out;
}

std::vector<double> facet_squared_edge_sums(const Simplex& s) {
  const std::size_t n = s.vertex_count();
  double total = 0.0;
  std::vector<double> at_vertex(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double e2 = s.squared_edge(i, j);
      total += e2;
      at_vertex[i] += e2;
      at_vertex[j] += e2;
    }
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = total - at_vertex[i];
  return out;
}

ShapePredicates shape_predicates(const Simplex& s, const TolerancePolicy& policy) {
  std::vector<double> edges;
  for (std::size_t i = 0; i < s.vertex_count(); ++i) {
    for (std::size_t j = i + 1; j < s.vertex_count(); ++j) edges.push_back(s.edge_length(i, j));
  }
  ShapePredicates out;
  out.is_regular = policy.all_close(edges);
  out.is_equiareal = policy.all_close(facet_volumes(s));
  out.is_equiradial = policy.all_close(facet_circumradii(s));
  out.has_well_distributed_edges = policy.all_close(facet_squared_edge_sums(s));
  return out;
}

PointList altitude_feet(const Simplex& s) {
  PointList out;
  for (std::size_t i = 0; i < s.vertex_count(); ++i) out.push_back(project_to_hull(s.facet_vertices(i), s.vertex(i)));
  return out;
}

PointList facet_normals(const Simplex& s) {
  PointList feet = altitude_feet(s);
  for (std::size_t i = 0; i < feet.size(); ++i) {
    feet[i] -= s.vertex(i);
    feet[i].normalize();
  }
  return feet;
}

Matrix dihedral_cosines(const Simplex& s) {
  const PointList normals = facet_normals(s);
  const auto n = static_cast<Eigen::Index>(normals.size());
  Matrix out = Matrix::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      out(i, j) = out(j, i) = -normals[static_cast<std::size_t>(i)].dot(normals[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

VertexAngle vertex_angle(const Simplex& s, std::size_t i, const TolerancePolicy& policy) {
  int positive = 0, negative = 0, zero = 0;
  for (std::size_t j = 0; j < s.vertex_count(); ++j) {
    if (j == i) continue;
    for (std::size_t k = j + 1; k < s.vertex_count(); ++k) {
      if (k == i) continue;
      const Point u = s.vertex(i) - s.vertex(j);
      const Point v = s.vertex(i) - s.vertex(k);
      const double t = u.dot(v);
      if (std::abs(t) <= policy.rel() * u.norm() * v.norm()) {
        ++zero;
      } else if (t > 0.0) {
        ++positive;
      } else {
        ++negative;
      }
    }
  }
  const int total = positive + negative + zero;
  if (positive == total) return VertexAngle::strongly_acute;
  if (negative == total) return VertexAngle::strongly_obtuse;
  if (zero == total) return VertexAngle::right;
  return VertexAngle::mixed;
}

}  // namespace orthoplex
