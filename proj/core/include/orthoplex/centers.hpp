#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orthoplex/simplex.hpp"

namespace orthoplex {

Point centroid(const Simplex& s);

/// Circumsphere from 2 (A_i - A_d) . C = |A_i|^2 - |A_d|^2, i < d.
/// The radius is the mean distance from the center to the vertices.
Sphere circumcenter(const Simplex& s);

/// Inscribed sphere: center sum V_i A_i / sum V_i with V_i the facet
/// volumes, radius d V / sum V_i.
Sphere incenter(const Simplex& s);

/// ((d+1) G - 2 C) / (d-1). Requires d >= 2.
Point monge_point(const Simplex& s);

/// Largest |(M - G_ij) . (A_i - A_j)| / |A_i - A_j| over edges, where G_ij is
/// the centroid of the vertices other than i and j. Zero for an exact Monge point.
double monge_residual(const Simplex& s, const Point& m);

/// The Monge point when the simplex is orthocentric, nothing otherwise.
std::optional<Point> orthocenter(const Simplex& s, const TolerancePolicy& policy = {});

struct EulerLine {
  bool coincident = false;       // C and H within rel * diameter
  std::optional<double> ratio;   // |C - G| / |G - H|, absent when coincident
  double collinearity_residual = 0.0;  // distance of G from line CH
};

/// Throws PreconditionError if s is not orthocentric.
EulerLine euler_line(const Simplex& s, const TolerancePolicy& policy = {});

struct FeuerbachSphere {
  int k = 0;
  Point center;
  double radius = 0.0;        // mean distance to the k-face centroids
  double max_residual = 0.0;  // worst |distance - radius| over those centroids
  // Worst |distance - radius| over the altitude feet; only for k = d-1 on
  // orthocentric input.
  std::optional<double> feet_max_residual;
};

/// Throws InputError for k outside [0, d-1] and PreconditionError for k < d-1
/// on a simplex that is not orthocentric.
FeuerbachSphere feuerbach_sphere(const Simplex& s, int k, const TolerancePolicy& policy = {});

struct CenterReport {
  Point centroid;
  Point circumcenter;
  double circumradius = 0.0;
  Point incenter;
  double inradius = 0.0;
  Point monge;
  std::optional<Point> orthocenter;
  // Pairs drawn from {centroid, circumcenter, incenter, orthocenter}; the
  // Monge point stands in for the orthocenter when the latter is absent.
  std::vector<std::pair<std::string, std::string>> coincident_pairs;
};

CenterReport center_report(const Simplex& s, const TolerancePolicy& policy = {});

/// All (k+1)-element index subsets of {0, ..., n-1} in lexicographic order.
std::vector<IndexList> index_subsets(std::size_t n, std::size_t size);

}  // namespace orthoplex
