#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "orthoplex/simplex.hpp"

namespace orthoplex {

enum class OrthoClass { acute, obtuse, rectangular };

std::string to_string(OrthoClass c);
OrthoClass ortho_class_from_string(const std::string& name);

/// Shape parameters of an orthocentric simplex: barycentric coordinates of
/// the orthocenter H and the obtuseness c = (H - A_i) . (H - A_j), i != j.
struct OrthoParams {
  int dim = 0;
  Vector bary;
  double obtuseness = 0.0;
  OrthoClass cls = OrthoClass::acute;
  std::optional<std::size_t> rectangular_vertex;  // set when cls is rectangular
};

/// Every pair of disjoint edges is perpendicular within
/// |(A_i - A_j) . (A_k - A_l)| <= rel |A_i - A_j| |A_k - A_l|.
bool is_orthocentric(const Simplex& s, const TolerancePolicy& policy = {});

/// Largest |(A_i - A_j) . (A_k - A_l)| / (|A_i - A_j| |A_k - A_l|) over
/// disjoint edge pairs; 0 for triangles.
double orthocentricity_residual(const Simplex& s);

/// Throws PreconditionError on non-orthocentric input and NumericError when
/// the pairwise products disagree by more than rel * max(|c|, diameter^2).
OrthoParams params_of(const Simplex& s, const TolerancePolicy& policy = {});

/// Simplex with orthocenter at the origin, barycentrics `a` and obtuseness
/// -scale (all a_i > 0) or +scale (exactly one a_i > 0).
Simplex construct(std::span<const double> a, double scale, const TolerancePolicy& policy = {});
Simplex construct(const Vector& a, double scale, const TolerancePolicy& policy = {});

/// c * (J + diag(x)) with x_i = -1/a_i: the Gram matrix of A_i - H.
struct OrthoGramForm {
  double scale = 0.0;
  int sign = -1;
  Vector x;

  Matrix matrix() const;
};

OrthoGramForm gram_form(const OrthoParams& p);

struct AltitudeData {
  PointList feet;
  std::vector<double> lengths;
};

/// Closed-form edge, orthocenter-distance and altitude data, with the worst
/// relative disagreement against coordinates in `max_residual` (lengths
/// relative to the diameter, squared lengths to its square).
struct EdgeAltitudeData {
  AltitudeData altitudes;
  Matrix squared_edges;               // -c (1/a_i + 1/a_j), zero diagonal
  std::vector<double> orthocenter_sq;  // |A_i - H|^2 = c (a_i - 1) / a_i
  double max_residual = 0.0;
};

EdgeAltitudeData edge_and_altitude_data(const OrthoParams& p, const Simplex& s);

/// c [(sum b)^2 - sum b_i^2 / a_i], the squared norm of sum b_i (A_i - H).
double quadratic_form(const OrthoParams& p, std::span<const double> b);

/// Parameters of the face spanned by `indices`: a'_j = a_j / s and c' = c / s
/// with s the sum of the selected a_j.
OrthoParams restrict_to_face(const OrthoParams& p, std::span<const std::size_t> indices);

struct CircumData {
  Point center;            // (sum A_i) / 2 - (d - 1) / 2 * H
  double radius_sq = 0.0;  // c ((d - 1)^2 - sum 1 / a_i) / 4
  bool interior = false;   // 0 < a_i < 1 / (d - 1) for all i
  double max_residual = 0.0;  // against circumcenter(s)
};

CircumData circum_data(const OrthoParams& p, const Simplex& s);

/// c ((k - 1)^2 / s - sum_I 1 / a_i) / 4 for the k-face on `indices`.
double face_circumradius_sq(const OrthoParams& p, std::span<const std::size_t> indices);

/// Egervary parameters of the orthocentric system {H, A_1, ..., A_{d+1}}:
/// squared distances are sums of two parameters.
struct LambdaParams {
  double orthocenter = 0.0;  // c
  Vector vertices;           // -c / a_i

  double reciprocal_sum() const;
};

LambdaParams lambda_params(const OrthoParams& p);

/// d+2 points in d-space, each the orthocenter of the simplex on the others.
/// Throws DegeneracyError when some (d+1)-subset is degenerate.
bool orthocentric_system_check(std::span<const Point> points, const TolerancePolicy& policy = {});

/// Deterministic parameters with unit scale. Acute: uniform on the open
/// simplex. Obtuse: d coordinates -u_i with u_i in (0.05, 1), the remaining
/// one 1 + sum u_i, at a seed-dependent position. Samples with some
/// |a_i| < 0.01 or a proper subset sum within 0.01 of 0 or 1 are redrawn.
OrthoParams sample_params(int d, OrthoClass cls, std::uint64_t seed);

}  // namespace orthoplex
