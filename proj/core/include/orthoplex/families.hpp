#pragma once

#include <vector>

#include "orthoplex/centers.hpp"
#include "orthoplex/orthocentric.hpp"
#include "orthoplex/simplex.hpp"

namespace orthoplex {

/// Regular d-simplex of edge s, centered at the origin, in canonical pose.
Simplex regular(int d, double s, const TolerancePolicy& policy = {});

struct RegularMetrics {
  double circumradius = 0.0;  // s sqrt(d / (2 (d + 1)))
  double altitude = 0.0;      // s sqrt((d + 1) / (2 d))
  double volume = 0.0;        // s^d sqrt((d + 1) / 2^d) / d!
  double inradius = 0.0;      // s / sqrt(2 d (d + 1))
};

RegularMetrics regular_metrics(int d, double s);

/// K_d[s, t]: a regular (d-1)-simplex base of edge s and an apex at distance
/// t from every base vertex. The apex is vertex d.
struct KiteSpec {
  int d = 3;
  double base_edge = 1.0;
  double apex_edge = 1.0;

  double eccentricity() const { return apex_edge / base_edge; }
};

struct KiteMetrics {
  double circumradius = 0.0;
  double inradius = 0.0;
  double altitude = 0.0;
  double volume = 0.0;
  double base_circumradius = 0.0;
  bool circumcenter_interior = false;  // eps^2 > (d - 1) / d
  bool equiradial = false;             // eps^2 = (d - 2) / d or eps = 1
  bool orthocenter_interior = false;   // eps^2 > 1/2
  bool rectangular_at_apex = false;    // eps^2 = 1/2
};

/// Throws InputError for d < 3 or non-positive edges and DegeneracyError
/// when eps^2 <= (d - 1) / (2 d).
void validate(const KiteSpec& spec);

/// The base lies in the hyperplane x_d = 0 centered at the origin; the apex
/// is at height h on the last axis.
Simplex kite(const KiteSpec& spec, const TolerancePolicy& policy = {});
KiteMetrics kite_metrics(const KiteSpec& spec, const TolerancePolicy& policy = {});

/// Unit-base kite with eps^2 = (d - 2) / d. Requires d >= 4.
KiteSpec equiradial_kite(int d);

/// Legs b_1..b_d along the coordinate axes; the right-angle corner is
/// vertex d, at the origin.
struct RectSpec {
  std::vector<double> legs;

  int dim() const { return static_cast<int>(legs.size()); }
};

void validate(const RectSpec& spec);

Simplex rectangular(const RectSpec& spec, const TolerancePolicy& policy = {});

struct RectMetrics {
  double volume = 0.0;
  double hypotenuse_volume = 0.0;
  double altitude = 0.0;  // from the corner to the hypotenuse facet
  double inradius = 0.0;
  double circumradius_sq = 0.0;
  Point circumcenter;
  Point hypotenuse_orthocenter;  // foot of the corner altitude
};

RectMetrics rect_metrics(const RectSpec& spec);

/// Centers of the rectangular simplex. Throws NumericError if the
/// circumcenter's barycentrics differ from (1/2, ..., 1/2, (2 - d)/2).
CenterReport rect_centers_distinct(const RectSpec& spec, const TolerancePolicy& policy = {});

struct RectLift {
  RectSpec spec;
  Simplex simplex;
};

/// Rectangular d-simplex whose hypotenuse facet is congruent to the
/// (d-1)-simplex t: legs b_i = sqrt(-c / t_i). Throws NotLiftableError
/// unless t is orthocentric with negative obtuseness.
RectLift lift_to_rectangular(const Simplex& t, const TolerancePolicy& policy = {});

/// m (d + 1 - m) < ((d^2 - 3d + 4) / (2 (d - 2)))^2, decided in integers.
bool equiradial_admissible(int d, int m);

struct EquiradialSolution {
  int m = 0;
  int n = 0;
  double xi = 0.0;
  double eta = 0.0;
  double x = 0.0;
  double y = 0.0;
  double a = 0.0;  // barycentric value on the first m vertices
  double b = 0.0;  // on the remaining n

  Vector bary() const;
};

/// Branch 1 takes xi as the larger root of
/// Z^2 - (d^2 - 3d + 4 - 2mn) Z + mn (mn - d), branch 2 the smaller.
/// Throws AdmissibilityError for inadmissible (d, m).
EquiradialSolution equiradial_solve(int d, int m, int branch);

struct EquiradialResult {
  Simplex simplex;
  EquiradialSolution solution;
};

EquiradialResult equiradial_general(int d, int m, int branch, const TolerancePolicy& policy = {});

}  // namespace orthoplex
