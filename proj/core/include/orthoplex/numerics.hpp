#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "orthoplex/errors.hpp"

namespace orthoplex {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Point = Eigen::VectorXd;
using PointList = std::vector<Point>;

/// Tolerances shared by every geometric predicate.
///
/// `rel` scales comparisons as |x - y| <= rel * max(|x|, |y|, abs);
/// `rank_cut` is the eigenvalue ratio lambda / lambda_max below which an
/// eigenvalue counts as zero. All three must lie in (0, 1).
class TolerancePolicy {
 public:
  TolerancePolicy() = default;
  TolerancePolicy(double rel, double abs, double rank_cut);

  double rel() const noexcept { return rel_; }
  double abs() const noexcept { return abs_; }
  double rank_cut() const noexcept { return rank_cut_; }

  TolerancePolicy with_rel(double rel) const { return {rel, abs_, rank_cut_}; }

  /// Max-relative comparison.
  bool close(double x, double y) const noexcept;

  /// True when max - min over `values` is within rel * max |value|.
  bool all_close(std::span<const double> values) const noexcept;

 private:
  double rel_ = 1e-9;
  double abs_ = 1e-12;
  double rank_cut_ = 1e-10;
};

/// Relative spread (max - min) / max(|max|, abs) of a list; 0 for empty lists.
double relative_spread(std::span<const double> values, double floor = 1e-300) noexcept;

/// Square symmetric matrix. The constructor symmetrizes its input and
/// rejects matrices whose asymmetry exceeds abs * max(1, max|entry|).
class SymMatrix {
 public:
  explicit SymMatrix(const Matrix& m, const TolerancePolicy& policy = {});

  Eigen::Index order() const noexcept { return m_.rows(); }
  double operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }
  const Matrix& matrix() const noexcept { return m_; }

 private:
  Matrix m_;
};

struct EigenDecomposition {
  Vector values;   // descending
  Matrix vectors;  // column k pairs with values[k]
};

/// Symmetric eigendecomposition, eigenvalues sorted descending.
/// Throws NumericError if the solver does not converge.
EigenDecomposition sym_eigen(const SymMatrix& m);

/// Determinant of the n x n matrix with entries a_i + b_i on the diagonal and
/// a_i off the diagonal (row i), i.e. (b_1...b_n)(1 + sum a_i/b_i), evaluated
/// in the zero-safe form prod(b) + sum_i a_i prod_{j != i} b_j.
double det_structured(std::span<const double> a, std::span<const double> b);

/// Points P_i with P_i . P_j = G_ij, in r-space where r is the numerical rank
/// of G. Coordinates come from the eigendecomposition and are then put in a
/// canonical pose: P_1 on the positive first axis, P_2 in the upper half of
/// the first coordinate plane, and so on.
/// Throws NotPsdError when an eigenvalue is below -rank_cut * lambda_max.
PointList gram_embed(const SymMatrix& gram, const TolerancePolicy& policy = {});

/// Rotates a point set (rows of a configuration) into the canonical pose
/// described for gram_embed. Pairwise inner products are preserved.
PointList canonical_pose(const PointList& points);

}  // namespace orthoplex
