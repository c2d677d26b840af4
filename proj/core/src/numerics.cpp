#include "orthoplex/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace orthoplex {

namespace {

bool in_unit_interval(double x) { return x > 0.0 && x < 1.0 && std::isfinite(x); }

}  // namespace

TolerancePolicy::TolerancePolicy(double rel, double abs, double rank_cut)
    : rel_(rel), abs_(abs), rank_cut_(rank_cut) {
  if (!in_unit_interval(rel) || !in_unit_interval(abs) || !in_unit_interval(rank_cut)) {
    throw InputError("tolerance values must lie strictly between 0 and 1");
  }
}

bool TolerancePolicy::close(double x, double y) const noexcept {
  const double scale = std::max({std::abs(x), std::abs(y), abs_});
  return std::abs(x - y) <= rel_ * scale;
}

bool TolerancePolicy::all_close(std::span<const double> values) const noexcept {
  return relative_spread(values, abs_) <= rel_;
}

double relative_spread(std::span<const double> values, double floor) noexcept {
  if (values.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double scale = std::max({std::abs(*lo), std::abs(*hi), floor});
  return (*hi - *lo) / scale;
}

SymMatrix::SymMatrix(const Matrix& m, const TolerancePolicy& policy) {
  if (m.rows() != m.cols()) throw InputError("SymMatrix requires a square matrix");
  if (!m.allFinite()) throw InputError("SymMatrix entries must be finite");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (m.size() > 0 && (m - m.transpose()).cwiseAbs().maxCoeff() > policy.abs() * scale) {
    throw InputError("matrix is not symmetric within tolerance");
  }
  m_ = 0.5 * (m + m.transpose());
}

EigenDecomposition sym_eigen(const SymMatrix& m) {
  const Eigen::Index n = m.order();
  if (n == 0) return {Vector(0), Matrix(0, 0)};
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m.matrix());
  if (solver.info() != Eigen::Success) {
    throw NumericError("symmetric eigensolver did not converge");
  }
  EigenDecomposition out{solver.eigenvalues().reverse(), solver.eigenvectors().rowwise().reverse()};
  return out;
}

double det_structured(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw InputError("det_structured: a and b must have equal length");
  const std::size_t n = a.size();
  if (n == 0) return 1.0;
  // prefix[i] = b_0 ... b_{i-1}, suffix[i] = b_i ... b_{n-1}
  std::vector<double> prefix(n + 1, 1.0), suffix(n + 1, 1.0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * b[i];
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] * b[i];
  double det = prefix[n];
  for (std::size_t i = 0; i < n; ++i) det += a[i] * prefix[i] * suffix[i + 1];
  return det;
}

PointList canonical_pose(const PointList& points) {
  if (points.empty()) return {};
  const Eigen::Index r = points.front().size();
  const auto n = static_cast<Eigen::Index>(points.size());
  if (r == 0) return points;

  Matrix xt(r, n);
  for (Eigen::Index i = 0; i < n; ++i) xt.col(i) = points[static_cast<std::size_t>(i)];

  Eigen::HouseholderQR<Matrix> qr(xt);
  Matrix rmat = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < std::min(r, n); ++k) {
    if (rmat(k, k) < 0.0) rmat.row(k) *= -1.0;
  }
  PointList out;
  out.reserve(points.size());
  for (Eigen::Index i = 0; i < n; ++i) out.emplace_back(rmat.col(i));
  return out;
}

PointList gram_embed(const SymMatrix& gram, const TolerancePolicy& policy) {
  const Eigen::Index n = gram.order();
  if (n == 0) return {};
  const EigenDecomposition eig = sym_eigen(gram);
  const double lambda_max = eig.values(0);
  const double lambda_min = eig.values(n - 1);
  const double band = policy.rank_cut() * std::max(lambda_max, 0.0);

  if (lambda_min < -band) {
    const double ratio = lambda_max > 0.0 ? lambda_min / lambda_max
                                          : -std::numeric_limits<double>::infinity();
    throw NotPsdError("Gram candidate is not positive semidefinite (lambda_min/lambda_max = " +
                          std::to_string(ratio) + ")",
                      ratio);
  }

  Eigen::Index rank = 0;
  while (rank < n && eig.values(rank) > band) ++rank;

  PointList points(static_cast<std::size_t>(n), Point::Zero(rank));
  for (Eigen::Index k = 0; k < rank; ++k) {
    const double root = std::sqrt(eig.values(k));
    for (Eigen::Index i = 0; i < n; ++i) {
      points[static_cast<std::size_t>(i)](k) = root * eig.vectors(i, k);
    }
  }
  return canonical_pose(points);
}

}  // namespace orthoplex
