#include "geofuse/geomtools.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Dense>

namespace geofuse {

MdsResult classical_mds(const DissimilarityMatrix& d, int k) {
  const int n = d.size();
  if (k < 1 || k >= n)
    fail(ErrorCode::InvalidArgument, "target dimension must satisfy 1 <= k < N");

  // B = -1/2 * J * (D.^2) * J via explicit double centering.
  Eigen::MatrixXd sq(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sq(i, j) = d.values(i, j) * d.values(i, j);
  const Eigen::VectorXd row_mean = sq.rowwise().mean();
  const double total_mean = sq.mean();
  Eigen::MatrixXd b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      b(i, j) = -0.5 * (sq(i, j) - row_mean(i) - row_mean(j) + total_mean);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b);
  if (solver.info() != Eigen::Success)
    fail(ErrorCode::ConvergenceFailure, "symmetric eigen-solve did not converge");

  // Ascending eigenvalues; negative mass from the full spectrum.
  const Eigen::VectorXd& values = solver.eigenvalues();
  double negative_sum = 0.0;
  double magnitude_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    magnitude_sum += std::abs(values(i));
    if (values(i) < 0.0) negative_sum += std::abs(values(i));
  }

  MdsResult result;
  result.n_points = n;
  result.dim = k;
  result.negative_mass = magnitude_sum > 0.0 ? negative_sum / magnitude_sum : 0.0;
  result.eigenvalues.resize(static_cast<std::size_t>(k));
  result.coordinates.assign(static_cast<std::size_t>(n) * k, 0.0);

  for (int l = 0; l < k; ++l) {
    const int src = n - 1 - l;  // descending order
    const double eigenvalue = std::max(values(src), 0.0);
    result.eigenvalues[static_cast<std::size_t>(l)] = eigenvalue;
    Eigen::VectorXd column = solver.eigenvectors().col(src);

    int anchor = 0;
    for (int i = 1; i < n; ++i)
      if (std::abs(column(i)) > std::abs(column(anchor))) anchor = i;
    if (column(anchor) < 0.0) column = -column;

    const double scale = std::sqrt(eigenvalue);
    for (int i = 0; i < n; ++i)
      result.coordinates[static_cast<std::size_t>(i) * k + l] = scale * column(i);
  }
  return result;
}

DissimilarityMatrix mds_distances(const MdsResult& result) {
  return pairwise_distances(result.coordinates, result.n_points, result.dim);
}

double scale_aligned_error(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.size() != b.size()) fail(ErrorCode::SizeMismatch, "matrices must share one size");
  double ab = 0.0, aa = 0.0, bb = 0.0;
  const auto& av = a.data();
  const auto& bv = b.data();
  for (std::size_t i = 0; i < av.size(); ++i) {
    ab += av[i] * bv[i];
    aa += av[i] * av[i];
    bb += bv[i] * bv[i];
  }
  if (bb == 0.0) fail(ErrorCode::ZeroMatrix, "reference matrix is zero");
  if (aa == 0.0) fail(ErrorCode::ZeroMatrix, "candidate matrix is zero");
  const double alpha = ab / aa;
  double err = 0.0;
  for (std::size_t i = 0; i < av.size(); ++i) {
    const double diff = alpha * av[i] - bv[i];
    err += diff * diff;
  }
  return std::sqrt(err / bb);
}

namespace {

std::vector<double> upper_triangle(const SquareMatrix& m) {
  const int n = m.size();
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) values.push_back(m(i, j));
  return values;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0)
    fail(ErrorCode::ConstantInput, "correlation input has zero variance");
  return sxy / std::sqrt(sxx * syy);
}

/// Average ranks, 1-based; tied values share the mean of their positions.
std::vector<double> average_ranks(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double shared = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
    for (std::size_t p = i; p <= j; ++p) ranks[order[p]] = shared;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double offdiag_correlation(const SquareMatrix& a, const SquareMatrix& b,
                           CorrelationMethod method) {
  if (a.size() != b.size()) fail(ErrorCode::SizeMismatch, "matrices must share one size");
  if (a.size() < 3)
    fail(ErrorCode::InvalidArgument, "need N >= 3 for off-diagonal correlation");
  auto x = upper_triangle(a);
  auto y = upper_triangle(b);
  if (method == CorrelationMethod::spearman) {
    x = average_ranks(x);
    y = average_ranks(y);
  }
  return pearson(x, y);
}

}  // namespace geofuse
