#include "geofuse/snf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Dense>

namespace geofuse {
namespace snf {

namespace {

using EigenMap = Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                          Eigen::RowMajor>>;
using ConstEigenMap = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic,
                                                     Eigen::Dynamic, Eigen::RowMajor>>;

ConstEigenMap as_eigen(const SquareMatrix& m) {
  return ConstEigenMap(m.data().data(), m.size(), m.size());
}

EigenMap as_eigen(SquareMatrix& m) {
  return EigenMap(m.data().data(), m.size(), m.size());
}

int neighbor_count(int n, double kappa) {
  return std::max(1, static_cast<int>(std::floor(kappa * n)));
}

/// Mean distance from i to its neighbor set, dividing by the literal
/// kappa*N rather than the rounded set size.
double mean_neighbor_distance(const DissimilarityMatrix& d, int i, double kappa) {
  double sum = 0.0;
  for (int k : neighbor_set(d, i, kappa)) sum += d.values(i, k);
  return sum / (kappa * d.size());
}

void check_kernel_inputs(const DissimilarityMatrix& d, double beta, double kappa) {
  if (d.size() < 2) fail(ErrorCode::InvalidArgument, "need at least 2 points");
  if (!(kappa > 0.0 && kappa <= 1.0))
    fail(ErrorCode::InvalidArgument, "kappa must lie in (0, 1]");
  if (!(beta > 0.0)) fail(ErrorCode::InvalidArgument, "beta must be positive");
}

}  // namespace

void SnfConfig::validate() const {
  if (!(kappa > 0.0 && kappa <= 1.0))
    fail(ErrorCode::InvalidArgument, "kappa must lie in (0, 1]");
  if (!(beta > 0.0)) fail(ErrorCode::InvalidArgument, "beta must be positive");
  if (iterations < 1) fail(ErrorCode::InvalidArgument, "iterations must be >= 1");
}

std::vector<int> neighbor_set(const DissimilarityMatrix& d, int i, double kappa) {
  const int n = d.size();
  if (n < 2) fail(ErrorCode::InvalidArgument, "need at least 2 points");
  if (!(kappa > 0.0 && kappa <= 1.0))
    fail(ErrorCode::InvalidArgument, "kappa must lie in (0, 1]");
  if (i < 0 || i >= n) fail(ErrorCode::IndexOutOfRange, "row " + std::to_string(i));

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const double da = d.values(i, a);
    const double db = d.values(i, b);
    if (da != db) return da < db;
    return a < b;
  });
  order.resize(static_cast<std::size_t>(neighbor_count(n, kappa)));
  return order;
}

double sigma(const DissimilarityMatrix& d, int i, int j, double beta, double kappa) {
  check_kernel_inputs(d, beta, kappa);
  return (beta / 3.0) * (mean_neighbor_distance(d, i, kappa) +
                         mean_neighbor_distance(d, j, kappa) + d.values(i, j));
}

namespace {

SimilarityMatrix to_similarity_impl(const DissimilarityMatrix& d, double beta,
                                    double kappa, bool parallel) {
  check_kernel_inputs(d, beta, kappa);
  const int n = d.size();
  std::vector<double> row_mean(static_cast<std::size_t>(n));

  const auto row_body = [&](int i) {
    row_mean[static_cast<std::size_t>(i)] = mean_neighbor_distance(d, i, kappa);
  };
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) row_body(i);
  } else {
    for (int i = 0; i < n; ++i) row_body(i);
  }

  SimilarityMatrix w{SimilarityKind::w, SquareMatrix(n)};
  const auto cell_body = [&](int i) {
    for (int j = 0; j < n; ++j) {
      const double dij = d.values(i, j);
      if (dij == 0.0) {
        w.values(i, j) = 1.0;
        continue;
      }
      const double s = (beta / 3.0) * (row_mean[static_cast<std::size_t>(i)] +
                                       row_mean[static_cast<std::size_t>(j)] + dij);
      w.values(i, j) = std::exp(-dij * dij / s);
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) cell_body(i);
  } else {
    for (int i = 0; i < n; ++i) cell_body(i);
  }
  return w;
}

}  // namespace

SimilarityMatrix to_similarity(const DissimilarityMatrix& d, double beta, double kappa) {
  return to_similarity_impl(d, beta, kappa, true);
}

SimilarityMatrix to_similarity_serial(const DissimilarityMatrix& d, double beta,
                                      double kappa) {
  return to_similarity_impl(d, beta, kappa, false);
}

SimilarityMatrix full_kernel(const SimilarityMatrix& w) {
  const int n = w.size();
  SimilarityMatrix p{SimilarityKind::p, SquareMatrix(n)};
  for (int i = 0; i < n; ++i) {
    double off_sum = 0.0;
    for (int j = 0; j < n; ++j)
      if (j != i) off_sum += w.values(i, j);
    if (!(off_sum > 0.0))
      fail(ErrorCode::ZeroRowSum, "row " + std::to_string(i) +
                                      " has no off-diagonal similarity mass");
    for (int j = 0; j < n; ++j)
      p.values(i, j) = (j == i) ? 0.5 : w.values(i, j) / (2.0 * off_sum);
  }
  return p;
}

SimilarityMatrix sparse_kernel(const SimilarityMatrix& w, const DissimilarityMatrix& d,
                               double kappa) {
  const int n = w.size();
  if (d.size() != n) fail(ErrorCode::SizeMismatch, "W and D sizes differ");
  if (neighbor_count(n, kappa) < 2)
    fail(ErrorCode::EmptyNeighborhood,
         "kappa*N leaves no neighbor besides the point itself");

  SimilarityMatrix s{SimilarityKind::s, SquareMatrix(n)};
  for (int i = 0; i < n; ++i) {
    auto neighbors = neighbor_set(d, i, kappa);
    std::erase(neighbors, i);
    double mass = 0.0;
    for (int k : neighbors) mass += w.values(i, k);
    if (!(mass > 0.0))
      fail(ErrorCode::ZeroRowSum, "row " + std::to_string(i) +
                                      " has no similarity mass on its neighbors");
    s.values(i, i) = 0.5;
    for (int k : neighbors) s.values(i, k) = w.values(i, k) / (2.0 * mass);
  }
  return s;
}

SimilarityMatrix snf_fuse(std::span<const DissimilarityMatrix> views,
                          const SnfConfig& config) {
  config.validate();
  const int m = static_cast<int>(views.size());
  if (m < 2) fail(ErrorCode::TooFewViews, "fusion needs at least 2 views");
  const int n = views.front().size();
  for (const auto& v : views)
    if (v.size() != n) fail(ErrorCode::SizeMismatch, "views must share one size");

  std::vector<SimilarityMatrix> p_mats;
  std::vector<SimilarityMatrix> s_mats;
  p_mats.reserve(static_cast<std::size_t>(m));
  s_mats.reserve(static_cast<std::size_t>(m));
  for (const auto& view : views) {
    const SimilarityMatrix w = to_similarity(view, config.beta, config.kappa);
    p_mats.push_back(full_kernel(w));
    s_mats.push_back(sparse_kernel(w, view, config.kappa));
  }

  Eigen::MatrixXd mixed(n, n);
  const auto update_one = [&](int l, const std::vector<SimilarityMatrix>& source,
                              SimilarityMatrix& target) {
    mixed.setZero();
    for (int k = 0; k < m; ++k)
      if (k != l) mixed += as_eigen(source[static_cast<std::size_t>(k)].values);
    mixed /= static_cast<double>(m - 1);
    const auto s = as_eigen(s_mats[static_cast<std::size_t>(l)].values);
    Eigen::MatrixXd updated = s * mixed * s.transpose();
    if (config.symmetrize_each_step)
      updated = 0.5 * (updated + updated.transpose()).eval();
    as_eigen(target.values) = updated;
  };

  for (int iter = 0; iter < config.iterations; ++iter) {
    if (config.synchronous_updates) {
      const std::vector<SimilarityMatrix> snapshot = p_mats;
      for (int l = 0; l < m; ++l)
        update_one(l, snapshot, p_mats[static_cast<std::size_t>(l)]);
    } else {
      for (int l = 0; l < m; ++l)
        update_one(l, p_mats, p_mats[static_cast<std::size_t>(l)]);
    }
  }

  SimilarityMatrix fused{SimilarityKind::fused, SquareMatrix(n)};
  auto acc = as_eigen(fused.values);
  for (const auto& p : p_mats) acc += as_eigen(p.values);
  acc /= static_cast<double>(m);
  return fused;
}

}  // namespace snf
}  // namespace geofuse
