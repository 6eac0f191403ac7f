#pragma once

#include <span>
#include <vector>

#include "geofuse/core.hpp"

namespace geofuse {
namespace snf {

/// Similarity network fusion parameters. kappa sets the neighborhood
/// fraction, beta the kernel bandwidth scale.
struct SnfConfig {
  double beta = 0.5;
  double kappa = 0.1;
  int iterations = 20;
  bool symmetrize_each_step = false;
  // Sequential updates let each view see lower-index views already updated
  // within the sweep; synchronous updates compute the whole sweep from the
  // previous iterate.
  bool synchronous_updates = false;

  void validate() const;
};

/// Indices of the floor(kappa*N) nearest neighbors of i (minimum 1),
/// including i itself; ties broken by lower index.
std::vector<int> neighbor_set(const DissimilarityMatrix& d, int i, double kappa);

/// Bandwidth term: (beta/3) * (mean neighbor distance at i + mean neighbor
/// distance at j + d_ij), where both means divide by the literal kappa*N.
double sigma(const DissimilarityMatrix& d, int i, int j, double beta, double kappa);

/// W_ij = exp(-d_ij^2 / sigma_ij); exactly 1 whenever d_ij = 0. Parallel
/// over rows; `_serial` is the reference path.
SimilarityMatrix to_similarity(const DissimilarityMatrix& d, double beta, double kappa);
SimilarityMatrix to_similarity_serial(const DissimilarityMatrix& d, double beta,
                                      double kappa);

/// Row-stochastic kernel: off-diagonal W_ij / (2 * sum of row i off-diagonal),
/// 1/2 on the diagonal.
SimilarityMatrix full_kernel(const SimilarityMatrix& w);

/// Neighbor-supported kernel: row mass spread over the neighbor set of i
/// (excluding i), zero elsewhere, 1/2 on the diagonal. Neighborhoods come
/// from the distances that produced w.
SimilarityMatrix sparse_kernel(const SimilarityMatrix& w, const DissimilarityMatrix& d,
                               double kappa);

/// Full fusion: kernels per view, cross-diffusion sweeps, and the final
/// average of the updated row kernels.
SimilarityMatrix snf_fuse(std::span<const DissimilarityMatrix> views,
                          const SnfConfig& config);

}  // namespace snf
}  // namespace geofuse
