#pragma once

#include <vector>

#include "geofuse/core.hpp"

namespace geofuse {

/// Classical MDS output. Coordinates are row-major N x k; column l carries
/// squared norm equal to eigenvalues[l] (clamped at 0). negative_mass
/// reports how non-Euclidean the input was: sum of |negative eigenvalues|
/// over the sum of all eigenvalue magnitudes.
struct MdsResult {
  int n_points = 0;
  int dim = 0;
  std::vector<double> coordinates;  // n_points * dim
  std::vector<double> eigenvalues;  // dim values, descending, clamped >= 0
  double negative_mass = 0.0;

  double coordinate(int point, int axis) const {
    return coordinates[static_cast<std::size_t>(point) * dim + axis];
  }
};

/// Double-centers the squared dissimilarities and embeds on the top-k
/// eigenpairs. Deterministic including per-column sign (largest-magnitude
/// coordinate made positive).
MdsResult classical_mds(const DissimilarityMatrix& d, int k);

/// Pairwise Euclidean distances of an embedding, for reconstruction checks.
DissimilarityMatrix mds_distances(const MdsResult& result);

/// min over scalar a of ||a*A - B||_F / ||B||_F (closed form). Invariant
/// under positive rescaling of A.
double scale_aligned_error(const SquareMatrix& a, const SquareMatrix& b);

enum class CorrelationMethod { pearson, spearman };

/// Correlation of the strict upper triangles. Spearman uses average ranks
/// on ties.
double offdiag_correlation(const SquareMatrix& a, const SquareMatrix& b,
                           CorrelationMethod method);

}  // namespace geofuse
