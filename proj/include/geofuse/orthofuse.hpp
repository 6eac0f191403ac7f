#pragma once

#include <span>
#include <vector>

#include "geofuse/core.hpp"
#include "geofuse/embedding.hpp"

namespace geofuse {

/// Record of one tensor evaluation: which vector was marked at each round
/// and the vectors left after all replacements.
struct GSTrace {
  std::vector<int> marking_order;                 // original indices
  std::vector<std::vector<double>> final_vectors; // original positions
  double value = 0.0;
};

/// Partial Gram-Schmidt tensor. Rounds pick the unmarked vector of largest
/// norm (ties to the lowest original index), mark it, and shrink the others
/// toward orthogonality by strength lambda:
///   w <- w - lambda * (<w, w*> / <w*, w*>) * w*
/// With scope unmarked_only the replacement touches unmarked vectors; with
/// all_vectors it touches every vector other than the marked one. A zero
/// marked vector contributes a projection coefficient of 0. Returns the
/// root-sum-square of the final norms.
double gs_tensor(const std::vector<std::vector<double>>& vectors, double lambda,
                 ProjectionScope scope = ProjectionScope::unmarked_only,
                 GSTrace* trace = nullptr);

namespace detail {

/// In-place flat kernel: `vectors` is m rows of length dim, overwritten with
/// the final vectors. `marking_order` (length m) is optional.
double gs_tensor_inplace(double* vectors, int m, int dim, double lambda,
                         ProjectionScope scope, int* marking_order = nullptr);

}  // namespace detail

/// Fused distance between the joint windows at t1 and t2: the tensor applied
/// to the per-channel difference vectors.
double jde_distance(const MultiTimeSeries& ts, const DelayParams& params, int t1,
                    int t2);

/// Pairwise fused distances over a set of window starts; entry (a, b) is the
/// distance between windows starts[a] and starts[b]. Parallel over pairs;
/// `_serial` is the reference path. Each unordered pair is evaluated once.
DissimilarityMatrix jde_matrix(const MultiTimeSeries& ts, const DelayParams& params,
                               std::span<const int> window_starts);
DissimilarityMatrix jde_matrix_serial(const MultiTimeSeries& ts,
                                      const DelayParams& params,
                                      std::span<const int> window_starts);

/// Entrywise root-sum-of-squares of per-sensor dissimilarity matrices.
DissimilarityMatrix jdl_matrix(std::span<const DissimilarityMatrix> views);

/// Per-channel matrices of raw sample distances (window length 1), the
/// default inputs to the JDL and SNF baselines. `windowed` variant feeds
/// per-channel delay-window distances instead.
std::vector<DissimilarityMatrix> per_channel_distance_matrices(
    const MultiTimeSeries& ts, const DelayParams& params, bool windowed = false);

}  // namespace geofuse
