#pragma once

#include <span>
#include <string>
#include <vector>

#include "geofuse/error.hpp"

namespace geofuse {

/// Dense row-major square matrix of doubles.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n, double fill = 0.0)
      : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {
    if (n < 0) fail(ErrorCode::InvalidArgument, "matrix size must be non-negative");
  }

  int size() const { return n_; }
  double operator()(int i, int j) const { return data_[index(i, j)]; }
  double& operator()(int i, int j) { return data_[index(i, j)]; }
  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<double> data_;
};

/// Symmetric, non-negative, zero-diagonal matrix. Not required to satisfy
/// the triangle inequality.
struct DissimilarityMatrix {
  SquareMatrix values;
  int size() const { return values.size(); }
};

enum class SimilarityKind { w, p, s, fused };

const char* to_string(SimilarityKind kind);

/// Non-negative matrix; the tag records which normalization produced it.
struct SimilarityMatrix {
  SimilarityKind kind = SimilarityKind::w;
  SquareMatrix values;
  int size() const { return values.size(); }
};

/// One sensor stream: T samples, each a point in a k-dimensional real
/// vector space (k == 1 for scalar sensors).
struct Channel {
  std::string name;
  int dim = 1;
  std::vector<double> values;  // sample-major, size T * dim

  int sample_count() const {
    return dim > 0 ? static_cast<int>(values.size()) / dim : 0;
  }

  std::span<const double> sample(int t) const {
    return {values.data() + static_cast<std::size_t>(t) * dim,
            static_cast<std::size_t>(dim)};
  }
};

/// m channels over a common time axis. Immutable after construction; all
/// coordinates are validated finite, all channels share one sample count.
class MultiTimeSeries {
 public:
  explicit MultiTimeSeries(std::vector<Channel> channels);

  int channel_count() const { return static_cast<int>(channels_.size()); }
  int sample_count() const { return sample_count_; }
  const Channel& channel(int i) const;
  const std::vector<Channel>& channels() const { return channels_; }

  static MultiTimeSeries from_scalar_columns(
      std::vector<std::string> names,
      const std::vector<std::vector<double>>& columns);

 private:
  std::vector<Channel> channels_;
  int sample_count_ = 0;
};

enum class Boundary { truncate, wrap };
enum class ProjectionScope { unmarked_only, all_vectors };

const char* to_string(Boundary boundary);
const char* to_string(ProjectionScope scope);
Boundary boundary_from_string(const std::string& s);
ProjectionScope scope_from_string(const std::string& s);

/// Window and orthogonalization parameters shared by the embedding and
/// fusion stages.
struct DelayParams {
  int tau = 1;
  int d = 1;
  double lambda = 0.0;
  Boundary boundary = Boundary::truncate;
  ProjectionScope scope = ProjectionScope::unmarked_only;

  void validate() const;
};

/// Euclidean distance between samples t1 and t2 of one channel.
double channel_distance(const MultiTimeSeries& ts, int channel, int t1, int t2);

/// Checks the dissimilarity invariants and returns the matrix with exact
/// symmetry enforced by averaging M with its transpose. Asymmetry up to
/// 1e-12 relative to the largest entry is repaired; anything larger throws.
DissimilarityMatrix validate_dissimilarity(const SquareMatrix& m);

/// Pairwise Euclidean distances of n points with `dim` coordinates each
/// (row-major). Parallel over rows; `_serial` is the reference path.
DissimilarityMatrix pairwise_distances(std::span<const double> points, int n, int dim);
DissimilarityMatrix pairwise_distances_serial(std::span<const double> points, int n, int dim);

}  // namespace geofuse
