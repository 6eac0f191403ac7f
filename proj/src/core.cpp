#include "geofuse/core.hpp"

#include <algorithm>
#include <cmath>

#include "geofuse/rng.hpp"

namespace geofuse {

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // u1 in (0, 1] so the log is finite.
  const double u1 = 1.0 - uniform01();
  const double u2 = uniform01();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

std::array<double, 3> Rng::unit_vector3() {
  while (true) {
    std::array<double, 3> v{normal(), normal(), normal()};
    const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (norm > 1e-12) {
      for (double& c : v) c /= norm;
      return v;
    }
  }
}

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorCode::AsymmetryTooLarge: return "AsymmetryTooLarge";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::WindowOutOfRange: return "WindowOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::TooFewViews: return "TooFewViews";
    case ErrorCode::ZeroRowSum: return "ZeroRowSum";
    case ErrorCode::EmptyNeighborhood: return "EmptyNeighborhood";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::ZeroMatrix: return "ZeroMatrix";
    case ErrorCode::ConstantInput: return "ConstantInput";
    case ErrorCode::ThresholdRequired: return "ThresholdRequired";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::MissingColumn: return "MissingColumn";
    case ErrorCode::TooFewRows: return "TooFewRows";
    case ErrorCode::UnparseableNumber: return "UnparseableNumber";
    case ErrorCode::NonUnitProjection: return "NonUnitProjection";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

const char* to_string(SimilarityKind kind) {
  switch (kind) {
    case SimilarityKind::w: return "W";
    case SimilarityKind::p: return "P";
    case SimilarityKind::s: return "S";
    case SimilarityKind::fused: return "fused";
  }
  return "?";
}

const char* to_string(Boundary boundary) {
  return boundary == Boundary::truncate ? "truncate" : "wrap";
}

const char* to_string(ProjectionScope scope) {
  return scope == ProjectionScope::unmarked_only ? "unmarked_only" : "all_vectors";
}

Boundary boundary_from_string(const std::string& s) {
  if (s == "truncate") return Boundary::truncate;
  if (s == "wrap") return Boundary::wrap;
  fail(ErrorCode::InvalidArgument, "unknown boundary mode '" + s + "'");
}

ProjectionScope scope_from_string(const std::string& s) {
  if (s == "unmarked_only") return ProjectionScope::unmarked_only;
  if (s == "all_vectors") return ProjectionScope::all_vectors;
  fail(ErrorCode::InvalidArgument, "unknown projection scope '" + s + "'");
}

void DelayParams::validate() const {
  if (tau < 1) fail(ErrorCode::InvalidArgument, "tau must be >= 1");
  if (d < 1) fail(ErrorCode::InvalidArgument, "d must be >= 1");
  if (!(lambda >= 0.0 && lambda <= 1.0))
    fail(ErrorCode::InvalidArgument, "lambda must lie in [0, 1]");
}

MultiTimeSeries::MultiTimeSeries(std::vector<Channel> channels)
    : channels_(std::move(channels)) {
  if (channels_.empty()) fail(ErrorCode::EmptyInput, "time series needs at least one channel");
  for (std::size_t i = 0; i < channels_.size(); ++i) {
    const Channel& ch = channels_[i];
    if (ch.dim < 1)
      fail(ErrorCode::InvalidArgument, "channel " + std::to_string(i) + " has dim < 1");
    if (ch.values.size() % static_cast<std::size_t>(ch.dim) != 0)
      fail(ErrorCode::SizeMismatch,
           "channel " + std::to_string(i) + " value count is not a multiple of dim");
    for (double v : ch.values)
      if (!std::isfinite(v))
        fail(ErrorCode::InvalidArgument,
             "channel " + std::to_string(i) + " contains a non-finite value");
  }
  sample_count_ = channels_.front().sample_count();
  if (sample_count_ < 1) fail(ErrorCode::EmptyInput, "channels must have at least one sample");
  for (std::size_t i = 1; i < channels_.size(); ++i)
    if (channels_[i].sample_count() != sample_count_)
      fail(ErrorCode::SizeMismatch, "channel " + std::to_string(i) +
                                        " sample count differs from channel 0");
}

const Channel& MultiTimeSeries::channel(int i) const {
  if (i < 0 || i >= channel_count())
    fail(ErrorCode::IndexOutOfRange, "channel index " + std::to_string(i));
  return channels_[static_cast<std::size_t>(i)];
}

MultiTimeSeries MultiTimeSeries::from_scalar_columns(
    std::vector<std::string> names, const std::vector<std::vector<double>>& columns) {
  if (names.size() != columns.size())
    fail(ErrorCode::SizeMismatch, "name count differs from column count");
  std::vector<Channel> channels;
  channels.reserve(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i)
    channels.push_back(Channel{std::move(names[i]), 1, columns[i]});
  return MultiTimeSeries(std::move(channels));
}

double channel_distance(const MultiTimeSeries& ts, int channel, int t1, int t2) {
  const Channel& ch = ts.channel(channel);
  const int t_count = ts.sample_count();
  if (t1 < 0 || t1 >= t_count || t2 < 0 || t2 >= t_count)
    fail(ErrorCode::IndexOutOfRange, "sample index out of range");
  auto a = ch.sample(t1);
  auto b = ch.sample(t2);
  double sum = 0.0;
  for (int c = 0; c < ch.dim; ++c) {
    const double diff = a[c] - b[c];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

DissimilarityMatrix validate_dissimilarity(const SquareMatrix& m) {
  const int n = m.size();
  double max_entry = 0.0;
  for (double v : m.data()) max_entry = std::max(max_entry, std::abs(v));

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double v = m(i, j);
      if (!std::isfinite(v))
        fail(ErrorCode::InvalidArgument, "non-finite entry at (" + std::to_string(i) +
                                             "," + std::to_string(j) + ")");
      if (v < 0.0)
        fail(ErrorCode::NegativeEntry, "entry (" + std::to_string(i) + "," +
                                           std::to_string(j) + ") = " + std::to_string(v));
    }
    if (std::abs(m(i, i)) > 1e-12 * max_entry)
      fail(ErrorCode::NonzeroDiagonal, "diagonal entry " + std::to_string(i));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(m(i, j) - m(j, i)) > 1e-12 * max_entry)
        fail(ErrorCode::AsymmetryTooLarge, "entries (" + std::to_string(i) + "," +
                                               std::to_string(j) + ")");

  DissimilarityMatrix out{SquareMatrix(n)};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double v = 0.5 * (m(i, j) + m(j, i));
      out.values(i, j) = v;
      out.values(j, i) = v;
    }
  }
  return out;
}

namespace {

double point_distance(std::span<const double> points, int dim, int a, int b) {
  const double* pa = points.data() + static_cast<std::size_t>(a) * dim;
  const double* pb = points.data() + static_cast<std::size_t>(b) * dim;
  double sum = 0.0;
  for (int c = 0; c < dim; ++c) {
    const double diff = pa[c] - pb[c];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

}  // namespace

DissimilarityMatrix pairwise_distances_serial(std::span<const double> points, int n,
                                              int dim) {
  if (n < 0 || dim < 1 || points.size() != static_cast<std::size_t>(n) * dim)
    fail(ErrorCode::SizeMismatch, "point buffer does not match n*dim");
  DissimilarityMatrix out{SquareMatrix(n)};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = point_distance(points, dim, i, j);
      out.values(i, j) = d;
      out.values(j, i) = d;
    }
  }
  return out;
}

DissimilarityMatrix pairwise_distances(std::span<const double> points, int n, int dim) {
  if (n < 0 || dim < 1 || points.size() != static_cast<std::size_t>(n) * dim)
    fail(ErrorCode::SizeMismatch, "point buffer does not match n*dim");
  DissimilarityMatrix out{SquareMatrix(n)};
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = point_distance(points, dim, i, j);
      out.values(i, j) = d;
      out.values(j, i) = d;
    }
  }
  return out;
}

}  // namespace geofuse
