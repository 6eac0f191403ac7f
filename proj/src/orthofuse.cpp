#include "geofuse/orthofuse.hpp"

#include <cmath>
#include <cstring>
#include <string>

namespace geofuse {

namespace detail {

namespace {

double dot(const double* a, const double* b, int dim) {
  double sum = 0.0;
  for (int c = 0; c < dim; ++c) sum += a[c] * b[c];
  return sum;
}

}  // namespace

double gs_tensor_inplace(double* vectors, int m, int dim, double lambda,
                         ProjectionScope scope, int* marking_order) {
  bool marked[64];
  std::vector<bool> marked_big;
  const bool small = m <= 64;
  if (small)
    std::memset(marked, 0, sizeof(bool) * static_cast<std::size_t>(m));
  else
    marked_big.assign(static_cast<std::size_t>(m), false);
  auto is_marked = [&](int i) { return small ? marked[i] : static_cast<bool>(marked_big[static_cast<std::size_t>(i)]); };
  auto set_marked = [&](int i) {
    if (small) marked[i] = true; else marked_big[static_cast<std::size_t>(i)] = true;
  };

  for (int round = 0; round < m; ++round) {
    // Largest-norm unmarked vector; strict > keeps the lowest index on ties.
    int star = -1;
    double star_norm_sq = -1.0;
    for (int i = 0; i < m; ++i) {
      if (is_marked(i)) continue;
      const double norm_sq = dot(vectors + static_cast<std::size_t>(i) * dim,
                                 vectors + static_cast<std::size_t>(i) * dim, dim);
      if (norm_sq > star_norm_sq) {
        star_norm_sq = norm_sq;
        star = i;
      }
    }
    set_marked(star);
    if (marking_order) marking_order[round] = star;

    if (star_norm_sq > 0.0) {
      const double* w_star = vectors + static_cast<std::size_t>(star) * dim;
      for (int i = 0; i < m; ++i) {
        if (i == star) continue;
        if (scope == ProjectionScope::unmarked_only && is_marked(i)) continue;
        double* w = vectors + static_cast<std::size_t>(i) * dim;
        const double coeff = lambda * dot(w, w_star, dim) / star_norm_sq;
        for (int c = 0; c < dim; ++c) w[c] -= coeff * w_star[c];
      }
    }
  }

  double sum_sq = 0.0;
  for (int i = 0; i < m; ++i)
    sum_sq += dot(vectors + static_cast<std::size_t>(i) * dim,
                  vectors + static_cast<std::size_t>(i) * dim, dim);
  return std::sqrt(sum_sq);
}

}  // namespace detail

double gs_tensor(const std::vector<std::vector<double>>& vectors, double lambda,
                 ProjectionScope scope, GSTrace* trace) {
  const int m = static_cast<int>(vectors.size());
  if (m == 0) fail(ErrorCode::EmptyInput, "tensor needs at least one vector");
  if (!(lambda >= 0.0 && lambda <= 1.0))
    fail(ErrorCode::InvalidArgument, "lambda must lie in [0, 1]");
  const int dim = static_cast<int>(vectors.front().size());
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != dim)
      fail(ErrorCode::DimensionMismatch, "vectors must share one dimension");

  std::vector<double> flat(static_cast<std::size_t>(m) * static_cast<std::size_t>(dim));
  for (int i = 0; i < m; ++i)
    std::copy(vectors[static_cast<std::size_t>(i)].begin(),
              vectors[static_cast<std::size_t>(i)].end(),
              flat.begin() + static_cast<std::ptrdiff_t>(i) * dim);

  std::vector<int> order(static_cast<std::size_t>(m));
  const double value =
      detail::gs_tensor_inplace(flat.data(), m, dim, lambda, scope, order.data());

  if (trace) {
    trace->marking_order = std::move(order);
    trace->final_vectors.assign(static_cast<std::size_t>(m), {});
    for (int i = 0; i < m; ++i)
      trace->final_vectors[static_cast<std::size_t>(i)] = std::vector<double>(
          flat.begin() + static_cast<std::ptrdiff_t>(i) * dim,
          flat.begin() + static_cast<std::ptrdiff_t>(i + 1) * dim);
    trace->value = value;
  }
  return value;
}

double jde_distance(const MultiTimeSeries& ts, const DelayParams& params, int t1,
                    int t2) {
  const auto plan = make_window_plan(ts, params);
  const int m = ts.channel_count();
  std::vector<double> buffer(static_cast<std::size_t>(m) * plan.d);
  detail::difference_vectors_into(ts, plan, t1, t2, buffer.data());
  return detail::gs_tensor_inplace(buffer.data(), m, plan.d, params.lambda,
                                   params.scope);
}

namespace {

DissimilarityMatrix jde_matrix_impl(const MultiTimeSeries& ts, const DelayParams& params,
                                    std::span<const int> window_starts, bool parallel) {
  const auto plan = make_window_plan(ts, params);
  for (int t : window_starts) detail::check_window_start(plan, t);
  const int n = static_cast<int>(window_starts.size());
  const int m = ts.channel_count();
  DissimilarityMatrix out{SquareMatrix(n)};

  // Unordered pairs flattened so one loop covers the upper triangle.
  const std::size_t n_pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<std::array<int, 2>> pairs;
  pairs.reserve(n_pairs);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.push_back({a, b});

  const auto body = [&](std::size_t p, std::vector<double>& buffer) {
    const auto [a, b] = pairs[p];
    detail::difference_vectors_into(ts, plan, window_starts[static_cast<std::size_t>(a)],
                                    window_starts[static_cast<std::size_t>(b)],
                                    buffer.data());
    const double value = detail::gs_tensor_inplace(buffer.data(), m, plan.d,
                                                   params.lambda, params.scope);
    out.values(a, b) = value;
    out.values(b, a) = value;
  };

  if (parallel) {
#pragma omp parallel
    {
      std::vector<double> buffer(static_cast<std::size_t>(m) * plan.d);
#pragma omp for schedule(static)
      for (std::ptrdiff_t p = 0; p < static_cast<std::ptrdiff_t>(pairs.size()); ++p)
        body(static_cast<std::size_t>(p), buffer);
    }
  } else {
    std::vector<double> buffer(static_cast<std::size_t>(m) * plan.d);
    for (std::size_t p = 0; p < pairs.size(); ++p) body(p, buffer);
  }
  return out;
}

}  // namespace

DissimilarityMatrix jde_matrix(const MultiTimeSeries& ts, const DelayParams& params,
                               std::span<const int> window_starts) {
  return jde_matrix_impl(ts, params, window_starts, true);
}

DissimilarityMatrix jde_matrix_serial(const MultiTimeSeries& ts,
                                      const DelayParams& params,
                                      std::span<const int> window_starts) {
  return jde_matrix_impl(ts, params, window_starts, false);
}

DissimilarityMatrix jdl_matrix(std::span<const DissimilarityMatrix> views) {
  if (views.empty()) fail(ErrorCode::EmptyInput, "no views to fuse");
  const int n = views.front().size();
  for (const auto& v : views)
    if (v.size() != n)
      fail(ErrorCode::SizeMismatch, "views must share one size");
  DissimilarityMatrix out{SquareMatrix(n)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double sum_sq = 0.0;
      for (const auto& v : views) {
        const double d = v.values(i, j);
        sum_sq += d * d;
      }
      out.values(i, j) = std::sqrt(sum_sq);
    }
  }
  return out;
}

std::vector<DissimilarityMatrix> per_channel_distance_matrices(
    const MultiTimeSeries& ts, const DelayParams& params, bool windowed) {
  DelayParams single = params;
  if (!windowed) single.d = 1;  // raw sample distances
  const auto plan = make_window_plan(ts, single);
  const auto starts = all_window_starts(plan);

  std::vector<DissimilarityMatrix> views;
  views.reserve(static_cast<std::size_t>(ts.channel_count()));
  const int n = static_cast<int>(starts.size());
  for (int i = 0; i < ts.channel_count(); ++i) {
    DissimilarityMatrix view{SquareMatrix(n)};
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        double sum_sq = 0.0;
        for (int j = 0; j < single.d; ++j) {
          const long ia = (static_cast<long>(starts[static_cast<std::size_t>(a)]) +
                           static_cast<long>(j) * single.tau);
          const long ib = (static_cast<long>(starts[static_cast<std::size_t>(b)]) +
                           static_cast<long>(j) * single.tau);
          const int sa = single.boundary == Boundary::wrap
                             ? static_cast<int>(ia % plan.series_length)
                             : static_cast<int>(ia);
          const int sb = single.boundary == Boundary::wrap
                             ? static_cast<int>(ib % plan.series_length)
                             : static_cast<int>(ib);
          const double d = channel_distance(ts, i, sa, sb);
          sum_sq += d * d;
        }
        const double value = std::sqrt(sum_sq);
        view.values(a, b) = value;
        view.values(b, a) = value;
      }
    }
    views.push_back(std::move(view));
  }
  return views;
}

}  // namespace geofuse
