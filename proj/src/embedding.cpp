#include "geofuse/embedding.hpp"

#include <cmath>
#include <string>

namespace geofuse {

WindowIndexPlan make_window_plan(int series_length, const DelayParams& params) {
  params.validate();
  if (series_length < 1) fail(ErrorCode::EmptyInput, "series length must be >= 1");
  WindowIndexPlan plan{params.tau, params.d, series_length, params.boundary, 0};
  if (params.boundary == Boundary::wrap) {
    plan.n_windows = series_length;
  } else {
    const long span = static_cast<long>(params.d - 1) * params.tau;
    if (span + 1 > series_length)
      fail(ErrorCode::WindowOutOfRange,
           "window span " + std::to_string(span + 1) + " exceeds series length " +
               std::to_string(series_length));
    plan.n_windows = series_length - static_cast<int>(span);
  }
  return plan;
}

WindowIndexPlan make_window_plan(const MultiTimeSeries& ts, const DelayParams& params) {
  return make_window_plan(ts.sample_count(), params);
}

std::vector<int> all_window_starts(const WindowIndexPlan& plan) {
  std::vector<int> starts(static_cast<std::size_t>(plan.n_windows));
  for (int t = 0; t < plan.n_windows; ++t) starts[static_cast<std::size_t>(t)] = t;
  return starts;
}

namespace detail {

int check_window_start(const WindowIndexPlan& plan, int t) {
  if (t < 0 || t >= plan.n_windows)
    fail(ErrorCode::WindowOutOfRange, "window start " + std::to_string(t) +
                                          " outside [0, " +
                                          std::to_string(plan.n_windows) + ")");
  return t;
}

inline int window_sample_index(const WindowIndexPlan& plan, int t, int j) {
  const long raw = static_cast<long>(t) + static_cast<long>(j) * plan.tau;
  if (plan.boundary == Boundary::wrap)
    return static_cast<int>(raw % plan.series_length);
  return static_cast<int>(raw);
}

void difference_vectors_into(const MultiTimeSeries& ts, const WindowIndexPlan& plan,
                             int t1, int t2, double* out) {
  check_window_start(plan, t1);
  check_window_start(plan, t2);
  const int m = ts.channel_count();
  for (int i = 0; i < m; ++i) {
    const Channel& ch = ts.channel(i);
    double* row = out + static_cast<std::size_t>(i) * plan.d;
    for (int j = 0; j < plan.d; ++j) {
      const int a = window_sample_index(plan, t1, j);
      const int b = window_sample_index(plan, t2, j);
      const double* pa = ch.values.data() + static_cast<std::size_t>(a) * ch.dim;
      const double* pb = ch.values.data() + static_cast<std::size_t>(b) * ch.dim;
      double sum = 0.0;
      for (int c = 0; c < ch.dim; ++c) {
        const double diff = pa[c] - pb[c];
        sum += diff * diff;
      }
      row[j] = std::sqrt(sum);
    }
  }
}

}  // namespace detail

Window sliding_window(const MultiTimeSeries& ts, int channel, const DelayParams& params,
                      int t) {
  const auto plan = make_window_plan(ts, params);
  detail::check_window_start(plan, t);
  const Channel& ch = ts.channel(channel);
  Window window;
  window.reserve(static_cast<std::size_t>(plan.d));
  for (int j = 0; j < plan.d; ++j) {
    const int idx = detail::window_sample_index(plan, t, j);
    auto s = ch.sample(idx);
    window.emplace_back(s.begin(), s.end());
  }
  return window;
}

std::vector<Window> joint_window(const MultiTimeSeries& ts, const DelayParams& params,
                                 int t) {
  std::vector<Window> rows;
  rows.reserve(static_cast<std::size_t>(ts.channel_count()));
  for (int i = 0; i < ts.channel_count(); ++i)
    rows.push_back(sliding_window(ts, i, params, t));
  return rows;
}

std::vector<std::vector<double>> difference_vectors(const MultiTimeSeries& ts,
                                                    const DelayParams& params, int t1,
                                                    int t2) {
  const auto plan = make_window_plan(ts, params);
  const int m = ts.channel_count();
  std::vector<double> flat(static_cast<std::size_t>(m) * plan.d);
  detail::difference_vectors_into(ts, plan, t1, t2, flat.data());
  std::vector<std::vector<double>> vectors(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    vectors[static_cast<std::size_t>(i)] =
        std::vector<double>(flat.begin() + static_cast<std::ptrdiff_t>(i) * plan.d,
                            flat.begin() + static_cast<std::ptrdiff_t>(i + 1) * plan.d);
  return vectors;
}

}  // namespace geofuse
