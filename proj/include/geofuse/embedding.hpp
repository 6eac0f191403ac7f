#pragma once

#include <vector>

#include "geofuse/core.hpp"

namespace geofuse {

/// Valid window start times for a series of length T under (tau, d) and a
/// boundary mode. Truncate keeps windows inside the series; wrap indexes
/// samples modulo T.
struct WindowIndexPlan {
  int tau = 1;
  int d = 1;
  int series_length = 0;
  Boundary boundary = Boundary::truncate;
  int n_windows = 0;
};

WindowIndexPlan make_window_plan(int series_length, const DelayParams& params);
WindowIndexPlan make_window_plan(const MultiTimeSeries& ts, const DelayParams& params);

/// Start times 0 .. n_windows-1.
std::vector<int> all_window_starts(const WindowIndexPlan& plan);

using Sample = std::vector<double>;
using Window = std::vector<Sample>;  // d samples of one channel

/// Window of channel i starting at t: sample j is the channel value at
/// t + j*tau (modulo T when wrapping).
Window sliding_window(const MultiTimeSeries& ts, int channel, const DelayParams& params,
                      int t);

/// All m channel windows at a common start time; row i equals
/// sliding_window(ts, i, params, t).
std::vector<Window> joint_window(const MultiTimeSeries& ts, const DelayParams& params,
                                 int t);

/// Per-channel coordinatewise distance vectors between the windows at t1 and
/// t2: entry j of vector i is the channel-i sample distance at offsets
/// t1 + j*tau and t2 + j*tau.
std::vector<std::vector<double>> difference_vectors(const MultiTimeSeries& ts,
                                                    const DelayParams& params, int t1,
                                                    int t2);

namespace detail {

/// Fills a preallocated m*d row-major buffer with the difference vectors.
/// Hot path for the pairwise fusion kernels; no allocation, no checks beyond
/// window-start validation.
void difference_vectors_into(const MultiTimeSeries& ts, const WindowIndexPlan& plan,
                             int t1, int t2, double* out);

int check_window_start(const WindowIndexPlan& plan, int t);

}  // namespace detail

}  // namespace geofuse
