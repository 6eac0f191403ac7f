#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "geofuse/orthofuse.hpp"
#include "geofuse/rng.hpp"
#include "oracles.hpp"

using namespace geofuse;

namespace {

MultiTimeSeries scalar_series(std::vector<std::vector<double>> columns) {
  std::vector<std::string> names(columns.size());
  return MultiTimeSeries::from_scalar_columns(names, columns);
}

std::vector<std::vector<double>> random_vectors(Rng& rng, int m, int dim, double scale) {
  std::vector<std::vector<double>> v(static_cast<std::size_t>(m));
  for (auto& row : v)
    for (int c = 0; c < dim; ++c) row.push_back(rng.uniform(-scale, scale));
  return v;
}

// Root-sum-square with the formula's grouping: each vector's squared norm
// first, then the sum across vectors.
double rss(const std::vector<std::vector<double>>& v) {
  double sum = 0.0;
  for (const auto& row : v) {
    double norm_sq = 0.0;
    for (double x : row) norm_sq += x * x;
    sum += norm_sq;
  }
  return std::sqrt(sum);
}

}  // namespace

TEST_CASE("gs_tensor worked examples") {
  const std::vector<std::vector<double>> orthogonal = {{1, 0}, {0, 1}};
  for (double lambda : {0.0, 0.3, 1.0}) {
    CHECK(gs_tensor(orthogonal, lambda) == doctest::Approx(std::sqrt(2.0)));
    CHECK(gs_tensor(orthogonal, lambda, ProjectionScope::all_vectors) ==
          doctest::Approx(std::sqrt(2.0)));
  }

  CHECK(gs_tensor({{2, 0}, {1, 0}}, 1.0) == doctest::Approx(2.0));

  CHECK(gs_tensor({{2, 0}, {1, 1}}, 0.5) ==
        doctest::Approx(2.29128784747792).epsilon(1e-9));
  CHECK(gs_tensor({{2, 0}, {1, 1}}, 0.5, ProjectionScope::all_vectors) ==
        doctest::Approx(2.1563858652847827).epsilon(1e-9));

  // The literal scope dips below the lambda = 1 value sqrt(5), which is why
  // unmarked_only is the default.
  CHECK(gs_tensor({{2, 0}, {1, 1}}, 0.5, ProjectionScope::all_vectors) <
        std::sqrt(5.0));
}

TEST_CASE("gs_tensor validates input") {
  CHECK_THROWS_AS(gs_tensor({}, 0.5), Error);
  CHECK_THROWS_AS(gs_tensor({{1, 0}, {1}}, 0.5), Error);
  CHECK_THROWS_AS(gs_tensor({{1, 0}}, 1.5), Error);
}

TEST_CASE("gs_tensor trace reports marking order and consistent value") {
  GSTrace trace;
  const double value = gs_tensor({{1, 1}, {3, 0}, {0, 2}}, 0.7,
                                 ProjectionScope::unmarked_only, &trace);
  REQUIRE(trace.marking_order.size() == 3);
  CHECK(trace.marking_order[0] == 1);  // largest norm first
  auto sorted = trace.marking_order;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{0, 1, 2});
  CHECK(trace.value == value);
  CHECK(rss(trace.final_vectors) == doctest::Approx(value).epsilon(1e-12));
}

TEST_CASE("tensor at lambda 0 is exactly the root-sum-square") {
  Rng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + static_cast<int>(rng.uniform01() * 6);
    const int dim = 1 + static_cast<int>(rng.uniform01() * 8);
    const auto v = random_vectors(rng, m, dim, 3.0);
    CHECK(gs_tensor(v, 0.0) == rss(v));
    CHECK(gs_tensor(v, 0.0, ProjectionScope::all_vectors) == rss(v));
  }
}

TEST_CASE("tensor never exceeds the unorthogonalized value") {
  Rng rng(102);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 2 + static_cast<int>(rng.uniform01() * 5);
    const int dim = 1 + static_cast<int>(rng.uniform01() * 8);
    const auto v = random_vectors(rng, m, dim, 2.0);
    const double base = rss(v);
    for (double lambda : {0.1, 0.5, 0.9, 1.0}) {
      CHECK(gs_tensor(v, lambda) <= base + 1e-9);
      CHECK(gs_tensor(v, lambda, ProjectionScope::all_vectors) <= base + 1e-9);
    }
  }
}

TEST_CASE("pairwise-orthogonal inputs are fixed points") {
  const std::vector<std::vector<double>> v = {
      {2, 0, 0, 0}, {0, -3, 0, 0}, {0, 0, 0.5, 0}};
  const double base = rss(v);
  for (double lambda : {0.2, 0.7, 1.0}) {
    CHECK(gs_tensor(v, lambda) == doctest::Approx(base).epsilon(1e-9));
    CHECK(gs_tensor(v, lambda, ProjectionScope::all_vectors) ==
          doctest::Approx(base).epsilon(1e-9));
  }
}

TEST_CASE("duplicate pair collapses exactly at lambda 1") {
  Rng rng(103);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> w;
    for (int c = 0; c < 5; ++c) w.push_back(rng.uniform(-2, 2));
    double norm_sq = 0.0;
    for (double x : w) norm_sq += x * x;
    const double norm = std::sqrt(norm_sq);
    CHECK(gs_tensor({w, w}, 1.0) == norm);
  }
}

TEST_CASE("two vectors under unmarked_only shrink monotonically in lambda") {
  Rng rng(104);
  for (int trial = 0; trial < 50; ++trial) {
    const auto v = random_vectors(rng, 2, 4, 2.0);
    double previous = gs_tensor(v, 0.0);
    for (double lambda = 0.1; lambda <= 1.0001; lambda += 0.1) {
      const double value = gs_tensor(v, lambda);
      CHECK(value <= previous + 1e-12);
      previous = value;
    }
  }
}

TEST_CASE("tensor is permutation invariant when norms stay distinct") {
  Rng rng(105);
  for (int trial = 0; trial < 30; ++trial) {
    const auto v = random_vectors(rng, 4, 5, 3.0);
    const double reference = gs_tensor(v, 0.6);
    auto shuffled = v;
    for (int round = 0; round < 4; ++round) {
      // Fisher-Yates with the seeded generator.
      for (std::size_t i = shuffled.size(); i > 1; --i)
        std::swap(shuffled[i - 1],
                  shuffled[static_cast<std::size_t>(rng.uniform01() * i)]);
      CHECK(gs_tensor(shuffled, 0.6) == doctest::Approx(reference).epsilon(1e-9));
    }
  }
}

TEST_CASE("tensor agrees with the literal-steps oracle") {
  Rng rng(106);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 1 + static_cast<int>(rng.uniform01() * 5);
    const int dim = 1 + static_cast<int>(rng.uniform01() * 6);
    const auto v = random_vectors(rng, m, dim, 2.5);
    const double lambda = rng.uniform01();
    CHECK(gs_tensor(v, lambda) ==
          doctest::Approx(oracle::gs_tensor(v, lambda, false)).epsilon(1e-12));
    CHECK(gs_tensor(v, lambda, ProjectionScope::all_vectors) ==
          doctest::Approx(oracle::gs_tensor(v, lambda, true)).epsilon(1e-12));
  }
}

TEST_CASE("reordering at full strength: literal vs marked-only, larger sets") {
  // Statistical look at whether the fully orthogonalized value stays below
  // partial values for m >= 3; not asserted as an invariant.
  Rng rng(107);
  int holds = 0, total = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto v = random_vectors(rng, 3 + static_cast<int>(rng.uniform01() * 3), 6, 2.0);
    const double full = gs_tensor(v, 1.0);
    bool ok = true;
    for (double lambda : {0.2, 0.5, 0.8})
      ok = ok && full <= gs_tensor(v, lambda) + 1e-9;
    holds += ok ? 1 : 0;
    ++total;
  }
  MESSAGE("N_1 <= N_lambda held on ", holds, " of ", total, " random inputs");
  CHECK(holds > 0);
}

TEST_CASE("jde_distance degenerate cases") {
  Rng rng(108);
  std::vector<std::vector<double>> cols(3);
  for (auto& col : cols)
    for (int t = 0; t < 12; ++t) col.push_back(rng.uniform(-2, 2));
  const auto ts = scalar_series(cols);

  DelayParams p;
  p.d = 3;
  p.lambda = 0.8;
  CHECK(jde_distance(ts, p, 2, 2) == 0.0);

  p.lambda = 0.0;
  const auto w = difference_vectors(ts, p, 1, 5);
  CHECK(jde_distance(ts, p, 1, 5) == doctest::Approx(rss(w)).epsilon(1e-12));

  const auto mono = scalar_series({cols[0]});
  for (double lambda : {0.0, 0.4, 1.0}) {
    DelayParams q;
    q.d = 3;
    q.lambda = lambda;
    const auto w1 = difference_vectors(mono, q, 1, 5);
    CHECK(jde_distance(mono, q, 1, 5) == doctest::Approx(rss(w1)).epsilon(1e-12));
  }
}

TEST_CASE("jde_matrix reductions and invariants") {
  DelayParams p;

  const auto constant = scalar_series({{2, 2, 2, 2}, {-1, -1, -1, -1}});
  p.d = 2;
  auto starts = all_window_starts(make_window_plan(constant, p));
  const auto zero = jde_matrix(constant, p, starts);
  for (double v : zero.values.data()) CHECK(v == 0.0);

  const auto single = scalar_series({{3, 1, 4, 1, 5}});
  DelayParams raw;  // d = 1
  starts = all_window_starts(make_window_plan(single, raw));
  const auto direct = jde_matrix(single, raw, starts);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      CHECK(direct.values(a, b) ==
            doctest::Approx(std::abs(single.channel(0).values[static_cast<std::size_t>(a)] -
                                     single.channel(0).values[static_cast<std::size_t>(b)])));

  Rng rng(109);
  std::vector<std::vector<double>> cols(4);
  for (auto& col : cols)
    for (int t = 0; t < 20; ++t) col.push_back(rng.uniform(-2, 2));
  const auto ts = scalar_series(cols);
  DelayParams q;
  q.d = 4;
  q.lambda = 1.0;
  q.boundary = Boundary::wrap;
  starts = all_window_starts(make_window_plan(ts, q));
  const auto fused = jde_matrix(ts, q, starts);
  // Must satisfy the dissimilarity invariants as-is.
  const auto validated = validate_dissimilarity(fused.values);
  for (std::size_t i = 0; i < validated.values.data().size(); ++i)
    CHECK(validated.values.data()[i] == fused.values.data()[i]);
}

TEST_CASE("jde_matrix parallel equals serial exactly") {
  Rng rng(110);
  std::vector<std::vector<double>> cols(5);
  for (auto& col : cols)
    for (int t = 0; t < 30; ++t) col.push_back(rng.uniform(-2, 2));
  const auto ts = scalar_series(cols);
  DelayParams p;
  p.d = 6;
  p.tau = 2;
  p.lambda = 0.7;
  const auto starts = all_window_starts(make_window_plan(ts, p));
  const auto a = jde_matrix(ts, p, starts);
  const auto b = jde_matrix_serial(ts, p, starts);
  for (std::size_t i = 0; i < a.values.data().size(); ++i)
    CHECK(a.values.data()[i] == b.values.data()[i]);
}

TEST_CASE("jdl_matrix basics") {
  DissimilarityMatrix three{SquareMatrix(2)}, four{SquareMatrix(2)};
  three.values(0, 1) = three.values(1, 0) = 3.0;
  four.values(0, 1) = four.values(1, 0) = 4.0;
  std::vector<DissimilarityMatrix> views{three, four};
  const auto fused = jdl_matrix(views);
  CHECK(fused.values(0, 1) == doctest::Approx(5.0));

  const auto identity = jdl_matrix(std::span<const DissimilarityMatrix>(&three, 1));
  CHECK(identity.values(0, 1) == 3.0);

  DissimilarityMatrix wrong{SquareMatrix(3)};
  std::vector<DissimilarityMatrix> bad{three, wrong};
  CHECK_THROWS_AS(jdl_matrix(bad), Error);
}

TEST_CASE("jdl equals jde with window length 1 and lambda 0") {
  Rng rng(111);
  std::vector<std::vector<double>> cols(5);
  for (auto& col : cols)
    for (int t = 0; t < 20; ++t) col.push_back(rng.uniform(-3, 3));
  const auto ts = scalar_series(cols);

  for (Boundary boundary : {Boundary::truncate, Boundary::wrap}) {
    DelayParams p;
    p.boundary = boundary;
    const auto views = per_channel_distance_matrices(ts, p, false);
    const auto via_jdl = jdl_matrix(views);
    const auto starts = all_window_starts(make_window_plan(ts, p));
    const auto via_jde = jde_matrix(ts, p, starts);
    REQUIRE(via_jdl.size() == via_jde.size());
    for (std::size_t i = 0; i < via_jdl.values.data().size(); ++i)
      CHECK(std::abs(via_jdl.values.data()[i] - via_jde.values.data()[i]) <= 1e-12);
  }
}
