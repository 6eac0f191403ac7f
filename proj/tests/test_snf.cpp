#include <doctest.h>

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "geofuse/snf.hpp"
#include "geofuse/rng.hpp"
#include "oracles.hpp"

using namespace geofuse;

namespace {

DissimilarityMatrix from_rows(const std::vector<std::vector<double>>& rows) {
  SquareMatrix m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j)
      m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return validate_dissimilarity(m);
}

void check_rows_sum_to_one(const SimilarityMatrix& k, double tolerance) {
  for (int i = 0; i < k.size(); ++i) {
    double sum = 0.0;
    for (int j = 0; j < k.size(); ++j) sum += k.values(i, j);
    CHECK(std::abs(sum - 1.0) <= tolerance);
  }
}

}  // namespace

TEST_CASE("neighbor_set basics") {
  Rng rng(31);
  const auto big = oracle::random_dissimilarity(rng, 10, 0.5, 4.0);
  const auto only_self = snf::neighbor_set(big, 3, 0.1);
  CHECK(only_self == std::vector<int>{3});

  const auto all = snf::neighbor_set(big, 2, 1.0);
  CHECK(all.size() == 10);
  CHECK(all[0] == 2);  // self is nearest

  const auto chain = from_rows({{0, 1, 2}, {1, 0, 3}, {2, 3, 0}});
  const auto two = snf::neighbor_set(chain, 0, 0.67);
  CHECK(two == std::vector<int>{0, 1});
}

TEST_CASE("sigma matches the hand-evaluated example and scales linearly") {
  const auto d = from_rows({{0, 1}, {1, 0}});
  CHECK(snf::sigma(d, 0, 1, 3.0, 1.0) == doctest::Approx(2.0).epsilon(1e-12));

  Rng rng(32);
  const auto base = oracle::random_dissimilarity(rng, 6, 0.2, 2.0);
  DissimilarityMatrix scaled{SquareMatrix(6)};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) scaled.values(i, j) = 2.5 * base.values(i, j);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      CHECK(snf::sigma(scaled, i, j, 0.7, 0.5) ==
            doctest::Approx(2.5 * snf::sigma(base, i, j, 0.7, 0.5)).epsilon(1e-12));
}

TEST_CASE("to_similarity kernel values") {
  const auto d = from_rows({{0, 1}, {1, 0}});
  const auto w = snf::to_similarity(d, 3.0, 1.0);
  CHECK(w.kind == SimilarityKind::w);
  CHECK(w.values(0, 0) == 1.0);
  CHECK(w.values(1, 1) == 1.0);
  CHECK(w.values(0, 1) == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));

  Rng rng(33);
  const auto random = oracle::random_dissimilarity(rng, 9, 0.1, 3.0);
  const auto wr = snf::to_similarity(random, 0.5, 0.5);
  for (int i = 0; i < 9; ++i) {
    CHECK(wr.values(i, i) == 1.0);
    for (int j = 0; j < 9; ++j) {
      CHECK(wr.values(i, j) == wr.values(j, i));
      CHECK(wr.values(i, j) > 0.0);
      CHECK(wr.values(i, j) <= 1.0);
    }
  }
}

TEST_CASE("to_similarity parallel equals serial exactly") {
  Rng rng(34);
  const auto d = oracle::random_dissimilarity(rng, 40, 0.1, 5.0);
  const auto a = snf::to_similarity(d, 0.5, 0.1);
  const auto b = snf::to_similarity_serial(d, 0.5, 0.1);
  for (std::size_t i = 0; i < a.values.data().size(); ++i)
    CHECK(a.values.data()[i] == b.values.data()[i]);
}

TEST_CASE("full_kernel normalizes rows") {
  SimilarityMatrix w{SimilarityKind::w, SquareMatrix(2, 1.0)};
  w.values(0, 1) = 0.37;
  w.values(1, 0) = 0.37;
  const auto p = snf::full_kernel(w);
  CHECK(p.kind == SimilarityKind::p);
  CHECK(p.values(0, 0) == 0.5);
  CHECK(p.values(0, 1) == 0.5);
  CHECK(p.values(1, 0) == 0.5);

  SimilarityMatrix w3{SimilarityKind::w, SquareMatrix(3, 0.0)};
  w3.values(0, 0) = 1.0;
  w3.values(0, 1) = 0.2;
  w3.values(0, 2) = 0.6;
  w3.values(1, 0) = 0.2; w3.values(1, 1) = 1.0; w3.values(1, 2) = 0.3;
  w3.values(2, 0) = 0.6; w3.values(2, 1) = 0.3; w3.values(2, 2) = 1.0;
  const auto p3 = snf::full_kernel(w3);
  CHECK(p3.values(0, 1) == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(p3.values(0, 2) == doctest::Approx(0.375).epsilon(1e-12));
  check_rows_sum_to_one(p3, 1e-12);

  Rng rng(35);
  const auto random = oracle::random_dissimilarity(rng, 12, 0.1, 2.0);
  check_rows_sum_to_one(snf::full_kernel(snf::to_similarity(random, 0.8, 0.4)), 1e-12);

  SimilarityMatrix isolated{SimilarityKind::w, SquareMatrix(2, 0.0)};
  isolated.values(0, 0) = 1.0;
  isolated.values(1, 1) = 1.0;
  CHECK_THROWS_AS(snf::full_kernel(isolated), Error);
}

TEST_CASE("sparse_kernel support and row sums") {
  Rng rng(36);
  const auto d = oracle::random_dissimilarity(rng, 9, 0.5, 4.0);
  const auto w = snf::to_similarity(d, 0.5, 1.0);

  const auto s_full = snf::sparse_kernel(w, d, 1.0);
  const auto p_full = snf::full_kernel(w);
  check_rows_sum_to_one(s_full, 1e-9);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j)
      CHECK((s_full.values(i, j) != 0.0) == (p_full.values(i, j) != 0.0));

  const auto s_half = snf::sparse_kernel(w, d, 0.5);
  check_rows_sum_to_one(s_half, 1e-9);
  for (int i = 0; i < 9; ++i) {
    auto neighbors = snf::neighbor_set(d, i, 0.5);
    for (int j = 0; j < 9; ++j) {
      const bool in_set =
          std::find(neighbors.begin(), neighbors.end(), j) != neighbors.end();
      if (!in_set && j != i) CHECK(s_half.values(i, j) == 0.0);
    }
  }

  const auto chain = from_rows({{0, 1, 2}, {1, 0, 3}, {2, 3, 0}});
  const auto w_chain = snf::to_similarity(chain, 0.5, 0.67);
  const auto s_chain = snf::sparse_kernel(w_chain, chain, 0.67);
  for (int i = 0; i < 3; ++i) {
    int nonzero = 0;
    for (int j = 0; j < 3; ++j)
      if (j != i && s_chain.values(i, j) != 0.0) {
        ++nonzero;
        CHECK(s_chain.values(i, j) == doctest::Approx(0.5).epsilon(1e-12));
      }
    CHECK(nonzero == 1);
  }

  CHECK_THROWS_AS(snf::sparse_kernel(w, d, 0.1), Error);  // floor(0.9) < 2
}

TEST_CASE("snf_fuse output stays finite and non-negative") {
  Rng rng(37);
  std::vector<DissimilarityMatrix> views;
  for (int v = 0; v < 3; ++v) views.push_back(oracle::random_dissimilarity(rng, 12, 0.2, 3.0));
  snf::SnfConfig config;
  config.kappa = 0.4;
  config.iterations = 5;
  const auto fused = snf::snf_fuse(views, config);
  CHECK(fused.kind == SimilarityKind::fused);
  for (double v : fused.values.data()) {
    CHECK(std::isfinite(v));
    CHECK(v >= 0.0);
  }

  config.symmetrize_each_step = true;
  const auto symmetric = snf::snf_fuse(views, config);
  for (int i = 0; i < symmetric.size(); ++i)
    for (int j = 0; j < symmetric.size(); ++j)
      CHECK(symmetric.values(i, j) == doctest::Approx(symmetric.values(j, i)).epsilon(1e-12));

  config.symmetrize_each_step = false;
  config.synchronous_updates = true;
  const auto synchronous = snf::snf_fuse(views, config);
  for (double v : synchronous.values.data()) CHECK(std::isfinite(v));
}

TEST_CASE("snf_fuse validates its inputs") {
  Rng rng(38);
  const auto d = oracle::random_dissimilarity(rng, 8, 0.2, 3.0);
  snf::SnfConfig config;
  config.kappa = 0.5;
  std::vector<DissimilarityMatrix> one{d};
  CHECK_THROWS_AS(snf::snf_fuse(one, config), Error);

  std::vector<DissimilarityMatrix> mismatched{d, oracle::random_dissimilarity(rng, 5, 0.2, 3.0)};
  CHECK_THROWS_AS(snf::snf_fuse(mismatched, config), Error);

  config.iterations = 0;
  std::vector<DissimilarityMatrix> two{d, d};
  CHECK_THROWS_AS(snf::snf_fuse(two, config), Error);
}

TEST_CASE("one-sweep fusion matches the frozen golden transcript and the oracle") {
  std::ifstream in(std::string(GEOFUSE_TEST_DATA_DIR) + "/snf_golden.json");
  REQUIRE(in.good());
  nlohmann::json golden;
  in >> golden;

  const auto d1_rows = golden["d1"].get<std::vector<std::vector<double>>>();
  const auto d2_rows = golden["d2"].get<std::vector<std::vector<double>>>();
  const double beta = golden["beta"].get<double>();
  const double kappa = golden["kappa"].get<double>();

  // The independent literal-formula oracle must land on the frozen numbers.
  const auto transcript = oracle::snf_one_sweep(d1_rows, d2_rows, beta, kappa);
  const auto check_block = [&](const char* key,
                               const std::vector<std::vector<std::vector<double>>>& got) {
    const auto want = golden[key].get<std::vector<std::vector<std::vector<double>>>>();
    REQUIRE(want.size() == got.size());
    for (std::size_t v = 0; v < want.size(); ++v)
      for (std::size_t i = 0; i < want[v].size(); ++i)
        for (std::size_t j = 0; j < want[v][i].size(); ++j)
          CHECK(std::abs(got[v][i][j] - want[v][i][j]) <= 1e-12);
  };
  check_block("w", transcript.w);
  check_block("p_initial", transcript.p_initial);
  check_block("s", transcript.s);
  check_block("p_updated", transcript.p_updated);

  // And so must the implementation, through the public surface.
  const auto d1 = from_rows(d1_rows);
  const auto d2 = from_rows(d2_rows);
  snf::SnfConfig config;
  config.beta = beta;
  config.kappa = kappa;
  config.iterations = 1;
  std::vector<DissimilarityMatrix> views{d1, d2};
  const auto fused = snf::snf_fuse(views, config);
  const auto want_fused = golden["fused"].get<std::vector<std::vector<double>>>();
  for (int i = 0; i < fused.size(); ++i)
    for (int j = 0; j < fused.size(); ++j)
      CHECK(std::abs(fused.values(i, j) -
                     want_fused[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) <=
            1e-12);
}
