#include "geofuse/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <tuple>

namespace geofuse {

namespace {

struct Edge {
  double diam;
  int i, j;
};

struct Triangle {
  double diam;
  int i, j, k;
};

struct Tetrahedron {
  double diam;
  int i, j, k, l;
};

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }

  bool unite(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    if (rank_[static_cast<std::size_t>(ra)] < rank_[static_cast<std::size_t>(rb)])
      std::swap(ra, rb);
    parent_[static_cast<std::size_t>(rb)] = ra;
    if (rank_[static_cast<std::size_t>(ra)] == rank_[static_cast<std::size_t>(rb)])
      ++rank_[static_cast<std::size_t>(ra)];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

std::vector<Edge> enumerate_edges(const DissimilarityMatrix& d, double threshold) {
  const int n = d.size();
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (d.values(i, j) <= threshold) edges.push_back({d.values(i, j), i, j});
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.diam, a.i, a.j) < std::tie(b.diam, b.i, b.j);
  });
  return edges;
}

std::vector<Triangle> enumerate_triangles(const DissimilarityMatrix& d, double threshold,
                                          std::size_t budget, bool parallel) {
  const int n = d.size();
  std::vector<std::size_t> counts(static_cast<std::size_t>(n), 0);

  const auto count_row = [&](int i) {
    std::size_t c = 0;
    for (int j = i + 1; j < n; ++j) {
      const double dij = d.values(i, j);
      if (dij > threshold) continue;
      for (int k = j + 1; k < n; ++k) {
        const double diam = std::max({dij, d.values(i, k), d.values(j, k)});
        if (diam <= threshold) ++c;
      }
    }
    counts[static_cast<std::size_t>(i)] = c;
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) count_row(i);
  } else {
    for (int i = 0; i < n; ++i) count_row(i);
  }

  std::vector<std::size_t> offsets(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i)
    offsets[static_cast<std::size_t>(i) + 1] =
        offsets[static_cast<std::size_t>(i)] + counts[static_cast<std::size_t>(i)];
  const std::size_t total = offsets[static_cast<std::size_t>(n)];
  if (total > budget)
    fail(ErrorCode::BudgetExceeded,
         std::to_string(total) + " triangles exceed the remaining simplex budget of " +
             std::to_string(budget));

  std::vector<Triangle> triangles(total);
  const auto fill_row = [&](int i) {
    std::size_t pos = offsets[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) {
      const double dij = d.values(i, j);
      if (dij > threshold) continue;
      for (int k = j + 1; k < n; ++k) {
        const double diam = std::max({dij, d.values(i, k), d.values(j, k)});
        if (diam <= threshold) triangles[pos++] = {diam, i, j, k};
      }
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) fill_row(i);
  } else {
    for (int i = 0; i < n; ++i) fill_row(i);
  }

  std::sort(triangles.begin(), triangles.end(), [](const Triangle& a, const Triangle& b) {
    return std::tie(a.diam, a.i, a.j, a.k) < std::tie(b.diam, b.i, b.j, b.k);
  });
  return triangles;
}

std::vector<Tetrahedron> enumerate_tetrahedra(const DissimilarityMatrix& d,
                                              double threshold, std::size_t budget,
                                              bool parallel) {
  const int n = d.size();
  std::vector<std::size_t> counts(static_cast<std::size_t>(n), 0);

  const auto count_row = [&](int i) {
    std::size_t c = 0;
    for (int j = i + 1; j < n; ++j) {
      if (d.values(i, j) > threshold) continue;
      for (int k = j + 1; k < n; ++k) {
        const double d3 = std::max({d.values(i, j), d.values(i, k), d.values(j, k)});
        if (d3 > threshold) continue;
        for (int l = k + 1; l < n; ++l) {
          const double diam =
              std::max({d3, d.values(i, l), d.values(j, l), d.values(k, l)});
          if (diam <= threshold) ++c;
        }
      }
    }
    counts[static_cast<std::size_t>(i)] = c;
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) count_row(i);
  } else {
    for (int i = 0; i < n; ++i) count_row(i);
  }

  std::vector<std::size_t> offsets(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i)
    offsets[static_cast<std::size_t>(i) + 1] =
        offsets[static_cast<std::size_t>(i)] + counts[static_cast<std::size_t>(i)];
  const std::size_t total = offsets[static_cast<std::size_t>(n)];
  if (total > budget)
    fail(ErrorCode::BudgetExceeded,
         std::to_string(total) + " tetrahedra exceed the remaining simplex budget of " +
             std::to_string(budget));

  std::vector<Tetrahedron> tets(total);
  const auto fill_row = [&](int i) {
    std::size_t pos = offsets[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) {
      if (d.values(i, j) > threshold) continue;
      for (int k = j + 1; k < n; ++k) {
        const double d3 = std::max({d.values(i, j), d.values(i, k), d.values(j, k)});
        if (d3 > threshold) continue;
        for (int l = k + 1; l < n; ++l) {
          const double diam =
              std::max({d3, d.values(i, l), d.values(j, l), d.values(k, l)});
          if (diam <= threshold) tets[pos++] = {diam, i, j, k, l};
        }
      }
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) fill_row(i);
  } else {
    for (int i = 0; i < n; ++i) fill_row(i);
  }

  std::sort(tets.begin(), tets.end(), [](const Tetrahedron& a, const Tetrahedron& b) {
    return std::tie(a.diam, a.i, a.j, a.k, a.l) < std::tie(b.diam, b.i, b.j, b.k, b.l);
  });
  return tets;
}

/// Rank lookup from a packed vertex key, built once per dimension.
class RankIndex {
 public:
  void insert(std::uint64_t key, int rank) { entries_.push_back({key, rank}); }

  void finalize() {
    std::sort(entries_.begin(), entries_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }

  int rank(std::uint64_t key) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), key,
        [](const auto& entry, std::uint64_t k) { return entry.first < k; });
    return (it != entries_.end() && it->first == key) ? it->second : -1;
  }

 private:
  std::vector<std::pair<std::uint64_t, int>> entries_;
};

std::uint64_t pack3(int n, int i, int j, int k) {
  const auto un = static_cast<std::uint64_t>(n);
  return (static_cast<std::uint64_t>(i) * un + static_cast<std::uint64_t>(j)) * un +
         static_cast<std::uint64_t>(k);
}

std::uint64_t pack4(int n, int i, int j, int k, int l) {
  return pack3(n, i, j, k) * static_cast<std::uint64_t>(n) +
         static_cast<std::uint64_t>(l);
}

/// Symmetric difference of two ascending row lists.
std::vector<int> column_xor(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::size_t pa = 0, pb = 0;
  while (pa < a.size() && pb < b.size()) {
    if (a[pa] < b[pb]) out.push_back(a[pa++]);
    else if (b[pb] < a[pa]) out.push_back(b[pb++]);
    else { ++pa; ++pb; }
  }
  out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(pa), a.end());
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(pb), b.end());
  return out;
}

struct ReductionOutcome {
  // pair_of_column[c] = row index paired with column c, or -1 if the column
  // reduced to zero.
  std::vector<int> pair_of_column;
  // owner_of_row[r] = column index owning pivot r, or -1.
  std::vector<int> owner_of_row;
};

/// Left-to-right column reduction over the 2-element field. Columns arrive
/// through `column_rows(c)` as ascending row lists; `skip(c)` marks cleared
/// columns. The pivot is the largest remaining row.
template <typename RowsFn, typename SkipFn>
ReductionOutcome reduce_columns(int n_columns, int n_rows, RowsFn&& column_rows,
                                SkipFn&& skip) {
  ReductionOutcome outcome;
  outcome.pair_of_column.assign(static_cast<std::size_t>(n_columns), -1);
  outcome.owner_of_row.assign(static_cast<std::size_t>(n_rows), -1);
  std::vector<std::vector<int>> reduced(static_cast<std::size_t>(n_columns));

  for (int c = 0; c < n_columns; ++c) {
    if (skip(c)) continue;
    std::vector<int> rows = column_rows(c);
    while (!rows.empty()) {
      const int low = rows.back();
      const int owner = outcome.owner_of_row[static_cast<std::size_t>(low)];
      if (owner < 0) {
        outcome.owner_of_row[static_cast<std::size_t>(low)] = c;
        outcome.pair_of_column[static_cast<std::size_t>(c)] = low;
        reduced[static_cast<std::size_t>(c)] = std::move(rows);
        break;
      }
      rows = column_xor(rows, reduced[static_cast<std::size_t>(owner)]);
    }
  }
  return outcome;
}

PersistenceDiagram rips_impl(const DissimilarityMatrix& d, const RipsOptions& options,
                             bool parallel) {
  const int n = d.size();
  if (n < 1) fail(ErrorCode::EmptyInput, "matrix has no points");
  if (options.max_dim < 0 || options.max_dim > 2)
    fail(ErrorCode::InvalidArgument, "max_dim must be 0, 1, or 2");

  double threshold;
  if (options.threshold) {
    threshold = *options.threshold;
    if (!(threshold >= 0.0) || !std::isfinite(threshold))
      fail(ErrorCode::InvalidArgument, "threshold must be finite and non-negative");
  } else {
    if (options.max_dim == 2)
      fail(ErrorCode::ThresholdRequired,
           "max_dim 2 needs an explicit finite threshold");
    threshold = *std::max_element(d.values.data().begin(), d.values.data().end());
  }

  std::size_t budget = options.simplex_budget;
  const auto spend = [&](std::size_t amount, const char* what) {
    if (amount > budget)
      fail(ErrorCode::BudgetExceeded, std::string(what) + " exceed the simplex budget");
    budget -= amount;
  };
  spend(static_cast<std::size_t>(n), "vertices");

  PersistenceDiagram diagram;
  diagram.threshold = threshold;
  diagram.max_dim = options.max_dim;

  const auto edges = enumerate_edges(d, threshold);
  spend(edges.size(), "edges");
  const int n_edges = static_cast<int>(edges.size());

  // Dimension 0: merges kill classes born at 0; cycle edges stay positive.
  UnionFind uf(n);
  std::vector<char> edge_creates_cycle(edges.size(), 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (uf.unite(edges[e].i, edges[e].j)) {
      if (edges[e].diam > 0.0) diagram.points.push_back({0, 0.0, edges[e].diam});
    } else {
      edge_creates_cycle[e] = 1;
    }
  }
  for (int v = 0; v < n; ++v)
    if (uf.find(v) == v) diagram.points.push_back({0, 0.0, kInfiniteDeath});

  std::vector<Triangle> triangles;
  std::vector<char> triangle_cleared;
  if (options.max_dim >= 1 && n_edges > 0) {
    triangles = enumerate_triangles(d, threshold, budget, parallel);
    spend(triangles.size(), "triangles");
    const int n_tris = static_cast<int>(triangles.size());
    triangle_cleared.assign(triangles.size(), 0);

    RankIndex tri_rank;
    for (int r = 0; r < n_tris; ++r)
      tri_rank.insert(pack3(n, triangles[static_cast<std::size_t>(r)].i,
                            triangles[static_cast<std::size_t>(r)].j,
                            triangles[static_cast<std::size_t>(r)].k),
                      r);
    tri_rank.finalize();

    // Columns are edges in reverse filtration order; rows are triangles in
    // reverse filtration order, so the pivot is the earliest cofacet.
    const auto column_rows = [&](int c) {
      const Edge& e = edges[static_cast<std::size_t>(n_edges - 1 - c)];
      std::vector<int> rows;
      for (int v = 0; v < n; ++v) {
        if (v == e.i || v == e.j) continue;
        const double diam =
            std::max({e.diam, d.values(e.i, v), d.values(e.j, v)});
        if (diam > threshold) continue;
        int a = e.i, b = e.j, cvert = v;
        if (cvert < a) std::swap(a, cvert);
        if (cvert < b) std::swap(b, cvert);
        if (b < a) std::swap(a, b);
        rows.push_back(n_tris - 1 - tri_rank.rank(pack3(n, a, b, cvert)));
      }
      std::sort(rows.begin(), rows.end());
      return rows;
    };
    // Clearing: edges already paired with a vertex by union-find reduce to
    // zero here and own no pivots, so they are skipped outright.
    const auto skip_merged = [&](int c) {
      return edge_creates_cycle[static_cast<std::size_t>(n_edges - 1 - c)] == 0;
    };
    const auto outcome = reduce_columns(n_edges, n_tris, column_rows, skip_merged);

    std::vector<char> edge_paired(edges.size(), 0);
    for (int c = 0; c < n_edges; ++c) {
      const int row = outcome.pair_of_column[static_cast<std::size_t>(c)];
      if (row < 0) continue;
      const std::size_t e = static_cast<std::size_t>(n_edges - 1 - c);
      const std::size_t t = static_cast<std::size_t>(n_tris - 1 - row);
      edge_paired[e] = 1;
      triangle_cleared[t] = 1;
      if (triangles[t].diam > edges[e].diam)
        diagram.points.push_back({1, edges[e].diam, triangles[t].diam});
    }
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (edge_creates_cycle[e] && !edge_paired[e])
        diagram.points.push_back({1, edges[e].diam, kInfiniteDeath});
  }

  if (options.max_dim == 2 && !triangles.empty()) {
    const auto tets = enumerate_tetrahedra(d, threshold, budget, parallel);
    spend(tets.size(), "tetrahedra");
    const int n_tris = static_cast<int>(triangles.size());
    const int n_tets = static_cast<int>(tets.size());

    RankIndex tet_rank;
    for (int r = 0; r < n_tets; ++r)
      tet_rank.insert(pack4(n, tets[static_cast<std::size_t>(r)].i,
                            tets[static_cast<std::size_t>(r)].j,
                            tets[static_cast<std::size_t>(r)].k,
                            tets[static_cast<std::size_t>(r)].l),
                      r);
    tet_rank.finalize();

    const auto column_rows = [&](int c) {
      const Triangle& t = triangles[static_cast<std::size_t>(n_tris - 1 - c)];
      std::vector<int> rows;
      for (int v = 0; v < n; ++v) {
        if (v == t.i || v == t.j || v == t.k) continue;
        const double diam = std::max(
            {t.diam, d.values(t.i, v), d.values(t.j, v), d.values(t.k, v)});
        if (diam > threshold) continue;
        int verts[4] = {t.i, t.j, t.k, v};
        std::sort(verts, verts + 4);
        rows.push_back(n_tets - 1 -
                       tet_rank.rank(pack4(n, verts[0], verts[1], verts[2], verts[3])));
      }
      std::sort(rows.begin(), rows.end());
      return rows;
    };
    // Triangles that killed a 1-cycle are cleared: their columns are known
    // to reduce to zero.
    const auto skip = [&](int c) {
      return triangle_cleared[static_cast<std::size_t>(n_tris - 1 - c)] != 0;
    };
    const auto outcome = reduce_columns(n_tris, n_tets, column_rows, skip);

    for (int c = 0; c < n_tris; ++c) {
      if (skip(c)) continue;
      const std::size_t t = static_cast<std::size_t>(n_tris - 1 - c);
      const int row = outcome.pair_of_column[static_cast<std::size_t>(c)];
      if (row < 0) {
        diagram.points.push_back({2, triangles[t].diam, kInfiniteDeath});
      } else {
        const std::size_t q = static_cast<std::size_t>(n_tets - 1 - row);
        if (tets[q].diam > triangles[t].diam)
          diagram.points.push_back({2, triangles[t].diam, tets[q].diam});
      }
    }
  }

  std::sort(diagram.points.begin(), diagram.points.end(),
            [](const DiagramPoint& a, const DiagramPoint& b) {
              return std::tie(a.dim, a.birth, a.death) <
                     std::tie(b.dim, b.birth, b.death);
            });
  return diagram;
}

}  // namespace

PersistenceDiagram rips_persistence(const DissimilarityMatrix& d,
                                    const RipsOptions& options) {
  return rips_impl(d, options, true);
}

PersistenceDiagram rips_persistence_serial(const DissimilarityMatrix& d,
                                           const RipsOptions& options) {
  return rips_impl(d, options, false);
}

std::vector<std::vector<DiagramPoint>> diagram_summary(
    const PersistenceDiagram& diagram) {
  std::vector<std::vector<DiagramPoint>> by_dim(
      static_cast<std::size_t>(diagram.max_dim) + 1);
  for (const DiagramPoint& p : diagram.points)
    if (p.dim <= diagram.max_dim) by_dim[static_cast<std::size_t>(p.dim)].push_back(p);
  for (auto& list : by_dim)
    std::stable_sort(list.begin(), list.end(),
                     [](const DiagramPoint& a, const DiagramPoint& b) {
                       if (a.essential() != b.essential()) return a.essential();
                       return a.persistence() > b.persistence();
                     });
  return by_dim;
}

}  // namespace geofuse
