#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "geofuse/core.hpp"

namespace geofuse {

constexpr double kInfiniteDeath = std::numeric_limits<double>::infinity();

struct DiagramPoint {
  int dim = 0;
  double birth = 0.0;
  double death = kInfiniteDeath;

  double persistence() const { return death - birth; }
  bool essential() const { return death == kInfiniteDeath; }
};

struct PersistenceDiagram {
  std::vector<DiagramPoint> points;
  double threshold = 0.0;  // filtration cutoff actually used
  int max_dim = 0;
};

struct RipsOptions {
  int max_dim = 1;                    // 0, 1, or 2
  std::optional<double> threshold;    // empty = enclosing (largest entry);
                                      // an explicit value is required for max_dim 2
  std::size_t simplex_budget = 10'000'000;
};

/// Vietoris-Rips persistence over the 2-element field. A simplex enters the
/// filtration at the largest pairwise distance among its vertices; ties are
/// broken by lexicographic vertex order. Zero-persistence pairs are dropped.
/// Dimension 0 runs union-find over ascending edges; higher dimensions run
/// coboundary column reduction with clearing. Filtration construction is
/// parallel; `_serial` is the reference path.
PersistenceDiagram rips_persistence(const DissimilarityMatrix& d,
                                    const RipsOptions& options = {});
PersistenceDiagram rips_persistence_serial(const DissimilarityMatrix& d,
                                           const RipsOptions& options = {});

/// Points per dimension, sorted by persistence descending (infinite first,
/// stable beyond that).
std::vector<std::vector<DiagramPoint>> diagram_summary(
    const PersistenceDiagram& diagram);

}  // namespace geofuse
