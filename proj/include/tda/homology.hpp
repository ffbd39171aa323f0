#pragma once

// Persistent homology with coefficients in the two-element field.

#include <cstddef>
#include <limits>
#include <vector>

#include "tda/complex.hpp"

namespace tda {

/// One sparse column per simplex; each column lists the positions of the
/// simplex's facets in increasing order.
struct BoundaryMatrix {
  std::vector<std::vector<Index>> columns;
  std::vector<int> dimensions;

  std::size_t size() const { return columns.size(); }
};

/// Columns in filtration order. Throws structure_error if a facet is missing or
/// appears after its coface.
BoundaryMatrix boundary_matrix(const FilteredComplex& fc);

/// Columns ordered by dimension, then lexicographically.
BoundaryMatrix boundary_matrix(const SimplicialComplex& complex);

struct Reduction {
  std::vector<std::vector<Index>> columns;  // reduced
  std::vector<Index> low;                   // -1 for a zero column
  std::vector<IndexPair> pairs;             // (creator, destroyer), by destroyer
  std::vector<Index> essential;             // creators never destroyed, ascending
};

/// Standard left-to-right column reduction. Columns are processed from the
/// highest dimension down so that creators can be cleared without touching the
/// pairing.
Reduction reduce(BoundaryMatrix bm);

struct PersistencePair {
  int dimension = 0;
  double birth = 0.0;
  double death = std::numeric_limits<double>::infinity();
  Index creator = -1;    // filtration position
  Index destroyer = -1;  // -1 for essential classes

  bool is_essential() const { return destroyer < 0; }
  double persistence() const { return death - birth; }
  bool zero_length() const { return !is_essential() && death == birth; }
};

struct PersistenceDiagram {
  std::vector<PersistencePair> pairs;  // sorted by (dimension, birth, death, creator)
  double max_scale = 0.0;
  int top_dimension = -1;  // highest simplex dimension in the filtration

  /// Essential cycles of the top simplex dimension can never be filled in a
  /// truncated filtration; homology is exact only below top_dimension.
  bool is_truncation_artifact(const PersistencePair& p) const {
    return top_dimension >= 1 && p.dimension == top_dimension && p.is_essential();
  }

  /// Pairs of one dimension; zero-length pairs only when requested.
  std::vector<PersistencePair> in_dimension(int dim, bool include_zero_length = false) const;
  /// Ranks of homology of the complex at the given scale, read off the bars.
  std::vector<int> betti_at(double scale, int up_to) const;
};

PersistenceDiagram persistence_diagram(const FilteredComplex& fc);

using BettiVector = std::vector<int>;

/// beta_0..beta_up_to from ranks of the boundary operators. Entries above the
/// complex's dimension are zero.
BettiVector betti_numbers(const SimplicialComplex& complex, int up_to);

}  // namespace tda
