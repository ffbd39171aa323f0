#pragma once

// Simplicial complexes built from distance data: neighbour graphs, Vietoris-Rips
// and Cech complexes, and the Rips filtration. All scale comparisons are closed (<=).

#include <Eigen/Core>

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <limits>
#include <span>
#include <vector>

#include "tda/geometry.hpp"

namespace tda {

/// Vertex set of a simplex, strictly increasing.
class Simplex {
 public:
  Simplex() = default;
  /// Sorts the vertices; throws input_error on repeats or negative indices.
  explicit Simplex(std::vector<Index> vertices);
  Simplex(std::initializer_list<Index> vertices) : Simplex(std::vector<Index>(vertices)) {}

  /// Wraps an already strictly increasing vertex list without checking.
  static Simplex from_sorted(std::vector<Index> vertices) {
    Simplex s;
    s.vertices_ = std::move(vertices);
    return s;
  }

  const std::vector<Index>& vertices() const { return vertices_; }
  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const { return vertices_.size(); }

  /// Codimension-1 faces, in lexicographic order.
  std::vector<Simplex> facets() const;

  auto operator<=>(const Simplex&) const = default;
  bool operator==(const Simplex&) const = default;

 private:
  std::vector<Index> vertices_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

/// Simplices grouped by dimension, each group sorted lexicographically and unique.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  explicit SimplicialComplex(std::vector<Simplex> simplices);

  /// The closure of the given simplices under taking faces.
  static SimplicialComplex from_maximal(std::span<const Simplex> maximal);
  static SimplicialComplex from_maximal(std::initializer_list<Simplex> maximal) {
    return from_maximal(std::span<const Simplex>(maximal.begin(), maximal.size()));
  }

  /// -1 for the empty complex.
  int max_dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  std::size_t count(int dim) const;
  std::size_t size() const;
  const std::vector<Simplex>& simplices(int dim) const;
  /// Counts per dimension 0..max_dimension.
  std::vector<std::size_t> counts() const;

  bool contains(const Simplex& s) const;
  bool is_face_closed() const;
  bool is_subcomplex_of(const SimplicialComplex& other) const;
  SimplicialComplex skeleton(int k) const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  std::vector<std::vector<Simplex>> by_dim_;
};

struct FilteredSimplex {
  Simplex simplex;
  double value = 0.0;
};

/// Entries sorted by (value, dimension, vertices).
class FilteredComplex {
 public:
  FilteredComplex() = default;
  /// Sorts the entries into filtration order.
  explicit FilteredComplex(std::vector<FilteredSimplex> entries);

  const std::vector<FilteredSimplex>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const FilteredSimplex& operator[](std::size_t i) const { return entries_[i]; }
  int max_dimension() const;
  double max_value() const;

  /// Every face present with value <= its coface's value, and faces precede cofaces.
  bool is_valid() const;

  /// Simplices with value <= alpha.
  SimplicialComplex threshold(double alpha) const;

 private:
  std::vector<FilteredSimplex> entries_;
};

struct NeighborGraph {
  Index n = 0;
  std::vector<IndexPair> edges;  // i < j, lexicographic
  double radius = 0.0;
};

/// Edge (i, j) iff the closed balls of radius r around both points meet, i.e. d <= 2r.
NeighborGraph neighbor_graph(const Eigen::Ref<const DistanceMatrix>& dm, double r);

/// Clusters of the graph, each sorted, ordered by smallest member.
std::vector<std::vector<Index>> connected_components(const NeighborGraph& g);

/// Simplices of dimension <= max_dim whose pairwise distances are all <= alpha.
SimplicialComplex rips_complex(const Eigen::Ref<const DistanceMatrix>& dm, double alpha, int max_dim);

/// Radius of the smallest closed disc containing 1 to 3 planar points.
double minimum_enclosing_radius(const Eigen::Ref<const PointCloud>& cloud, std::span<const Index> vertices);

/// Planar Cech complex: a simplex (dim <= 2) enters when its minimum enclosing
/// disc has radius <= alpha.
SimplicialComplex cech_complex(const Eigen::Ref<const PointCloud>& cloud, double alpha, int max_dim);

/// Rips filtration up to max_dim. Each simplex carries its largest pairwise
/// distance. Simplices above max_scale are omitted.
FilteredComplex rips_filtration(const Eigen::Ref<const DistanceMatrix>& dm, int max_dim,
                                double max_scale = std::numeric_limits<double>::infinity());

}  // namespace tda
