#pragma once

// Mapper: filter, overlapping interval cover, refined pullback, nerve.

#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

#include "tda/complex.hpp"

namespace tda {

/// One row of filter values per point. Only single-column filters can be binned.
struct FilterValues {
  Eigen::MatrixXd values;
  std::string descriptor;

  Index size() const { return values.rows(); }
};

struct Interval {
  double low = 0.0;
  double high = 0.0;

  bool contains(double x) const { return low <= x && x <= high; }
};

struct CoverScheme {
  std::vector<Interval> intervals;
  double overlap = 0.0;
  /// Set when consecutive intervals only touch (overlap of zero width).
  bool degenerate_overlap = false;

  std::size_t size() const { return intervals.size(); }
};

struct MapperNode {
  std::size_t interval_index = 0;
  std::size_t cluster_index = 0;
  std::vector<Index> members;  // ascending
  Eigen::VectorXd centroid;
};

struct MapperGraph {
  std::vector<MapperNode> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, lexicographic

  /// Independent cycles of the graph: edges - nodes + components.
  long cycle_rank() const;
  std::size_t component_count() const;
};

/// values[i] = coordinate `axis` of point i.
FilterValues filter_project(const Eigen::Ref<const PointCloud>& cloud, Index axis);

/// n intervals of common length L = (hi - lo) / (n - (n - 1) g), consecutive
/// ones sharing g L, exactly covering [lo, hi].
CoverScheme uniform_cover(double lo, double hi, int n, double g);

/// For every interval, the connected components (at cluster_radius) of the
/// points whose filter value lies in the closed interval. Nodes are ordered by
/// interval, then by smallest member.
std::vector<MapperNode> refined_pullback(const Eigen::Ref<const PointCloud>& cloud, const FilterValues& fv,
                                         const CoverScheme& cover, double cluster_radius, double p = 2.0);

/// Graph-level nerve: an edge wherever two nodes share a point.
MapperGraph nerve(std::vector<MapperNode> nodes);

/// Components of the neighbour graph at r as nodes, joined when their closest
/// points are within link_threshold (default 4r).
MapperGraph cluster_cover_complex(const Eigen::Ref<const PointCloud>& cloud,
                                  const Eigen::Ref<const DistanceMatrix>& dm, double r,
                                  std::optional<double> link_threshold = std::nullopt);

}  // namespace tda
