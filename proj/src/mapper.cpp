#include "tda/mapper.hpp"

#include <algorithm>
#include <cmath>

#include "tda/union_find.hpp"

namespace tda {

namespace {

Eigen::VectorXd centroid_of(const Eigen::Ref<const PointCloud>& cloud, const std::vector<Index>& members) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(cloud.cols());
  for (Index m : members) c += cloud.row(m).transpose();
  return c / static_cast<double>(members.size());
}

bool intersects(const std::vector<Index>& a, const std::vector<Index>& b) {
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia == *ib) return true;
    if (*ia < *ib)
      ++ia;
    else
      ++ib;
  }
  return false;
}

}  // namespace

long MapperGraph::cycle_rank() const {
  return static_cast<long>(edges.size()) - static_cast<long>(nodes.size()) + static_cast<long>(component_count());
}

std::size_t MapperGraph::component_count() const {
  UnionFind uf(nodes.size());
  for (const auto& [a, b] : edges) uf.unite(a, b);
  return uf.components();
}

FilterValues filter_project(const Eigen::Ref<const PointCloud>& cloud, Index axis) {
  if (axis < 0 || axis >= cloud.cols())
    throw input_error("filter_project: axis " + std::to_string(axis) + " out of range for dimension " +
                      std::to_string(cloud.cols()));
  FilterValues fv;
  fv.values = cloud.col(axis);
  fv.descriptor = "projection:" + std::to_string(axis);
  return fv;
}

CoverScheme uniform_cover(double lo, double hi, int n, double g) {
  if (n < 1) throw parameter_error("uniform_cover: need at least one interval");
  if (!(g >= 0.0 && g < 1.0)) throw parameter_error("uniform_cover: overlap must lie in [0, 1)");
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw parameter_error("uniform_cover: need finite lo < hi");
  CoverScheme cover;
  cover.overlap = g;
  cover.degenerate_overlap = n > 1 && g == 0.0;
  const double length = (hi - lo) / (n - (n - 1) * g);
  const double step = length * (1.0 - g);
  for (int i = 0; i < n; ++i) {
    const double low = i == 0 ? lo : lo + i * step;
    const double high = i == n - 1 ? hi : low + length;
    cover.intervals.push_back({low, high});
  }
  return cover;
}

std::vector<MapperNode> refined_pullback(const Eigen::Ref<const PointCloud>& cloud, const FilterValues& fv,
                                         const CoverScheme& cover, double cluster_radius, double p) {
  validate_cloud(cloud);
  if (!(cluster_radius > 0.0)) throw parameter_error("refined_pullback: cluster radius must be > 0");
  if (fv.values.rows() != cloud.rows()) throw input_error("refined_pullback: filter length differs from cloud size");
  if (fv.values.cols() != 1) throw unsupported_error("refined_pullback: only one-dimensional covers are implemented");
  if (!fv.values.allFinite()) throw input_error("refined_pullback: non-finite filter values");

  std::vector<MapperNode> nodes;
  for (std::size_t u = 0; u < cover.size(); ++u) {
    std::vector<Index> preimage;
    for (Index i = 0; i < cloud.rows(); ++i)
      if (cover.intervals[u].contains(fv.values(i, 0))) preimage.push_back(i);
    if (preimage.empty()) continue;

    PointCloud sub(static_cast<Index>(preimage.size()), cloud.cols());
    for (std::size_t k = 0; k < preimage.size(); ++k) sub.row(static_cast<Index>(k)) = cloud.row(preimage[k]);
    const auto clusters = connected_components(neighbor_graph(distance_matrix(sub, p), cluster_radius));
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      MapperNode node;
      node.interval_index = u;
      node.cluster_index = c;
      for (Index local : clusters[c]) node.members.push_back(preimage[static_cast<std::size_t>(local)]);
      node.centroid = centroid_of(cloud, node.members);
      nodes.push_back(std::move(node));
    }
  }
  return nodes;
}

MapperGraph nerve(std::vector<MapperNode> nodes) {
  std::stable_sort(nodes.begin(), nodes.end(), [](const MapperNode& a, const MapperNode& b) {
    if (a.interval_index != b.interval_index) return a.interval_index < b.interval_index;
    return a.cluster_index < b.cluster_index;
  });
  MapperGraph graph;
  graph.nodes = std::move(nodes);
  for (std::size_t i = 0; i < graph.nodes.size(); ++i)
    for (std::size_t j = i + 1; j < graph.nodes.size(); ++j)
      if (intersects(graph.nodes[i].members, graph.nodes[j].members)) graph.edges.emplace_back(i, j);
  return graph;
}

MapperGraph cluster_cover_complex(const Eigen::Ref<const PointCloud>& cloud,
                                  const Eigen::Ref<const DistanceMatrix>& dm, double r,
                                  std::optional<double> link_threshold) {
  validate_cloud(cloud);
  if (dm.rows() != cloud.rows() || dm.cols() != cloud.rows())
    throw input_error("cluster_cover_complex: distance matrix does not match cloud");
  if (!(r > 0.0)) throw parameter_error("cluster_cover_complex: radius must be > 0");
  const double link = link_threshold.value_or(4.0 * r);
  if (!(link >= 0.0)) throw parameter_error("cluster_cover_complex: link threshold must be >= 0");

  const auto clusters = connected_components(neighbor_graph(dm, r));
  MapperGraph graph;
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    MapperNode node;
    node.interval_index = 0;
    node.cluster_index = c;
    node.members = clusters[c];
    node.centroid = centroid_of(cloud, node.members);
    graph.nodes.push_back(std::move(node));
  }
  for (std::size_t a = 0; a < clusters.size(); ++a)
    for (std::size_t b = a + 1; b < clusters.size(); ++b) {
      double gap = std::numeric_limits<double>::infinity();
      for (Index u : clusters[a])
        for (Index v : clusters[b]) gap = std::min(gap, dm(u, v));
      if (gap <= link) graph.edges.emplace_back(a, b);
    }
  return graph;
}

}  // namespace tda
