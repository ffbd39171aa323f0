#pragma once

// Metric primitives over point clouds stored as Eigen matrices, one point per row.

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "tda/errors.hpp"

namespace tda {

using Index = Eigen::Index;

template <typename Scalar>
using PointCloudT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using PointCloud = PointCloudT<double>;

/// Dense symmetric matrix of pairwise distances.
template <typename Scalar>
using DistanceMatrixT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using DistanceMatrix = DistanceMatrixT<double>;

using IndexPair = std::pair<Index, Index>;

template <typename Scalar>
struct HullResultT {
  std::vector<Index> hull_indices;  // counter-clockwise
  Scalar diameter{0};
  IndexPair diameter_pair{0, 0};
};
using HullResult = HullResultT<double>;

/// Throws input_error unless the cloud has at least one point, one coordinate,
/// and only finite coordinates.
template <typename Derived>
void validate_cloud(const Eigen::MatrixBase<Derived>& cloud) {
  if (cloud.rows() < 1) throw input_error("point cloud is empty");
  if (cloud.cols() < 1) throw input_error("point cloud has dimension 0");
  if (!cloud.allFinite()) throw input_error("point cloud contains non-finite coordinates");
}

/// (sum_i |x_i - y_i|^p)^(1/p). p = 1 and p = 2 take exact fast paths.
template <typename DerivedX, typename DerivedY>
typename DerivedX::Scalar p_norm_distance(const Eigen::MatrixBase<DerivedX>& x,
                                          const Eigen::MatrixBase<DerivedY>& y,
                                          typename DerivedX::Scalar p) {
  using Scalar = typename DerivedX::Scalar;
  if (x.size() != y.size()) throw input_error("p_norm_distance: dimension mismatch");
  if (!(p >= Scalar(1))) throw parameter_error("p_norm_distance: p must be >= 1");
  Scalar acc{0};
  if (p == Scalar(1)) {
    for (Index i = 0; i < x.size(); ++i) acc += std::abs(x(i) - y(i));
    return acc;
  }
  if (p == Scalar(2)) {
    for (Index i = 0; i < x.size(); ++i) {
      const Scalar diff = x(i) - y(i);
      acc += diff * diff;
    }
    return std::sqrt(acc);
  }
  for (Index i = 0; i < x.size(); ++i) acc += std::pow(std::abs(x(i) - y(i)), p);
  return std::pow(acc, Scalar(1) / p);
}

/// All pairwise p-norm distances. Each unordered pair is evaluated once and
/// mirrored, so the result is exactly symmetric with an exact zero diagonal.
template <typename Derived>
DistanceMatrixT<typename Derived::Scalar> distance_matrix(const Eigen::MatrixBase<Derived>& cloud,
                                                          typename Derived::Scalar p = 2) {
  using Scalar = typename Derived::Scalar;
  validate_cloud(cloud);
  if (!(p >= Scalar(1))) throw parameter_error("distance_matrix: p must be >= 1");
  const Index n = cloud.rows();
  DistanceMatrixT<Scalar> dm = DistanceMatrixT<Scalar>::Zero(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < j; ++i) {
      const Scalar d = p_norm_distance(cloud.row(i), cloud.row(j), p);
      dm(i, j) = d;
      dm(j, i) = d;
    }
  }
  return dm;
}

namespace detail {

/// Sign of the cross product (b - a) x (c - a). Exact when `exact` is set
/// (integer coordinates small enough that the products are representable);
/// otherwise magnitudes below a relative 1e-12 of the operand scale are zero.
template <typename Scalar>
int orientation(Scalar ax, Scalar ay, Scalar bx, Scalar by, Scalar cx, Scalar cy, bool exact) {
  const Scalar ux = bx - ax, uy = by - ay, vx = cx - ax, vy = cy - ay;
  const Scalar cross = ux * vy - uy * vx;
  if (!exact) {
    const Scalar tol =
        std::max(Scalar(1e-12), Scalar(8) * std::numeric_limits<Scalar>::epsilon());
    const Scalar scale = (std::abs(ux) + std::abs(uy)) * (std::abs(vx) + std::abs(vy));
    if (std::abs(cross) <= tol * scale) return 0;
  }
  return (cross > 0) - (cross < 0);
}

template <typename Derived>
bool integer_representable(const Eigen::MatrixBase<Derived>& cloud) {
  using Scalar = typename Derived::Scalar;
  // Coordinates up to 2^(digits/2 - 1) keep differences and their products exact.
  const Scalar limit = std::ldexp(Scalar(1), std::numeric_limits<Scalar>::digits / 2 - 1);
  for (Index i = 0; i < cloud.rows(); ++i)
    for (Index k = 0; k < cloud.cols(); ++k) {
      const Scalar v = cloud(i, k);
      if (v != std::round(v) || std::abs(v) > limit) return false;
    }
  return true;
}

inline IndexPair ordered(Index a, Index b) { return a < b ? IndexPair{a, b} : IndexPair{b, a}; }

/// Keeps the larger distance; among equal distances the lexicographically smaller pair.
template <typename Scalar>
void consider(Scalar d, IndexPair pair, Scalar& best, IndexPair& best_pair) {
  if (d > best || (d == best && pair < best_pair)) {
    best = d;
    best_pair = pair;
  }
}

template <typename Derived, typename DistanceFn>
std::pair<typename Derived::Scalar, IndexPair> rotating_calipers_impl(
    const Eigen::MatrixBase<Derived>& cloud, std::span<const Index> hull, DistanceFn&& dist) {
  using Scalar = typename Derived::Scalar;
  const std::size_t m = hull.size();
  if (m == 0) throw input_error("rotating_calipers: empty hull");
  if (m == 1) return {Scalar(0), IndexPair{hull[0], hull[0]}};
  Scalar best{-1};
  IndexPair best_pair{hull[0], hull[0]};
  auto visit = [&](std::size_t a, std::size_t b) {
    const Index u = hull[a % m], v = hull[b % m];
    if (u == v) return;
    consider(dist(u, v), ordered(u, v), best, best_pair);
  };
  if (m == 2) {
    visit(0, 1);
    return {best, best_pair};
  }
  // Twice the signed area of (hull[a], hull[b], hull[c]).
  auto area2 = [&](std::size_t a, std::size_t b, std::size_t c) {
    const Index ia = hull[a % m], ib = hull[b % m], ic = hull[c % m];
    const Scalar ux = cloud(ib, 0) - cloud(ia, 0), uy = cloud(ib, 1) - cloud(ia, 1);
    const Scalar vx = cloud(ic, 0) - cloud(ia, 0), vy = cloud(ic, 1) - cloud(ia, 1);
    return ux * vy - uy * vx;
  };
  std::size_t j = 1;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t ni = i + 1;
    std::size_t steps = 0;
    while (steps < m && area2(i, ni, j + 1) > area2(i, ni, j)) {
      ++j;
      ++steps;
    }
    // Neighbouring candidates absorb rounding in the area comparison and
    // cover the second antipodal vertex when an edge is parallel to edge i.
    for (std::size_t off : {m - 1, std::size_t{0}, std::size_t{1}}) {
      visit(i, j + off);
      visit(ni, j + off);
    }
  }
  return {best, best_pair};
}

}  // namespace detail

/// Exact diameter of the cloud from its convex hull vertices (counter-clockwise,
/// strictly convex). Distances are read from `dm`, which must hold Euclidean
/// distances of `cloud`. Ties resolve to the lexicographically smallest pair.
template <typename Derived, typename DerivedDM>
std::pair<typename Derived::Scalar, IndexPair> rotating_calipers(
    const Eigen::MatrixBase<Derived>& cloud, std::span<const Index> hull,
    const Eigen::MatrixBase<DerivedDM>& dm) {
  return detail::rotating_calipers_impl(cloud, hull, [&](Index a, Index b) { return dm(a, b); });
}

/// Andrew's monotone chain. Interior collinear points and duplicates are
/// dropped; among coincident points the smallest index represents the location.
/// Diameter fields are filled by rotating calipers over Euclidean distances.
template <typename Derived>
HullResultT<typename Derived::Scalar> convex_hull(const Eigen::MatrixBase<Derived>& cloud) {
  using Scalar = typename Derived::Scalar;
  validate_cloud(cloud);
  if (cloud.cols() != 2) throw unsupported_error("convex_hull: only 2-dimensional clouds are supported");
  const Index n = cloud.rows();
  const bool exact = detail::integer_representable(cloud);

  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    if (cloud(a, 0) != cloud(b, 0)) return cloud(a, 0) < cloud(b, 0);
    if (cloud(a, 1) != cloud(b, 1)) return cloud(a, 1) < cloud(b, 1);
    return a < b;
  });
  order.erase(std::unique(order.begin(), order.end(),
                          [&](Index a, Index b) {
                            return cloud(a, 0) == cloud(b, 0) && cloud(a, 1) == cloud(b, 1);
                          }),
              order.end());

  HullResultT<Scalar> result;
  auto& hull = result.hull_indices;
  if (order.size() <= 2) {
    hull = order;
  } else {
    auto turn = [&](Index a, Index b, Index c) {
      return detail::orientation(cloud(a, 0), cloud(a, 1), cloud(b, 0), cloud(b, 1), cloud(c, 0),
                                 cloud(c, 1), exact);
    };
    hull.reserve(2 * order.size());
    for (Index idx : order) {
      while (hull.size() >= 2 && turn(hull[hull.size() - 2], hull.back(), idx) <= 0) hull.pop_back();
      hull.push_back(idx);
    }
    const std::size_t lower = hull.size() + 1;
    for (auto it = order.rbegin() + 1; it != order.rend(); ++it) {
      while (hull.size() >= lower && turn(hull[hull.size() - 2], hull.back(), *it) <= 0)
        hull.pop_back();
      hull.push_back(*it);
    }
    hull.pop_back();  // first point repeated
  }

  auto [diameter, pair] = detail::rotating_calipers_impl(
      cloud, std::span<const Index>(hull),
      [&](Index a, Index b) { return p_norm_distance(cloud.row(a), cloud.row(b), Scalar(2)); });
  result.diameter = diameter;
  result.diameter_pair = pair;
  return result;
}

}  // namespace tda
