#include <map>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tda/homology.hpp"
#include "tda/io.hpp"
#include "tda/mapper.hpp"

using namespace tda;

namespace {

MapperGraph annulus_mapper(std::uint64_t seed, double overlap = 0.35, double cluster_radius = 0.15) {
  const PointCloud cloud = generate_annulus({500, 1.0, 0.05, seed});
  const auto fv = filter_project(cloud, 0);
  const auto cover = uniform_cover(fv.values.minCoeff(), fv.values.maxCoeff(), 6, overlap);
  return nerve(refined_pullback(cloud, fv, cover, cluster_radius));
}

MapperNode node_with(std::size_t interval, std::size_t cluster, std::vector<Index> members) {
  MapperNode n;
  n.interval_index = interval;
  n.cluster_index = cluster;
  n.members = std::move(members);
  n.centroid = Eigen::VectorXd::Zero(2);
  return n;
}

/// The graph as a 1-dimensional simplicial complex.
SimplicialComplex as_complex(const MapperGraph& g) {
  std::vector<Simplex> simplices;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) simplices.push_back(Simplex{static_cast<Index>(i)});
  for (const auto& [a, b] : g.edges) simplices.push_back(Simplex{static_cast<Index>(a), static_cast<Index>(b)});
  return SimplicialComplex(simplices);
}

}  // namespace

TEST_SUITE_BEGIN("mapper");

TEST_CASE("filter_project") {
  PointCloud c(2, 2);
  c << 1, 5, 2, 6;
  CHECK(filter_project(c, 0).values.col(0) == Eigen::Vector2d(1, 2));
  CHECK(filter_project(c, 1).values.col(0) == Eigen::Vector2d(5, 6));
  CHECK_THROWS_AS(filter_project(c, 2), input_error);
  CHECK_THROWS_AS(filter_project(c, -1), input_error);

  const PointCloud ring = generate_annulus({500, 1.0, 0.05, 3});
  const auto fv = filter_project(ring, 0);
  CHECK(fv.values.minCoeff() >= -1.2);
  CHECK(fv.values.maxCoeff() <= 1.2);
  CHECK(fv.values.minCoeff() < -0.9);
  CHECK(fv.values.maxCoeff() > 0.9);
}

TEST_CASE("uniform_cover") {
  SUBCASE("single interval") {
    const auto c = uniform_cover(0, 1, 1, 0.7);
    REQUIRE(c.size() == 1);
    CHECK(c.intervals[0].low == 0.0);
    CHECK(c.intervals[0].high == 1.0);
  }
  SUBCASE("two halves overlapping") {
    const auto c = uniform_cover(0, 1, 2, 0.5);
    REQUIRE(c.size() == 2);
    CHECK(c.intervals[0].low == 0.0);
    CHECK(c.intervals[0].high == doctest::Approx(2.0 / 3.0));
    CHECK(c.intervals[1].low == doctest::Approx(1.0 / 3.0));
    CHECK(c.intervals[1].high == 1.0);
    CHECK_FALSE(c.degenerate_overlap);
  }
  SUBCASE("partition limit") {
    const auto c = uniform_cover(0, 1, 3, 0.0);
    REQUIRE(c.size() == 3);
    CHECK(c.intervals[0].high == doctest::Approx(1.0 / 3.0));
    CHECK(c.intervals[1].low == doctest::Approx(1.0 / 3.0));
    CHECK(c.intervals[1].high == doctest::Approx(2.0 / 3.0));
    CHECK(c.intervals[2].low == doctest::Approx(2.0 / 3.0));
    CHECK(c.degenerate_overlap);
  }
  SUBCASE("invariants") {
    for (int n : {1, 2, 5, 6, 11})
      for (double g : {0.05, 0.35, 0.9}) {
        const auto c = uniform_cover(-1.3, 2.1, n, g);
        const double length = 3.4 / (n - (n - 1) * g);
        CHECK(c.intervals.front().low == -1.3);
        CHECK(c.intervals.back().high == 2.1);
        for (std::size_t i = 0; i < c.size(); ++i) {
          CHECK(c.intervals[i].low < c.intervals[i].high);
          CHECK(c.intervals[i].high - c.intervals[i].low == doctest::Approx(length));
          if (i + 1 < c.size()) {
            CHECK(c.intervals[i].low < c.intervals[i + 1].low);
            CHECK(c.intervals[i].high > c.intervals[i + 1].low);
            CHECK(c.intervals[i].high - c.intervals[i + 1].low == doctest::Approx(g * length));
          }
        }
      }
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(uniform_cover(0, 1, 0, 0.1), parameter_error);
    CHECK_THROWS_AS(uniform_cover(0, 1, 3, 1.0), parameter_error);
    CHECK_THROWS_AS(uniform_cover(0, 1, 3, -0.1), parameter_error);
    CHECK_THROWS_AS(uniform_cover(1, 1, 3, 0.1), parameter_error);
  }
}

TEST_CASE("refined_pullback") {
  SUBCASE("everything in one cluster") {
    std::mt19937_64 rng(1);
    const PointCloud c = oracle::uniform_cloud(rng, 30, 2);
    const auto fv = filter_project(c, 0);
    const auto cover = uniform_cover(fv.values.minCoeff(), fv.values.maxCoeff(), 1, 0.0);
    const double half_diameter = oracle::brute_diameter(distance_matrix(c)).value / 2.0;
    const auto nodes = refined_pullback(c, fv, cover, half_diameter);
    REQUIRE(nodes.size() == 1);
    CHECK(nodes[0].members.size() == 30);
    CHECK(nodes[0].centroid.isApprox(c.colwise().mean().transpose()));
  }
  SUBCASE("two blobs in one interval") {
    PointCloud c(6, 2);
    c << 0, 0, 0, 0.1, 0.1, 0, 0, 10, 0.1, 10, 0, 10.1;
    FilterValues fv{Eigen::VectorXd::Zero(6), "constant"};
    CoverScheme cover{{{-1.0, 1.0}}, 0.0, false};
    const auto nodes = refined_pullback(c, fv, cover, 0.5);
    REQUIRE(nodes.size() == 2);
    CHECK(nodes[0].members == std::vector<Index>{0, 1, 2});
    CHECK(nodes[1].members == std::vector<Index>{3, 4, 5});
    CHECK(nodes[1].centroid.isApprox(Eigen::Vector2d(1.0 / 30.0, 10.0 + 0.1 / 3.0)));
  }
  SUBCASE("empty preimage yields no node") {
    PointCloud c(2, 1);
    c << 0, 5;
    const auto fv = filter_project(c, 0);
    CoverScheme cover{{{-1, 1}, {2, 3}, {4, 6}}, 0.0, false};
    const auto nodes = refined_pullback(c, fv, cover, 1.0);
    REQUIRE(nodes.size() == 2);
    CHECK(nodes[0].interval_index == 0);
    CHECK(nodes[1].interval_index == 2);
  }
  SUBCASE("closed interval ends") {
    PointCloud c(3, 1);
    c << 0, 1, 2;
    const auto nodes = refined_pullback(c, filter_project(c, 0), CoverScheme{{{0, 1}, {1, 2}}, 0.0, true}, 0.1);
    REQUIRE(nodes.size() == 4);
    CHECK(nodes[1].members == std::vector<Index>{1});
    CHECK(nodes[2].members == std::vector<Index>{1});
  }
  SUBCASE("annulus arcs separate") {
    for (std::uint64_t seed : {0u, 1u, 2u, 3u}) {
      const auto g = annulus_mapper(seed);
      std::map<std::size_t, int> per_interval;
      for (const auto& node : g.nodes) ++per_interval[node.interval_index];
      CHECK(per_interval[0] == 1);
      CHECK(per_interval[5] == 1);
      for (std::size_t u = 1; u <= 4; ++u) CHECK(per_interval[u] == 2);
      // interior nodes: one upper arc, one lower arc
      for (const auto& node : g.nodes)
        if (node.interval_index > 0 && node.interval_index < 5) CHECK(std::abs(node.centroid(1)) > 0.5);
    }
  }
  SUBCASE("errors") {
    PointCloud c(2, 2);
    c.setZero();
    const auto fv = filter_project(c, 0);
    CHECK_THROWS_AS(refined_pullback(c, fv, uniform_cover(0, 1, 1, 0), 0.0), parameter_error);
    FilterValues wide{Eigen::MatrixXd::Zero(2, 2), "vector"};
    CHECK_THROWS_AS(refined_pullback(c, wide, uniform_cover(0, 1, 1, 0), 1.0), unsupported_error);
  }
}

TEST_CASE("pullback partitions each preimage and covers the cloud") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const PointCloud c = oracle::uniform_cloud(rng, 80, 2);
    const auto fv = filter_project(c, trial % 2);
    const auto cover = uniform_cover(fv.values.minCoeff(), fv.values.maxCoeff(), 4, 0.25);
    const auto nodes = refined_pullback(c, fv, cover, 0.06);
    std::vector<int> seen(80, 0);
    for (std::size_t u = 0; u < cover.size(); ++u) {
      std::vector<Index> preimage, united;
      for (Index i = 0; i < 80; ++i)
        if (cover.intervals[u].contains(fv.values(i, 0))) preimage.push_back(i);
      for (const auto& n : nodes)
        if (n.interval_index == u) united.insert(united.end(), n.members.begin(), n.members.end());
      std::sort(united.begin(), united.end());
      CHECK(united == preimage);  // disjoint (no repeats) and exhaustive
    }
    for (const auto& n : nodes)
      for (Index m : n.members) ++seen[static_cast<std::size_t>(m)];
    CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s >= 1; }));
  }
}

TEST_CASE("nerve") {
  SUBCASE("shared point gives an edge") {
    const auto g = nerve({node_with(0, 0, {1, 2}), node_with(1, 0, {2, 3})});
    CHECK(g.edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
  }
  SUBCASE("disjoint nodes") {
    const auto g = nerve({node_with(0, 0, {1, 2}), node_with(1, 0, {3, 4})});
    CHECK(g.edges.empty());
  }
  SUBCASE("ordering by interval then cluster") {
    const auto g = nerve({node_with(1, 1, {9}), node_with(0, 0, {1}), node_with(1, 0, {5})});
    CHECK(g.nodes[0].interval_index == 0);
    CHECK(g.nodes[1].cluster_index == 0);
    CHECK(g.nodes[2].cluster_index == 1);
  }
  SUBCASE("edge iff members intersect") {
    std::mt19937_64 rng(3);
    std::vector<MapperNode> nodes;
    for (std::size_t k = 0; k < 12; ++k) {
      std::set<Index> m;
      for (int t = 0; t < 4; ++t) m.insert(static_cast<Index>(rng() % 30));
      nodes.push_back(node_with(k, 0, {m.begin(), m.end()}));
    }
    const auto g = nerve(nodes);
    std::set<std::pair<std::size_t, std::size_t>> edges(g.edges.begin(), g.edges.end());
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      CHECK(edges.count({i, i}) == 0);
      for (std::size_t j = i + 1; j < g.nodes.size(); ++j) {
        bool shared = false;
        for (Index a : g.nodes[i].members)
          for (Index b : g.nodes[j].members) shared = shared || a == b;
        CHECK(edges.count({i, j}) == static_cast<std::size_t>(shared));
      }
    }
  }
  SUBCASE("annulus pipeline is a single loop") {
    const auto g = annulus_mapper(0);
    CHECK(g.cycle_rank() == 1);
    CHECK(betti_numbers(as_complex(g), 1) == BettiVector{1, 1});
  }
}

TEST_CASE("overlap monotonicity on the annulus") {
  for (std::uint64_t seed : {0u, 1u}) {
    std::size_t previous = 0;
    for (double g : {0.05, 0.1, 0.2, 0.35, 0.5, 0.7}) {
      const std::size_t edges = annulus_mapper(seed, g).edges.size();
      CHECK(edges >= previous);
      previous = edges;
    }
  }
}

TEST_CASE("cluster_cover_complex") {
  SUBCASE("single component") {
    PointCloud c(3, 2);
    c << 0, 0, 0.1, 0, 0.2, 0;
    const auto g = cluster_cover_complex(c, distance_matrix(c), 0.1);
    CHECK(g.nodes.size() == 1);
    CHECK(g.edges.empty());
  }
  SUBCASE("two distant pairs") {
    PointCloud c(4, 2);
    c << 0, 0, 0.1, 0, 1.1, 0, 1.2, 0;
    const auto dm = distance_matrix(c);
    CHECK(cluster_cover_complex(c, dm, 0.1, 0.99).edges.empty());
    const auto linked = cluster_cover_complex(c, dm, 0.1, 1.0 + 1e-12);
    REQUIRE(linked.nodes.size() == 2);
    CHECK(linked.edges.size() == 1);
    CHECK(linked.nodes[1].centroid.isApprox(Eigen::Vector2d(1.15, 0)));
  }
  SUBCASE("annulus clusters form a low-resolution circle") {
    // Seeded sparse annulus at a ball radius leaving ten clusters.
    const PointCloud c = generate_annulus({100, 1.0, 0.05, 0});
    const auto g = cluster_cover_complex(c, distance_matrix(c), 0.08);
    CHECK(g.nodes.size() >= 4);
    CHECK(g.component_count() == 1);
    std::vector<int> degree(g.nodes.size(), 0);
    for (const auto& [a, b] : g.edges) {
      ++degree[a];
      ++degree[b];
    }
    CHECK(std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; }));
    CHECK(g.cycle_rank() == 1);
  }
  SUBCASE("errors") {
    PointCloud c(2, 2);
    c.setZero();
    CHECK_THROWS_AS(cluster_cover_complex(c, distance_matrix(c), 0.0), parameter_error);
  }
}

TEST_SUITE_END();
