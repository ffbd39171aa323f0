// Acceptance suite: one PASS/FAIL line per criterion, each under its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "tda/homology.hpp"
#include "tda/io.hpp"
#include "tda/mapper.hpp"
#include "tda/pipeline.hpp"

using namespace tda;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const char* name, double budget_seconds, const std::function<void(Check&)>& body) {
  Check check;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.expect(false, std::string("exception: ") + e.what());
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  check.expect(elapsed < budget_seconds, "over time budget");
  if (!check.ok) ++failures;
  std::printf("[%s] %2d %-34s %8.3f s (budget %g s)%s%s\n", check.ok ? "PASS" : "FAIL", id, name, elapsed,
              budget_seconds, check.detail.empty() ? "" : "  ", check.detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  criterion(1, "Betti golden table", 1.0, [](Check& c) {
    c.expect(betti_numbers(SimplicialComplex({Simplex{0}}), 2) == BettiVector{1, 0, 0}, "point");
    const auto loop = SimplicialComplex::from_maximal({Simplex{0, 1}, Simplex{1, 2}, Simplex{0, 2}});
    c.expect(betti_numbers(loop, 2) == BettiVector{1, 1, 0}, "hollow triangle");
    c.expect(betti_numbers(oracle::octahedron(), 2) == BettiVector{1, 0, 1}, "octahedron");
    c.expect(betti_numbers(oracle::seven_vertex_torus(), 2) == BettiVector{1, 2, 1}, "torus");
  });

  criterion(2, "beta_0 vs union-find", 5.0, [](Check& c) {
    std::mt19937_64 rng(2002);
    for (int cloud = 0; cloud < 25; ++cloud) {
      const Index n = 10 + static_cast<Index>(rng() % 51);
      const auto dm = distance_matrix(oracle::uniform_cloud(rng, n, 2));
      const auto diagram = persistence_diagram(rips_filtration(dm, 2));
      std::uniform_real_distribution<double> pick(0.0, 0.4);
      for (int s = 0; s < 5; ++s) {
        const double alpha = pick(rng);
        const int beta0 = diagram.betti_at(alpha, 0)[0];
        const auto components = connected_components(neighbor_graph(dm, alpha / 2.0)).size();
        c.expect(beta0 == static_cast<int>(components), "mismatch on cloud " + std::to_string(cloud));
      }
    }
  });

  criterion(3, "reduction vs dense rank", 10.0, [](Check& c) {
    std::mt19937_64 rng(3003);
    int cases = 0;
    for (int trial = 0; trial < 150; ++trial) {
      const Index n = 1 + static_cast<Index>(rng() % 6);
      const auto dm = distance_matrix(oracle::uniform_cloud(rng, n, 2));
      std::uniform_real_distribution<double> pick(0.0, 1.5);
      const auto complex = rips_complex(dm, pick(rng), 5);
      c.expect(complex.is_face_closed(), "complex not face closed");
      c.expect(betti_numbers(complex, 5) == oracle::dense_betti(complex, 5), "trial " + std::to_string(trial));
      ++cases;
    }
    c.expect(cases >= 100, "too few cases");
  });

  criterion(4, "Rips/Cech inclusion chain", 5.0, [](Check& c) {
    std::mt19937_64 rng(4004);
    for (int cloud = 0; cloud < 50; ++cloud) {
      const Index n = 3 + static_cast<Index>(rng() % 38);
      const PointCloud pts = oracle::uniform_cloud(rng, n, 2);
      const auto dm = distance_matrix(pts);
      const double alpha = std::uniform_real_distribution<double>(0.0, 0.5)(rng);
      const auto rips = rips_complex(dm, alpha, 2);
      const auto cech = cech_complex(pts, alpha, 2);
      const auto rips2 = rips_complex(dm, 2.0 * alpha, 2);
      const std::string tag = " (cloud " + std::to_string(cloud) + ")";
      c.expect(rips.is_subcomplex_of(cech), "Rips_a not in Cech_a" + tag);
      c.expect(cech.is_subcomplex_of(rips2), "Cech_a not in Rips_2a" + tag);
      c.expect(cech.skeleton(1) == rips2.skeleton(1), "1-skeleta differ" + tag);
    }
  });

  criterion(5, "diameter: calipers vs all pairs", 2.0, [](Check& c) {
    std::mt19937_64 rng(5005);
    for (int cloud = 0; cloud < 100; ++cloud) {
      const Index n = 2 + static_cast<Index>(rng() % 499);
      const PointCloud pts = oracle::uniform_cloud(rng, n, 2, -1.0, 1.0);
      const auto dm = distance_matrix(pts);
      const auto hull = convex_hull(pts);
      const auto [diameter, pair] = rotating_calipers(pts, std::span<const Index>(hull.hull_indices), dm);
      const auto brute = oracle::brute_diameter(dm);
      c.expect(diameter == brute.value && hull.diameter == brute.value, "cloud " + std::to_string(cloud));
    }
  });

  criterion(6, "unit square persistence", 1.0, [](Check& c) {
    PointCloud sq(4, 2);
    sq << 0, 0, 1, 0, 1, 1, 0, 1;
    const auto h1 = persistence_diagram(rips_filtration(distance_matrix(sq), 2)).in_dimension(1);
    c.expect(h1.size() == 1, "expected one dimension-1 pair");
    if (h1.size() == 1) {
      c.expect(std::abs(h1[0].birth - 1.0) <= 1e-9, "birth");
      c.expect(std::abs(h1[0].death - std::sqrt(2.0)) <= 1e-9, "death");
    }
  });

  criterion(7, "noisy circle loop detection", 10.0, [](Check& c) {
    const PointCloud ring = generate_annulus({100, 1.0, 0.05, 42});
    auto h1 = persistence_diagram(rips_filtration(distance_matrix(ring), 2)).in_dimension(1);
    std::sort(h1.begin(), h1.end(), [](const auto& a, const auto& b) { return a.persistence() > b.persistence(); });
    c.expect(!h1.empty(), "no dimension-1 pairs");
    const double second = h1.size() > 1 ? h1[1].persistence() : 0.0;
    std::size_t dominant = 0;
    for (const auto& p : h1) dominant += p.persistence() > 5.0 * second;
    c.expect(dominant == 1, "dominant bars: " + std::to_string(dominant));
  });

  criterion(8, "fifteen-point bookkeeping", 1.0, [](Check& c) {
    const auto dm = distance_matrix(oracle::fifteen_points());
    // pair gap 0.1, isolation gap 10: any ball radius strictly between 0.05 and 5
    for (double r : {0.06, 0.5, 2.0, 4.9}) {
      c.expect(connected_components(neighbor_graph(dm, r)).size() == 12, "components at r=" + std::to_string(r));
      const auto diagram = persistence_diagram(rips_filtration(dm, 1, 2.0 * r));
      c.expect(diagram.betti_at(2.0 * r, 0)[0] == 12, "beta_0 at r=" + std::to_string(r));
    }
  });

  criterion(9, "Mapper loop preservation", 5.0, [](Check& c) {
    const PointCloud ring = generate_annulus({500, 1.0, 0.05, 0});
    const auto fv = filter_project(ring, 0);
    const auto cover = uniform_cover(fv.values.minCoeff(), fv.values.maxCoeff(), 6, 0.35);
    const auto graph = nerve(refined_pullback(ring, fv, cover, RunConfig{}.cluster_radius));
    c.expect(graph.cycle_rank() == 1, "cycle rank " + std::to_string(graph.cycle_rank()));
    std::map<std::size_t, int> per_interval;
    for (const auto& node : graph.nodes) ++per_interval[node.interval_index];
    for (std::size_t u = 1; u + 1 < cover.size(); ++u)
      c.expect(per_interval[u] == 2, "interval " + std::to_string(u) + " has " + std::to_string(per_interval[u]));
  });

  criterion(10, "deterministic artifacts", 5.0, [](Check& c) {
    for (const auto& name : commands()) {
      RunConfig config;
      config.command = name;
      config.annulus = {name == "mapper" ? Index{500} : Index{60}, 1.0, 0.05, 10};
      config.scale = 0.3;
      if (name == "persist") config.scale.reset();
      const auto first = execute(config);
      const auto second = execute(config);
      c.expect(first.size() == second.size(), name + ": artifact count");
      for (std::size_t i = 0; i < std::min(first.size(), second.size()); ++i) {
        c.expect(first[i].content == second[i].content, name + ": bytes differ in " + first[i].suffix);
        c.expect(first[i].content.find("time") == std::string::npos, name + ": time field present");
      }
    }
  });

  std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
