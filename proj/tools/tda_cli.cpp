// Command-line front end: tda <command> [flags]

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tda/pipeline.hpp"

int main(int argc, char** argv) {
  tda::RunConfig config;
  CLI::App app{"Topological data analysis toolkit: hulls, Rips/Cech complexes, persistence, Mapper"};
  app.add_option("command", config.command, "generate | hull | components | rips | cech | persist | mapper | betti")
      ->required()
      ->check(CLI::IsMember(tda::commands()));

  std::string input, out, format;
  double scale = 0.0, link = 0.0;
  app.add_option("--input", input, "CSV point cloud (default: seeded annulus)");
  app.add_option("--seed", config.annulus.seed, "generator seed")->capture_default_str();
  auto* n_opt = app.add_option("--n", config.annulus.n_points, "generator point count (default 100, mapper 500)");
  app.add_option("--radius", config.annulus.radius, "generator centre radius")->capture_default_str();
  app.add_option("--spread", config.annulus.spread, "generator radial noise (std dev)")->capture_default_str();
  app.add_option("--p", config.p, "p-norm exponent")->capture_default_str();
  auto* scale_opt = app.add_option("--scale", scale,
                                   "ball radius r (components), Rips/Cech parameter alpha (rips, cech, betti), "
                                   "filtration cap (persist)");
  app.add_option("--max-dim", config.max_dim, "maximal simplex dimension")->capture_default_str();
  app.add_option("--intervals", config.intervals, "mapper cover size")->capture_default_str();
  app.add_option("--overlap", config.overlap, "mapper overlap fraction in [0, 1)")->capture_default_str();
  app.add_option("--axis", config.axis, "mapper projection axis")->capture_default_str();
  app.add_option("--cluster-radius", config.cluster_radius, "mapper clustering radius")->capture_default_str();
  auto* link_opt = app.add_option("--link-threshold", link, "cluster-cover linking distance (default 4 * scale)");
  app.add_flag("--all-pairs", config.all_pairs, "keep zero-length persistence pairs");
  app.add_flag("--radius-axis", config.radius_axis, "report persistence in ball radius (alpha / 2)");
  app.add_option("--out", out, "output path; secondary artifacts are written next to it");
  app.add_option("--format", format, "csv (generate), json, dot (mapper), svg (persist)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return tda::kUsageError;
  }

  if (n_opt->count() == 0 && config.command == "mapper") config.annulus.n_points = 500;
  if (!input.empty()) config.input = input;
  if (!out.empty()) config.out = out;
  if (!format.empty()) config.format = format;
  if (scale_opt->count() > 0) config.scale = scale;
  if (link_opt->count() > 0) config.link_threshold = link;
  return tda::run(config, std::cout, std::cerr);
}
