#include "tda/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <limits>

#include "tda/complex.hpp"
#include "tda/export.hpp"
#include "tda/homology.hpp"
#include "tda/mapper.hpp"

namespace tda {

namespace {

using nlohmann::json;

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string default_format(const std::string& command) { return command == "generate" ? "csv" : "json"; }

std::vector<std::string> allowed_formats(const std::string& command) {
  if (command == "generate") return {"csv"};
  if (command == "mapper") return {"json", "dot"};
  if (command == "persist") return {"json", "svg"};
  return {"json"};
}

double required_scale(const RunConfig& config) {
  if (!config.scale) throw parameter_error(config.command + ": --scale is required");
  if (!(*config.scale >= 0.0)) throw parameter_error(config.command + ": --scale must be >= 0");
  return *config.scale;
}

PointCloud load_cloud(const RunConfig& config) {
  return config.input ? load_csv(*config.input) : generate_annulus(config.annulus);
}

std::string envelope(const RunConfig& config, json result) {
  json doc{{"config", config_json(config)}, {"result", std::move(result)}};
  return doc.dump(2) + "\n";
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"generate", "hull", "components", "rips",
                                              "cech",     "persist", "mapper",   "betti"};
  return names;
}

nlohmann::json config_json(const RunConfig& config) {
  std::optional<double> link = config.link_threshold;
  if (!link && config.scale) link = 4.0 * *config.scale;
  return json{{"command", config.command},
              {"input", optional_json(config.input)},
              {"generator",
               config.input ? json(nullptr)
                            : json{{"kind", "annulus"},
                                   {"n", config.annulus.n_points},
                                   {"radius", config.annulus.radius},
                                   {"spread", config.annulus.spread},
                                   {"seed", config.annulus.seed}}},
              {"p", config.p},
              {"scale", optional_json(config.scale)},
              {"max_dim", config.max_dim},
              {"intervals", config.intervals},
              {"overlap", config.overlap},
              {"axis", config.axis},
              {"cluster_radius", config.cluster_radius},
              {"link_threshold", optional_json(link)},
              {"all_pairs", config.all_pairs},
              {"radius_axis", config.radius_axis},
              {"format", config.format.value_or(default_format(config.command))}};
}

std::vector<Artifact> execute(const RunConfig& config) {
  const auto& names = commands();
  if (std::find(names.begin(), names.end(), config.command) == names.end())
    throw parameter_error("unknown command '" + config.command + "'");
  const std::string format = config.format.value_or(default_format(config.command));
  const auto formats = allowed_formats(config.command);
  if (std::find(formats.begin(), formats.end(), format) == formats.end())
    throw parameter_error(config.command + ": unsupported --format '" + format + "'");
  if (config.max_dim < 0) throw parameter_error("--max-dim must be >= 0");

  const PointCloud cloud = load_cloud(config);
  const std::string& cmd = config.command;

  if (cmd == "generate") return {{".csv", to_csv(cloud)}};

  if (cmd == "hull") return {{".json", envelope(config, hull_json(convex_hull(cloud)))}};

  if (cmd == "mapper") {
    const FilterValues fv = filter_project(cloud, config.axis);
    const CoverScheme cover = uniform_cover(fv.values.minCoeff(), fv.values.maxCoeff(), config.intervals, config.overlap);
    const MapperGraph graph = nerve(refined_pullback(cloud, fv, cover, config.cluster_radius, config.p));
    json result = mapper_json(graph);
    json intervals = json::array();
    for (const auto& iv : cover.intervals) intervals.push_back({iv.low, iv.high});
    result["filter"] = fv.descriptor;
    result["intervals"] = intervals;
    Artifact as_json{".json", envelope(config, std::move(result))};
    Artifact as_dot{".dot", mapper_dot(graph)};
    if (format == "dot") return {as_dot, as_json};
    return {as_json, as_dot};
  }

  const DistanceMatrix dm = distance_matrix(cloud, config.p);

  if (cmd == "components") {
    const double r = required_scale(config);
    const auto clusters = connected_components(neighbor_graph(dm, r));
    json result = components_json(clusters);
    result["radius"] = r;
    result["graph"] = mapper_json(cluster_cover_complex(cloud, dm, r, config.link_threshold));
    return {{".json", envelope(config, std::move(result))}};
  }

  if (cmd == "rips" || cmd == "cech") {
    const double alpha = required_scale(config);
    const SimplicialComplex complex =
        cmd == "rips" ? rips_complex(dm, alpha, config.max_dim) : cech_complex(cloud, alpha, config.max_dim);
    json result = complex_summary_json(complex);
    result["alpha"] = alpha;
    return {{".json", envelope(config, std::move(result))}};
  }

  if (cmd == "betti") {
    const double alpha = required_scale(config);
    const BettiVector betti = betti_numbers(rips_complex(dm, alpha, config.max_dim), config.max_dim);
    return {{".json", envelope(config, json{{"alpha", alpha}, {"betti", betti}})}};
  }

  // persist
  const double cap = config.scale.value_or(std::numeric_limits<double>::infinity());
  if (!(cap >= 0.0)) throw parameter_error("persist: --scale must be >= 0");
  const PersistenceDiagram diagram = persistence_diagram(rips_filtration(dm, config.max_dim, cap));
  const DiagramStyle style{config.radius_axis, config.all_pairs};
  Artifact as_json{".json", envelope(config, diagram_json(diagram, style))};
  Artifact barcode{".barcode.svg", barcode_svg(diagram, style)};
  Artifact scatter{".diagram.svg", diagram_svg(diagram, style)};
  if (format == "svg") return {barcode, scatter, as_json};
  return {as_json, barcode, scatter};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const auto artifacts = execute(config);
    if (!config.out) {
      out << artifacts.front().content;
      return kSuccess;
    }
    const std::filesystem::path primary(*config.out);
    std::filesystem::path stem = primary;
    stem.replace_extension();
    for (std::size_t i = 0; i < artifacts.size(); ++i) {
      const std::filesystem::path target =
          i == 0 ? primary : std::filesystem::path(stem.string() + artifacts[i].suffix);
      std::ofstream file(target, std::ios::binary);
      if (!file) throw input_error("cannot write " + target.string());
      file << artifacts[i].content;
      if (!file) throw input_error("failed writing " + target.string());
    }
    return kSuccess;
  } catch (const parse_error& e) {
    err << "error: input: " << e.what() << "\n";
    return kInputError;
  } catch (const input_error& e) {
    err << "error: input: " << e.what() << "\n";
    return kInputError;
  } catch (const parameter_error& e) {
    err << "error: usage: " << e.what() << "\n";
    return kUsageError;
  } catch (const unsupported_error& e) {
    err << "error: computation: " << e.what() << "\n";
    return kComputationError;
  } catch (const structure_error& e) {
    err << "error: computation: " << e.what() << "\n";
    return kComputationError;
  } catch (const std::exception& e) {
    err << "error: computation: " << e.what() << "\n";
    return kComputationError;
  }
}

}  // namespace tda
