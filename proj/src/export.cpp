#include "tda/export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace tda {

namespace {

using nlohmann::json;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

const char* dim_color(int dim) {
  static const char* palette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd"};
  return palette[std::clamp(dim, 0, 3)];
}

std::vector<PersistencePair> shown_pairs(const PersistenceDiagram& diagram, const DiagramStyle& style) {
  std::vector<PersistencePair> out;
  for (const auto& p : diagram.pairs)
    if (!diagram.is_truncation_artifact(p) && (style.all_pairs || !p.zero_length())) out.push_back(p);
  return out;
}

double display_factor(const DiagramStyle& style) { return style.radius_axis ? 0.5 : 1.0; }

}  // namespace

nlohmann::json hull_json(const HullResult& hull) {
  return json{{"hull_indices", hull.hull_indices},
              {"diameter", hull.diameter},
              {"diameter_pair", {hull.diameter_pair.first, hull.diameter_pair.second}}};
}

nlohmann::json components_json(const std::vector<std::vector<Index>>& clusters) {
  return json{{"count", clusters.size()}, {"clusters", clusters}};
}

nlohmann::json complex_summary_json(const SimplicialComplex& complex) {
  const auto counts = complex.counts();
  long euler = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) euler += (k % 2 == 0 ? 1 : -1) * static_cast<long>(counts[k]);
  return json{{"max_dimension", complex.max_dimension()},
              {"simplex_counts", counts},
              {"total", complex.size()},
              {"euler_characteristic", euler}};
}

nlohmann::json diagram_json(const PersistenceDiagram& diagram, const DiagramStyle& style) {
  const double f = display_factor(style);
  json pairs = json::array();
  for (const auto& p : shown_pairs(diagram, style)) {
    json death = p.is_essential() ? json(nullptr) : json(p.death * f);
    pairs.push_back(json::array({p.dimension, p.birth * f, death}));
  }
  return json{{"scale_convention", style.radius_axis ? "radius" : "alpha"},
              {"homology_dimensions", std::max(diagram.top_dimension - 1, 0)},
              {"max_scale", diagram.max_scale * f},
              {"pairs", pairs}};
}

nlohmann::json mapper_json(const MapperGraph& graph) {
  json nodes = json::array();
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    const auto& node = graph.nodes[i];
    nodes.push_back({{"id", i},
                     {"interval", node.interval_index},
                     {"cluster", node.cluster_index},
                     {"size", node.members.size()},
                     {"members", node.members},
                     {"centroid", std::vector<double>(node.centroid.data(), node.centroid.data() + node.centroid.size())}});
  }
  json edges = json::array();
  for (const auto& [a, b] : graph.edges) edges.push_back({a, b});
  return json{{"nodes", nodes},
              {"edges", edges},
              {"components", graph.component_count()},
              {"cycle_rank", graph.cycle_rank()}};
}

std::string mapper_dot(const MapperGraph& graph) {
  double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x;
  double min_y = min_x, max_y = -min_x;
  auto xy = [](const MapperNode& node) {
    const double x = node.centroid.size() > 0 ? node.centroid(0) : 0.0;
    const double y = node.centroid.size() > 1 ? node.centroid(1) : 0.0;
    return std::pair{x, y};
  };
  for (const auto& node : graph.nodes) {
    const auto [x, y] = xy(node);
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-300});

  std::string out = "graph mapper {\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    const auto& node = graph.nodes[i];
    const auto [x, y] = xy(node);
    out += "  n" + std::to_string(i) + " [label=\"U" + std::to_string(node.interval_index) + ".c" +
           std::to_string(node.cluster_index) + " (" + std::to_string(node.members.size()) + ")\", pos=\"" +
           num((x - min_x) / span) + "," + num((y - min_y) / span) + "!\"];\n";
  }
  for (const auto& [a, b] : graph.edges) out += "  n" + std::to_string(a) + " -- n" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

std::string barcode_svg(const PersistenceDiagram& diagram, const DiagramStyle& style) {
  const auto pairs = shown_pairs(diagram, style);
  const double f = display_factor(style);
  const double top = std::max(diagram.max_scale * f, 1e-12);
  const double left = 40.0, width = 560.0, row = 8.0;
  const double height = 40.0 + row * static_cast<double>(pairs.size());
  auto x_of = [&](double v) { return num(left + width * std::min(v * f, top) / top); };

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"" + num(height) + "\" viewBox=\"0 0 640 " +
         num(height) + "\">\n";
  out += "<defs><marker id=\"arrow\" markerWidth=\"6\" markerHeight=\"6\" refX=\"5\" refY=\"3\" orient=\"auto\">"
         "<path d=\"M0,0 L6,3 L0,6 z\" fill=\"black\"/></marker></defs>\n";
  out += "<line class=\"axis\" x1=\"" + num(left) + "\" y1=\"" + num(height - 20) + "\" x2=\"" + num(left + width) +
         "\" y2=\"" + num(height - 20) + "\" stroke=\"black\"/>\n";
  out += "<text x=\"" + num(left + width) + "\" y=\"" + num(height - 5) + "\" text-anchor=\"end\" font-size=\"10\">" +
         num(top) + "</text>\n";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    const std::string y = num(15.0 + row * static_cast<double>(i));
    out += "<line class=\"bar\" data-dim=\"" + std::to_string(p.dimension) + "\" x1=\"" + x_of(p.birth) + "\" y1=\"" +
           y + "\" x2=\"" + x_of(p.is_essential() ? diagram.max_scale : p.death) + "\" y2=\"" + y + "\" stroke=\"" +
           dim_color(p.dimension) + "\" stroke-width=\"3\"" +
           (p.is_essential() ? " marker-end=\"url(#arrow)\"" : "") + "/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string diagram_svg(const PersistenceDiagram& diagram, const DiagramStyle& style) {
  const auto pairs = shown_pairs(diagram, style);
  const double f = display_factor(style);
  const double top = std::max(diagram.max_scale * f, 1e-12);
  const double margin = 40.0, side = 360.0;
  auto x_of = [&](double v) { return num(margin + side * std::min(v * f, top) / top); };
  auto y_of = [&](double v) { return num(margin + side - side * std::min(v * f, top) / top); };

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"440\" height=\"440\" viewBox=\"0 0 440 440\">\n";
  out += "<rect x=\"" + num(margin) + "\" y=\"" + num(margin) + "\" width=\"" + num(side) + "\" height=\"" + num(side) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
  out += "<line class=\"diagonal\" x1=\"" + x_of(0) + "\" y1=\"" + y_of(0) + "\" x2=\"" + x_of(diagram.max_scale) +
         "\" y2=\"" + y_of(diagram.max_scale) + "\" stroke=\"gray\" stroke-dasharray=\"4,4\"/>\n";
  out += "<text x=\"" + num(margin + side) + "\" y=\"" + num(margin + side + 15) +
         "\" text-anchor=\"end\" font-size=\"10\">birth</text>\n";
  out += "<text x=\"" + num(margin - 5) + "\" y=\"" + num(margin) + "\" text-anchor=\"end\" font-size=\"10\">death</text>\n";
  for (const auto& p : pairs) {
    const double death = p.is_essential() ? diagram.max_scale : p.death;
    out += "<circle class=\"pair" + std::string(p.is_essential() ? " essential" : "") + "\" data-dim=\"" +
           std::to_string(p.dimension) + "\" cx=\"" + x_of(p.birth) + "\" cy=\"" + y_of(death) + "\" r=\"3\" fill=\"" +
           dim_color(p.dimension) + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace tda
