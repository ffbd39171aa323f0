#pragma once

// Serialisation of results: JSON payloads, Graphviz DOT and SVG plots.

#include <string>

#include "json.hpp"

#include "tda/complex.hpp"
#include "tda/homology.hpp"
#include "tda/mapper.hpp"

namespace tda {

struct DiagramStyle {
  bool radius_axis = false;  // halve every scale: ball radius instead of Rips parameter
  bool all_pairs = false;    // keep zero-length pairs
};

nlohmann::json hull_json(const HullResult& hull);
nlohmann::json components_json(const std::vector<std::vector<Index>>& clusters);
nlohmann::json complex_summary_json(const SimplicialComplex& complex);
/// Pairs as [dim, birth, death] with null death for essential classes.
nlohmann::json diagram_json(const PersistenceDiagram& diagram, const DiagramStyle& style);
nlohmann::json mapper_json(const MapperGraph& graph);

/// Undirected graph; nodes labelled "Ui.cj (count)" and pinned at centroids
/// mapped into the unit square.
std::string mapper_dot(const MapperGraph& graph);

/// One <line class="bar"> per bar. Essential bars stop at the maximal scale
/// with an arrowhead.
std::string barcode_svg(const PersistenceDiagram& diagram, const DiagramStyle& style);
/// One <circle class="pair"> per pair plus the birth = death diagonal.
std::string diagram_svg(const PersistenceDiagram& diagram, const DiagramStyle& style);

}  // namespace tda
