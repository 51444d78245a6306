#pragma once

#include <string>

#include <json.hpp>

#include "pec/coloring.hpp"
#include "pec/graph.hpp"

namespace pec {

// Graph JSON: {"n": int, "edges": [[u, v], ...]} with 0-based indices.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

std::string graph_to_dot(const Graph& g);

// Coloring JSON: {"colors": [c_e for each edge id]}.
nlohmann::json coloring_to_json(const EdgeColoring& phi);
EdgeColoring coloring_from_json(const nlohmann::json& j, int edge_count);

// Labels serialize as lowercase hex of the support bitmask (coordinate 1 is
// the least significant bit).
nlohmann::json labeling_to_json(const Labeling& f);

nlohmann::json canonicalization_to_json(const Canonicalization& canon);

}  // namespace pec
