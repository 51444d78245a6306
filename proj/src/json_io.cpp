#include "pec/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace pec {

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs \"n\" and \"edges\"");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("graph JSON: edge must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph(j.at("n").get<int>(), std::move(edges));
}

std::string graph_to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  std::vector<char> touched(g.vertex_count(), 0);
  for (const auto& [u, v] : g.edges()) {
    touched[u] = touched[v] = 1;
    out << "  " << u << " -- " << v << ";\n";
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!touched[v]) out << "  " << v << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::json coloring_to_json(const EdgeColoring& phi) {
  return {{"colors", phi.colors()}};
}

EdgeColoring coloring_from_json(const nlohmann::json& j, int edge_count) {
  if (!j.contains("colors"))
    throw std::invalid_argument("coloring JSON needs \"colors\"");
  const auto colors = j.at("colors").get<std::vector<int>>();
  if (static_cast<int>(colors.size()) != edge_count)
    throw std::invalid_argument("coloring JSON: wrong number of edges");
  return EdgeColoring(colors);
}

nlohmann::json labeling_to_json(const Labeling& f) {
  nlohmann::json labels = nlohmann::json::array();
  for (const auto& v : f.labels) labels.push_back(v.to_hex());
  return {{"labels", labels}};
}

nlohmann::json canonicalization_to_json(const Canonicalization& canon) {
  nlohmann::json pi = nlohmann::json::object();
  for (std::size_t c = 0; c < canon.refinement_map.size(); ++c)
    pi[std::to_string(c + 1)] = canon.refinement_map[c];
  nlohmann::json out = {
      {"spec", canon.spec},
      {"labels", labeling_to_json(canon.labeling).at("labels")},
      {"coloring_star", coloring_to_json(canon.coloring_star)},
      {"star_color_names", canon.star_color_names},
      {"pi", pi},
      {"dim_c_phi", canon.cycle_space.dim()},
  };
  if (canon.collision)
    out["collision"] = {canon.collision->first, canon.collision->second};
  return out;
}

}  // namespace pec
