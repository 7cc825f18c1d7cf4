#include "ceg/graph.hpp"

#include <algorithm>
#include <utility>

#include "json.hpp"

namespace ceg {

namespace {

std::string edge_str(NodeId u, NodeId v, ColorId c) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ";c" + std::to_string(c) + ")";
}

}  // namespace

ColoredEdgeGraph::ColoredEdgeGraph(int n, int m, std::vector<ColoredEdge> edges, LabelTable labels)
    : n_(n), m_(m), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (n_ < 0 || m_ < 0)
    throw Error(Errc::bad_parameter, "node count and palette size must be nonnegative");
  for (auto& e : edges_) {
    if (e.u == e.v)
      throw Error(Errc::self_loop, "self-loop edge " + edge_str(e.u, e.v, e.color));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n_)
      throw Error(Errc::node_out_of_range,
                  "node index out of range in edge " + edge_str(e.u, e.v, e.color) +
                      " (n=" + std::to_string(n_) + ")");
    if (e.color < 0 || e.color >= m_)
      throw Error(Errc::color_out_of_range,
                  "color index out of range in edge " + edge_str(e.u, e.v, e.color) +
                      " (m=" + std::to_string(m_) + ")");
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v)
      throw Error(Errc::duplicate_edge,
                  "duplicate node pair in edges " + edge_str(edges_[i - 1].u, edges_[i - 1].v, edges_[i - 1].color) +
                      " and " + edge_str(edges_[i].u, edges_[i].v, edges_[i].color));
  }
  if (!labels_.nodes.empty() && static_cast<int>(labels_.nodes.size()) != n_)
    throw Error(Errc::bad_parameter, "node label table size differs from node count");
  if (!labels_.colors.empty() && static_cast<int>(labels_.colors.size()) != m_)
    throw Error(Errc::bad_parameter, "color label table size differs from palette size");
}

ColoredEdgeGraph new_graph(int n, int m, const std::vector<ColoredEdge>& edges) {
  return ColoredEdgeGraph(n, m, edges);
}

ColorClassView color_classes(const ColoredEdgeGraph& g) {
  ColorClassView classes(g.palette_size());
  for (const auto& e : g.edges()) classes[e.color].push_back(e);
  return classes;
}

bool is_onto(const ColoredEdgeGraph& g) {
  std::vector<bool> seen(g.palette_size(), false);
  for (const auto& e : g.edges()) seen[e.color] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

ColoredEdgeGraph parse_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::malformed_document, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("m") || !doc.contains("edges"))
    throw Error(Errc::malformed_document, "graph document needs fields n, m, edges");
  if (!doc["n"].is_number_integer() || !doc["m"].is_number_integer() || !doc["edges"].is_array())
    throw Error(Errc::malformed_document, "fields n, m must be integers and edges an array");

  std::vector<ColoredEdge> edges;
  edges.reserve(doc["edges"].size());
  for (const auto& item : doc["edges"]) {
    if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() ||
        !item[1].is_number_integer() || !item[2].is_number_integer())
      throw Error(Errc::malformed_document, "each edge must be an integer triple [u, v, c]");
    edges.push_back({item[0].get<int>(), item[1].get<int>(), item[2].get<int>()});
  }

  LabelTable labels;
  if (doc.contains("labels")) {
    const auto& lab = doc["labels"];
    if (!lab.is_object()) throw Error(Errc::malformed_document, "labels must be an object");
    if (lab.contains("nodes")) {
      if (!lab["nodes"].is_array())
        throw Error(Errc::malformed_document, "labels.nodes must be an array of strings");
      for (const auto& s : lab["nodes"]) {
        if (!s.is_string()) throw Error(Errc::malformed_document, "labels.nodes must be strings");
        labels.nodes.push_back(s.get<std::string>());
      }
    }
    if (lab.contains("colors")) {
      if (!lab["colors"].is_array())
        throw Error(Errc::malformed_document, "labels.colors must be an array of strings");
      for (const auto& s : lab["colors"]) {
        if (!s.is_string()) throw Error(Errc::malformed_document, "labels.colors must be strings");
        labels.colors.push_back(s.get<std::string>());
      }
    }
  }
  return ColoredEdgeGraph(doc["n"].get<int>(), doc["m"].get<int>(), std::move(edges),
                          std::move(labels));
}

std::string serialize_graph(const ColoredEdgeGraph& g) {
  nlohmann::json doc;
  doc["n"] = g.node_count();
  doc["m"] = g.palette_size();
  auto edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.color});
  doc["edges"] = std::move(edges);
  if (!g.labels().empty()) {
    nlohmann::json lab;
    if (!g.labels().nodes.empty()) lab["nodes"] = g.labels().nodes;
    if (!g.labels().colors.empty()) lab["colors"] = g.labels().colors;
    doc["labels"] = std::move(lab);
  }
  return doc.dump(2) + "\n";
}

}  // namespace ceg
