#include "ceg/dot.hpp"

#include <array>
#include <sstream>

namespace ceg {

namespace {

constexpr std::array<const char*, 8> kPalette = {"red",    "blue",  "green", "orange",
                                                 "purple", "brown", "cyan",  "magenta"};

}  // namespace

std::string to_dot(const ColoredEdgeGraph& g) {
  std::ostringstream out;
  out << "graph g {\n";
  for (int v = 0; v < g.node_count(); ++v) {
    out << "  n" << v;
    if (static_cast<int>(g.labels().nodes.size()) == g.node_count())
      out << " [label=\"" << g.labels().nodes[v] << "\"]";
    out << ";\n";
  }
  for (const auto& e : g.edges()) {
    out << "  n" << e.u << " -- n" << e.v << " [color=\"" << kPalette[e.color % kPalette.size()]
        << "\", label=\"";
    if (static_cast<int>(g.labels().colors.size()) == g.palette_size())
      out << g.labels().colors[e.color];
    else
      out << "c" << e.color;
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ceg
