#ifndef CEG_DOT_HPP
#define CEG_DOT_HPP

#include <string>

#include "ceg/graph.hpp"

namespace ceg {

// Graphviz rendering: nodes in id order, edges in canonical order, one color
// attribute per edge cycled from a fixed 8-entry palette. Byte-deterministic.
std::string to_dot(const ColoredEdgeGraph& g);

}  // namespace ceg

#endif
