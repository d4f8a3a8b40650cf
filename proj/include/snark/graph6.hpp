#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "snark/graph.hpp"

namespace snark {

struct Graph6ParseError : std::runtime_error {
  std::size_t offset;  // byte offset of the offending character
  Graph6ParseError(const std::string& what, std::size_t off)
      : std::runtime_error(what + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

// One line of graph6 or sparse6 (":" prefix), optional ">>graph6<<" /
// ">>sparse6<<" header. Non-regular graphs parse fine and come back with
// is_regular() false.
CubicMultigraph parse_graph6(const std::string& line);

// Simple graphs only.
std::string write_graph6(const CubicMultigraph& g);
// Any loopless multigraph.
std::string write_sparse6(const CubicMultigraph& g);

}  // namespace snark
