#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "wobetti/graph.hpp"

namespace wobetti {

// Plain-text graph files, one directive per line:
//   vertices N      (exactly once, before any edge/weight)
//   edge U V        (oriented U -> V)
//   weight V W
// '#' starts a comment; blank lines are ignored.

class GraphFileError : public std::runtime_error {
 public:
  GraphFileError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct ParsedGraph {
  WeightedOrientedGraph graph;
  // Duplicate-weight overrides and source normalizations.
  std::vector<std::string> warnings;
};

ParsedGraph parse_graph_file(const std::string& text);

// Deterministic rendering; parsing it back reproduces the graph exactly.
std::string render_graph_file(const WeightedOrientedGraph& g);

}  // namespace wobetti
