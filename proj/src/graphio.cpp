#include "wobetti/graphio.hpp"

#include <map>
#include <sstream>

namespace wobetti {

ParsedGraph parse_graph_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;

  int n = -1;
  std::vector<std::pair<int, int>> edges;
  std::map<int, int> weights;
  std::vector<std::string> warnings;

  auto parse_index = [&](const std::string& token, const char* what) {
    try {
      std::size_t used = 0;
      int value = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      return value;
    } catch (const std::exception&) {
      throw GraphFileError(line_no, std::string("bad ") + what + " '" + token + "'");
    }
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::string directive;
    if (!(ls >> directive)) continue;

    std::vector<std::string> args;
    for (std::string tok; ls >> tok;) args.push_back(tok);

    if (directive == "vertices") {
      if (n != -1) throw GraphFileError(line_no, "duplicate 'vertices' directive");
      if (args.size() != 1) throw GraphFileError(line_no, "'vertices' needs one argument");
      n = parse_index(args[0], "vertex count");
      if (n < 1) throw GraphFileError(line_no, "vertex count must be positive");
    } else if (directive == "edge") {
      if (n == -1) throw GraphFileError(line_no, "'edge' before 'vertices'");
      if (args.size() != 2) throw GraphFileError(line_no, "'edge' needs two arguments");
      int u = parse_index(args[0], "vertex");
      int v = parse_index(args[1], "vertex");
      if (u < 1 || u > n || v < 1 || v > n) {
        throw GraphFileError(line_no, "edge endpoint out of range");
      }
      if (u == v) throw GraphFileError(line_no, "loop edge rejected");
      edges.emplace_back(u, v);
    } else if (directive == "weight") {
      if (n == -1) throw GraphFileError(line_no, "'weight' before 'vertices'");
      if (args.size() != 2) throw GraphFileError(line_no, "'weight' needs two arguments");
      int v = parse_index(args[0], "vertex");
      int w = parse_index(args[1], "weight");
      if (v < 1 || v > n) throw GraphFileError(line_no, "weight vertex out of range");
      if (w < 1) throw GraphFileError(line_no, "weight must be positive");
      if (auto it = weights.find(v); it != weights.end()) {
        warnings.push_back("line " + std::to_string(line_no) + ": weight of x" +
                           std::to_string(v) + " redefined (" +
                           std::to_string(it->second) + " -> " +
                           std::to_string(w) + ")");
      }
      weights[v] = w;
    } else {
      throw GraphFileError(line_no, "unknown directive '" + directive + "'");
    }
  }
  if (n == -1) throw GraphFileError(line_no, "missing 'vertices' directive");

  ParsedGraph out{[&] {
                    try {
                      return WeightedOrientedGraph::build(n, std::move(edges),
                                                          weights);
                    } catch (const std::invalid_argument& e) {
                      throw GraphFileError(line_no, e.what());
                    }
                  }(),
                  std::move(warnings)};
  for (const std::string& note : out.graph.normalization_notes()) {
    out.warnings.push_back(note);
  }
  return out;
}

std::string render_graph_file(const WeightedOrientedGraph& g) {
  std::ostringstream os;
  os << "vertices " << g.vertex_count() << "\n";
  for (const auto& [u, v] : g.edges()) {
    os << "edge " << u << " " << v << "\n";
  }
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (g.weight(v) != 1) {
      os << "weight " << v << " " << g.weight(v) << "\n";
    }
  }
  return os.str();
}

}  // namespace wobetti
