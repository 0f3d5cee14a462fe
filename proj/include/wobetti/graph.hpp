#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace wobetti {

// Vertex-weighted oriented graph. Vertices are labeled 1..n and correspond
// to polynomial variables x_1..x_n. At most one of (u,v), (v,u) may be
// present, loops are rejected, and every source vertex is normalized to
// weight 1 (its weight never appears in an edge ideal generator).
class WeightedOrientedGraph {
 public:
  // Unspecified weights default to 1. Source weights are forced to 1; each
  // such override is recorded as a note rather than treated as an error.
  static WeightedOrientedGraph build(int n,
                                     std::vector<std::pair<int, int>> edges,
                                     const std::map<int, int>& weights = {});

  int vertex_count() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& weights() const { return weights_; }
  int weight(int v) const { return weights_[static_cast<std::size_t>(v - 1)]; }
  int weight_sum() const;
  const std::vector<std::string>& normalization_notes() const {
    return notes_;
  }

  bool has_edge(int u, int v) const;
  int in_degree(int v) const;
  int out_degree(int v) const;
  std::vector<int> in_neighbors(int v) const;
  std::vector<int> out_neighbors(int v) const;

  bool operator==(const WeightedOrientedGraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_ &&
           weights_ == other.weights_;
  }

 private:
  WeightedOrientedGraph() = default;

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;  // sorted, deduplicated
  std::vector<int> weights_;                // index v-1
  std::vector<std::string> notes_;
};

struct VertexRole {
  bool is_source = false;  // no in-edges (isolated vertices count)
  bool is_sink = false;    // no out-edges and at least one in-edge
  bool is_leaf = false;    // exactly one incident edge
  bool is_trivial = false; // weight 1
};

std::vector<VertexRole> roles(const WeightedOrientedGraph& g);

// Induced subgraph on `keep`, relabeled 1..|keep| in ascending label order.
// old_label[k-1] is the original label of new vertex k. Weights are
// restricted and then source-normalized again (deletion can create sources).
struct InducedSubgraph {
  WeightedOrientedGraph graph;
  std::vector<int> old_label;
};

InducedSubgraph induced_subgraph(const WeightedOrientedGraph& g,
                                 const std::vector<int>& keep);

// Same graph with w_v decremented by one; requires w_v >= 2.
WeightedOrientedGraph weight_reduce(const WeightedOrientedGraph& g, int v);

// True iff every vertex has an in-edge from a non-trivial vertex.
bool has_full_pdim_structure(const WeightedOrientedGraph& g);

enum class FamilyKind {
  path,
  cycle,
  complete_natural,
  star_center_sink,
  rooted_tree,
};

struct FamilySpec {
  FamilyKind kind;
  int n = 0;
  std::vector<int> weights;   // empty = all ones
  std::vector<bool> forward;  // path/cycle edge orientations; empty = natural
  std::vector<int> parents;   // rooted_tree: parent of vertex i at index i-2
};

WeightedOrientedGraph make_family(const FamilySpec& spec);

}  // namespace wobetti
