#include "wobetti/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wobetti {

namespace {

std::string vertex_name(int v) { return "x" + std::to_string(v); }

}  // namespace

WeightedOrientedGraph WeightedOrientedGraph::build(
    int n, std::vector<std::pair<int, int>> edges,
    const std::map<int, int>& weights) {
  if (n < 1) throw std::invalid_argument("vertex count must be positive");

  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::set<std::pair<int, int>> seen(edges.begin(), edges.end());
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") out of range");
    }
    if (u == v) {
      throw std::invalid_argument("loop edge at " + vertex_name(u));
    }
    if (seen.count({v, u})) {
      throw std::invalid_argument("anti-parallel pair between " +
                                  vertex_name(u) + " and " + vertex_name(v));
    }
  }

  WeightedOrientedGraph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.weights_.assign(static_cast<std::size_t>(n), 1);
  for (const auto& [v, w] : weights) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("weight for out-of-range vertex " +
                                  std::to_string(v));
    }
    if (w < 1) {
      throw std::invalid_argument("non-positive weight at " + vertex_name(v));
    }
    g.weights_[static_cast<std::size_t>(v - 1)] = w;
  }

  std::vector<bool> has_in(static_cast<std::size_t>(n), false);
  for (const auto& e : g.edges_) has_in[static_cast<std::size_t>(e.second - 1)] = true;
  for (int v = 1; v <= n; ++v) {
    if (!has_in[static_cast<std::size_t>(v - 1)] && g.weight(v) != 1) {
      g.notes_.push_back(vertex_name(v) + ": weight " +
                         std::to_string(g.weight(v)) +
                         " normalized to 1 (source vertex)");
      g.weights_[static_cast<std::size_t>(v - 1)] = 1;
    }
  }
  return g;
}

int WeightedOrientedGraph::weight_sum() const {
  int s = 0;
  for (int w : weights_) s += w;
  return s;
}

bool WeightedOrientedGraph::has_edge(int u, int v) const {
  return std::binary_search(edges_.begin(), edges_.end(), std::pair{u, v});
}

int WeightedOrientedGraph::in_degree(int v) const {
  int d = 0;
  for (const auto& e : edges_) d += (e.second == v);
  return d;
}

int WeightedOrientedGraph::out_degree(int v) const {
  int d = 0;
  for (const auto& e : edges_) d += (e.first == v);
  return d;
}

std::vector<int> WeightedOrientedGraph::in_neighbors(int v) const {
  std::vector<int> out;
  for (const auto& e : edges_) {
    if (e.second == v) out.push_back(e.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> WeightedOrientedGraph::out_neighbors(int v) const {
  std::vector<int> out;
  for (const auto& e : edges_) {
    if (e.first == v) out.push_back(e.second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexRole> roles(const WeightedOrientedGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> in(static_cast<std::size_t>(n), 0);
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : g.edges()) {
    ++out[static_cast<std::size_t>(u - 1)];
    ++in[static_cast<std::size_t>(v - 1)];
  }
  std::vector<VertexRole> r(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) {
    const std::size_t i = static_cast<std::size_t>(v - 1);
    r[i].is_source = in[i] == 0;
    r[i].is_sink = out[i] == 0 && in[i] > 0;
    r[i].is_leaf = in[i] + out[i] == 1;
    r[i].is_trivial = g.weight(v) == 1;
  }
  return r;
}

InducedSubgraph induced_subgraph(const WeightedOrientedGraph& g,
                                 const std::vector<int>& keep) {
  if (keep.empty()) {
    throw std::invalid_argument("induced subgraph on empty vertex set");
  }
  std::vector<int> labels = keep;
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  std::map<int, int> new_of_old;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    int v = labels[i];
    if (v < 1 || v > g.vertex_count()) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " out of range");
    }
    new_of_old[v] = static_cast<int>(i) + 1;
  }

  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges()) {
    auto iu = new_of_old.find(u);
    auto iv = new_of_old.find(v);
    if (iu != new_of_old.end() && iv != new_of_old.end()) {
      edges.emplace_back(iu->second, iv->second);
    }
  }
  std::map<int, int> weights;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    weights[static_cast<int>(i) + 1] = g.weight(labels[i]);
  }
  InducedSubgraph out{
      WeightedOrientedGraph::build(static_cast<int>(labels.size()),
                                   std::move(edges), weights),
      std::move(labels)};
  return out;
}

WeightedOrientedGraph weight_reduce(const WeightedOrientedGraph& g, int v) {
  if (v < 1 || v > g.vertex_count()) {
    throw std::invalid_argument("vertex out of range");
  }
  if (g.weight(v) < 2) {
    throw std::invalid_argument("weight reduction undefined on trivial vertex " +
                                vertex_name(v));
  }
  std::map<int, int> weights;
  for (int u = 1; u <= g.vertex_count(); ++u) weights[u] = g.weight(u);
  weights[v] -= 1;
  return WeightedOrientedGraph::build(g.vertex_count(), g.edges(), weights);
}

bool has_full_pdim_structure(const WeightedOrientedGraph& g) {
  for (int v = 1; v <= g.vertex_count(); ++v) {
    bool ok = false;
    for (int u : g.in_neighbors(v)) {
      if (g.weight(u) >= 2) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

WeightedOrientedGraph make_family(const FamilySpec& spec) {
  const int n = spec.n;
  if (n < 2) throw std::invalid_argument("family size must be at least 2");
  if (!spec.weights.empty() &&
      spec.weights.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("weight list length must equal size");
  }
  std::map<int, int> weights;
  for (std::size_t i = 0; i < spec.weights.size(); ++i) {
    weights[static_cast<int>(i) + 1] = spec.weights[i];
  }

  auto oriented = [&](int k, int a, int b) -> std::pair<int, int> {
    // Edge k of a path/cycle runs a->b when forward (the natural direction).
    if (spec.forward.empty() || spec.forward[static_cast<std::size_t>(k)]) {
      return {a, b};
    }
    return {b, a};
  };

  std::vector<std::pair<int, int>> edges;
  switch (spec.kind) {
    case FamilyKind::path: {
      if (!spec.forward.empty() &&
          spec.forward.size() != static_cast<std::size_t>(n - 1)) {
        throw std::invalid_argument("path orientation needs n-1 entries");
      }
      for (int i = 1; i < n; ++i) edges.push_back(oriented(i - 1, i, i + 1));
      break;
    }
    case FamilyKind::cycle: {
      if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
      if (!spec.forward.empty() &&
          spec.forward.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("cycle orientation needs n entries");
      }
      for (int i = 1; i < n; ++i) edges.push_back(oriented(i - 1, i, i + 1));
      edges.push_back(oriented(n - 1, n, 1));
      break;
    }
    case FamilyKind::complete_natural: {
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
      }
      break;
    }
    case FamilyKind::star_center_sink: {
      for (int i = 1; i < n; ++i) edges.emplace_back(i, n);
      break;
    }
    case FamilyKind::rooted_tree: {
      if (spec.parents.size() != static_cast<std::size_t>(n - 1)) {
        throw std::invalid_argument("rooted tree needs parents for 2..n");
      }
      for (int v = 2; v <= n; ++v) {
        int parent = spec.parents[static_cast<std::size_t>(v - 2)];
        if (parent < 1 || parent > n || parent == v) {
          throw std::invalid_argument("invalid parent for vertex " +
                                      std::to_string(v));
        }
        edges.emplace_back(parent, v);
      }
      // Every vertex must reach the root by walking parents.
      for (int v = 2; v <= n; ++v) {
        int cur = v;
        int steps = 0;
        while (cur != 1 && steps <= n) {
          cur = spec.parents[static_cast<std::size_t>(cur - 2)];
          ++steps;
        }
        if (cur != 1) {
          throw std::invalid_argument("parent array is not a tree rooted at 1");
        }
      }
      break;
    }
  }
  return WeightedOrientedGraph::build(n, std::move(edges), weights);
}

}  // namespace wobetti
