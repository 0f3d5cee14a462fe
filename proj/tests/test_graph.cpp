#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wobetti/graph.hpp"

using namespace wobetti;

namespace {

// The worked five-vertex example used throughout: edges x2->x1, x3->x2,
// x4->x3, x4->x5 with w2 = 3, w3 = 2.
WeightedOrientedGraph example_d() {
  return WeightedOrientedGraph::build(5, {{2, 1}, {3, 2}, {4, 3}, {4, 5}},
                                      {{2, 3}, {3, 2}});
}

}  // namespace

TEST_CASE("build applies defaults and source normalization") {
  WeightedOrientedGraph g = WeightedOrientedGraph::build(2, {{1, 2}}, {{2, 1}});
  CHECK(g.weights() == std::vector<int>{1, 1});
  CHECK(g.normalization_notes().empty());

  WeightedOrientedGraph d = example_d();
  CHECK(d.weights() == std::vector<int>{1, 3, 2, 1, 1});

  // A stated weight on a source is overridden, with a note.
  WeightedOrientedGraph s = WeightedOrientedGraph::build(3, {{1, 2}}, {{1, 5}});
  CHECK(s.weight(1) == 1);
  CHECK(s.normalization_notes().size() == 1);
}

TEST_CASE("build rejects malformed input") {
  CHECK_THROWS(WeightedOrientedGraph::build(2, {{1, 1}}));
  CHECK_THROWS(WeightedOrientedGraph::build(2, {{1, 2}, {2, 1}}));
  CHECK_THROWS(WeightedOrientedGraph::build(2, {{1, 2}}, {{2, 0}}));
  CHECK_THROWS(WeightedOrientedGraph::build(2, {{1, 3}}));
  CHECK_THROWS(WeightedOrientedGraph::build(0, {}));
  // Duplicates collapse silently.
  CHECK(WeightedOrientedGraph::build(2, {{1, 2}, {1, 2}}).edges().size() == 1);
}

TEST_CASE("roles on the worked example") {
  auto r = roles(example_d());
  CHECK(r[3].is_source);  // x4
  CHECK(r[0].is_sink);    // x1
  CHECK(r[4].is_sink);    // x5
  CHECK(r[0].is_leaf);
  CHECK(r[4].is_leaf);
  CHECK_FALSE(r[1].is_source);
  CHECK_FALSE(r[1].is_sink);
  CHECK_FALSE(r[1].is_trivial);
  CHECK(r[0].is_trivial);

  // Path 1->2->3: one source, one sink+leaf, two leaves.
  auto pr = roles(make_family({FamilyKind::path, 3, {}, {}, {}}));
  CHECK(pr[0].is_source);
  CHECK(pr[0].is_leaf);
  CHECK(pr[2].is_sink);
  CHECK(pr[2].is_leaf);
  CHECK_FALSE(pr[1].is_leaf);

  // Isolated vertices are sources, never sinks.
  auto ir = roles(WeightedOrientedGraph::build(1, {}));
  CHECK(ir[0].is_source);
  CHECK_FALSE(ir[0].is_sink);

  // No vertex with an incident edge is both source and sink.
  for (const auto& g : {example_d(), make_family({FamilyKind::cycle, 4, {}, {}, {}})}) {
    for (const VertexRole& role : roles(g)) {
      CHECK_FALSE((role.is_source && role.is_sink));
    }
  }
}

TEST_CASE("induced subgraphs relabel and re-normalize") {
  WeightedOrientedGraph d = example_d();
  InducedSubgraph sub = induced_subgraph(d, {1, 2, 3, 4});
  CHECK(sub.graph.vertex_count() == 4);
  CHECK(sub.graph.edges() == std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {4, 3}});
  CHECK(sub.old_label == std::vector<int>{1, 2, 3, 4});

  // Identity on the full vertex set.
  InducedSubgraph full = induced_subgraph(d, {1, 2, 3, 4, 5});
  CHECK(full.graph == d);

  // Deleting a cycle vertex creates a source, whose weight renormalizes.
  WeightedOrientedGraph c = make_family({FamilyKind::cycle, 3, {2, 2, 2}, {}, {}});
  InducedSubgraph path = induced_subgraph(c, {1, 2});
  CHECK(path.graph.edges() == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(path.graph.weight(1) == 1);
  CHECK(path.graph.weight(2) == 2);

  CHECK_THROWS(induced_subgraph(d, {}));
}

TEST_CASE("weight reduction") {
  WeightedOrientedGraph d = example_d();
  WeightedOrientedGraph d1 = weight_reduce(d, 2);
  CHECK(d1.weight(2) == 2);
  CHECK(d1.edges() == d.edges());
  WeightedOrientedGraph d2 = weight_reduce(d1, 3);
  CHECK(d2.weights() == std::vector<int>{1, 2, 1, 1, 1});
  CHECK_THROWS(weight_reduce(d, 1));

  // Reducing then restoring gives back the original graph.
  std::map<int, int> restored;
  for (int v = 1; v <= d1.vertex_count(); ++v) restored[v] = d1.weight(v);
  restored[2] += 1;
  CHECK(WeightedOrientedGraph::build(5, d1.edges(), restored) == d);
}

TEST_CASE("full-pdim structure predicate") {
  WeightedOrientedGraph c = make_family({FamilyKind::cycle, 3, {2, 2, 2}, {}, {}});
  CHECK(has_full_pdim_structure(c));

  WeightedOrientedGraph c2 = make_family({FamilyKind::cycle, 3, {1, 2, 2}, {}, {}});
  CHECK_FALSE(has_full_pdim_structure(c2));

  // Any graph with a source fails.
  CHECK_FALSE(has_full_pdim_structure(example_d()));
  for (const VertexRole& r : roles(example_d())) {
    if (r.is_source) CHECK_FALSE(has_full_pdim_structure(example_d()));
  }
}

TEST_CASE("sources force weight one and rule out the full-pdim structure") {
  std::mt19937_64 rng(83);
  for (int rep = 0; rep < 200; ++rep) {
    int n = 2 + static_cast<int>(rng() % 5);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        switch (rng() % 3) {
          case 1: edges.emplace_back(i, j); break;
          case 2: edges.emplace_back(j, i); break;
          default: break;
        }
      }
    }
    std::map<int, int> w;
    for (int v = 1; v <= n; ++v) w[v] = 1 + static_cast<int>(rng() % 3);
    WeightedOrientedGraph g = WeightedOrientedGraph::build(n, edges, w);
    auto r = roles(g);
    bool any_source = false;
    for (int v = 1; v <= n; ++v) {
      if (r[static_cast<std::size_t>(v - 1)].is_source) {
        any_source = true;
        CHECK(g.weight(v) == 1);
      }
    }
    if (any_source) CHECK_FALSE(has_full_pdim_structure(g));
  }
}

TEST_CASE("families") {
  WeightedOrientedGraph k3 = make_family({FamilyKind::complete_natural, 3, {1, 2, 3}, {}, {}});
  CHECK(k3.edges() == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(k3.weights() == std::vector<int>{1, 2, 3});

  WeightedOrientedGraph star = make_family({FamilyKind::star_center_sink, 4, {1, 1, 1, 2}, {}, {}});
  CHECK(star.edges() == std::vector<std::pair<int, int>>{{1, 4}, {2, 4}, {3, 4}});
  CHECK(star.weight(4) == 2);

  WeightedOrientedGraph p2 = make_family({FamilyKind::path, 2, {1, 1}, {}, {}});
  CHECK(p2.edges() == std::vector<std::pair<int, int>>{{1, 2}});

  // Per-edge orientation: middle edge reversed.
  WeightedOrientedGraph zig = make_family({FamilyKind::path, 3, {}, {true, false}, {}});
  CHECK(zig.edges() == std::vector<std::pair<int, int>>{{1, 2}, {3, 2}});

  WeightedOrientedGraph tree = make_family({FamilyKind::rooted_tree, 4, {1, 2, 2, 2}, {}, {1, 1, 2}});
  CHECK(tree.edges() == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 4}});

  // Edge counts per family.
  const int n = 5;
  CHECK(make_family({FamilyKind::complete_natural, n, {}, {}, {}}).edges().size() ==
        static_cast<std::size_t>(n * (n - 1) / 2));
  CHECK(make_family({FamilyKind::cycle, n, {}, {}, {}}).edges().size() ==
        static_cast<std::size_t>(n));
  CHECK(make_family({FamilyKind::path, n, {}, {}, {}}).edges().size() ==
        static_cast<std::size_t>(n - 1));

  CHECK_THROWS(make_family({FamilyKind::path, 1, {}, {}, {}}));
  CHECK_THROWS(make_family({FamilyKind::path, 3, {1, 1}, {}, {}}));
  CHECK_THROWS(make_family({FamilyKind::rooted_tree, 3, {}, {}, {3, 2}}));
}
