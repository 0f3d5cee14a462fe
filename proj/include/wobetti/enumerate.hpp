#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wobetti/field.hpp"
#include "wobetti/graph.hpp"

namespace wobetti {

// Isomorphism-canonical encoding under vertex relabeling (exhaustive over
// permutations; intended for the small n this tool sweeps).
std::vector<int> canonical_key(const WeightedOrientedGraph& g);
WeightedOrientedGraph canonical_form(const WeightedOrientedGraph& g);

// Visits one representative per isomorphism class of weighted oriented
// graphs on n vertices with weights in 1..max_weight (source weights pinned
// to 1), in a deterministic order.
void for_each_graph_class(
    int n, int max_weight,
    const std::function<void(const WeightedOrientedGraph&)>& fn);

struct ExperimentBounds {
  std::string question;  // "underlying-graph" or "weight-reduction"
  int max_n = 4;
  int max_weight = 2;
  bool force = false;  // lifts the max_n <= 6, max_weight <= 3 guard
};

struct ExploreResult {
  std::string text;
  // Set when a case covered by a proved statement (sink reductions) fails.
  bool guaranteed_case_failed = false;
};

ExploreResult run_explore(const ExperimentBounds& bounds, FieldSpec field);

}  // namespace wobetti
