#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wobetti/betti.hpp"
#include "wobetti/graph.hpp"
#include "wobetti/taylor.hpp"

namespace wobetti {

enum class CheckStatus { pass, fail, not_applicable };

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::pass;
  std::string expected;
  std::string actual;
  // Offending entry on FAIL, unmet hypothesis on NOT_APPLICABLE.
  std::string witness;
  // Informative rows are reported but excluded from the overall verdict
  // (used where the source indexing conventions disagree).
  bool informative = false;
};

struct VerificationReport {
  std::string subject;
  std::uint32_t p = 0;
  std::vector<CheckResult> checks;

  bool overall() const;
  void merge(VerificationReport other);
};

struct CheckCaps {
  LcmCap lcm;
  TaylorCap taylor;
};

// Entrywise equality of the upper-Koszul and Taylor engines.
VerificationReport oracle_compare(const MonomialIdeal& ideal, FieldSpec field,
                                  CheckCaps caps = {});

// beta_{i,j}(R/I) = beta_{i,j}(R/J) + beta_{i,j}(R/K) + beta_{i-1,j}(R/J∩K),
// checked for i >= 2 and, as an informative row, for i = 1.
VerificationReport check_betti_splitting(const MonomialIdeal& whole,
                                         const MonomialIdeal& j_part,
                                         const MonomialIdeal& k_part,
                                         FieldSpec field, CheckCaps caps = {});

// Weight reduction at a non-trivial sink: multidegree transport, total
// Betti equality, the graded recursion, pdim equality, and reg drop by one.
VerificationReport check_weight_reduction(const WeightedOrientedGraph& g,
                                          int vertex, FieldSpec field,
                                          CheckCaps caps = {});

// Mapping-cone recursion at a leaf sink, plus the reg/pdim max formulas.
VerificationReport check_mapping_cone(const WeightedOrientedGraph& g,
                                      int vertex, FieldSpec field,
                                      CheckCaps caps = {});

// Sink recursion for complete underlying graphs, with the binomial term on
// the j = i + w diagonal, for i >= 2.
VerificationReport check_complete_sink(const WeightedOrientedGraph& g,
                                       FieldSpec field, CheckCaps caps = {});

// The closed-form statements: full-pdim characterization, rooted graphs,
// naturally oriented complete graphs, complete-with-sink invariants, stars
// with a center sink, naturally oriented cycles, and the path regularity
// recursion. Each sub-check gates on its own hypothesis.
VerificationReport check_closed_formulas(const WeightedOrientedGraph& g,
                                         FieldSpec field, CheckCaps caps = {});

// Every check applicable to g: oracle, closed formulas, complete sink,
// mapping cone per leaf sink, weight reduction per non-trivial sink, and
// the guaranteed sink splitting per sink. `only` filters by family name.
VerificationReport run_all_checks(const WeightedOrientedGraph& g,
                                  FieldSpec field,
                                  const std::vector<std::string>& only = {},
                                  CheckCaps caps = {});

// Structure predicates backing the hypothesis gates.
std::optional<int> rooted_root(const WeightedOrientedGraph& g);
bool underlying_complete(const WeightedOrientedGraph& g);
bool is_directed_cycle(const WeightedOrientedGraph& g);
std::optional<int> star_sink_center(const WeightedOrientedGraph& g);
std::optional<std::vector<int>> underlying_path_order(
    const WeightedOrientedGraph& g);
std::optional<int> unique_sink(const WeightedOrientedGraph& g);

std::string describe_graph(const WeightedOrientedGraph& g);

}  // namespace wobetti
