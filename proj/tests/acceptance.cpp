// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Usage: acceptance <path-to-cli-binary>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wobetti/checks.hpp"
#include "wobetti/enumerate.hpp"
#include "wobetti/graphio.hpp"
#include "wobetti/randomgen.hpp"

using namespace wobetti;

namespace {

const FieldSpec kField{32003};

struct Criterion {
  int id;
  std::string name;
  bool ok = true;
  long cases = 0;
  std::string note;
};

void require(Criterion& c, bool cond, const std::string& msg) {
  ++c.cases;
  if (!cond && c.ok) {
    c.ok = false;
    c.note = msg;
  }
}

WeightedOrientedGraph example_d() {
  return WeightedOrientedGraph::build(5, {{2, 1}, {3, 2}, {4, 3}, {4, 5}},
                                      {{2, 3}, {3, 2}});
}

std::vector<WeightedOrientedGraph> g_registry;

void remember(const WeightedOrientedGraph& g) { g_registry.push_back(g); }

std::map<std::pair<int, int>, long> graded_of(const WeightedOrientedGraph& g) {
  return graded_view(quotient_betti(edge_ideal(g), kField));
}

AlgebraicInvariants invariants(const WeightedOrientedGraph& g) {
  return invariants_of(quotient_betti(edge_ideal(g), kField));
}

bool named_check_passed(const VerificationReport& r, const std::string& id) {
  for (const CheckResult& c : r.checks) {
    if (c.id == id) return c.status == CheckStatus::pass;
  }
  return false;
}

WeightedOrientedGraph random_oriented_graph(std::mt19937_64& rng, int n,
                                            int max_w) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      switch (bounded(rng, 3)) {
        case 1: edges.emplace_back(i, j); break;
        case 2: edges.emplace_back(j, i); break;
        default: break;
      }
    }
  }
  std::map<int, int> w;
  for (int v = 1; v <= n; ++v) {
    w[v] = 1 + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(max_w)));
  }
  return WeightedOrientedGraph::build(n, edges, w);
}

// ---- criterion 1: golden tables ----------------------------------------

Criterion criterion1() {
  Criterion c{1, "golden-tables", true, 0, ""};
  WeightedOrientedGraph d = example_d();
  WeightedOrientedGraph d1 = weight_reduce(d, 2);
  WeightedOrientedGraph d2 = weight_reduce(d1, 3);
  WeightedOrientedGraph d3 = weight_reduce(d2, 2);
  for (const auto& g : {d, d1, d2, d3}) remember(g);

  auto gd = graded_of(d);
  const std::map<std::pair<int, int>, long> expected_d{
      {{0, 0}, 1}, {{1, 2}, 2}, {{1, 3}, 1}, {{1, 4}, 1}, {{2, 4}, 2},
      {{2, 5}, 2}, {{2, 6}, 2}, {{3, 6}, 1}, {{3, 7}, 3}, {{4, 8}, 1}};
  require(c, gd == expected_d, "D graded table");
  require(c,
          total_view(quotient_betti(edge_ideal(d), kField)) ==
              std::map<int, long>{{0, 1}, {1, 4}, {2, 6}, {3, 4}, {4, 1}},
          "D totals");
  AlgebraicInvariants invd = invariants(d);
  require(c, invd.pdim == 4 && invd.reg == 4, "D pdim/reg");

  require(c,
          total_view(quotient_betti(edge_ideal(d1), kField)) ==
              std::map<int, long>{{0, 1}, {1, 4}, {2, 6}, {3, 4}, {4, 1}},
          "D' totals");

  auto g2 = graded_of(d2);
  const std::map<std::pair<int, int>, long> expected_d2{
      {{0, 0}, 1}, {{1, 2}, 3}, {{1, 3}, 1}, {{2, 3}, 1}, {{2, 4}, 4},
      {{3, 5}, 2}};
  require(c, g2 == expected_d2, "D'' graded table");
  require(c,
          total_view(quotient_betti(edge_ideal(d2), kField)) ==
              std::map<int, long>{{0, 1}, {1, 4}, {2, 5}, {3, 2}},
          "D'' totals");

  require(c,
          total_view(quotient_betti(edge_ideal(d3), kField)) ==
              std::map<int, long>{{0, 1}, {1, 4}, {2, 4}, {3, 1}},
          "D''' totals");
  AlgebraicInvariants inv3 = invariants(d3);
  require(c, inv3.pdim == 3 && inv3.reg == 2, "D''' pdim/reg");
  return c;
}

// ---- criterion 3: pdim = n characterization -----------------------------

Criterion criterion3() {
  Criterion c{3, "pdim-n-characterization", true, 0, ""};
  for (int n = 1; n <= 4; ++n) {
    for_each_graph_class(n, 2, [&](const WeightedOrientedGraph& g) {
      remember(g);
      BettiTable q = quotient_betti(edge_ideal(g), kField);
      AlgebraicInvariants inv = invariants_of(q);
      const bool structure = has_full_pdim_structure(g);
      require(c, (inv.pdim == n) == structure,
              "characterization at " + describe_graph(g));
      if (structure) {
        require(c, q.at(n, g.weights()) != 0,
                "weight multidegree at " + describe_graph(g));
        require(c, inv.reg == g.weight_sum() - n,
                "regularity at " + describe_graph(g));
      }
    });
  }
  return c;
}

// ---- criterion 4: closed formulas ---------------------------------------

Criterion criterion4() {
  Criterion c{4, "closed-formulas", true, 0, ""};
  std::mt19937_64 rng(401);

  // Naturally oriented complete graphs, random weights, some weight >= 2.
  for (int n : {3, 4, 5}) {
    for (int rep = 0; rep < 10; ++rep) {
      std::vector<int> w(static_cast<std::size_t>(n), 1);
      bool heavy = false;
      while (!heavy) {
        for (int i = 1; i < n; ++i) {
          w[static_cast<std::size_t>(i)] = 1 + static_cast<int>(bounded(rng, 3));
          heavy = heavy || w[static_cast<std::size_t>(i)] >= 2;
        }
      }
      WeightedOrientedGraph g =
          make_family({FamilyKind::complete_natural, n, w, {}, {}});
      remember(g);
      AlgebraicInvariants inv = invariants(g);
      int sum = g.weight_sum();
      require(c, inv.pdim == n - 1 && inv.reg == sum - n + 1,
              "complete " + describe_graph(g));
    }
  }

  // Random rooted trees with non-root weights in {2,3}.
  for (int rep = 0; rep < 20; ++rep) {
    int n = 2 + static_cast<int>(bounded(rng, 4));
    std::vector<int> parents;
    for (int v = 2; v <= n; ++v) {
      parents.push_back(1 + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(v - 1))));
    }
    std::vector<int> w(static_cast<std::size_t>(n), 1);
    for (int v = 2; v <= n; ++v) {
      w[static_cast<std::size_t>(v - 1)] = 2 + static_cast<int>(bounded(rng, 2));
    }
    WeightedOrientedGraph g =
        make_family({FamilyKind::rooted_tree, n, w, {}, parents});
    remember(g);
    AlgebraicInvariants inv = invariants(g);
    require(c, inv.pdim == n - 1 && inv.reg == g.weight_sum() - n + 1,
            "rooted tree " + describe_graph(g));
  }

  // Stars with a center sink: linear resolutions.
  for (int n : {3, 4, 5}) {
    for (int w : {2, 3}) {
      std::vector<int> weights(static_cast<std::size_t>(n), 1);
      weights.back() = w;
      WeightedOrientedGraph g =
          make_family({FamilyKind::star_center_sink, n, weights, {}, {}});
      remember(g);
      AlgebraicInvariants inv = invariants(g);
      require(c, inv.pdim == n - 1 && inv.reg == w, "star " + describe_graph(g));
      VerificationReport r = check_closed_formulas(g, kField);
      require(c, named_check_passed(r, "closed_star_sink"),
              "star linearity " + describe_graph(g));
    }
  }
  return c;
}

// ---- criterion 5: recursions ---------------------------------------------

Criterion criterion5() {
  Criterion c{5, "recursions", true, 0, ""};
  std::mt19937_64 rng(501);

  // Complete graphs with a sink: every tournament shape, seeded weights.
  for (int n : {3, 4}) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    }
    std::set<std::vector<int>> seen;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      std::vector<std::pair<int, int>> edges;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (mask & (1u << k)) {
          edges.emplace_back(pairs[k].second, pairs[k].first);
        } else {
          edges.push_back(pairs[k]);
        }
      }
      WeightedOrientedGraph shape = WeightedOrientedGraph::build(n, edges);
      if (!unique_sink(shape)) continue;
      if (!seen.insert(canonical_key(shape)).second) continue;
      for (int rep = 0; rep < 3; ++rep) {
        std::map<int, int> w;
        for (int v = 1; v <= n; ++v) {
          w[v] = 1 + static_cast<int>(bounded(rng, 3));
        }
        WeightedOrientedGraph g = WeightedOrientedGraph::build(n, edges, w);
        remember(g);
        VerificationReport r = check_complete_sink(g, kField);
        require(c, named_check_passed(r, "complete_sink_recursion"),
                "complete sink " + describe_graph(g));
      }
    }
  }

  // Mapping cone on random graphs possessing a leaf sink.
  int found = 0;
  while (found < 30) {
    int n = 2 + static_cast<int>(bounded(rng, 5));
    WeightedOrientedGraph g = random_oriented_graph(rng, n, 3);
    auto vr = roles(g);
    std::vector<int> leaf_sinks;
    for (int v = 1; v <= n; ++v) {
      if (vr[static_cast<std::size_t>(v - 1)].is_leaf &&
          vr[static_cast<std::size_t>(v - 1)].is_sink) {
        leaf_sinks.push_back(v);
      }
    }
    if (leaf_sinks.empty()) continue;
    ++found;
    remember(g);
    for (int v : leaf_sinks) {
      VerificationReport r = check_mapping_cone(g, v, kField);
      require(c, r.overall(),
              "mapping cone " + describe_graph(g) + " at x" + std::to_string(v));
    }
  }

  // Path regularity recursion, both branches, exhaustive weights <= 3.
  long path_total = 0, path_fails = 0;
  std::string path_witness;
  for (int n = 3; n <= 6; ++n) {
    std::vector<int> w(static_cast<std::size_t>(n), 1);
    while (true) {
      WeightedOrientedGraph g = make_family({FamilyKind::path, n, w, {}, {}});
      remember(g);
      VerificationReport r = check_closed_formulas(g, kField);
      ++path_total;
      if (!named_check_passed(r, "closed_path_recursion")) {
        ++path_fails;
        if (path_witness.empty()) path_witness = describe_graph(g);
      }
      int pos = n - 1;
      while (pos >= 1 && w[static_cast<std::size_t>(pos)] == 3) {
        w[static_cast<std::size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 1) break;
      ++w[static_cast<std::size_t>(pos)];
    }
  }
  require(c, path_fails == 0,
          "path recursion fails=" + std::to_string(path_fails) + "/" +
              std::to_string(path_total) + " first=" + path_witness);
  c.cases += path_total - 1;  // the aggregated row covers every path
  return c;
}

// ---- criterion 6: weight reduction ---------------------------------------

Criterion criterion6() {
  Criterion c{6, "weight-reduction", true, 0, ""};
  const std::vector<std::string> parts{
      "weight_reduction_multidegree", "weight_reduction_totals",
      "weight_reduction_graded", "weight_reduction_pdim",
      "weight_reduction_reg_drop"};
  std::map<std::string, long> fails;
  std::map<std::string, std::string> witness;
  long reductions = 0;
  for (int n = 2; n <= 4; ++n) {
    for_each_graph_class(n, 3, [&](const WeightedOrientedGraph& g) {
      auto vr = roles(g);
      bool has_case = false;
      for (int v = 1; v <= n; ++v) {
        const VertexRole& role = vr[static_cast<std::size_t>(v - 1)];
        if (!role.is_sink || role.is_trivial) continue;
        has_case = true;
        ++reductions;
        VerificationReport r = check_weight_reduction(g, v, kField);
        for (const CheckResult& result : r.checks) {
          if (result.status != CheckStatus::fail) continue;
          ++fails[result.id];
          if (witness[result.id].empty()) {
            witness[result.id] = describe_graph(g) + " at x" + std::to_string(v);
          }
        }
      }
      if (has_case) remember(g);
    });
  }
  for (const std::string& part : parts) {
    require(c, fails[part] == 0,
            part + " fails=" + std::to_string(fails[part]) + "/" +
                std::to_string(reductions) + " first=" + witness[part]);
  }
  c.cases = reductions * static_cast<long>(parts.size());
  return c;
}

// ---- criterion 7: homology kernel properties ------------------------------

Criterion criterion7() {
  Criterion c{7, "homology-kernel", true, 0, ""};
  std::mt19937_64 rng(701);
  int produced = 0;
  while (produced < 500) {
    SimplicialComplex cx = random_complex(rng, 8);
    if (cx.is_void()) continue;
    ++produced;
    const int top = cx.dim();

    for (int d = 1; d <= top; ++d) {
      GfMatrix dd = GfMatrix::multiply(boundary_matrix(cx, d - 1, kField),
                                       boundary_matrix(cx, d, kField));
      require(c, dd.is_zero(), "boundary composition");
    }
    for (int d = 0; d <= top; ++d) {
      GfMatrix b = boundary_matrix(cx, d, kField);
      std::size_t r = b.rank();
      require(c, r + (b.cols() - r) == cx.faces_of_dim(d).size(),
              "rank-nullity");
      require(c, r <= std::min(b.rows(), b.cols()), "rank bound");
    }

    long chi_faces = -1;
    for (int d = 0; d <= top; ++d) {
      long count = static_cast<long>(cx.faces_of_dim(d).size());
      chi_faces += d % 2 == 0 ? count : -count;
    }
    long chi_hom = 0;
    for (const auto& [d, h] : reduced_homology_dims(cx, kField)) {
      chi_hom += d % 2 == 0 ? h : -h;
    }
    require(c, chi_faces == chi_hom, "Euler characteristic");

    if (cx.cone_apex().has_value()) {
      require(c, reduced_homology_dims(cx, kField).empty(), "cone acyclicity");
    }
    if (!cx.is_irrelevant()) {
      std::vector<std::vector<int>> coned = cx.facets();
      int apex = cx.universe().front();
      for (auto& f : coned) {
        if (std::find(f.begin(), f.end(), apex) == f.end()) f.push_back(apex);
      }
      SimplicialComplex cone = SimplicialComplex::from_faces(cx.universe(), coned);
      require(c, cone.cone_apex().has_value(), "cone construction");
      require(c, reduced_homology_dims(cone, kField).empty(), "cone acyclicity");
    }
  }
  return c;
}

// ---- criterion 2: oracle equivalence --------------------------------------

Criterion criterion2() {
  Criterion c{2, "oracle-equivalence", true, 0, ""};
  std::mt19937_64 rng(201);
  for (int rep = 0; rep < 200; ++rep) {
    MonomialIdeal ideal = random_monomial_ideal(rng, 5, 6, 3);
    require(c, oracle_compare(ideal, kField).overall(),
            "random ideal rep " + std::to_string(rep));
  }
  for (const WeightedOrientedGraph& g : g_registry) {
    MonomialIdeal ideal = edge_ideal(g);
    if (ideal.generators().size() > 15) continue;
    require(c, oracle_compare(ideal, kField).overall(),
            "registry graph " + describe_graph(g));
  }
  return c;
}

// ---- criterion 8: determinism and interface --------------------------------

int run_command(const std::string& cmd) {
  int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Criterion criterion8(const std::string& cli) {
  Criterion c{8, "determinism-and-interface", true, 0, ""};
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() /
                 ("wobetti-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);

  fs::path graph_file = dir / "example.graph";
  {
    std::ofstream out(graph_file);
    out << render_graph_file(example_d());
  }
  fs::path out1 = dir / "run1.txt";
  fs::path out2 = dir / "run2.txt";

  const std::string base = cli + " compute " + graph_file.string();
  require(c, run_command(base + " > " + out1.string() + " 2>/dev/null") == 0,
          "compute exit status");
  require(c, run_command(base + " > " + out2.string() + " 2>/dev/null") == 0,
          "compute exit status (second run)");
  std::string first = slurp(out1);
  require(c, !first.empty() && first == slurp(out2),
          "diagram byte-identical across runs");
  require(c, first == render_diagram(quotient_betti(edge_ideal(example_d()), kField)),
          "CLI diagram equals library rendering");

  require(c,
          run_command(cli + " verify " + graph_file.string() + " > " +
                      (dir / "verify.txt").string() + " 2>/dev/null") == 0,
          "verify exit status on a passing graph");

  fs::path bad_file = dir / "bad.graph";
  {
    std::ofstream out(bad_file);
    out << "vertices 2\nedge 1 1\n";
  }
  require(c,
          run_command(cli + " compute " + bad_file.string() + " >/dev/null 2>&1") != 0,
          "compute exit status on a bad file");
  require(c,
          run_command(cli + " verify " + bad_file.string() + " >/dev/null 2>&1") != 0,
          "verify exit status on a bad file");

  // A graph on which a claimed identity fails: verify must exit nonzero
  // and say FAIL rather than error out.
  fs::path failing_file = dir / "nodrop.graph";
  {
    std::ofstream out(failing_file);
    out << render_graph_file(
        make_family({FamilyKind::path, 4, {1, 2, 1, 2}, {}, {}}));
  }
  fs::path verify_out = dir / "verify_fail.txt";
  int failing_status = run_command(cli + " verify " + failing_file.string() +
                                   " > " + verify_out.string() + " 2>/dev/null");
  require(c, failing_status == 1, "verify exit status on a failing check");
  require(c, slurp(verify_out).find("overall FAIL") != std::string::npos,
          "verify reports overall FAIL");

  // Round trip every graph the suite touched.
  for (const WeightedOrientedGraph& g : g_registry) {
    ParsedGraph back = parse_graph_file(render_graph_file(g));
    require(c, back.graph == g, "round trip " + describe_graph(g));
  }

  fs::remove_all(dir);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-wobetti-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];

  std::vector<Criterion> results;
  auto timed = [&](Criterion (*fn)()) {
    auto start = std::chrono::steady_clock::now();
    Criterion c = fn();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    c.name += " cases=" + std::to_string(c.cases) + " time=" +
              std::to_string(ms) + "ms";
    results.push_back(std::move(c));
  };

  timed(criterion1);
  timed(criterion3);
  timed(criterion4);
  timed(criterion5);
  timed(criterion6);
  timed(criterion7);
  timed(criterion2);  // consumes the registry built by 1 and 3-6
  {
    auto start = std::chrono::steady_clock::now();
    Criterion c = criterion8(cli);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    c.name += " cases=" + std::to_string(c.cases) + " time=" +
              std::to_string(ms) + "ms";
    results.push_back(std::move(c));
  }

  std::sort(results.begin(), results.end(),
            [](const Criterion& a, const Criterion& b) { return a.id < b.id; });
  bool all_ok = true;
  for (const Criterion& c : results) {
    std::cout << "criterion " << c.id << " " << (c.ok ? "PASS" : "FAIL") << " "
              << c.name;
    if (!c.ok) std::cout << " [" << c.note << "]";
    std::cout << "\n";
    all_ok = all_ok && c.ok;
  }
  return all_ok ? 0 : 1;
}
