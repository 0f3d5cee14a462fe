#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wobetti/betti.hpp"
#include "wobetti/checks.hpp"
#include "wobetti/enumerate.hpp"
#include "wobetti/graphio.hpp"
#include "wobetti/randomgen.hpp"

namespace {

using namespace wobetti;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

WeightedOrientedGraph load_graph(const std::string& path) {
  ParsedGraph parsed = parse_graph_file(read_file(path));
  for (const std::string& w : parsed.warnings) {
    std::cerr << "warning: " << w << "\n";
  }
  return parsed.graph;
}

std::vector<int> parse_csv_ints(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

std::string multidegree_str(const std::vector<int>& b) {
  std::string out;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(b[i]);
  }
  return out;
}

void print_table(const BettiTable& table, const std::string& view,
                 std::ostream& os) {
  if (view == "diagram") {
    os << render_diagram(table);
  } else if (view == "multigraded") {
    for (const auto& [key, value] : table.entries()) {
      os << "beta " << key.first << " " << multidegree_str(key.second) << " "
         << value << "\n";
    }
  } else if (view == "graded") {
    for (const auto& [ij, value] : graded_view(table)) {
      os << "beta " << ij.first << " " << ij.second << " " << value << "\n";
    }
  } else {
    for (const auto& [i, value] : total_view(table)) {
      os << "total " << i << " " << value << "\n";
    }
  }
}

int print_report(const VerificationReport& report, std::ostream& os) {
  os << "subject " << report.subject << " field=" << report.p << "\n";
  for (const CheckResult& c : report.checks) {
    if (c.status == CheckStatus::not_applicable) {
      os << "check " << c.id << " NOT_APPLICABLE hypothesis=" << c.witness
         << "\n";
      continue;
    }
    os << "check " << c.id << " "
       << (c.status == CheckStatus::pass ? "PASS" : "FAIL")
       << " expected=" << c.expected << " actual=" << c.actual;
    if (!c.witness.empty()) os << " witness=" << c.witness;
    if (c.informative) os << " informative";
    os << "\n";
  }
  os << "overall " << (report.overall() ? "PASS" : "FAIL") << "\n";
  return report.overall() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti tables and invariant checks for edge ideals of "
               "weighted oriented graphs"};
  app.require_subcommand(1);

  std::uint32_t field_p = 32003;
  bool force_cap = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--field", field_p, "prime modulus for the coefficient field");
    cmd->add_flag("--force-cap", force_cap, "lift the generator-count caps");
  };
  auto caps = [&]() {
    CheckCaps c;
    c.lcm.force = force_cap;
    c.taylor.force = force_cap;
    return c;
  };

  // compute
  std::string compute_file, view = "diagram", convention = "quotient";
  CLI::App* compute = app.add_subcommand("compute", "compute a Betti table");
  compute->add_option("file", compute_file, "graph file")->required();
  compute->add_option("--view", view)
      ->check(CLI::IsMember({"diagram", "graded", "multigraded", "totals"}));
  compute->add_option("--convention", convention)
      ->check(CLI::IsMember({"quotient", "ideal"}));
  add_common(compute);

  // verify
  std::string verify_file, checks_list;
  CLI::App* verify = app.add_subcommand("verify", "verify recursions and closed formulas");
  verify->add_option("file", verify_file, "graph file")->required();
  verify->add_option("--checks", checks_list,
                     "comma list: oracle,closed_formulas,complete_sink,"
                     "mapping_cone,weight_reduction,betti_splitting");
  add_common(verify);

  // family
  std::string family_kind, weights_csv, orient = "natural", parents_csv, out_file;
  int family_n = 0;
  CLI::App* family = app.add_subcommand("family", "emit a graph file for a family");
  family->add_option("kind", family_kind)
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "complete_natural",
                             "star_center_sink", "rooted_tree"}));
  family->add_option("--n", family_n, "vertex count")->required();
  family->add_option("--weights", weights_csv, "comma-separated weights");
  family->add_option("--orient", orient, "'natural' or comma list of f/b per edge");
  family->add_option("--parents", parents_csv, "rooted_tree: parents of 2..n");
  family->add_option("--out", out_file, "write to file instead of stdout");

  // oracle
  std::string oracle_file;
  int random_count = 0, max_vars = 5, max_gens = 6, max_exp = 3;
  std::uint64_t seed = 20240915;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "compare the upper-Koszul engine against the Taylor oracle");
  oracle->add_option("file", oracle_file, "graph file");
  oracle->add_option("--random", random_count, "check N seeded random ideals");
  oracle->add_option("--seed", seed, "seed for --random");
  oracle->add_option("--max-vars", max_vars);
  oracle->add_option("--max-gens", max_gens);
  oracle->add_option("--max-exp", max_exp);
  add_common(oracle);

  // explore
  ExperimentBounds bounds;
  CLI::App* explore = app.add_subcommand("explore", "exhaustive small-graph experiments");
  explore->add_option("--question", bounds.question, "underlying-graph or weight-reduction")
      ->required()
      ->check(CLI::IsMember({"underlying-graph", "weight-reduction"}));
  explore->add_option("--max-n", bounds.max_n);
  explore->add_option("--max-weight", bounds.max_weight);
  explore->add_option("--field", field_p, "prime modulus for the coefficient field");
  explore->add_flag("--force-cap", bounds.force, "lift the size guard");

  CLI11_PARSE(app, argc, argv);

  try {
    FieldSpec field = make_field(field_p);

    if (compute->parsed()) {
      if (view == "diagram" && convention != "quotient") {
        throw std::runtime_error("diagram view requires the quotient convention");
      }
      WeightedOrientedGraph g = load_graph(compute_file);
      MonomialIdeal ideal = edge_ideal(g);
      BettiTable table = [&] {
        if (convention == "quotient") return quotient_betti(ideal, field, caps().lcm);
        if (ideal.is_zero()) return BettiTable(Convention::ideal, ideal.ambient_n());
        return multigraded_betti(ideal, field, caps().lcm);
      }();
      print_table(table, view, std::cout);
      return 0;
    }

    if (verify->parsed()) {
      WeightedOrientedGraph g = load_graph(verify_file);
      std::vector<std::string> only;
      if (!checks_list.empty()) {
        const std::set<std::string> known{"oracle",       "closed_formulas",
                                          "complete_sink", "mapping_cone",
                                          "weight_reduction", "betti_splitting"};
        std::stringstream ss(checks_list);
        std::string item;
        while (std::getline(ss, item, ',')) {
          if (!known.count(item)) {
            throw std::runtime_error("unknown check family '" + item + "'");
          }
          only.push_back(item);
        }
      }
      VerificationReport report = run_all_checks(g, field, only, caps());
      return print_report(report, std::cout);
    }

    if (family->parsed()) {
      FamilySpec spec;
      const std::map<std::string, FamilyKind> kinds{
          {"path", FamilyKind::path},
          {"cycle", FamilyKind::cycle},
          {"complete_natural", FamilyKind::complete_natural},
          {"star_center_sink", FamilyKind::star_center_sink},
          {"rooted_tree", FamilyKind::rooted_tree}};
      spec.kind = kinds.at(family_kind);
      spec.n = family_n;
      if (!weights_csv.empty()) spec.weights = parse_csv_ints(weights_csv);
      if (!parents_csv.empty()) spec.parents = parse_csv_ints(parents_csv);
      if (orient != "natural") {
        std::stringstream ss(orient);
        std::string item;
        while (std::getline(ss, item, ',')) {
          if (item != "f" && item != "b") {
            throw std::runtime_error("orientation entries must be f or b");
          }
          spec.forward.push_back(item == "f");
        }
      }
      std::string text = render_graph_file(make_family(spec));
      if (out_file.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_file);
        if (!out) throw std::runtime_error("cannot write '" + out_file + "'");
        out << text;
      }
      return 0;
    }

    if (oracle->parsed()) {
      if (oracle_file.empty() && random_count == 0) {
        throw std::runtime_error("oracle needs a graph file or --random N");
      }
      bool all_pass = true;
      if (!oracle_file.empty()) {
        WeightedOrientedGraph g = load_graph(oracle_file);
        VerificationReport report = oracle_compare(edge_ideal(g), field, caps());
        all_pass = print_report(report, std::cout) == 0 && all_pass;
      }
      if (random_count > 0) {
        std::mt19937_64 rng(seed);
        long passed = 0;
        for (int k = 0; k < random_count; ++k) {
          MonomialIdeal ideal =
              random_monomial_ideal(rng, max_vars, max_gens, max_exp);
          VerificationReport report = oracle_compare(ideal, field, caps());
          if (report.overall()) {
            ++passed;
          } else {
            all_pass = false;
            print_report(report, std::cout);
          }
        }
        std::cout << "random-oracle passed=" << passed << "/" << random_count
                  << " seed=" << seed << "\n";
      }
      return all_pass ? 0 : 1;
    }

    if (explore->parsed()) {
      ExploreResult result = run_explore(bounds, field);
      std::cout << result.text;
      return result.guaranteed_case_failed ? 1 : 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
