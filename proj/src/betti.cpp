#include "wobetti/betti.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wobetti {

void BettiTable::add(int i, const std::vector<int>& multidegree, long value) {
  if (value == 0) return;
  if (value < 0) throw std::invalid_argument("negative Betti number");
  if (multidegree.size() != static_cast<std::size_t>(ambient_n_)) {
    throw std::invalid_argument("multidegree length differs from ambient n");
  }
  entries_[{i, multidegree}] += value;
}

long BettiTable::at(int i, const std::vector<int>& multidegree) const {
  auto it = entries_.find({i, multidegree});
  return it == entries_.end() ? 0 : it->second;
}

SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const Monomial& b) {
  if (ideal.is_unit()) {
    throw std::invalid_argument("upper-Koszul complex of the unit ideal");
  }
  std::vector<int> universe;
  for (std::size_t i = 0; i < b.exps.size(); ++i) {
    if (b.exps[i] >= 1) universe.push_back(static_cast<int>(i) + 1);
  }
  if (!ideal.contains(b)) return SimplicialComplex::void_complex(universe);

  const std::size_t k = universe.size();
  std::vector<std::vector<int>> faces;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    Monomial q = b;
    std::vector<int> face;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (1u << i)) {
        face.push_back(universe[i]);
        q.exps[static_cast<std::size_t>(universe[i] - 1)] -= 1;
      }
    }
    if (ideal.contains(q)) faces.push_back(std::move(face));
  }
  return SimplicialComplex::from_faces(universe, faces);
}

BettiTable multigraded_betti(const MonomialIdeal& ideal, FieldSpec field,
                             LcmCap cap) {
  if (ideal.is_zero()) {
    throw std::invalid_argument("Betti table of the zero ideal");
  }
  if (ideal.is_unit()) {
    throw std::invalid_argument("Betti table of the unit ideal");
  }
  BettiTable table(Convention::ideal, ideal.ambient_n());
  for (const Monomial& b : lcm_closure(ideal, cap)) {
    SimplicialComplex cx = upper_koszul(ideal, b);
    for (const auto& [d, h] : reduced_homology_dims(cx, field)) {
      table.add(d + 1, b.exps, h);
    }
  }

  // Self-check: the i = 0 stratum must list exactly the minimal generators.
  for (const Monomial& g : ideal.generators()) {
    if (table.at(0, g.exps) != 1) {
      throw std::logic_error("Betti table disagrees with generator list");
    }
  }
  std::size_t zero_row = 0;
  for (const auto& [key, value] : table.entries()) {
    if (key.first == 0) zero_row += static_cast<std::size_t>(value);
  }
  if (zero_row != ideal.generators().size()) {
    throw std::logic_error("spurious degree-zero Betti entries");
  }
  return table;
}

BettiTable to_quotient(const BettiTable& ideal_table) {
  if (ideal_table.convention() != Convention::ideal) {
    throw std::invalid_argument("to_quotient expects an ideal-convention table");
  }
  BettiTable out(Convention::quotient, ideal_table.ambient_n());
  out.add(0, std::vector<int>(static_cast<std::size_t>(ideal_table.ambient_n()), 0), 1);
  for (const auto& [key, value] : ideal_table.entries()) {
    out.add(key.first + 1, key.second, value);
  }
  return out;
}

BettiTable quotient_betti(const MonomialIdeal& ideal, FieldSpec field,
                          LcmCap cap) {
  if (ideal.is_zero()) {
    BettiTable empty(Convention::ideal, ideal.ambient_n());
    return to_quotient(empty);
  }
  return to_quotient(multigraded_betti(ideal, field, cap));
}

std::map<std::pair<int, int>, long> graded_view(const BettiTable& t) {
  std::map<std::pair<int, int>, long> out;
  for (const auto& [key, value] : t.entries()) {
    int degree = 0;
    for (int e : key.second) degree += e;
    out[{key.first, degree}] += value;
  }
  return out;
}

std::map<int, long> total_view(const BettiTable& t) {
  std::map<int, long> out;
  for (const auto& [key, value] : t.entries()) out[key.first] += value;
  return out;
}

AlgebraicInvariants invariants_of(const BettiTable& quotient_table) {
  if (quotient_table.convention() != Convention::quotient) {
    throw std::invalid_argument("invariants expect a quotient-convention table");
  }
  auto graded = graded_view(quotient_table);
  AlgebraicInvariants inv;
  for (const auto& [ij, value] : graded) {
    (void)value;
    inv.pdim = std::max(inv.pdim, ij.first);
    inv.reg = std::max(inv.reg, ij.second - ij.first);
  }
  for (const auto& [ij, value] : graded) {
    (void)value;
    bool extremal = true;
    for (const auto& [other, v2] : graded) {
      (void)v2;
      if (other != ij && other.first >= ij.first && other.second >= ij.second) {
        extremal = false;
        break;
      }
    }
    if (extremal) inv.extremals.push_back(ij);
  }
  inv.unique_extremal = inv.extremals.size() == 1;
  return inv;
}

std::string render_diagram(const BettiTable& quotient_table) {
  AlgebraicInvariants inv = invariants_of(quotient_table);
  auto graded = graded_view(quotient_table);
  auto totals = total_view(quotient_table);

  auto cell = [](const std::string& s) {
    std::string out = s;
    while (out.size() < 4) out.insert(out.begin(), ' ');
    return out;
  };
  auto label = [](const std::string& s) {
    std::string out = s;
    while (out.size() < 4) out.push_back(' ');
    return out;
  };

  std::ostringstream os;
  os << label("");
  for (int i = 0; i <= inv.pdim; ++i) os << cell(std::to_string(i));
  os << '\n';
  const std::size_t width = 4 * static_cast<std::size_t>(inv.pdim + 2);
  os << std::string(width, '-') << '\n';
  for (int r = 0; r <= inv.reg; ++r) {
    os << label(std::to_string(r) + ":");
    for (int i = 0; i <= inv.pdim; ++i) {
      auto it = graded.find({i, i + r});
      os << cell(it == graded.end() ? "-" : std::to_string(it->second));
    }
    os << '\n';
  }
  os << std::string(width, '-') << '\n';
  os << label("Tot:");
  for (int i = 0; i <= inv.pdim; ++i) {
    auto it = totals.find(i);
    os << cell(it == totals.end() ? "-" : std::to_string(it->second));
  }
  os << '\n';
  return os.str();
}

}  // namespace wobetti
