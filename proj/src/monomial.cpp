#include "wobetti/monomial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace wobetti {

int Monomial::total_degree() const {
  int d = 0;
  for (int e : exps) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > other.exps[i]) return false;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.exps.size(); ++i) {
    out.exps[i] = std::max(out.exps[i], b.exps[i]);
  }
  return out;
}

MonomialIdeal MonomialIdeal::from_generators(int ambient_n,
                                             std::vector<Monomial> gens) {
  if (ambient_n < 0) throw std::invalid_argument("negative ambient dimension");
  for (const Monomial& g : gens) {
    if (g.exps.size() != static_cast<std::size_t>(ambient_n)) {
      throw std::invalid_argument("generator length differs from ambient n");
    }
    for (int e : g.exps) {
      if (e < 0) throw std::invalid_argument("negative exponent");
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<Monomial> minimal;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i != j && gens[j].divides(gens[i])) redundant = true;
    }
    if (!redundant) minimal.push_back(gens[i]);
  }
  MonomialIdeal out(ambient_n);
  out.gens_ = std::move(minimal);
  return out;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal MonomialIdeal::colon(const Monomial& m) const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const Monomial& g : gens_) {
    Monomial q = g;
    for (std::size_t i = 0; i < q.exps.size(); ++i) {
      q.exps[i] = std::max(q.exps[i] - m.exps[i], 0);
    }
    out.push_back(std::move(q));
  }
  return from_generators(ambient_n_, std::move(out));
}

MonomialIdeal edge_ideal(const WeightedOrientedGraph& g) {
  const int n = g.vertex_count();
  std::vector<Monomial> gens;
  gens.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges()) {
    Monomial m{std::vector<int>(static_cast<std::size_t>(n), 0)};
    m.exps[static_cast<std::size_t>(u - 1)] = 1;
    m.exps[static_cast<std::size_t>(v - 1)] = g.weight(v);
    gens.push_back(std::move(m));
  }
  return MonomialIdeal::from_generators(n, std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient_n() != b.ambient_n()) {
    throw std::invalid_argument("ambient dimension mismatch");
  }
  std::vector<Monomial> gens;
  for (const Monomial& ga : a.generators()) {
    for (const Monomial& gb : b.generators()) {
      gens.push_back(lcm(ga, gb));
    }
  }
  return MonomialIdeal::from_generators(a.ambient_n(), std::move(gens));
}

std::vector<Monomial> lcm_closure(const MonomialIdeal& ideal, LcmCap cap) {
  const std::size_t g = ideal.generators().size();
  if (!cap.force && g > cap.max_generators) {
    throw std::runtime_error(
        "lcm closure cap exceeded: " + std::to_string(g) + " generators (up to 2^" +
        std::to_string(g) + " subset lcms); raise the cap to proceed");
  }
  std::set<Monomial> closure(ideal.generators().begin(),
                             ideal.generators().end());
  std::vector<Monomial> frontier(closure.begin(), closure.end());
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const Monomial& m : frontier) {
      for (const Monomial& gen : ideal.generators()) {
        Monomial joined = lcm(m, gen);
        if (closure.insert(joined).second) next.push_back(std::move(joined));
      }
    }
    frontier = std::move(next);
  }
  return {closure.begin(), closure.end()};
}

}  // namespace wobetti
