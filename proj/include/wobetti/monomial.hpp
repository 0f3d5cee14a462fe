#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "wobetti/graph.hpp"

namespace wobetti {

// Monomial x^b as its exponent vector b; the vector length is the ambient
// variable count.
struct Monomial {
  std::vector<int> exps;

  int total_degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

Monomial lcm(const Monomial& a, const Monomial& b);

// Monomial ideal given by its minimal generating set, kept as a
// divisibility antichain in increasing lexicographic order. The zero ideal
// has no generators; the unit ideal is generated by the all-zero monomial.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(int ambient_n) : ambient_n_(ambient_n) {}

  static MonomialIdeal from_generators(int ambient_n,
                                       std::vector<Monomial> gens);

  int ambient_n() const { return ambient_n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return !gens_.empty() && gens_.front().is_one(); }

  bool contains(const Monomial& m) const;

  // Standard monomial colon I : m, generated by lcm(g, m)/m over generators.
  MonomialIdeal colon(const Monomial& m) const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  int ambient_n_;
  std::vector<Monomial> gens_;
};

MonomialIdeal edge_ideal(const WeightedOrientedGraph& g);

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

struct LcmCap {
  std::size_t max_generators = 18;
  bool force = false;
};

// All lcms of nonempty generator subsets (the lcm lattice minus its bottom),
// computed as the pairwise-join fixpoint, in increasing lexicographic order.
std::vector<Monomial> lcm_closure(const MonomialIdeal& ideal, LcmCap cap = {});

}  // namespace wobetti
