#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wobetti/field.hpp"
#include "wobetti/monomial.hpp"
#include "wobetti/simplicial.hpp"

namespace wobetti {

// The two Betti-number conventions in play: tables of the ideal I itself
// and tables of the quotient R/I, related by a shift in the homological
// index. Mixing them silently is the classic mistake, so the flag travels
// with the table and to_quotient is the only crossing point.
enum class Convention { ideal, quotient };

class BettiTable {
 public:
  BettiTable(Convention convention, int ambient_n)
      : convention_(convention), ambient_n_(ambient_n) {}

  Convention convention() const { return convention_; }
  int ambient_n() const { return ambient_n_; }

  void add(int i, const std::vector<int>& multidegree, long value);
  long at(int i, const std::vector<int>& multidegree) const;

  using Entries = std::map<std::pair<int, std::vector<int>>, long>;
  const Entries& entries() const { return entries_; }

  bool operator==(const BettiTable&) const = default;

 private:
  Convention convention_;
  int ambient_n_;
  Entries entries_;  // only nonzero values stored
};

// Upper-Koszul complex K_b(I): faces are the F ⊆ supp(b) with x^b/x^F in I.
// Void when x^b is not in I. The unit ideal is rejected.
SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const Monomial& b);

// Full multigraded table of I: for each b in the lcm closure,
// beta_{i,b}(I) = dim H~_{i-1}(K_b(I)). Multidegrees outside the closure
// carry no Betti numbers and are skipped.
BettiTable multigraded_betti(const MonomialIdeal& ideal, FieldSpec field,
                             LcmCap cap = {});

// Shift to the quotient convention: (i,b) -> (i+1,b), plus the rank-one
// entry at (0, 0).
BettiTable to_quotient(const BettiTable& ideal_table);

// Convenience wrapper handling the zero ideal (whose quotient table is the
// single entry at (0, 0)).
BettiTable quotient_betti(const MonomialIdeal& ideal, FieldSpec field,
                          LcmCap cap = {});

std::map<std::pair<int, int>, long> graded_view(const BettiTable& t);
std::map<int, long> total_view(const BettiTable& t);

struct AlgebraicInvariants {
  int pdim = 0;
  int reg = 0;
  std::vector<std::pair<int, int>> extremals;
  bool unique_extremal = false;
};

AlgebraicInvariants invariants_of(const BettiTable& quotient_table);

// Macaulay2-style Betti diagram, 4-wide right-aligned cells, "-" for zero.
std::string render_diagram(const BettiTable& quotient_table);

}  // namespace wobetti
