#pragma once

#include "wobetti/betti.hpp"

namespace wobetti {

struct TaylorCap {
  std::size_t max_generators = 20;
  bool force = false;
};

// Independent Betti-number oracle via the Taylor resolution: tensoring it
// with k leaves, in each multidegree b, the complex spanned by generator
// subsets S with lcm(S) = b, whose differential keeps e_S -> ±e_{S\g}
// exactly when the lcm is unchanged. beta_{i,b}(R/I) is the homology of
// that strand. Shares only the GF(p) rank kernel with the upper-Koszul
// path. Exponential in the generator count, hence the cap.
BettiTable taylor_betti(const MonomialIdeal& ideal, FieldSpec field,
                        TaylorCap cap = {});

}  // namespace wobetti
