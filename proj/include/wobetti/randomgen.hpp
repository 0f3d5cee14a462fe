#pragma once

#include <cstdint>
#include <random>

#include "wobetti/monomial.hpp"
#include "wobetti/simplicial.hpp"

namespace wobetti {

// Deterministic helpers for seeded randomized sweeps. Bounded draws go
// through bounded() so the streams do not depend on the standard library's
// distribution implementations.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  return rng() % n;
}

// Nonzero, non-unit monomial ideal with at most max_vars variables,
// max_gens generators (before minimalization) and exponents <= max_exp.
MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, int max_vars,
                                    int max_gens, int max_exp);

// Complex on up to max_vertices vertices from a handful of random faces.
SimplicialComplex random_complex(std::mt19937_64& rng, int max_vertices);

}  // namespace wobetti
