#include "wobetti/randomgen.hpp"

namespace wobetti {

MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, int max_vars,
                                    int max_gens, int max_exp) {
  const int n = 1 + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(max_vars)));
  const int g = 1 + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(max_gens)));
  std::vector<Monomial> gens;
  for (int k = 0; k < g; ++k) {
    Monomial m{std::vector<int>(static_cast<std::size_t>(n), 0)};
    do {
      for (int i = 0; i < n; ++i) {
        m.exps[static_cast<std::size_t>(i)] = static_cast<int>(
            bounded(rng, static_cast<std::uint64_t>(max_exp) + 1));
      }
    } while (m.is_one());
    gens.push_back(std::move(m));
  }
  return MonomialIdeal::from_generators(n, std::move(gens));
}

SimplicialComplex random_complex(std::mt19937_64& rng, int max_vertices) {
  const int n = 1 + static_cast<int>(
                        bounded(rng, static_cast<std::uint64_t>(max_vertices)));
  std::vector<int> universe;
  for (int v = 1; v <= n; ++v) universe.push_back(v);
  const int faces = static_cast<int>(bounded(rng, 7));
  std::vector<std::vector<int>> face_list;
  for (int k = 0; k < faces; ++k) {
    std::vector<int> face;
    for (int v = 1; v <= n; ++v) {
      if (bounded(rng, 2) == 1) face.push_back(v);
    }
    face_list.push_back(std::move(face));
  }
  return SimplicialComplex::from_faces(universe, face_list);
}

}  // namespace wobetti
