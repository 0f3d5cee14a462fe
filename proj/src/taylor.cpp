#include "wobetti/taylor.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace wobetti {

BettiTable taylor_betti(const MonomialIdeal& ideal, FieldSpec field,
                        TaylorCap cap) {
  if (ideal.is_unit()) {
    throw std::invalid_argument("Taylor table of the unit ideal");
  }
  const auto& gens = ideal.generators();
  const std::size_t g = gens.size();
  if (!cap.force && g > cap.max_generators) {
    throw std::runtime_error("Taylor oracle cap exceeded: " +
                             std::to_string(g) + " generators (2^" +
                             std::to_string(g) + " subsets)");
  }

  // lcm of every generator subset, deduplicated through an id table.
  std::map<Monomial, std::uint32_t> lcm_ids;
  std::vector<Monomial> lcm_of_id;
  std::vector<std::uint32_t> lcm_id(std::size_t{1} << g);
  auto intern = [&](const Monomial& m) {
    auto [it, fresh] = lcm_ids.try_emplace(m, static_cast<std::uint32_t>(lcm_of_id.size()));
    if (fresh) lcm_of_id.push_back(m);
    return it->second;
  };
  lcm_id[0] = intern(Monomial{std::vector<int>(
      static_cast<std::size_t>(ideal.ambient_n()), 0)});
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g); ++mask) {
    const int low = std::countr_zero(mask);
    const std::uint64_t rest = mask & (mask - 1);
    lcm_id[mask] = intern(
        lcm(lcm_of_id[lcm_id[rest]], gens[static_cast<std::size_t>(low)]));
  }

  // Strand bases: subsets grouped by (lcm id, cardinality).
  std::map<std::pair<std::uint32_t, int>, std::vector<std::uint64_t>> basis;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g); ++mask) {
    basis[{lcm_id[mask], std::popcount(mask)}].push_back(mask);
  }

  BettiTable table(Convention::quotient, ideal.ambient_n());
  for (std::uint32_t id = 0; id < lcm_of_id.size(); ++id) {
    // d_i maps the cardinality-i basis into the cardinality-(i-1) basis of
    // the same multidegree; coefficients vanish whenever removing a
    // generator shrinks the lcm.
    auto strand_at = [&](int card) -> const std::vector<std::uint64_t>* {
      auto it = basis.find({id, card});
      return it == basis.end() ? nullptr : &it->second;
    };
    auto differential_rank = [&](int card) -> std::size_t {
      const auto* from = strand_at(card);
      const auto* to = strand_at(card - 1);
      if (from == nullptr || to == nullptr) return 0;
      std::map<std::uint64_t, std::size_t> to_index;
      for (std::size_t i = 0; i < to->size(); ++i) to_index[(*to)[i]] = i;
      GfMatrix m(to->size(), from->size(), field);
      for (std::size_t c = 0; c < from->size(); ++c) {
        const std::uint64_t mask = (*from)[c];
        int position = 0;
        for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
          const std::uint64_t sub = mask & ~(bits & -bits);
          if (lcm_id[sub] == id) {
            m.set(to_index.at(sub), c, position % 2 == 0 ? 1 : -1);
          }
          ++position;
        }
      }
      return m.rank();
    };

    for (int card = 0; card <= static_cast<int>(g); ++card) {
      const auto* mid = strand_at(card);
      if (mid == nullptr) continue;
      const long h = static_cast<long>(mid->size()) -
                     static_cast<long>(differential_rank(card)) -
                     static_cast<long>(differential_rank(card + 1));
      if (h < 0) throw std::logic_error("Taylor strand is not a complex");
      if (h > 0) table.add(card, lcm_of_id[id].exps, h);
    }
  }
  return table;
}

}  // namespace wobetti
