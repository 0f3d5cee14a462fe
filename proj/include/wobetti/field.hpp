#pragma once

#include <cstdint>

namespace wobetti {

// Coefficient field GF(p) for all homological computations. 32003 is the
// customary default prime in computer algebra systems; it is configurable
// so that characteristic-dependent behavior can be probed rather than
// silently assumed away.
struct FieldSpec {
  std::uint32_t p = 32003;
};

bool is_prime(std::uint32_t n);

// Validates p: prime and below 2^31 (the scalar kernel's working range).
// Throws std::invalid_argument otherwise.
FieldSpec make_field(std::uint32_t p);

std::uint32_t mod_pow(std::uint32_t base, std::uint64_t exp, std::uint32_t p);

// Inverse of a mod p, for a not divisible by p.
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

}  // namespace wobetti
