#include "wobetti/field.hpp"

#include <stdexcept>
#include <string>

namespace wobetti {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec make_field(std::uint32_t p) {
  if (p >= (1u << 31)) {
    throw std::invalid_argument("field modulus " + std::to_string(p) +
                                " exceeds 2^31-1");
  }
  if (!is_prime(p)) {
    throw std::invalid_argument("field modulus " + std::to_string(p) +
                                " is not prime");
  }
  return FieldSpec{p};
}

std::uint32_t mod_pow(std::uint32_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  std::uint64_t b = base % p;
  while (exp > 0) {
    if (exp & 1) result = result * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero mod p");
  return mod_pow(a % p, p - 2, p);
}

}  // namespace wobetti
