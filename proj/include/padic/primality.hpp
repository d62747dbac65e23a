#pragma once

#include <cstdint>

#include "padic/types.hpp"

namespace padic {

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Throws InvalidPrime unless p is an odd prime fitting in 64 bits.
// Primes beyond 64 bits are rejected outright.
void validate_odd_prime(const Int& p);

}  // namespace padic
