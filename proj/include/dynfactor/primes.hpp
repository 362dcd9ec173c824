#pragma once

#include <cstdint>
#include <vector>

namespace dynfactor {

/// All primes <= limit, by the sieve of Eratosthenes.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

/// spf[n] = smallest prime factor of n for 2 <= n <= limit; spf[0] = spf[1] = 0.
std::vector<std::uint32_t> smallest_prime_factor_sieve(std::uint32_t limit);

/// phi[n] for 0 <= n <= limit (phi[0] = 0), computed from an spf table.
std::vector<std::uint32_t> totient_sieve(const std::vector<std::uint32_t>& spf);

bool is_prime(std::uint64_t n);

} // namespace dynfactor
