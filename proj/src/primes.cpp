#include "dynfactor/primes.hpp"

namespace dynfactor {

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
    std::vector<std::uint32_t> primes;
    if (limit < 2) return primes;
    std::vector<char> composite(static_cast<std::size_t>(limit) + 1, 0);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
    }
    return primes;
}

std::vector<std::uint32_t> smallest_prime_factor_sieve(std::uint32_t limit) {
    std::vector<std::uint32_t> spf(static_cast<std::size_t>(limit) + 1, 0);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf[i] != 0) continue;
        spf[i] = static_cast<std::uint32_t>(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) {
            if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
        }
    }
    return spf;
}

std::vector<std::uint32_t> totient_sieve(const std::vector<std::uint32_t>& spf) {
    std::vector<std::uint32_t> phi(spf.size(), 0);
    if (phi.size() > 1) phi[1] = 1;
    for (std::size_t n = 2; n < spf.size(); ++n) {
        std::uint32_t p = spf[n];
        std::size_t m = n / p;
        // phi(p*m) = phi(m) * p if p | m, else phi(m) * (p - 1)
        phi[n] = (m % p == 0) ? phi[m] * p : phi[m] * (p - 1);
    }
    return phi;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t q = 3; q * q <= n; q += 2) {
        if (n % q == 0) return false;
    }
    return true;
}

} // namespace dynfactor
