#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dynfactor/rational.hpp"

namespace dynfactor {

/// v = c - alpha written as v = -y^m with m | d maximal, r = d / m.
struct RadicalDecomposition {
    unsigned m = 1;
    Rational y;
    unsigned r = 1;
    unsigned d = 2;
    Rational v;
};

/// Scans the divisors of d from the largest down. Throws
/// DomainError("degenerate: c = α") when v == 0.
RadicalDecomposition max_radical_exponent(unsigned d, const Rational& v);

struct BinomialVerdict {
    bool irreducible = true;
    /// Empty when irreducible; otherwise which clause failed, e.g.
    /// "a = (3/2)^2 is a 2nd power" or "−4ℚ⁴ clause: a = -4*(1)^4".
    std::string reason;
};

/// Capelli: x^d - a is irreducible over Q iff a is not a p-th power for any
/// prime p | d, and a is not in -4Q^4 when 4 | d. Throws for a == 0.
BinomialVerdict binomial_irreducibility(unsigned d, const Rational& a);
inline bool binomial_irreducible(unsigned d, const Rational& a) { return binomial_irreducibility(d, a).irreducible; }

enum class WitnessForm {
    SignedPrimePower, // v = (-1)^sign_e1 * z^p
    FourPower,        // v = (-1)^sign_e1 * 4^e2 * z^m
};

struct PowerWitness {
    WitnessForm form = WitnessForm::SignedPrimePower;
    unsigned p_or_m = 0;
    Rational z;
    int sign_e1 = 0;
    int e2 = 0;

    /// Reassembles the right-hand side; equals v for every emitted witness.
    Rational value() const;
    friend bool operator==(const PowerWitness&, const PowerWitness&) = default;
};

/// All witnesses v = ±z^p (p | d prime, z > 0) and, when 4 | d, all
/// v = (-1)^e1 4^e2 z^m with m | d, m > 1. Empty means none exists.
std::vector<PowerWitness> find_power_witness(const Rational& v, unsigned d);

struct ArithmeticFunctions {
    std::uint64_t tau = 1;
    std::uint64_t phi = 1;
    std::vector<std::uint64_t> divisors;
    std::optional<std::uint64_t> smallest_prime_factor;
};

/// tau, phi, sorted divisors and the smallest prime factor of n >= 1, by trial division.
ArithmeticFunctions arithmetic_functions(std::uint64_t n);

/// Prime factorization of n >= 1 by trial division: (prime, exponent) pairs.
std::vector<std::pair<std::uint64_t, unsigned>> factor_integer(std::uint64_t n);

} // namespace dynfactor
