#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "dynfactor/intpoly.hpp"

// Polynomials over F_p for word-size primes p < 2^32. Coefficients are kept in
// [0, p) with no trailing zeros.
namespace dynfactor::fp {

using Coeffs = std::vector<std::uint64_t>;

struct Poly {
    Coeffs c;
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_one() const { return c.size() == 1 && c[0] == 1; }
    std::uint64_t lc() const { return c.back(); }
    friend bool operator==(const Poly&, const Poly&) = default;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

Poly make(Coeffs c, std::uint64_t p);
Poly x_poly();
/// Reduces an integer polynomial mod p (signed coefficients allowed).
Poly from_int(const IntPoly& f, std::uint64_t p);
/// Reduces a rational polynomial mod p; every denominator must be a unit.
Poly from_qpoly(const QPoly& f, std::uint64_t p);
IntPoly to_int(const Poly& f);

Poly add(const Poly& a, const Poly& b, std::uint64_t p);
Poly sub(const Poly& a, const Poly& b, std::uint64_t p);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
Poly scale(const Poly& a, std::uint64_t s, std::uint64_t p);
Poly derivative(const Poly& a, std::uint64_t p);
Poly monic(const Poly& a, std::uint64_t p);
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b, std::uint64_t p);
inline Poly rem(const Poly& a, const Poly& b, std::uint64_t p) { return divrem(a, b, p).second; }
Poly gcd(const Poly& a, const Poly& b, std::uint64_t p);

struct ExtGcd {
    Poly g, s, t; // s*a + t*b = g, g monic
};
ExtGcd ext_gcd(const Poly& a, const Poly& b, std::uint64_t p);

/// base^e mod modulus, with e given as an arbitrary-precision exponent.
Poly pow_mod(const Poly& base, const BigInt& e, const Poly& modulus, std::uint64_t p);

bool is_squarefree(const Poly& f, std::uint64_t p);

/// Distinct-degree factorization of a monic squarefree f: pairs
/// (product of all irreducible factors of degree i, i).
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f, std::uint64_t p);

/// Cantor-Zassenhaus equal-degree splitting of a monic squarefree f whose
/// irreducible factors all have degree i. Requires odd p.
std::vector<Poly> equal_degree(const Poly& f, int i, std::uint64_t p, std::mt19937_64& rng);

/// Canonical order: by degree, then coefficients from the constant term up.
bool canonical_less(const Poly& a, const Poly& b);

} // namespace dynfactor::fp
