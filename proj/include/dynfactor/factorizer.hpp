#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dynfactor/fp_poly.hpp"
#include "dynfactor/intpoly.hpp"
#include "dynfactor/qpoly.hpp"

namespace dynfactor {

/// Monic irreducible factors of f mod p, in canonical order.
struct ModPFactorization {
    std::uint64_t p = 0;
    std::vector<fp::Poly> factors;
};

/// Full factorization of f over F_p by distinct-degree then Cantor-Zassenhaus
/// equal-degree splitting. f must have p-integral coefficients, p must be an
/// odd prime not dividing lc(f), and f must stay squarefree mod p; otherwise
/// DomainError("bad prime"). The seed only changes the splitting path, never
/// the result.
ModPFactorization factor_mod_p(const QPoly& f, std::uint64_t p, std::uint64_t seed = 0);

/// Lifts a mod-p factorization of f to monic factors u_i mod p^k with
/// lc(f) * prod u_i == f (mod p^k). Coefficients are returned in the symmetric
/// range. Throws DomainError("lift failure") if the mod-p data does not
/// describe f or the factors are not pairwise coprime.
std::vector<IntPoly> hensel_lift(const IntPoly& f, const ModPFactorization& modp, unsigned k);

/// 2^deg(f) * ceil(||f||_2) * |lc(f)|: bounds every coefficient of every
/// integer factor of f.
BigInt mignotte_bound(const IntPoly& f);

struct FactorTerm {
    IntPoly poly; // primitive, positive leading coefficient, irreducible over Q
    int multiplicity = 1;

    int degree() const { return intpoly::degree(poly); }
    QPoly as_qpoly() const { return intpoly::to_qpoly(poly); }
    friend bool operator==(const FactorTerm&, const FactorTerm&) = default;
};

/// unit * prod poly_i^mult_i, factors ordered by degree then by coefficient
/// list (constant term first).
struct Factorization {
    Rational unit;
    std::vector<FactorTerm> factors;

    std::size_t distinct_count() const { return factors.size(); }
    std::size_t total_count() const;
    /// Sorted degree of each distinct factor.
    std::vector<int> degrees() const;
    QPoly expand() const;
    friend bool operator==(const Factorization&, const Factorization&) = default;
};

struct FactorOptions {
    std::uint64_t seed = 0;
    std::size_t degree_cap = kDefaultDegreeCap;
    /// Good primes tried before choosing the one with fewest modular factors.
    int candidate_primes = 5;
};

Factorization factor_over_q(const QPoly& f, const FactorOptions& options);
inline Factorization factor_over_q(const QPoly& f, std::uint64_t seed = 0) {
    return factor_over_q(f, FactorOptions{.seed = seed});
}

/// Factor-degree multiset of a squarefree integer polynomial mod p (no
/// splitting needed, distinct-degree only). Sorted ascending.
std::vector<int> modular_degree_pattern(const IntPoly& f, std::uint64_t p);

/// True when p is an odd prime of good reduction for f: p does not divide
/// lc(f) and f stays squarefree mod p.
bool is_good_prime(const IntPoly& f, std::uint64_t p);

} // namespace dynfactor
