#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dynfactor/factorizer.hpp"
#include "dynfactor/qpoly.hpp"
#include "dynfactor/radicals.hpp"

namespace dynfactor {

/// The pair (f, alpha) together with the radical decomposition of c - alpha.
struct StabilityProblem {
    UnicriticalMap map;
    Rational alpha;
    RadicalDecomposition radical;
};

/// Throws DomainError("degenerate: c = α") when c == alpha.
StabilityProblem make_problem(const UnicriticalMap& map, const Rational& alpha);

constexpr std::size_t kDefaultOrbitBitCap = 1'000'000;

/// [f(0), f^2(0), ..., f^n(0)]. Throws DomainError("orbit blowup") as soon as
/// the next iterate would need more than bit_cap bits in its numerator or
/// denominator.
std::vector<Rational> critical_orbit(const UnicriticalMap& map, unsigned n,
                                     std::size_t bit_cap = kDefaultOrbitBitCap);

bool is_fixed_point(const UnicriticalMap& map, const Rational& alpha);

/// Exact periodicity test for beta. Stops when the orbit returns to beta,
/// revisits any other point, or provably escapes: archimedean escape once
/// |x| > max(1, |c|) + 1, or q-adic escape once den(x)^d does not divide
/// den(c), after which the denominators grow without bound.
bool is_periodic_basepoint(const UnicriticalMap& map, const Rational& beta);

struct StructuralFactor {
    unsigned a = 1; // order of the roots of unity grouped in g_a
    QPoly g;        // y^phi(a) * Phi_a(x^r / y)
};

/// One g_a per divisor a | m, with prod g_a = f(x) - alpha.
std::vector<StructuralFactor> structural_factors(const StabilityProblem& problem);

struct StabilityRow {
    unsigned n = 1;
    std::size_t distinct_factor_count = 0;
    std::size_t with_multiplicity_count = 0;
    std::vector<int> degrees;
    bool structural_match = false;
};

struct StabilityReport {
    std::vector<StabilityRow> rows;
    std::uint64_t predicted = 1; // tau(m)
    unsigned requested_n = 0;
    bool truncated = false;       // rows stop early because of the degree cap
};

struct StabilityOptions {
    std::uint64_t seed = 0;
    std::size_t degree_cap = kDefaultDegreeCap;
};

StabilityReport stability_report(const StabilityProblem& problem, unsigned max_n,
                                 const StabilityOptions& options = {});

struct HypothesisConfig {
    double c1 = 0.5; // in (0, 1)
    double c2 = 1.0; // positive
};

struct HypothesisReport {
    bool cond_phi_ratio = false;
    bool cond_prime_floor = false;
    bool cond_not_fixed = false;
    bool cond_heights_positive = false;
    bool in_exclusion_set = false;
    /// m >= 2 with alpha^m = alpha - c, when in_exclusion_set.
    unsigned exclusion_exponent = 0;
    std::uint64_t predicted_factor_count = 1;

    bool all_conditions() const {
        return cond_phi_ratio && cond_prime_floor && cond_not_fixed && cond_heights_positive;
    }
};

HypothesisReport check_hypotheses(const StabilityProblem& problem, const HypothesisConfig& config);

} // namespace dynfactor
