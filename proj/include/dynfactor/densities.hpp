#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dynfactor/qpoly.hpp"
#include "dynfactor/rational.hpp"

namespace dynfactor {

/// Euler-Mascheroni constant to 50 digits.
inline constexpr const char* kEulerGammaDigits = "0.57721566490153286060651209008240243104215933593992";

constexpr std::uint64_t kMaxScanBound = 10'000'000;

/// Least n >= 1 with f^n(b) == 0 (mod q), or nullopt once the orbit mod q
/// revisits a state without hitting 0. q must be a prime <= 10^7 not
/// dividing the denominators of c and b; otherwise DomainError("bad prime").
std::optional<std::uint64_t> orbit_hit_mod_q(const UnicriticalMap& map, const Rational& b, std::uint64_t q);

/// Whether x -> x^p + c permutes F_q. Checked directly for q <= 10^4,
/// by gcd(p, q - 1) == 1 above that.
bool is_permutation_poly(unsigned p, const Rational& c, std::uint64_t q);

enum class ResidueClass { CongruentOne = 0, NotCongruentOne = 1 };

struct ClassRow {
    ResidueClass cls = ResidueClass::CongruentOne;
    std::uint64_t primes_scanned = 0;
    std::uint64_t members = 0;
    Rational fraction; // members / primes_scanned, 0 when nothing scanned

    std::string label() const;
};

struct OrbitDensityReport {
    unsigned p = 2;
    Rational c;
    Rational b;
    std::uint64_t X = 0;
    std::uint64_t prime_count = 0; // pi(X)
    std::array<ClassRow, 2> classes;
    std::vector<std::uint64_t> bad_primes;
    Rational overall;              // members / scanned over both classes
    double overall_fraction = 0.0;
    Rational predicted_density;    // (p - 2) / (p - 1)
};

/// Scans primes q <= X for the map x^p + c and basepoint b, splitting them by
/// q mod p (q = p falls in the "not 1" class). Throws DomainError when b is
/// periodic. threads > 1 splits the prime range; counts are summed in a
/// fixed order so the report does not depend on the thread count.
OrbitDensityReport orbit_density_scan(unsigned p, const Rational& c, const Rational& b, std::uint64_t X,
                                      unsigned threads = 1);

/// Number of 1 <= d <= X whose prime factors all exceed M (d = 1 included).
std::uint64_t good_degree_count(std::uint64_t X, std::uint64_t M);

/// prod_{p <= M} (1 - 1/p), exactly.
Rational mertens_product(std::uint64_t M);

/// e^{-gamma} / ln M; NaN for M < 2.
double mertens_asymptotic(std::uint64_t M);

struct DegreeDensityReport {
    std::uint64_t X = 0;
    std::uint64_t M = 0; // floor(C2): prime factors must exceed this
    std::optional<double> C1;
    std::uint64_t count = 0;
    Rational density;
    Rational mertens_c_M;
    double mertens_asymptotic = 0.0;
};

/// Counts d <= X with phi(d) > C1 * d and every prime factor of d above C2.
DegreeDensityReport degree_condition_density(double C1, double C2, std::uint64_t X, unsigned threads = 1);

/// t / (1 - eps): if every prime factor of d exceeds this and d has at most t
/// of them, then phi(d) / d >= (1 - 1/M)^t >= eps.
double phi_ratio_threshold(unsigned t, double eps);

} // namespace dynfactor
