#include <cmath>
#include <numeric>

#include "doctest.h"

#include "dynfactor/densities.hpp"
#include "dynfactor/dynamics.hpp"
#include "dynfactor/error.hpp"
#include "dynfactor/primes.hpp"

using namespace dynfactor;

namespace {

Rational Q(const char* s) { return Rational::parse(s); }

// Count of 1 <= d <= X coprime to every prime <= M, by inclusion-exclusion.
std::int64_t inclusion_exclusion(std::int64_t X, std::uint32_t M) {
    auto ps = primes_up_to(M);
    std::int64_t total = 0;
    for (std::uint64_t mask = 0; mask < (1ULL << ps.size()); ++mask) {
        std::int64_t prod = 1;
        int bits = 0;
        for (std::size_t i = 0; i < ps.size() && prod <= X; ++i) {
            if (mask >> i & 1ULL) {
                prod *= ps[i];
                ++bits;
            }
        }
        if (prod > X) continue;
        total += (bits % 2 ? -1 : 1) * (X / prod);
    }
    return total;
}

} // namespace

TEST_CASE("primes and sieves") {
    CHECK(primes_up_to(30) == std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(primes_up_to(100000).size() == 9592);
    auto spf = smallest_prime_factor_sieve(100);
    CHECK(spf[91] == 7);
    CHECK(spf[97] == 97);
    auto phi = totient_sieve(spf);
    CHECK(phi[1] == 1);
    CHECK(phi[36] == 12);
    CHECK(phi[97] == 96);
}

TEST_CASE("orbit_hit_mod_q examples") {
    UnicriticalMap f(3, 1);
    CHECK(orbit_hit_mod_q(f, 0, 5) == 4U);
    CHECK_FALSE(orbit_hit_mod_q(f, 0, 7));
    CHECK(orbit_hit_mod_q(f, 0, 3) == 3U);
    // v_5(f^4(0)) = v_5(730) = 1
    CHECK(valuation(critical_orbit(f, 4).back(), BigInt(5)) == 1);
    CHECK_THROWS_WITH_AS(orbit_hit_mod_q(UnicriticalMap(2, Q("1/5")), 0, 5), "bad prime", DomainError);
    CHECK_THROWS_WITH_AS(orbit_hit_mod_q(f, Q("2/7"), 7), "bad prime", DomainError);
}

TEST_CASE("first hit mod q matches exact valuations") {
    const std::vector<std::pair<UnicriticalMap, Rational>> cases = {
        {UnicriticalMap(3, 1), 0},        {UnicriticalMap(2, 1), 0},   {UnicriticalMap(2, Q("-16/9")), 0},
        {UnicriticalMap(3, Q("2/3")), 1}, {UnicriticalMap(2, -3), Q("1/2")},
    };
    for (const auto& [map, b] : cases) {
        std::vector<Rational> orbit;
        Rational x = b;
        for (int n = 0; n < 8; ++n) {
            x = map.apply(x);
            orbit.push_back(x);
        }
        for (auto q : primes_up_to(200)) {
            if (mpz_divisible_ui_p(map.c.den().get_mpz_t(), q) || mpz_divisible_ui_p(b.den().get_mpz_t(), q)) {
                continue;
            }
            std::optional<std::uint64_t> first;
            for (std::size_t n = 0; n < orbit.size() && !first; ++n) {
                if (valuation(orbit[n], BigInt(q)) > 0) first = n + 1;
            }
            auto hit = orbit_hit_mod_q(map, b, q);
            if (first) {
                CHECK(hit == *first);
            } else {
                CHECK((!hit || *hit > 8));
            }
        }
    }
}

TEST_CASE("permutation polynomials") {
    CHECK(is_permutation_poly(3, 1, 5));
    CHECK_FALSE(is_permutation_poly(3, 1, 7));
    CHECK_FALSE(is_permutation_poly(2, Q("5/3"), 11));
    CHECK(is_permutation_poly(2, 0, 2));
    CHECK(is_permutation_poly(3, 1, 100003) == (std::gcd(3ULL, 100002ULL) == 1));
    CHECK_THROWS_AS(is_permutation_poly(3, Q("1/7"), 7), DomainError);
}

TEST_CASE("direct permutation test agrees with gcd(p, q - 1) = 1") {
    for (unsigned p : {2U, 3U, 5U, 7U}) {
        for (auto q : primes_up_to(10000)) {
            CHECK(is_permutation_poly(p, 1, q) == (std::gcd<std::uint64_t>(p, q - 1) == 1));
        }
    }
}

TEST_CASE("every prime q != 1 mod p divides the orbit of 0") {
    for (auto [p, c] : std::vector<std::pair<unsigned, long>>{{3, 1}, {5, 2}, {3, -2}, {7, 3}}) {
        UnicriticalMap map(p, c);
        REQUIRE_FALSE(is_periodic_basepoint(map, 0));
        for (auto q : primes_up_to(10000)) {
            if (q % p == 1) continue;
            CHECK_MESSAGE(orbit_hit_mod_q(map, 0, q).has_value(), "p=", p, " c=", c, " q=", q);
        }
    }
}

TEST_CASE("orbit density scans") {
    auto rep = orbit_density_scan(3, 1, 0, 10000);
    CHECK(rep.classes[1].fraction == Rational(1));
    CHECK(rep.predicted_density == Q("1/2"));
    CHECK(rep.prime_count == 1229);
    CHECK(rep.classes[0].primes_scanned + rep.classes[1].primes_scanned + rep.bad_primes.size() == 1229);
    CHECK(rep.classes[0].fraction < Q("1/2"));

    auto bad = orbit_density_scan(2, Q("-16/9"), 0, 100);
    CHECK(bad.bad_primes == std::vector<std::uint64_t>{3});
    CHECK(bad.classes[0].primes_scanned + bad.classes[1].primes_scanned + 1 == bad.prime_count);
    CHECK(bad.predicted_density == Rational(0));

    CHECK_THROWS_AS(orbit_density_scan(2, -1, 0, 100), DomainError);
    CHECK_THROWS_AS(orbit_density_scan(4, 1, 0, 100), DomainError);
}

TEST_CASE("scan results do not depend on the thread count") {
    auto one = orbit_density_scan(5, 2, 0, 20000, 1);
    auto four = orbit_density_scan(5, 2, 0, 20000, 4);
    for (int k = 0; k < 2; ++k) {
        CHECK(one.classes[k].members == four.classes[k].members);
        CHECK(one.classes[k].primes_scanned == four.classes[k].primes_scanned);
    }
    CHECK(one.overall == four.overall);
    auto d1 = degree_condition_density(0.6, 3, 50000, 1);
    auto d3 = degree_condition_density(0.6, 3, 50000, 3);
    CHECK(d1.count == d3.count);
}

TEST_CASE("good degree counts") {
    CHECK(good_degree_count(100, 5) == 26);
    CHECK(good_degree_count(10, 1) == 10);
    CHECK(std::fabs(static_cast<double>(good_degree_count(1000000, 5)) / 1e6 - 4.0 / 15.0) < 0.005);
    for (std::uint32_t M : {1U, 2U, 3U, 5U, 7U, 11U, 13U}) {
        for (std::int64_t X : {1, 17, 100, 999, 10000}) {
            CHECK(static_cast<std::int64_t>(good_degree_count(static_cast<std::uint64_t>(X), M)) ==
                  inclusion_exclusion(X, M));
        }
    }
}

TEST_CASE("Mertens products") {
    CHECK(mertens_product(1) == Rational(1));
    CHECK(mertens_product(2) == Q("1/2"));
    CHECK(mertens_product(5) == Q("4/15"));
    CHECK(mertens_product(10) == Q("8/35"));
    BigInt primorial = 1;
    for (auto p : primes_up_to(60)) primorial *= p;
    CHECK(mpz_divisible_p(primorial.get_mpz_t(), mertens_product(60).den().get_mpz_t()));
    CHECK(std::isnan(mertens_asymptotic(1)));
    // e^-gamma / ln M overshoots c_M only slightly for moderate M
    CHECK(mertens_asymptotic(1000) == doctest::Approx(mertens_product(1000).to_double()).epsilon(0.01));
}

TEST_CASE("degree condition densities") {
    auto a = degree_condition_density(0, 1, 100);
    CHECK(a.density == Rational(1));

    // 1 - 1/p > 0.99 needs p > 100, so only d = 1 survives below 100
    auto b = degree_condition_density(0.99, 2, 100);
    CHECK(b.count == 1);
    CHECK(b.density == Q("1/100"));

    auto big = degree_condition_density(0.75, 5, 100000);
    auto small = degree_condition_density(0.75, 5, 10000);
    CHECK(std::fabs(big.density.to_double() - small.density.to_double()) < 0.02);
    CHECK(big.mertens_c_M == Q("4/15"));

    for (double c1 : {0.0, 0.3, 0.5, 0.7, 0.9}) {
        std::uint64_t prev = UINT64_MAX;
        for (double c2 : {1.0, 2.0, 3.0, 5.0, 7.0, 11.0}) {
            auto r = degree_condition_density(c1, c2, 5000);
            CHECK(r.count <= prev);
            prev = r.count;
            if (c1 > 0.0) CHECK(r.count <= degree_condition_density(c1 - 0.3 < 0 ? 0 : c1 - 0.3, c2, 5000).count);
        }
    }
    CHECK_THROWS_AS(degree_condition_density(1.0, 2, 10), DomainError);
    CHECK_THROWS_AS(degree_condition_density(0.5, 0.5, 10), DomainError);
}

TEST_CASE("phi ratio threshold") {
    CHECK(phi_ratio_threshold(1, 0.5) == doctest::Approx(2));
    CHECK(phi_ratio_threshold(3, 0.9) == doctest::Approx(30));
    CHECK(phi_ratio_threshold(2, 0.5) == doctest::Approx(4));
    CHECK(4.0 / 5.0 * 6.0 / 7.0 > 0.5);

    // brute force: every d <= 10^5 with at most t distinct primes, all above M, has phi(d) > eps d
    auto spf = smallest_prime_factor_sieve(100000);
    auto phi = totient_sieve(spf);
    for (auto [t, eps] : std::vector<std::pair<unsigned, double>>{{1, 0.5}, {2, 0.5}, {2, 0.8}, {3, 0.9}}) {
        const double M = phi_ratio_threshold(t, eps);
        for (std::uint32_t d = 2; d <= 100000; ++d) {
            unsigned distinct = 0;
            bool all_big = true;
            for (std::uint32_t n = d; n > 1;) {
                std::uint32_t p = spf[n];
                ++distinct;
                all_big = all_big && p > M;
                while (n % p == 0) n /= p;
            }
            if (distinct <= t && all_big) CHECK(static_cast<double>(phi[d]) >= eps * d);
        }
    }
    CHECK_THROWS_AS(phi_ratio_threshold(0, 0.5), DomainError);
}
