#include <random>

#include "doctest.h"

#include "dynfactor/error.hpp"
#include "dynfactor/factorizer.hpp"
#include "oracles.hpp"

using namespace dynfactor;

namespace {

QPoly P(const char* s) { return QPoly::parse(s); }
IntPoly Z(const char* s) { return intpoly::from_qpoly(QPoly::parse(s)).second; }

} // namespace

TEST_CASE("factor_mod_p examples") {
    auto a = factor_mod_p(P("x^2+1"), 5);
    REQUIRE(a.factors.size() == 2);
    CHECK(a.factors[0] == fp::Poly{{2, 1}});
    CHECK(a.factors[1] == fp::Poly{{3, 1}});

    auto b = factor_mod_p(P("x^2+1"), 3);
    REQUIRE(b.factors.size() == 1);
    CHECK(b.factors[0] == fp::Poly{{1, 0, 1}});

    auto c = factor_mod_p(P("x^3-x"), 3);
    REQUIRE(c.factors.size() == 3);
    CHECK(c.factors[0] == fp::Poly{{0, 1}});
    CHECK(c.factors[1] == fp::Poly{{1, 1}});
    CHECK(c.factors[2] == fp::Poly{{2, 1}});
}

TEST_CASE("factor_mod_p rejects bad primes") {
    CHECK_THROWS_WITH_AS(factor_mod_p(P("x^2-1"), 2), "bad prime", DomainError);
    CHECK_THROWS_WITH_AS(factor_mod_p(P("3x^2+1"), 3), "bad prime", DomainError);
    CHECK_THROWS_WITH_AS(factor_mod_p(P("x^2+2x+1"), 5), "bad prime", DomainError);
    CHECK_THROWS_WITH_AS(factor_mod_p(P("x^2+1/3"), 3), "bad prime", DomainError);
}

TEST_CASE("factor_mod_p does not depend on the seed") {
    QPoly f = P("x^12 - 3x^7 + 5x^3 - x + 11");
    auto ref = factor_mod_p(f, 13, 0);
    for (std::uint64_t seed = 1; seed < 6; ++seed) CHECK(factor_mod_p(f, 13, seed).factors == ref.factors);
}

TEST_CASE("hensel_lift examples") {
    auto exact = hensel_lift(Z("x^2-1"), factor_mod_p(P("x^2-1"), 3), 2);
    REQUIRE(exact.size() == 2);
    CHECK(exact[0] == Z("x+1"));
    CHECK(exact[1] == Z("x-1"));

    // x^2 - 7 == (x-1)(x+1) mod 3; 4^2 = 16 == 7 mod 9
    auto lifted = hensel_lift(Z("x^2-7"), factor_mod_p(P("x^2-7"), 3), 2);
    REQUIRE(lifted.size() == 2);
    CHECK(lifted[0] == Z("x+4"));
    CHECK(lifted[1] == Z("x-4"));

    auto single = hensel_lift(Z("x^2+1"), factor_mod_p(P("x^2+1"), 3), 3);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == Z("x^2+1"));
}

TEST_CASE("hensel_lift products agree modulo p^k") {
    IntPoly f = Z("6x^6 - 5x^5 + 17x^3 + x^2 - 9x + 4");
    for (std::uint64_t p : {5ULL, 7ULL, 11ULL}) {
        if (!is_good_prime(f, p)) continue;
        auto modp = factor_mod_p(intpoly::to_qpoly(f), p);
        auto lifted = hensel_lift(f, modp, 6);
        BigInt P;
        mpz_ui_pow_ui(P.get_mpz_t(), p, 6);
        IntPoly prod{intpoly::lc(f)};
        for (std::size_t i = 0; i < lifted.size(); ++i) {
            prod = intpoly::mul_mod(prod, lifted[i], P);
            CHECK(fp::from_int(lifted[i], p) == modp.factors[i]);
        }
        CHECK(prod == intpoly::reduce_mod(f, P));
    }
}

TEST_CASE("hensel_lift rejects inconsistent data") {
    auto modp = factor_mod_p(P("x^2-1"), 3);
    CHECK_THROWS_WITH_AS(hensel_lift(Z("x^2+1"), modp, 2), "lift failure", DomainError);
}

TEST_CASE("mignotte bound") {
    CHECK(mignotte_bound(Z("9x^2-16")) == 684);
    CHECK(mignotte_bound(Z("x")) == 2);
    CHECK(mignotte_bound(Z("x^2-1")) == 8);
}

TEST_CASE("factor_over_q examples") {
    auto a = factor_over_q(P("x^2-16/9"));
    CHECK(a.unit == Rational::parse("1/9"));
    REQUIRE(a.factors.size() == 2);
    CHECK(a.factors[0].poly == Z("3x-4"));
    CHECK(a.factors[1].poly == Z("3x+4"));

    auto b = factor_over_q(P("x^4+4"));
    REQUIRE(b.factors.size() == 2);
    CHECK(b.factors[0].poly == Z("x^2-2x+2"));
    CHECK(b.factors[1].poly == Z("x^2+2x+2"));
    CHECK(b.expand() == P("x^4+4"));

    auto c = factor_over_q(P("x^4+1"));
    CHECK(c.factors.size() == 1);
    CHECK(oracle::factor_small(Z("x^4+1")).size() == 1);

    auto d = factor_over_q(P("x^4-2x^2"));
    REQUIRE(d.factors.size() == 2);
    CHECK(d.factors[0] == FactorTerm{Z("x"), 2});
    CHECK(d.factors[1] == FactorTerm{Z("x^2-2"), 1});

    auto k = factor_over_q(P("-7/2"));
    CHECK(k.factors.empty());
    CHECK(k.unit == Rational::parse("-7/2"));

    CHECK_THROWS_AS(factor_over_q(QPoly()), DomainError);
    CHECK_THROWS_WITH_AS(factor_over_q(P("x^20+1"), FactorOptions{.degree_cap = 10}), "degree cap exceeded",
                         DomainError);
}

TEST_CASE("third iterate of x^2 - 16/9 has four factors") {
    QPoly f = iterate_shifted(UnicriticalMap(2, Rational::parse("-16/9")), 3, 0);
    auto fac = factor_over_q(f);
    CHECK(fac.distinct_count() == 4);
    CHECK(fac.expand() == f);
}

TEST_CASE("products with hidden structure") {
    // Swinnerton-Dyer style: many modular factors, irreducible over Q
    QPoly sd = P("x^8 - 40x^6 + 352x^4 - 960x^2 + 576");
    auto fac = factor_over_q(sd);
    CHECK(fac.distinct_count() == 1);

    QPoly prod = P("x^4+x+1") * P("2x^3-5x+7") * P("x^2-3").pow(2) * P("x");
    auto g = factor_over_q(prod);
    CHECK(g.expand() == prod);
    CHECK(g.distinct_count() == 4);
    CHECK(g.total_count() == 5);
}

TEST_CASE("factorization invariants on random inputs") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> coef(-9, 9);
    auto random_int_poly = [&](int deg) {
        IntPoly f(static_cast<std::size_t>(deg) + 1);
        for (auto& c : f) c = coef(rng);
        if (f.back() == 0) f.back() = 1;
        return f;
    };
    for (int trial = 0; trial < 40; ++trial) {
        IntPoly a = random_int_poly(1 + trial % 4), b = random_int_poly(1 + trial % 3), c = random_int_poly(2);
        QPoly f = intpoly::to_qpoly(intpoly::mul(intpoly::mul(a, b), intpoly::mul(c, c)));
        f = f * Rational::parse("3/5");
        auto fac = factor_over_q(f, static_cast<std::uint64_t>(trial));

        // re-multiplication
        CHECK(fac.expand() == f);
        // determinism across seeds
        CHECK(factor_over_q(f, 999) == fac);
        // pairwise coprime, each factor idempotent
        for (std::size_t i = 0; i < fac.factors.size(); ++i) {
            auto again = factor_over_q(fac.factors[i].as_qpoly());
            REQUIRE(again.factors.size() == 1);
            CHECK(again.factors[0] == FactorTerm{fac.factors[i].poly, 1});
            for (std::size_t j = i + 1; j < fac.factors.size(); ++j) {
                CHECK(gcd(fac.factors[i].as_qpoly(), fac.factors[j].as_qpoly()).degree() == 0);
            }
        }
        // modular degree patterns of the squarefree part split along the factors
        IntPoly sqf{BigInt(1)};
        for (const auto& t : fac.factors) sqf = intpoly::mul(sqf, t.poly);
        int good = 0;
        for (std::uint64_t p = 3; good < 3 && p < 200; p += 2) {
            bool prime = true;
            for (std::uint64_t q = 3; q * q <= p; q += 2) prime = prime && p % q != 0;
            if (!prime || !is_good_prime(sqf, p)) continue;
            ++good;
            std::vector<int> joined;
            for (const auto& t : fac.factors) {
                auto pat = modular_degree_pattern(t.poly, p);
                joined.insert(joined.end(), pat.begin(), pat.end());
            }
            std::sort(joined.begin(), joined.end());
            CHECK(joined == modular_degree_pattern(sqf, p));
        }
    }
}

TEST_CASE("oracle equivalence on a small sample") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long> coef(-20, 20);
    for (int trial = 0; trial < 400; ++trial) {
        IntPoly f(static_cast<std::size_t>(1 + trial % 4) + 1);
        for (auto& c : f) c = coef(rng);
        if (f.back() == 0) f.back() = 1;
        intpoly::trim(f);
        auto fac = factor_over_q(intpoly::to_qpoly(f));
        CHECK(oracle::flatten(fac) == oracle::factor_small(f));
    }
}
