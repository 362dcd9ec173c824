#include "dynfactor/densities.hpp"

#include <cmath>
#include <numeric>
#include <thread>

#include "dynfactor/dynamics.hpp"
#include "dynfactor/error.hpp"
#include "dynfactor/fp_poly.hpp"
#include "dynfactor/primes.hpp"

namespace dynfactor {

namespace {

std::uint64_t residue(const Rational& v, std::uint64_t q) {
    BigInt den;
    if (mpz_fdiv_r_ui(den.get_mpz_t(), v.den().get_mpz_t(), q) == 0) throw DomainError("bad prime");
    BigInt num;
    mpz_fdiv_r_ui(num.get_mpz_t(), v.num().get_mpz_t(), q);
    return fp::mul_mod(num.get_ui(), fp::inv_mod(den.get_ui(), q), q);
}

bool divides_denominator(const Rational& v, std::uint64_t q) {
    return mpz_divisible_ui_p(v.den().get_mpz_t(), q) != 0;
}

// Walks the orbit of b under x^d + c in F_q, using `visited` (size >= q,
// all zero on entry and on exit) to detect the first repeated state.
std::optional<std::uint64_t> first_hit(unsigned d, std::uint64_t c, std::uint64_t b, std::uint64_t q,
                                       std::vector<char>& visited, std::vector<std::uint64_t>& trail) {
    trail.clear();
    visited[b] = 1;
    trail.push_back(b);
    std::optional<std::uint64_t> hit;
    std::uint64_t x = b;
    for (std::uint64_t n = 1; n <= q + 1; ++n) {
        x = (fp::pow_mod(x, d, q) + c) % q;
        if (x == 0) {
            hit = n;
            break;
        }
        if (visited[x]) break;
        visited[x] = 1;
        trail.push_back(x);
    }
    for (auto s : trail) visited[s] = 0;
    return hit;
}

} // namespace

std::optional<std::uint64_t> orbit_hit_mod_q(const UnicriticalMap& map, const Rational& b, std::uint64_t q) {
    if (q > kMaxScanBound || !is_prime(q)) throw DomainError("bad prime");
    if (divides_denominator(map.c, q) || divides_denominator(b, q)) throw DomainError("bad prime");
    std::vector<char> visited(q, 0);
    std::vector<std::uint64_t> trail;
    return first_hit(map.d, residue(map.c, q), residue(b, q), q, visited, trail);
}

bool is_permutation_poly(unsigned p, const Rational& c, std::uint64_t q) {
    if (!is_prime(q) || divides_denominator(c, q)) throw DomainError("bad prime");
    if (q > 10'000) return std::gcd(static_cast<std::uint64_t>(p), q - 1) == 1;
    const std::uint64_t cq = residue(c, q);
    std::vector<char> hit(q, 0);
    for (std::uint64_t x = 0; x < q; ++x) {
        std::uint64_t y = (fp::pow_mod(x, p, q) + cq) % q;
        if (hit[y]) return false;
        hit[y] = 1;
    }
    return true;
}

std::string ClassRow::label() const {
    return cls == ResidueClass::CongruentOne ? "q=1 mod p" : "q!=1 mod p";
}

OrbitDensityReport orbit_density_scan(unsigned p, const Rational& c, const Rational& b, std::uint64_t X,
                                      unsigned threads) {
    if (!is_prime(p)) throw DomainError("p must be prime");
    if (X > kMaxScanBound) throw DomainError("scan bound exceeds 10^7");
    if (threads < 1) threads = 1;
    const UnicriticalMap map(p, c);
    if (is_periodic_basepoint(map, b)) throw DomainError("basepoint periodic; prime-divisor set undefined");

    OrbitDensityReport rep;
    rep.p = p;
    rep.c = c;
    rep.b = b;
    rep.X = X;
    rep.classes[0].cls = ResidueClass::CongruentOne;
    rep.classes[1].cls = ResidueClass::NotCongruentOne;
    rep.predicted_density = Rational(BigInt(p - 2), BigInt(p - 1));

    const auto primes = primes_up_to(static_cast<std::uint32_t>(X));
    rep.prime_count = primes.size();
    std::vector<std::uint64_t> good;
    for (auto q : primes) {
        if (divides_denominator(c, q) || divides_denominator(b, q)) {
            rep.bad_primes.push_back(q);
        } else {
            good.push_back(q);
        }
    }

    struct Counts {
        std::array<std::uint64_t, 2> scanned{};
        std::array<std::uint64_t, 2> members{};
    };
    auto work = [&](std::size_t lo, std::size_t hi, Counts& out) {
        std::vector<char> visited(X + 1, 0);
        std::vector<std::uint64_t> trail;
        for (std::size_t i = lo; i < hi; ++i) {
            const std::uint64_t q = good[i];
            const int cls = (q % p == 1) ? 0 : 1;
            ++out.scanned[cls];
            if (first_hit(p, residue(c, q), residue(b, q), q, visited, trail)) ++out.members[cls];
        }
    };

    std::vector<Counts> partial(threads);
    if (threads == 1) {
        work(0, good.size(), partial[0]);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (good.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            std::size_t lo = std::min(good.size(), t * chunk);
            std::size_t hi = std::min(good.size(), lo + chunk);
            pool.emplace_back(work, lo, hi, std::ref(partial[t]));
        }
        for (auto& th : pool) th.join();
    }

    std::uint64_t total_scanned = 0, total_members = 0;
    for (int k = 0; k < 2; ++k) {
        auto& row = rep.classes[static_cast<std::size_t>(k)];
        for (const auto& part : partial) {
            row.primes_scanned += part.scanned[static_cast<std::size_t>(k)];
            row.members += part.members[static_cast<std::size_t>(k)];
        }
        row.fraction = row.primes_scanned == 0
                           ? Rational(0)
                           : Rational(BigInt(static_cast<unsigned long>(row.members)),
                                      BigInt(static_cast<unsigned long>(row.primes_scanned)));
        total_scanned += row.primes_scanned;
        total_members += row.members;
    }
    rep.overall = total_scanned == 0 ? Rational(0)
                                     : Rational(BigInt(static_cast<unsigned long>(total_members)),
                                                BigInt(static_cast<unsigned long>(total_scanned)));
    rep.overall_fraction = rep.overall.to_double();
    return rep;
}

std::uint64_t good_degree_count(std::uint64_t X, std::uint64_t M) {
    if (X < 1 || M < 1) throw DomainError("good_degree_count needs X, M >= 1");
    if (X > 0xFFFFFFFFULL) throw DomainError("scan bound too large");
    const auto spf = smallest_prime_factor_sieve(static_cast<std::uint32_t>(X));
    std::uint64_t count = 1; // d = 1
    for (std::uint64_t d = 2; d <= X; ++d) {
        if (spf[d] > M) ++count;
    }
    return count;
}

Rational mertens_product(std::uint64_t M) {
    if (M < 1) throw DomainError("Mertens product needs M >= 1");
    Rational r(1);
    for (auto p : primes_up_to(static_cast<std::uint32_t>(M))) {
        r *= Rational(BigInt(p - 1UL), BigInt(static_cast<unsigned long>(p)));
    }
    return r;
}

double mertens_asymptotic(std::uint64_t M) {
    if (M < 2) return std::nan("");
    const long double gamma = std::strtold(kEulerGammaDigits, nullptr);
    return static_cast<double>(std::exp(-gamma) / std::log(static_cast<long double>(M)));
}

DegreeDensityReport degree_condition_density(double C1, double C2, std::uint64_t X, unsigned threads) {
    if (!(C1 >= 0.0 && C1 < 1.0)) throw DomainError("C1 must lie in [0, 1)");
    if (!(C2 >= 1.0)) throw DomainError("C2 must be >= 1");
    if (X < 1 || X > 0xFFFFFFFFULL) throw DomainError("scan bound out of range");
    if (threads < 1) threads = 1;

    const auto spf = smallest_prime_factor_sieve(static_cast<std::uint32_t>(X));
    const auto phi = totient_sieve(spf);
    const auto floor_c2 = static_cast<std::uint64_t>(std::floor(C2));

    auto count_range = [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t n = 0;
        for (std::uint64_t d = lo; d < hi; ++d) {
            const bool prime_ok = d == 1 || spf[d] > floor_c2;
            const bool phi_ok = static_cast<long double>(phi[d]) > static_cast<long double>(C1) * d;
            if (prime_ok && phi_ok) ++n;
        }
        return n;
    };

    DegreeDensityReport rep;
    rep.X = X;
    rep.M = floor_c2;
    rep.C1 = C1;
    if (threads == 1) {
        rep.count = count_range(1, X + 1);
    } else {
        std::vector<std::uint64_t> partial(threads, 0);
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (X + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            std::uint64_t lo = 1 + t * chunk;
            std::uint64_t hi = std::min<std::uint64_t>(X + 1, lo + chunk);
            pool.emplace_back([&, t, lo, hi] { partial[t] = lo < hi ? count_range(lo, hi) : 0; });
        }
        for (auto& th : pool) th.join();
        for (auto v : partial) rep.count += v;
    }
    rep.density = Rational(BigInt(static_cast<unsigned long>(rep.count)), BigInt(static_cast<unsigned long>(X)));
    rep.mertens_c_M = mertens_product(std::max<std::uint64_t>(1, floor_c2));
    rep.mertens_asymptotic = mertens_asymptotic(floor_c2);
    return rep;
}

double phi_ratio_threshold(unsigned t, double eps) {
    if (t < 1 || !(eps > 0.0 && eps < 1.0)) throw DomainError("need t >= 1 and 0 < eps < 1");
    return static_cast<double>(t) / (1.0 - eps);
}

} // namespace dynfactor
