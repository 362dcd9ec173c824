#include "dynfactor/factorizer.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "dynfactor/error.hpp"

namespace dynfactor {

namespace {

bool is_small_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) return false;
    }
    return true;
}

ModPFactorization factor_mod_p_impl(const fp::Poly& f, std::uint64_t p, std::mt19937_64& rng) {
    ModPFactorization out;
    out.p = p;
    if (f.degree() <= 0) return out;
    for (auto& [part, deg] : fp::distinct_degree(f, p)) {
        for (auto& piece : fp::equal_degree(part, deg, p, rng)) out.factors.push_back(std::move(piece));
    }
    std::sort(out.factors.begin(), out.factors.end(), fp::canonical_less);
    return out;
}

BigInt ipow(std::uint64_t p, unsigned k) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, k);
    return r;
}

// One quadratic Hensel step: f == g*h (mod m), s*g + t*h == 1 (mod m), f and h
// monic. Produces the same identities modulo M, where M | m^2.
void hensel_step(const IntPoly& f, IntPoly& g, IntPoly& h, IntPoly& s, IntPoly& t, const BigInt& M) {
    using namespace intpoly;
    IntPoly e = reduce_mod(sub(f, mul(g, h)), M);
    auto [q, r] = divrem_monic_mod(mul(s, e), h, M);
    IntPoly g2 = reduce_mod(add(add(g, mul(t, e)), mul(q, g)), M);
    IntPoly h2 = reduce_mod(add(h, r), M);

    IntPoly b = reduce_mod(sub(add(mul(s, g2), mul(t, h2)), IntPoly{BigInt(1)}), M);
    auto [c, d] = divrem_monic_mod(mul(s, b), h2, M);
    IntPoly s2 = reduce_mod(sub(s, d), M);
    IntPoly t2 = reduce_mod(sub(sub(t, mul(t, b)), mul(c, g2)), M);

    g = std::move(g2);
    h = std::move(h2);
    s = std::move(s2);
    t = std::move(t2);
}

// Lifts f == g0*h0 (mod p) to f == g*h (mod P), f monic mod P.
std::pair<IntPoly, IntPoly> lift_pair(const IntPoly& f, const fp::Poly& g0, const fp::Poly& h0, std::uint64_t p,
                                      const BigInt& P) {
    auto eg = fp::ext_gcd(g0, h0, p);
    if (!eg.g.is_one()) throw DomainError("lift failure");
    IntPoly g = fp::to_int(g0), h = fp::to_int(h0), s = fp::to_int(eg.s), t = fp::to_int(eg.t);
    BigInt m(static_cast<unsigned long>(p));
    while (m < P) {
        BigInt M = m * m;
        if (M > P) M = P;
        hensel_step(intpoly::reduce_mod(f, M), g, h, s, t, M);
        m = M;
    }
    return {std::move(g), std::move(h)};
}

// Iterates over k-subsets of {0..n-1} in lexicographic order.
class Combinations {
public:
    Combinations(std::size_t n, std::size_t k) : n_(n), idx_(k) { std::iota(idx_.begin(), idx_.end(), 0); }
    const std::vector<std::size_t>& current() const { return idx_; }
    bool valid() const { return idx_.size() <= n_ && !done_; }
    void next() {
        std::size_t k = idx_.size();
        for (std::size_t i = k; i-- > 0;) {
            if (idx_[i] < n_ - k + i) {
                ++idx_[i];
                for (std::size_t j = i + 1; j < k; ++j) idx_[j] = idx_[j - 1] + 1;
                return;
            }
        }
        done_ = true;
    }

private:
    std::size_t n_;
    std::vector<std::size_t> idx_;
    bool done_ = false;
};

using DegreeSet = std::vector<char>;

DegreeSet subset_sums(const std::vector<int>& degrees, int n) {
    DegreeSet reach(static_cast<std::size_t>(n) + 1, 0);
    reach[0] = 1;
    for (int d : degrees) {
        for (int s = n - d; s >= 0; --s) {
            if (reach[static_cast<std::size_t>(s)]) reach[static_cast<std::size_t>(s + d)] = 1;
        }
    }
    return reach;
}

// Zassenhaus recombination of lifted monic factors of F modulo P.
std::vector<IntPoly> recombine(IntPoly F, std::vector<IntPoly> lifted, const BigInt& P, const DegreeSet& allowed) {
    std::vector<IntPoly> found;
    std::size_t s = 1;
    while (2 * s <= lifted.size()) {
        bool hit = false;
        for (Combinations comb(lifted.size(), s); comb.valid(); comb.next()) {
            const auto& idx = comb.current();
            int deg = 0;
            for (auto i : idx) deg += intpoly::degree(lifted[i]);
            if (!allowed[static_cast<std::size_t>(deg)]) continue;

            const BigInt& lead = intpoly::lc(F);
            if (F[0] != 0) {
                BigInt t = lead;
                for (auto i : idx) {
                    t *= lifted[i][0];
                    mpz_mod(t.get_mpz_t(), t.get_mpz_t(), P.get_mpz_t());
                }
                if (t > P / 2) t -= P;
                if (t == 0) continue;
                BigInt target = lead * F[0];
                if (!mpz_divisible_p(target.get_mpz_t(), t.get_mpz_t())) continue;
            }

            IntPoly g{lead};
            for (auto i : idx) g = intpoly::mul_mod(g, lifted[i], P);
            g = intpoly::primitive_part(intpoly::symmetric_mod(g, P));
            auto q = intpoly::exact_divide(F, g);
            if (!q) continue;

            found.push_back(std::move(g));
            F = std::move(*q);
            std::vector<IntPoly> rest;
            for (std::size_t i = 0, j = 0; i < lifted.size(); ++i) {
                if (j < idx.size() && idx[j] == i) {
                    ++j;
                } else {
                    rest.push_back(std::move(lifted[i]));
                }
            }
            lifted = std::move(rest);
            hit = true;
            break;
        }
        if (!hit) ++s;
    }
    if (intpoly::degree(F) > 0) found.push_back(intpoly::primitive_part(F));
    return found;
}

// Irreducible factors of a squarefree primitive F with deg F >= 1.
std::vector<IntPoly> factor_squarefree(IntPoly F, const FactorOptions& opts, std::mt19937_64& rng) {
    std::vector<IntPoly> out;
    if (F[0] == 0) {
        out.push_back(IntPoly{BigInt(0), BigInt(1)});
        F.erase(F.begin());
    }
    const int n = intpoly::degree(F);
    if (n <= 0) return out;
    if (n == 1) {
        out.push_back(std::move(F));
        return out;
    }

    DegreeSet allowed(static_cast<std::size_t>(n) + 1, 1);
    std::uint64_t best_p = 0;
    std::size_t best_count = 0;
    int tried = 0;
    for (std::uint64_t p = 3; tried < opts.candidate_primes; p += 2) {
        if (!is_small_prime(p) || !is_good_prime(F, p)) continue;
        ++tried;
        auto pattern = modular_degree_pattern(F, p);
        auto sums = subset_sums(pattern, n);
        for (std::size_t i = 0; i < allowed.size(); ++i) allowed[i] = allowed[i] && sums[i];
        if (best_p == 0 || pattern.size() < best_count) {
            best_p = p;
            best_count = pattern.size();
        }
    }
    const bool only_trivial = std::count(allowed.begin(), allowed.end(), 1) == 2;
    if (best_count == 1 || only_trivial) {
        out.push_back(std::move(F));
        return out;
    }

    ModPFactorization modp = factor_mod_p_impl(fp::monic(fp::from_int(F, best_p), best_p), best_p, rng);
    BigInt target = 2 * mignotte_bound(F) * ::abs(intpoly::lc(F));
    unsigned k = 1;
    BigInt P(static_cast<unsigned long>(best_p));
    while (P <= target) {
        P *= static_cast<unsigned long>(best_p);
        ++k;
    }
    auto lifted = hensel_lift(F, modp, k);
    for (auto& g : recombine(std::move(F), std::move(lifted), P, allowed)) out.push_back(std::move(g));
    return out;
}

} // namespace

bool is_good_prime(const IntPoly& f, std::uint64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    BigInt lc_mod;
    mpz_fdiv_r_ui(lc_mod.get_mpz_t(), intpoly::lc(f).get_mpz_t(), p);
    if (lc_mod == 0) return false;
    return fp::is_squarefree(fp::from_int(f, p), p);
}

std::vector<int> modular_degree_pattern(const IntPoly& f, std::uint64_t p) {
    std::vector<int> degrees;
    for (auto& [part, deg] : fp::distinct_degree(fp::monic(fp::from_int(f, p), p), p)) {
        for (int i = 0; i < part.degree() / deg; ++i) degrees.push_back(deg);
    }
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

ModPFactorization factor_mod_p(const QPoly& f, std::uint64_t p, std::uint64_t seed) {
    if (p < 3 || p % 2 == 0 || !is_small_prime(p) || p >= (1ULL << 32)) throw DomainError("bad prime");
    fp::Poly fp_f = fp::from_qpoly(f, p);
    if (fp_f.degree() != f.degree() || !fp::is_squarefree(fp_f, p)) throw DomainError("bad prime");
    std::mt19937_64 rng(seed);
    return factor_mod_p_impl(fp::monic(fp_f, p), p, rng);
}

std::vector<IntPoly> hensel_lift(const IntPoly& f, const ModPFactorization& modp, unsigned k) {
    if (k < 1 || f.empty()) throw DomainError("lift failure");
    const std::uint64_t p = modp.p;
    fp::Poly fbar = fp::from_int(f, p);
    if (fbar.degree() != intpoly::degree(f)) throw DomainError("lift failure");
    fp::Poly prod{{1}};
    for (const auto& u : modp.factors) prod = fp::mul(prod, u, p);
    if (!(prod == fp::monic(fbar, p))) throw DomainError("lift failure");

    const BigInt P = ipow(p, k);
    BigInt lc_inv;
    if (mpz_invert(lc_inv.get_mpz_t(), intpoly::lc(f).get_mpz_t(), P.get_mpz_t()) == 0) {
        throw DomainError("lift failure");
    }
    IntPoly current = intpoly::reduce_mod(intpoly::scale(f, lc_inv), P);
    std::vector<IntPoly> out;
    const auto& us = modp.factors;
    for (std::size_t i = 0; i + 1 < us.size(); ++i) {
        fp::Poly rest{{1}};
        for (std::size_t j = i + 1; j < us.size(); ++j) rest = fp::mul(rest, us[j], p);
        auto [g, h] = lift_pair(current, us[i], rest, p, P);
        out.push_back(intpoly::symmetric_mod(g, P));
        current = std::move(h);
    }
    out.push_back(intpoly::symmetric_mod(current, P));
    return out;
}

BigInt mignotte_bound(const IntPoly& f) {
    if (f.empty()) throw DomainError("Mignotte bound of zero");
    BigInt norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    if (root * root != norm2) root += 1;
    BigInt b;
    mpz_mul_2exp(b.get_mpz_t(), root.get_mpz_t(), static_cast<mp_bitcnt_t>(intpoly::degree(f)));
    return b * ::abs(intpoly::lc(f));
}

std::size_t Factorization::total_count() const {
    std::size_t n = 0;
    for (const auto& t : factors) n += static_cast<std::size_t>(t.multiplicity);
    return n;
}

std::vector<int> Factorization::degrees() const {
    std::vector<int> d;
    for (const auto& t : factors) d.push_back(t.degree());
    std::sort(d.begin(), d.end());
    return d;
}

QPoly Factorization::expand() const {
    QPoly r(unit);
    for (const auto& t : factors) r = r * t.as_qpoly().pow(static_cast<unsigned>(t.multiplicity));
    return r;
}

Factorization factor_over_q(const QPoly& f, const FactorOptions& options) {
    if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
    if (static_cast<std::size_t>(f.degree()) > options.degree_cap) throw DomainError("degree cap exceeded");

    Factorization out;
    std::mt19937_64 rng(options.seed);
    auto sqf = squarefree_decompose(f);
    for (const auto& [part, mult] : sqf.factors) {
        IntPoly P = intpoly::from_qpoly(part).second;
        for (auto& g : factor_squarefree(std::move(P), options, rng)) {
            out.factors.push_back(FactorTerm{std::move(g), mult});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const FactorTerm& a, const FactorTerm& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.poly < b.poly;
    });
    Rational lead_product(1);
    for (const auto& t : out.factors) {
        lead_product *= Rational(intpoly::lc(t.poly)).pow(static_cast<unsigned long>(t.multiplicity));
    }
    out.unit = f.leading() / lead_product;
    return out;
}

} // namespace dynfactor
