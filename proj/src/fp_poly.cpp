#include "dynfactor/fp_poly.hpp"

#include <algorithm>

#include "dynfactor/error.hpp"

namespace dynfactor::fp {

namespace {

void trim(Coeffs& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

std::uint64_t reduce(const BigInt& v, std::uint64_t p) {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return r.get_ui();
}

} // namespace

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1U) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1U;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw DomainError("inverse of zero mod p");
    return pow_mod(a, p - 2, p);
}

Poly make(Coeffs c, std::uint64_t p) {
    for (auto& v : c) v %= p;
    trim(c);
    return Poly{std::move(c)};
}

Poly x_poly() { return Poly{{0, 1}}; }

Poly from_int(const IntPoly& f, std::uint64_t p) {
    Coeffs c(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) c[i] = reduce(f[i], p);
    trim(c);
    return Poly{std::move(c)};
}

Poly from_qpoly(const QPoly& f, std::uint64_t p) {
    Coeffs c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Rational& q = f.coeffs()[i];
        std::uint64_t den = reduce(q.den(), p);
        if (den == 0) throw DomainError("bad prime");
        c[i] = mul_mod(reduce(q.num(), p), inv_mod(den, p), p);
    }
    trim(c);
    return Poly{std::move(c)};
}

IntPoly to_int(const Poly& f) {
    IntPoly r;
    r.reserve(f.c.size());
    for (auto v : f.c) r.emplace_back(static_cast<unsigned long>(v));
    return r;
}

Poly add(const Poly& a, const Poly& b, std::uint64_t p) {
    Coeffs c(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) c[i] = (c[i] + b.c[i]) % p;
    trim(c);
    return Poly{std::move(c)};
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
    Coeffs c(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) c[i] = (c[i] + p - b.c[i]) % p;
    trim(c);
    return Poly{std::move(c)};
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<unsigned __int128> acc(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            acc[i + j] += static_cast<unsigned __int128>(a.c[i]) * b.c[j];
        }
    }
    Coeffs c(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) c[i] = static_cast<std::uint64_t>(acc[i] % p);
    trim(c);
    return Poly{std::move(c)};
}

Poly scale(const Poly& a, std::uint64_t s, std::uint64_t p) {
    Coeffs c(a.c.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mul_mod(a.c[i], s, p);
    trim(c);
    return Poly{std::move(c)};
}

Poly derivative(const Poly& a, std::uint64_t p) {
    if (a.c.size() <= 1) return {};
    Coeffs c(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) c[i - 1] = mul_mod(a.c[i], i % p, p);
    trim(c);
    return Poly{std::move(c)};
}

Poly monic(const Poly& a, std::uint64_t p) {
    if (a.is_zero() || a.lc() == 1) return a;
    return scale(a, inv_mod(a.lc(), p), p);
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b, std::uint64_t p) {
    if (b.is_zero()) throw DomainError("polynomial division by zero mod p");
    if (a.degree() < b.degree()) return {Poly{}, a};
    Coeffs r = a.c;
    const int db = b.degree();
    Coeffs q(static_cast<std::size_t>(a.degree() - db + 1), 0);
    const std::uint64_t inv = inv_mod(b.lc(), p);
    for (int k = a.degree() - db; k >= 0; --k) {
        std::uint64_t t = mul_mod(r[static_cast<std::size_t>(k + db)], inv, p);
        q[static_cast<std::size_t>(k)] = t;
        if (t == 0) continue;
        for (int j = 0; j <= db; ++j) {
            auto& slot = r[static_cast<std::size_t>(k + j)];
            slot = (slot + p - mul_mod(t, b.c[static_cast<std::size_t>(j)], p)) % p;
        }
    }
    trim(q);
    trim(r);
    return {Poly{std::move(q)}, Poly{std::move(r)}};
}

Poly gcd(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = rem(x, y, p);
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x, p);
}

ExtGcd ext_gcd(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly r0 = a, r1 = b;
    Poly s0{{1}}, s1{};
    Poly t0{}, t1{{1}};
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1, p);
        Poly s = sub(s0, mul(q, s1, p), p);
        Poly t = sub(t0, mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    std::uint64_t inv = inv_mod(r0.lc(), p);
    return {scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)};
}

Poly pow_mod(const Poly& base, const BigInt& e, const Poly& modulus, std::uint64_t p) {
    Poly result = rem(Poly{{1}}, modulus, p);
    Poly b = rem(base, modulus, p);
    const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = rem(mul(result, result, p), modulus, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, p), modulus, p);
    }
    return result;
}

bool is_squarefree(const Poly& f, std::uint64_t p) {
    if (f.degree() <= 0) return true;
    Poly d = derivative(f, p);
    if (d.is_zero()) return false;
    return gcd(f, d, p).degree() == 0;
}

std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f_in, std::uint64_t p) {
    std::vector<std::pair<Poly, int>> out;
    Poly f = monic(f_in, p);
    const Poly x = x_poly();
    Poly h = rem(x, f, p);
    const BigInt pe(static_cast<unsigned long>(p));
    for (int i = 1; f.degree() >= 2 * i; ++i) {
        h = pow_mod(h, pe, f, p);
        Poly g = gcd(sub(h, x, p), f, p);
        if (g.degree() > 0) {
            out.emplace_back(g, i);
            f = divrem(f, g, p).first;
            h = rem(h, f, p);
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

std::vector<Poly> equal_degree(const Poly& f_in, int i, std::uint64_t p, std::mt19937_64& rng) {
    if (p % 2 == 0) throw DomainError("equal-degree splitting needs an odd prime");
    Poly f = monic(f_in, p);
    if (f.degree() <= i) return {f};
    // (p^i - 1) / 2
    BigInt e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(i));
    e = (e - 1) / 2;
    std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
    const Poly one{{1}};
    for (;;) {
        Coeffs c(static_cast<std::size_t>(f.degree()));
        for (auto& v : c) v = coeff(rng);
        Poly a = make(std::move(c), p);
        if (a.degree() <= 0) continue;
        Poly g = gcd(a, f, p);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            auto left = equal_degree(g, i, p, rng);
            auto right = equal_degree(divrem(f, g, p).first, i, p, rng);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
        Poly b = sub(pow_mod(a, e, f, p), one, p);
        g = gcd(b, f, p);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            auto left = equal_degree(g, i, p, rng);
            auto right = equal_degree(divrem(f, g, p).first, i, p, rng);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
    }
}

bool canonical_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.c < b.c;
}

} // namespace dynfactor::fp
