#include "dynfactor/intpoly.hpp"

#include "dynfactor/error.hpp"

namespace dynfactor::intpoly {

void trim(IntPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

BigInt content(const IntPoly& f) {
    BigInt g = 0;
    for (const auto& c : f) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& f) {
    if (f.empty()) return f;
    BigInt g = content(f);
    if (f.back() < 0) g = -g;
    IntPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) mpz_divexact(r[i].get_mpz_t(), f[i].get_mpz_t(), g.get_mpz_t());
    return r;
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

IntPoly sub(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    trim(r);
    return r;
}

IntPoly scale(const IntPoly& a, const BigInt& s) {
    if (s == 0) return {};
    IntPoly r(a);
    for (auto& c : r) c *= s;
    return r;
}

IntPoly derivative(const IntPoly& f) {
    if (f.size() <= 1) return {};
    IntPoly d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] * static_cast<unsigned long>(i);
    trim(d);
    return d;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.empty()) throw DomainError("pseudo-remainder by zero");
    IntPoly r = a;
    const int db = degree(b);
    const BigInt& lb = lc(b);
    int steps = degree(a) - db + 1;
    while (!r.empty() && degree(r) >= db) {
        BigInt lr = lc(r);
        int shift = degree(r) - db;
        for (auto& c : r) c *= lb;
        for (int j = 0; j <= db; ++j) {
            mpz_submul(r[static_cast<std::size_t>(shift + j)].get_mpz_t(), lr.get_mpz_t(),
                       b[static_cast<std::size_t>(j)].get_mpz_t());
        }
        trim(r);
        --steps;
    }
    // pad to the full lc(b)^(deg a - deg b + 1) multiplier
    if (steps > 0 && !r.empty()) {
        BigInt m;
        mpz_pow_ui(m.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(steps));
        for (auto& c : r) c *= m;
    }
    return r;
}

std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b) {
    if (b.empty()) throw DomainError("polynomial division by zero");
    if (a.empty()) return IntPoly{};
    if (degree(a) < degree(b)) return std::nullopt;
    IntPoly r = a;
    const int db = degree(b);
    IntPoly q(static_cast<std::size_t>(degree(a) - db + 1));
    for (int k = degree(a) - db; k >= 0; --k) {
        BigInt& top = r[static_cast<std::size_t>(k + db)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lc(b).get_mpz_t())) return std::nullopt;
        BigInt t;
        mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lc(b).get_mpz_t());
        for (int j = 0; j <= db; ++j) {
            mpz_submul(r[static_cast<std::size_t>(k + j)].get_mpz_t(), t.get_mpz_t(),
                       b[static_cast<std::size_t>(j)].get_mpz_t());
        }
        q[static_cast<std::size_t>(k)] = std::move(t);
    }
    for (const auto& c : r) {
        if (c != 0) return std::nullopt;
    }
    trim(q);
    return q;
}

std::pair<Rational, IntPoly> from_qpoly(const QPoly& q) {
    if (q.is_zero()) return {Rational(0), {}};
    BigInt lcm_den = 1;
    for (const auto& c : q.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
    IntPoly f;
    f.reserve(q.coeffs().size());
    for (const auto& c : q.coeffs()) {
        BigInt v;
        mpz_divexact(v.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
        f.push_back(v * c.num());
    }
    BigInt g = content(f);
    if (f.back() < 0) g = -g;
    for (auto& c : f) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return {Rational(g, lcm_den), std::move(f)};
}

QPoly to_qpoly(const IntPoly& f) {
    std::vector<Rational> c;
    c.reserve(f.size());
    for (const auto& v : f) c.emplace_back(v);
    return QPoly(std::move(c));
}

IntPoly reduce_mod(const IntPoly& f, const BigInt& m) {
    IntPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) mpz_mod(r[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
    trim(r);
    return r;
}

IntPoly symmetric_mod(const IntPoly& f, const BigInt& m) {
    IntPoly r = reduce_mod(f, m);
    BigInt half = m / 2;
    for (auto& c : r) {
        if (c > half) c -= m;
    }
    trim(r);
    return r;
}

IntPoly mul_mod(const IntPoly& a, const IntPoly& b, const BigInt& m) { return reduce_mod(mul(a, b), m); }

std::pair<IntPoly, IntPoly> divrem_monic_mod(const IntPoly& a, const IntPoly& b, const BigInt& m) {
    if (b.empty() || lc(b) != 1) throw DomainError("divisor must be monic");
    IntPoly r = reduce_mod(a, m);
    const int db = degree(b);
    if (degree(r) < db) return {IntPoly{}, r};
    IntPoly q(static_cast<std::size_t>(degree(r) - db + 1));
    for (int k = degree(r) - db; k >= 0; --k) {
        BigInt t = r[static_cast<std::size_t>(k + db)];
        mpz_mod(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
        if (t == 0) continue;
        for (int j = 0; j <= db; ++j) {
            mpz_submul(r[static_cast<std::size_t>(k + j)].get_mpz_t(), t.get_mpz_t(),
                       b[static_cast<std::size_t>(j)].get_mpz_t());
        }
        q[static_cast<std::size_t>(k)] = std::move(t);
    }
    return {reduce_mod(q, m), reduce_mod(r, m)};
}

std::string str(const IntPoly& f) { return to_qpoly(f).str(); }

} // namespace dynfactor::intpoly
