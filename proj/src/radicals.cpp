#include "dynfactor/radicals.hpp"

#include <algorithm>

#include "dynfactor/error.hpp"

namespace dynfactor {

std::vector<std::pair<std::uint64_t, unsigned>> factor_integer(std::uint64_t n) {
    if (n == 0) throw DomainError("cannot factor 0");
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        unsigned e = 0;
        while (n % q == 0) {
            n /= q;
            ++e;
        }
        out.emplace_back(q, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

ArithmeticFunctions arithmetic_functions(std::uint64_t n) {
    if (n == 0) throw DomainError("arithmetic functions need n >= 1");
    ArithmeticFunctions out;
    out.divisors = {1};
    for (auto [q, e] : factor_integer(n)) {
        if (!out.smallest_prime_factor) out.smallest_prime_factor = q;
        out.tau *= e + 1;
        std::uint64_t qe = 1;
        for (unsigned i = 1; i < e; ++i) qe *= q;
        out.phi *= qe * (q - 1);
        std::size_t base = out.divisors.size();
        std::uint64_t pw = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pw *= q;
            for (std::size_t j = 0; j < base; ++j) out.divisors.push_back(out.divisors[j] * pw);
        }
    }
    std::sort(out.divisors.begin(), out.divisors.end());
    return out;
}

RadicalDecomposition max_radical_exponent(unsigned d, const Rational& v) {
    if (d < 2) throw DomainError("degree d must be >= 2");
    if (v.is_zero()) throw DomainError("degenerate: c = α");
    auto divs = arithmetic_functions(d).divisors;
    for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
        auto m = static_cast<unsigned>(*it);
        if (auto y = rational_nth_root(-v, m)) {
            return RadicalDecomposition{m, *y, d / m, d, v};
        }
    }
    throw DomainError("unreachable: m = 1 always has a root");
}

namespace {

std::string ordinal(unsigned k) {
    std::string suffix = "th";
    if (k % 100 < 11 || k % 100 > 13) {
        if (k % 10 == 1) suffix = "st";
        if (k % 10 == 2) suffix = "nd";
        if (k % 10 == 3) suffix = "rd";
    }
    return std::to_string(k) + suffix;
}

} // namespace

BinomialVerdict binomial_irreducibility(unsigned d, const Rational& a) {
    if (d < 1) throw DomainError("degree must be >= 1");
    if (a.is_zero()) throw DomainError("binomial with a = 0 is x^d, reducible by definition");
    for (auto [p, e] : factor_integer(d)) {
        if (auto z = rational_nth_root(a, static_cast<unsigned long>(p))) {
            return {false, "a = (" + z->str() + ")^" + std::to_string(p) + " is a " +
                               ordinal(static_cast<unsigned>(p)) + " power"};
        }
    }
    if (d % 4 == 0) {
        if (auto z = rational_nth_root(-a / Rational(4), 4)) {
            return {false, "−4ℚ⁴ clause: a = -4*(" + z->str() + ")^4"};
        }
    }
    return {true, ""};
}

Rational PowerWitness::value() const {
    Rational r = z.pow(p_or_m);
    if (form == WitnessForm::FourPower && e2 == 1) r *= Rational(4);
    if (sign_e1 == 1) r = -r;
    return r;
}

std::vector<PowerWitness> find_power_witness(const Rational& v, unsigned d) {
    if (v.is_zero()) throw DomainError("power witness of zero");
    if (d < 2) throw DomainError("degree d must be >= 2");
    std::vector<PowerWitness> out;
    const int sign = v.sign() < 0 ? 1 : 0;
    for (auto [p, e] : factor_integer(d)) {
        if (auto z = rational_nth_root(v.abs(), static_cast<unsigned long>(p))) {
            out.push_back({WitnessForm::SignedPrimePower, static_cast<unsigned>(p), *z, sign, 0});
        }
    }
    if (d % 4 == 0) {
        for (auto m : arithmetic_functions(d).divisors) {
            if (m < 2) continue;
            for (int e1 = 0; e1 <= 1; ++e1) {
                for (int e2 = 0; e2 <= 1; ++e2) {
                    Rational scale(e2 == 1 ? 4 : 1);
                    if (e1 == 1) scale = -scale;
                    if (auto z = rational_nth_root(v / scale, static_cast<unsigned long>(m))) {
                        out.push_back({WitnessForm::FourPower, static_cast<unsigned>(m), *z, e1, e2});
                    }
                }
            }
        }
    }
    return out;
}

} // namespace dynfactor
