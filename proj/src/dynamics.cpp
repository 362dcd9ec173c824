#include "dynfactor/dynamics.hpp"

#include <algorithm>
#include <set>

#include "dynfactor/error.hpp"

namespace dynfactor {

StabilityProblem make_problem(const UnicriticalMap& map, const Rational& alpha) {
    return StabilityProblem{map, alpha, max_radical_exponent(map.d, map.c - alpha)};
}

std::vector<Rational> critical_orbit(const UnicriticalMap& map, unsigned n, std::size_t bit_cap) {
    std::vector<Rational> orbit;
    orbit.reserve(n);
    Rational x(0);
    const std::size_t c_bits = std::max(bit_length(map.c.num()), bit_length(map.c.den()));
    for (unsigned i = 0; i < n; ++i) {
        // x^d + c has at most d*bits(x) + bits(c) + 1 bits per part
        std::size_t bits = std::max(bit_length(x.num()), bit_length(x.den()));
        if (bits * map.d > bit_cap || c_bits > bit_cap) throw DomainError("orbit blowup");
        x = map.apply(x);
        if (std::max(bit_length(x.num()), bit_length(x.den())) > bit_cap) throw DomainError("orbit blowup");
        orbit.push_back(x);
    }
    return orbit;
}

bool is_fixed_point(const UnicriticalMap& map, const Rational& alpha) { return map.apply(alpha) == alpha; }

bool is_periodic_basepoint(const UnicriticalMap& map, const Rational& beta) {
    const Rational radius = std::max(Rational(1), map.c.abs()) + Rational(1);
    std::set<Rational> seen;
    Rational x = beta;
    for (;;) {
        if (x.abs() > radius) return false;
        BigInt den_pow;
        mpz_pow_ui(den_pow.get_mpz_t(), x.den().get_mpz_t(), map.d);
        if (!mpz_divisible_p(map.c.den().get_mpz_t(), den_pow.get_mpz_t())) return false;
        seen.insert(x);
        x = map.apply(x);
        if (x == beta) return true;
        if (seen.contains(x)) return false;
    }
}

std::vector<StructuralFactor> structural_factors(const StabilityProblem& problem) {
    const auto& rad = problem.radical;
    if (rad.y.is_zero()) throw DomainError("degenerate: c = α");
    std::vector<StructuralFactor> out;
    for (auto a64 : arithmetic_functions(rad.m).divisors) {
        auto a = static_cast<unsigned>(a64);
        QPoly phi = cyclotomic(a);
        const auto deg = static_cast<unsigned long>(phi.degree());
        // y^phi(a) * Phi_a(x^r / y) = sum_k phi_k * y^(phi(a) - k) * x^(r k)
        std::vector<Rational> coeffs(deg * rad.r + 1);
        for (unsigned long k = 0; k <= deg; ++k) {
            coeffs[k * rad.r] = phi.coeff(k) * rad.y.pow(deg - k);
        }
        out.push_back({a, QPoly(std::move(coeffs))});
    }
    return out;
}

StabilityReport stability_report(const StabilityProblem& problem, unsigned max_n, const StabilityOptions& options) {
    if (max_n < 1) throw DomainError("stability report needs N >= 1");
    StabilityReport report;
    report.requested_n = max_n;
    report.predicted = arithmetic_functions(problem.radical.m).tau;
    const auto structural = structural_factors(problem);
    FactorOptions fopts{.seed = options.seed, .degree_cap = options.degree_cap};

    QPoly inner = QPoly::x(); // f^(n-1)
    for (unsigned n = 1; n <= max_n; ++n) {
        if (iterate_degree(problem.map.d, n) > options.degree_cap) {
            report.truncated = true;
            break;
        }
        QPoly target = iterate_shifted(problem.map, n, problem.alpha, options.degree_cap);
        Factorization fac = factor_over_q(target, fopts);

        StabilityRow row;
        row.n = n;
        row.distinct_factor_count = fac.distinct_count();
        row.with_multiplicity_count = fac.total_count();
        row.degrees = fac.degrees();

        // g_a o f^(n-1) is irreducible for every a iff the factorization is
        // exactly these tau(m) pieces, each once.
        bool match = fac.factors.size() == structural.size();
        for (const auto& t : fac.factors) match = match && t.multiplicity == 1;
        for (const auto& sf : structural) {
            if (!match) break;
            IntPoly piece = intpoly::from_qpoly(compose(sf.g, inner)).second;
            match = std::any_of(fac.factors.begin(), fac.factors.end(),
                                [&](const FactorTerm& t) { return t.poly == piece; });
        }
        row.structural_match = match;
        report.rows.push_back(std::move(row));

        inner = compose(problem.map.poly(), inner);
    }
    return report;
}

namespace {

bool height_zero(const Rational& q) { return weil_height(q).exact_log_arg == 1; }

} // namespace

HypothesisReport check_hypotheses(const StabilityProblem& problem, const HypothesisConfig& config) {
    const auto& map = problem.map;
    const auto info = arithmetic_functions(map.d);
    HypothesisReport rep;
    rep.cond_phi_ratio = static_cast<long double>(info.phi) > static_cast<long double>(config.c1) * map.d;
    rep.cond_prime_floor = info.smallest_prime_factor &&
                           static_cast<long double>(*info.smallest_prime_factor) > config.c2;
    rep.cond_not_fixed = !is_fixed_point(map, problem.alpha);
    rep.cond_heights_positive = !height_zero(map.c) && !height_zero(map.c - problem.alpha);
    rep.predicted_factor_count = arithmetic_functions(problem.radical.m).tau;

    // c = alpha - alpha^m for some m >= 2
    const Rational target = problem.alpha - map.c;
    const HeightValue h_alpha = weil_height(problem.alpha);
    const HeightValue h_target = weil_height(target);
    Rational power = problem.alpha * problem.alpha;
    BigInt power_height = h_alpha.exact_log_arg * h_alpha.exact_log_arg;
    for (unsigned m = 2;; ++m) {
        if (h_alpha.exact_log_arg == 1) {
            if (m > 64) break;
        } else if (power_height > h_target.exact_log_arg) {
            break; // H(alpha^m) = H(alpha)^m only grows
        }
        if (power == target) {
            rep.in_exclusion_set = true;
            rep.exclusion_exponent = m;
            break;
        }
        power *= problem.alpha;
        power_height *= h_alpha.exact_log_arg;
    }
    return rep;
}

} // namespace dynfactor
