// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "dynfactor/densities.hpp"
#include "dynfactor/dynamics.hpp"
#include "dynfactor/error.hpp"
#include "dynfactor/factorizer.hpp"
#include "dynfactor/radicals.hpp"
#include "dynfactor/report_json.hpp"

#include "oracles.hpp"

using namespace dynfactor;
using report::Json;

namespace {

// Tolerances and time budgets, in seconds.
constexpr double kBudget1 = 10, kBudget2 = 60, kBudget2Stretch = 300, kBudget3 = 30, kBudget4 = 120,
                 kBudget5 = 120, kBudget6 = 60, kBudget7 = 300, kBudget8 = 10;
constexpr double kDensityTol7 = 0.05;
constexpr double kMertensTol8 = 0.005;
constexpr std::uint64_t kSeed = 0;

// Fraction of orbit-dividing primes q = 1 mod 5 for x^5 + 2 at X = 10^4,
// measured once and frozen here.
const Rational kCalibratedClass1Fraction7 = Rational(BigInt(3), BigInt(306));

struct Outcome {
    bool pass = true;
    std::string detail;
    Json artifact; // compared byte-for-byte on rerun
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Outcome criterion1() {
    auto t0 = Clock::now();
    auto problem = make_problem(UnicriticalMap(2, Rational::parse("-16/9")), 0);
    auto rep = stability_report(problem, 4, {.seed = kSeed});
    double dt = seconds_since(t0);
    Outcome o;
    o.artifact = report::to_json(problem, rep);
    o.pass = rep.rows.size() == 4 && rep.rows[2].distinct_factor_count == 4 && rep.rows[3].distinct_factor_count == 4 &&
             dt < kBudget1;
    std::string counts;
    for (const auto& row : rep.rows) counts += std::to_string(row.distinct_factor_count) + " ";
    o.detail = "counts n=1..4: " + counts + "time " + report::fixed6(dt).substr(0, 5) + "s";
    return o;
}

Outcome criterion2() {
    auto t0 = Clock::now();
    auto problem = make_problem(UnicriticalMap(5, -32), 0);
    auto rep = stability_report(problem, 2, {.seed = kSeed});
    double dt = seconds_since(t0);
    Outcome o;
    o.artifact = report::to_json(problem, rep);
    o.pass = rep.rows.size() == 2 && dt < kBudget2;
    for (const auto& row : rep.rows) o.pass = o.pass && row.distinct_factor_count == 2 && row.structural_match;
    o.detail = "N=2 in " + report::fixed6(dt).substr(0, 5) + "s";

    // stretch goal, reported but not blocking
    auto t1 = Clock::now();
    auto stretch = stability_report(problem, 3, {.seed = kSeed});
    double ds = seconds_since(t1);
    bool stretch_ok = stretch.rows.size() == 3 && stretch.rows[2].distinct_factor_count == 2 && ds < kBudget2Stretch;
    o.detail += std::string("; stretch N=3 ") + (stretch_ok ? "ok" : "missed") + " in " +
                report::fixed6(ds).substr(0, 5) + "s";
    return o;
}

Outcome criterion3() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(kSeed + 3);
    int failures = 0;
    Json digest = Json::array();
    for (int trial = 0; trial < 100; ++trial) {
        unsigned d = 2 + static_cast<unsigned>(rng() % 9);
        auto divs = arithmetic_functions(d).divisors;
        auto m = static_cast<unsigned>(divs[rng() % divs.size()]);
        Rational y(BigInt(static_cast<long>(rng() % 5) + 1), BigInt(static_cast<long>(rng() % 3) + 1));
        if (rng() % 2) y = -y;
        Rational alpha(BigInt(static_cast<long>(rng() % 7) - 3), BigInt(static_cast<long>(rng() % 2) + 1));
        auto problem = make_problem(UnicriticalMap(d, alpha - y.pow(m)), alpha);
        auto parts = structural_factors(problem);
        const QPoly f = problem.map.poly();
        for (unsigned n : {1U, 2U}) {
            QPoly inner = n == 1 ? QPoly::x() : f;
            QPoly prod(Rational(1));
            for (const auto& part : parts) prod = prod * compose(part.g, inner);
            if (!(prod == iterate_shifted(problem.map, n, alpha))) ++failures;
        }
        digest.push_back({d, problem.radical.m, parts.size()});
    }
    double dt = seconds_since(t0);
    Outcome o;
    o.artifact = digest;
    o.pass = failures == 0 && dt < kBudget3;
    o.detail = std::to_string(failures) + " failures in 200 identities, " + report::fixed6(dt).substr(0, 5) + "s";
    return o;
}

Outcome criterion4() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(kSeed + 4);
    std::uniform_int_distribution<long> coef(-20, 20);
    int mismatches = 0;
    std::uint64_t total_factors = 0;
    for (int trial = 0; trial < 5000; ++trial) {
        IntPoly f(static_cast<std::size_t>(1 + trial % 4) + 1);
        for (auto& c : f) c = coef(rng);
        while (f.back() == 0) f.back() = coef(rng);
        auto fac = factor_over_q(intpoly::to_qpoly(f), FactorOptions{.seed = kSeed});
        auto got = oracle::flatten(fac);
        if (got != oracle::factor_small(f)) ++mismatches;
        total_factors += got.size();
    }
    double dt = seconds_since(t0);
    Outcome o;
    o.artifact = {{"mismatches", mismatches}, {"factors", total_factors}};
    o.pass = mismatches == 0 && dt < kBudget4;
    o.detail = std::to_string(mismatches) + " mismatches over 5000, " + report::fixed6(dt).substr(0, 5) + "s";
    return o;
}

Outcome criterion5() {
    auto t0 = Clock::now();
    int disagreements = 0, reducible = 0;
    for (unsigned d = 1; d <= 8; ++d) {
        for (long a = -50; a <= 50; ++a) {
            if (a == 0) continue;
            QPoly f = QPoly::monomial(Rational(1), d) - QPoly(Rational(a));
            bool irr = factor_over_q(f, FactorOptions{.seed = kSeed}).total_count() == 1;
            if (irr != binomial_irreducible(d, Rational(a))) ++disagreements;
            reducible += irr ? 0 : 1;
        }
    }
    double dt = seconds_since(t0);
    Outcome o;
    o.artifact = {{"disagreements", disagreements}, {"reducible", reducible}};
    o.pass = disagreements == 0 && dt < kBudget5;
    o.detail = std::to_string(disagreements) + " disagreements over 800 binomials, " +
               report::fixed6(dt).substr(0, 5) + "s";
    return o;
}

Outcome criterion6() {
    auto t0 = Clock::now();
    auto rep = orbit_density_scan(3, 1, 0, 10000, 1);
    double dt = seconds_since(t0);
    const auto& cls = rep.classes[1];
    Outcome o;
    o.artifact = report::to_json(rep);
    o.pass = cls.fraction == Rational(1) && cls.members == cls.primes_scanned && dt < kBudget6;
    o.detail = "class " + cls.label() + ": " + std::to_string(cls.members) + "/" +
               std::to_string(cls.primes_scanned) + ", " + report::fixed6(dt).substr(0, 5) + "s";
    return o;
}

Outcome criterion7() {
    auto t0 = Clock::now();
    auto calib = orbit_density_scan(5, 2, 0, 10000, 1);
    auto rep = orbit_density_scan(5, 2, 0, 100000, 1);
    double dt = seconds_since(t0);
    const double overall = rep.overall.to_double();
    Outcome o;
    o.artifact = {report::to_json(calib), report::to_json(rep)};
    bool calib_ok = calib.classes[0].fraction == kCalibratedClass1Fraction7 &&
                    calib.classes[0].fraction < Rational(BigInt(1), BigInt(2));
    o.pass = calib_ok && std::fabs(overall - 0.75) <= kDensityTol7 && dt < kBudget7;
    o.detail = "calibration q=1 class " + calib.classes[0].fraction.str() + (calib_ok ? " (matches fixture)" : " (drift)") +
               "; overall at 1e5 " + report::fixed6(overall) + " vs 0.75, " + report::fixed6(dt).substr(0, 5) + "s";
    return o;
}

Outcome criterion8() {
    auto t0 = Clock::now();
    auto count = good_degree_count(1000000, 5);
    const double density = static_cast<double>(count) / 1e6;
    // inclusion-exclusion over {2, 3, 5} at X = 10^4
    std::int64_t ie = 0;
    const long ps[3] = {2, 3, 5};
    for (int mask = 0; mask < 8; ++mask) {
        long prod = 1;
        int bits = 0;
        for (int i = 0; i < 3; ++i) {
            if (mask >> i & 1) {
                prod *= ps[i];
                ++bits;
            }
        }
        ie += (bits % 2 ? -1 : 1) * (10000 / prod);
    }
    auto small = good_degree_count(10000, 5);
    double dt = seconds_since(t0);
    Outcome o;
    o.artifact = {{"count_1e6", count}, {"count_1e4", small}, {"ie_1e4", ie}};
    o.pass = std::fabs(density - 4.0 / 15.0) <= kMertensTol8 && static_cast<std::int64_t>(small) == ie &&
             dt < kBudget8;
    o.detail = "density " + report::fixed6(density) + " vs 4/15; count(1e4) " + std::to_string(small) + " vs " +
               std::to_string(ie) + ", " + report::fixed6(dt).substr(0, 5) + "s";
    return o;
}

Outcome criterion9() {
    std::mt19937_64 rng(kSeed + 9);
    int violations = 0, blowups = 0, checked = 0;
    for (int trial = 0; trial < 200;) {
        unsigned d = 4 + static_cast<unsigned>(rng() % 6);
        // heights spread over several scales so that large d overflows the orbit bit cap
        const long scale = static_cast<long>(std::pow(10.0, 1 + static_cast<double>(rng() % 6)));
        Rational c(BigInt(static_cast<long>(rng() % static_cast<std::uint64_t>(2 * scale + 1)) - scale),
                   BigInt(static_cast<long>(rng() % static_cast<std::uint64_t>(scale)) + 1));
        const BigInt hc = weil_height(c).exact_log_arg;
        if (hc == 1) continue;
        ++trial;
        UnicriticalMap map(d, c);
        for (unsigned n = 6; n >= 1; --n) {
            try {
                auto orbit = critical_orbit(map, n);
                for (const auto& x : orbit) {
                    ++checked;
                    if (weil_height(x).exact_log_arg < hc) ++violations;
                }
                break;
            } catch (const DomainError&) {
                ++blowups;
            }
        }
    }
    Outcome o;
    o.pass = violations == 0 && blowups > 0;
    o.detail = std::to_string(violations) + " violations over " + std::to_string(checked) + " iterates, " +
               std::to_string(blowups) + " blowup retries";
    return o;
}

} // namespace

int main() {
    const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                            criterion5, criterion6, criterion7, criterion8};
    std::vector<std::string> first_run;
    int failed = 0;
    auto print = [&](int id, const Outcome& o) {
        std::printf("[%s] criterion %d: %s\n", o.pass ? "PASS" : "FAIL", id, o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failed;
    };
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        first_run.push_back(o.artifact.dump());
        print(static_cast<int>(i + 1), o);
    }
    try {
        print(9, criterion9());
    } catch (const std::exception& e) {
        print(9, Outcome{false, std::string("exception: ") + e.what(), {}});
    }

    Outcome det;
    int differing = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        try {
            if (criteria[i]().artifact.dump() != first_run[i]) ++differing;
        } catch (const std::exception&) {
            ++differing;
        }
    }
    det.pass = differing == 0;
    det.detail = std::to_string(differing) + " of 8 JSON outputs differ on rerun";
    print(10, det);

    std::printf("%d of 10 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
