#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "dynfactor/densities.hpp"
#include "dynfactor/dynamics.hpp"
#include "dynfactor/error.hpp"
#include "dynfactor/factorizer.hpp"
#include "dynfactor/radicals.hpp"
#include "dynfactor/report_json.hpp"

namespace dynfactor::cli {

namespace {

enum class Format { Text, Json, Csv };

struct RunConfig {
    Format format = Format::Text;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::size_t degree_cap = kDefaultDegreeCap;
    std::string output;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("DYNFACTOR_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError("DYNFACTOR_SEED must be a nonnegative integer");
        }
    }
    return 0;
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }
std::string pass_fail(bool v) { return v ? "pass" : "FAIL"; }

void emit_json(std::ostream& out, const report::Json& j) { out << j.dump(2) << '\n'; }

std::string join_degrees(const std::vector<int>& d) {
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? " " : "") + std::to_string(d[i]);
    return s;
}

// --- factor ---------------------------------------------------------------

void cmd_factor(const std::string& text, const RunConfig& cfg, std::ostream& out) {
    QPoly f = QPoly::parse(text);
    Factorization fac = factor_over_q(f, FactorOptions{.seed = cfg.seed, .degree_cap = cfg.degree_cap});
    switch (cfg.format) {
    case Format::Json: {
        report::Json j = report::to_json(fac);
        j["input"] = f.str();
        emit_json(out, j);
        break;
    }
    case Format::Csv:
        out << report::to_csv(fac);
        break;
    case Format::Text:
        out << "input: " << f.str() << '\n';
        out << "unit: " << fac.unit.str() << '\n';
        out << "factors (" << fac.distinct_count() << " distinct, " << fac.total_count()
            << " with multiplicity):\n";
        for (const auto& t : fac.factors) {
            out << "  (" << intpoly::str(t.poly) << ")";
            if (t.multiplicity > 1) out << "^" << t.multiplicity;
            out << "    degree " << t.degree() << '\n';
        }
        break;
    }
}

// --- hypotheses / stability ------------------------------------------------

report::Json hypotheses_json(const HypothesisReport& h, const std::optional<HypothesisConfig>& config) {
    if (config) return report::to_json(h, *config);
    return report::Json{{"cond_not_fixed", h.cond_not_fixed},
                        {"cond_heights_positive", h.cond_heights_positive},
                        {"in_exclusion_set", h.in_exclusion_set},
                        {"exclusion_exponent", h.exclusion_exponent},
                        {"predicted_factor_count", h.predicted_factor_count}};
}

void hypotheses_text(const HypothesisReport& h, const std::optional<HypothesisConfig>& config, unsigned d,
                     std::ostream& out) {
    const auto info = arithmetic_functions(d);
    if (config) {
        out << "  (1) phi(d) > C1*d      : " << pass_fail(h.cond_phi_ratio) << "  (phi(" << d << ") = " << info.phi
            << ", C1*d = " << config->c1 * d << ")\n";
        out << "  (2) primes of d > C2   : " << pass_fail(h.cond_prime_floor) << "  (spf = "
            << (info.smallest_prime_factor ? std::to_string(*info.smallest_prime_factor) : "none")
            << ", C2 = " << config->c2 << ")\n";
    }
    out << "  (3) alpha not fixed    : " << pass_fail(h.cond_not_fixed) << '\n';
    out << "  (4) h(c), h(c-alpha)>0 : " << pass_fail(h.cond_heights_positive) << '\n';
    out << "  exclusion set c = alpha - alpha^m : " << yes_no(h.in_exclusion_set);
    if (h.in_exclusion_set) out << " (m = " << h.exclusion_exponent << ")";
    out << '\n';
    out << "  predicted factor count tau(m) = " << h.predicted_factor_count << '\n';
}

void cmd_stability(unsigned d, const std::string& c, const std::string& alpha, unsigned nmax,
                   const std::optional<HypothesisConfig>& config, const RunConfig& cfg, std::ostream& out) {
    StabilityProblem problem = make_problem(UnicriticalMap(d, Rational::parse(c)), Rational::parse(alpha));
    StabilityReport rep =
        stability_report(problem, nmax, StabilityOptions{.seed = cfg.seed, .degree_cap = cfg.degree_cap});
    HypothesisReport hyp = check_hypotheses(problem, config.value_or(HypothesisConfig{}));

    switch (cfg.format) {
    case Format::Json: {
        report::Json j = report::to_json(problem, rep);
        j["hypotheses"] = hypotheses_json(hyp, config);
        emit_json(out, j);
        break;
    }
    case Format::Csv:
        out << report::to_csv(rep);
        break;
    case Format::Text: {
        const auto& r = problem.radical;
        out << "f(x) = " << problem.map.poly().str() << ", alpha = " << problem.alpha.str() << '\n';
        out << "c - alpha = -y^m with m = " << r.m << ", y = " << r.y.str() << ", r = " << r.r << '\n';
        out << "predicted factor count tau(m) = " << rep.predicted << '\n';
        out << std::left << std::setw(4) << "n" << std::setw(10) << "distinct" << std::setw(10) << "with_mult"
            << std::setw(12) << "structural" << "degrees\n";
        for (const auto& row : rep.rows) {
            out << std::setw(4) << row.n << std::setw(10) << row.distinct_factor_count << std::setw(10)
                << row.with_multiplicity_count << std::setw(12) << yes_no(row.structural_match)
                << join_degrees(row.degrees) << '\n';
        }
        if (rep.truncated) {
            out << "TRUNCATED: degree cap " << cfg.degree_cap << " reached after n = " << rep.rows.size() << '\n';
        }
        out << "hypotheses:\n";
        hypotheses_text(hyp, config, d, out);
        break;
    }
    }
}

void cmd_hypotheses(unsigned d, const std::string& c, const std::string& alpha, const HypothesisConfig& config,
                    const RunConfig& cfg, std::ostream& out) {
    StabilityProblem problem = make_problem(UnicriticalMap(d, Rational::parse(c)), Rational::parse(alpha));
    HypothesisReport hyp = check_hypotheses(problem, config);
    switch (cfg.format) {
    case Format::Json: {
        report::Json j{{"d", d}, {"c", problem.map.c.str()}, {"alpha", problem.alpha.str()}};
        j["radical"] = report::to_json(problem.radical);
        j["report"] = report::to_json(hyp, config);
        j["all_conditions"] = hyp.all_conditions();
        emit_json(out, j);
        break;
    }
    case Format::Csv:
        out << "condition,value\n"
            << "cond_phi_ratio," << hyp.cond_phi_ratio << '\n'
            << "cond_prime_floor," << hyp.cond_prime_floor << '\n'
            << "cond_not_fixed," << hyp.cond_not_fixed << '\n'
            << "cond_heights_positive," << hyp.cond_heights_positive << '\n'
            << "in_exclusion_set," << hyp.in_exclusion_set << '\n'
            << "predicted_factor_count," << hyp.predicted_factor_count << '\n';
        break;
    case Format::Text:
        out << "f(x) = " << problem.map.poly().str() << ", alpha = " << problem.alpha.str() << '\n';
        hypotheses_text(hyp, config, d, out);
        out << (hyp.all_conditions() ? "all conditions hold" : "some conditions fail") << '\n';
        break;
    }
}

// --- binomial ----------------------------------------------------------------

void cmd_binomial(unsigned d, const std::string& a_text, const RunConfig& cfg, std::ostream& out) {
    Rational a = Rational::parse(a_text);
    BinomialVerdict v = binomial_irreducibility(d, a);
    switch (cfg.format) {
    case Format::Json:
        emit_json(out, report::to_json(d, a, v));
        break;
    case Format::Csv:
        out << "d,a,irreducible,reason\n" << d << ',' << a.str() << ',' << v.irreducible << ",\"" << v.reason << "\"\n";
        break;
    case Format::Text:
        out << "x^" << d << " - (" << a.str() << ") is " << (v.irreducible ? "irreducible" : "reducible");
        if (!v.irreducible) out << ", reason: " << v.reason;
        out << '\n';
        break;
    }
}

// --- densities ---------------------------------------------------------------

void cmd_orbit_density(unsigned p, const std::string& c, const std::string& b, std::uint64_t xmax,
                       const RunConfig& cfg, std::ostream& out) {
    OrbitDensityReport rep = orbit_density_scan(p, Rational::parse(c), Rational::parse(b), xmax, cfg.threads);
    switch (cfg.format) {
    case Format::Json:
        emit_json(out, report::to_json(rep));
        break;
    case Format::Csv:
        out << report::to_csv(rep);
        break;
    case Format::Text:
        out << "f(x) = x^" << p << " + " << rep.c.str() << ", basepoint " << rep.b.str() << ", primes q <= " << rep.X
            << " (" << rep.prime_count << " primes)\n";
        for (const auto& row : rep.classes) {
            out << "  " << std::left << std::setw(12) << row.label() << " scanned " << std::setw(8)
                << row.primes_scanned << " members " << std::setw(8) << row.members << " fraction "
                << row.fraction.str() << " (" << report::fixed6(row.fraction.to_double()) << ")\n";
        }
        out << "  bad primes:";
        if (rep.bad_primes.empty()) out << " none";
        for (auto q : rep.bad_primes) out << ' ' << q;
        out << '\n';
        out << "  overall fraction " << rep.overall.str() << " (" << report::fixed6(rep.overall_fraction) << ")\n";
        out << "  predicted density (p-2)/(p-1) = " << rep.predicted_density.str() << " ("
            << report::fixed6(rep.predicted_density.to_double()) << ")\n";
        break;
    }
}

void cmd_degree_density(std::optional<double> c1, std::optional<double> c2, std::optional<std::uint64_t> min_prime,
                        std::uint64_t xmax, const RunConfig& cfg, std::ostream& out) {
    if (min_prime && (c1 || c2)) throw UsageError("--min-prime cannot be combined with --c1/--c2");
    if (!min_prime && !(c1 && c2)) throw UsageError("degree-density needs --c1 and --c2, or --min-prime");
    DegreeDensityReport rep = min_prime
                                  ? degree_condition_density(0.0, static_cast<double>(*min_prime), xmax, cfg.threads)
                                  : degree_condition_density(*c1, *c2, xmax, cfg.threads);
    if (min_prime) rep.C1.reset();
    switch (cfg.format) {
    case Format::Json:
        emit_json(out, report::to_json(rep));
        break;
    case Format::Csv:
        out << report::to_csv(rep);
        break;
    case Format::Text:
        out << "degrees d <= " << rep.X << " with all prime factors > " << rep.M;
        if (rep.C1) out << " and phi(d) > " << *rep.C1 << "*d";
        out << '\n';
        out << "  count " << rep.count << ", density " << rep.density.str() << " ("
            << report::fixed6(rep.density.to_double()) << ")\n";
        out << "  c_M = prod_{p<=" << rep.M << "} (1-1/p) = " << rep.mertens_c_M.str() << " ("
            << report::fixed6(rep.mertens_c_M.to_double()) << ")\n";
        out << "  e^-gamma / ln M = " << report::fixed6(rep.mertens_asymptotic) << '\n';
        break;
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Factorization and density experiments for iterates of x^d + c over Q", "dynfactor"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string format = "text";
    std::optional<std::uint64_t> seed_flag;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--seed", seed_flag, "Seed for randomized splitting (default 0, or $DYNFACTOR_SEED)");
    app.add_option("--threads", cfg.threads, "Worker threads for the sieves")->check(CLI::PositiveNumber);
    app.add_option("--degree-cap", cfg.degree_cap, "Largest polynomial degree accepted")->check(CLI::PositiveNumber);
    app.add_option("--output", cfg.output, "Write output to this file instead of stdout");

    std::string poly;
    auto* factor = app.add_subcommand("factor", "Factor a polynomial over Q");
    factor->add_option("--poly", poly, "Polynomial, e.g. \"x^4+4\" or \"[c0,c1,...]\"")->required();

    unsigned d = 2, nmax = 1;
    std::string c_text, alpha_text = "0", a_text, b_text = "0";
    std::optional<double> c1, c2;
    auto* stability = app.add_subcommand("stability", "Factor f^n(x) - alpha for n = 1..nmax");
    stability->add_option("--d", d, "Degree d >= 2")->required()->check(CLI::Range(2U, 1000000U));
    stability->add_option("--c", c_text, "Constant c")->required();
    stability->add_option("--alpha", alpha_text, "Target alpha");
    stability->add_option("--nmax", nmax, "Largest iterate")->required()->check(CLI::PositiveNumber);
    stability->add_option("--c1", c1, "C1 for the phi(d) > C1*d condition");
    stability->add_option("--c2", c2, "C2 for the prime-factor floor");

    auto* hypotheses = app.add_subcommand("hypotheses", "Check the stability hypotheses for (x^d + c, alpha)");
    hypotheses->add_option("--d", d, "Degree d >= 2")->required()->check(CLI::Range(2U, 1000000U));
    hypotheses->add_option("--c", c_text, "Constant c")->required();
    hypotheses->add_option("--alpha", alpha_text, "Target alpha");
    hypotheses->add_option("--c1", c1, "C1 in (0,1)")->required();
    hypotheses->add_option("--c2", c2, "C2 > 0")->required();

    auto* binomial = app.add_subcommand("binomial", "Capelli test for x^d - a");
    binomial->add_option("--d", d, "Degree d >= 2")->required()->check(CLI::Range(2U, 1000000U));
    binomial->add_option("--a", a_text, "Constant a")->required();

    unsigned p = 2;
    std::uint64_t xmax = 0;
    auto* orbit = app.add_subcommand("orbit-density", "Prime divisors of the orbit of b under x^p + c");
    orbit->add_option("--p", p, "Prime degree p")->required();
    orbit->add_option("--c", c_text, "Constant c")->required();
    orbit->add_option("--b", b_text, "Basepoint b (default 0)");
    orbit->add_option("--xmax", xmax, "Scan primes q <= xmax (at most 10^7)")
        ->required()
        ->check(CLI::Range(std::uint64_t{1}, kMaxScanBound));

    std::optional<std::uint64_t> min_prime;
    auto* degree = app.add_subcommand("degree-density", "Density of degrees d with phi(d) > C1*d and spf(d) > C2");
    degree->add_option("--c1", c1, "C1 in [0,1)");
    degree->add_option("--c2", c2, "C2 >= 1");
    degree->add_option("--min-prime", min_prime, "Count d whose prime factors all exceed this");
    degree->add_option("--xmax", xmax, "Scan d <= xmax")->required()->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        cfg.format = format == "json" ? Format::Json : (format == "csv" ? Format::Csv : Format::Text);
        cfg.seed = seed_flag ? *seed_flag : default_seed();
        const bool parallel_ok = orbit->parsed() || degree->parsed();
        if (cfg.threads > 1 && !parallel_ok) {
            throw UsageError("--threads > 1 is only supported by orbit-density and degree-density");
        }

        std::ostringstream buffer;
        if (factor->parsed()) {
            cmd_factor(poly, cfg, buffer);
        } else if (stability->parsed()) {
            std::optional<HypothesisConfig> config;
            if (c1 || c2) config = HypothesisConfig{c1.value_or(0.5), c2.value_or(1.0)};
            cmd_stability(d, c_text, alpha_text, nmax, config, cfg, buffer);
        } else if (hypotheses->parsed()) {
            if (!(*c1 > 0.0 && *c1 < 1.0)) throw UsageError("--c1 must lie in (0,1)");
            if (!(*c2 > 0.0)) throw UsageError("--c2 must be positive");
            cmd_hypotheses(d, c_text, alpha_text, HypothesisConfig{*c1, *c2}, cfg, buffer);
        } else if (binomial->parsed()) {
            cmd_binomial(d, a_text, cfg, buffer);
        } else if (orbit->parsed()) {
            cmd_orbit_density(p, c_text, b_text, xmax, cfg, buffer);
        } else if (degree->parsed()) {
            if (c1 && !(*c1 >= 0.0 && *c1 < 1.0)) throw UsageError("--c1 must lie in [0,1)");
            if (c2 && !(*c2 >= 1.0)) throw UsageError("--c2 must be >= 1");
            if (min_prime && *min_prime < 1) throw UsageError("--min-prime must be >= 1");
            cmd_degree_density(c1, c2, min_prime, xmax, cfg, buffer);
        }

        if (cfg.output.empty()) {
            out << buffer.str();
        } else {
            std::ofstream file(cfg.output, std::ios::binary);
            if (!file) throw UsageError("cannot open output file " + cfg.output);
            file << buffer.str();
        }
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace dynfactor::cli
