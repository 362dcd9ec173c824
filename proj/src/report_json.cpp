#include "dynfactor/report_json.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace dynfactor::report {

double round6(double v) { return std::round(v * 1e6) / 1e6; }

std::string fixed6(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

Json rational(const Rational& q) { return Json{{"exact", q.str()}, {"decimal", round6(q.to_double())}}; }

namespace {

Json degrees_json(const std::vector<int>& d) {
    Json a = Json::array();
    for (int v : d) a.push_back(v);
    return a;
}

} // namespace

Json to_json(const Factorization& f) {
    Json factors = Json::array();
    for (const auto& t : f.factors) {
        factors.push_back(Json{{"poly", intpoly::str(t.poly)},
                               {"coefficients", intpoly::to_qpoly(t.poly).list_str()},
                               {"degree", t.degree()},
                               {"multiplicity", t.multiplicity}});
    }
    return Json{{"unit", f.unit.str()},
                {"distinct_factor_count", f.distinct_count()},
                {"with_multiplicity_count", f.total_count()},
                {"factors", factors}};
}

Json to_json(const RadicalDecomposition& r) {
    return Json{{"m", r.m}, {"y", r.y.str()}, {"r", r.r}, {"d", r.d}, {"v", r.v.str()}};
}

Json to_json(const StabilityProblem& problem, const StabilityReport& rep) {
    Json rows = Json::array();
    for (const auto& row : rep.rows) {
        rows.push_back(Json{{"n", row.n},
                            {"distinct_factor_count", row.distinct_factor_count},
                            {"with_multiplicity_count", row.with_multiplicity_count},
                            {"degrees", degrees_json(row.degrees)},
                            {"structural_match", row.structural_match}});
    }
    return Json{{"d", problem.map.d},
                {"c", problem.map.c.str()},
                {"alpha", problem.alpha.str()},
                {"radical", to_json(problem.radical)},
                {"requested_n", rep.requested_n},
                {"truncated", rep.truncated},
                {"predicted", rep.predicted},
                {"rows", rows}};
}

Json to_json(const HypothesisReport& rep, const HypothesisConfig& config) {
    return Json{{"C1", config.c1},
                {"C2", config.c2},
                {"cond_phi_ratio", rep.cond_phi_ratio},
                {"cond_prime_floor", rep.cond_prime_floor},
                {"cond_not_fixed", rep.cond_not_fixed},
                {"cond_heights_positive", rep.cond_heights_positive},
                {"in_exclusion_set", rep.in_exclusion_set},
                {"exclusion_exponent", rep.exclusion_exponent},
                {"predicted_factor_count", rep.predicted_factor_count}};
}

Json to_json(const OrbitDensityReport& rep) {
    Json rows = Json::array();
    for (const auto& row : rep.classes) {
        rows.push_back(Json{{"class", row.label()},
                            {"primes_scanned", row.primes_scanned},
                            {"members_of_P", row.members},
                            {"fraction", row.fraction.str()},
                            {"fraction_decimal", round6(row.fraction.to_double())}});
    }
    return Json{{"p", rep.p},
                {"c", rep.c.str()},
                {"b", rep.b.str()},
                {"X", rep.X},
                {"prime_count", rep.prime_count},
                {"classes", rows},
                {"bad_primes", rep.bad_primes},
                {"overall", rep.overall.str()},
                {"overall_fraction", round6(rep.overall_fraction)},
                {"predicted_density", rep.predicted_density.str()},
                {"predicted_density_decimal", round6(rep.predicted_density.to_double())}};
}

Json to_json(const DegreeDensityReport& rep) {
    Json asym = std::isnan(rep.mertens_asymptotic) ? Json(nullptr) : Json(round6(rep.mertens_asymptotic));
    return Json{{"X", rep.X},
                {"M", rep.M},
                {"C1", rep.C1 ? Json(*rep.C1) : Json(nullptr)},
                {"count", rep.count},
                {"density", rep.density.str()},
                {"density_decimal", round6(rep.density.to_double())},
                {"mertens_c_M", rep.mertens_c_M.str()},
                {"mertens_c_M_decimal", round6(rep.mertens_c_M.to_double())},
                {"mertens_asymptotic", asym}};
}

Json to_json(unsigned d, const Rational& a, const BinomialVerdict& verdict) {
    return Json{{"d", d}, {"a", a.str()}, {"irreducible", verdict.irreducible}, {"reason", verdict.reason}};
}

std::string to_csv(const OrbitDensityReport& rep) {
    std::ostringstream out;
    out << "class,q_count,member_count,fraction,fraction_decimal\n";
    for (const auto& row : rep.classes) {
        out << row.label() << ',' << row.primes_scanned << ',' << row.members << ',' << row.fraction.str() << ','
            << fixed6(row.fraction.to_double()) << '\n';
    }
    return out.str();
}

std::string to_csv(const StabilityReport& rep) {
    std::ostringstream out;
    out << "n,distinct_factor_count,with_multiplicity_count,degrees,structural_match,predicted\n";
    for (const auto& row : rep.rows) {
        out << row.n << ',' << row.distinct_factor_count << ',' << row.with_multiplicity_count << ',';
        for (std::size_t i = 0; i < row.degrees.size(); ++i) out << (i ? " " : "") << row.degrees[i];
        out << ',' << (row.structural_match ? "true" : "false") << ',' << rep.predicted << '\n';
    }
    return out.str();
}

std::string to_csv(const Factorization& f) {
    std::ostringstream out;
    out << "factor,degree,multiplicity\n";
    out << f.unit.str() << ",0,1\n";
    for (const auto& t : f.factors) out << intpoly::str(t.poly) << ',' << t.degree() << ',' << t.multiplicity << '\n';
    return out.str();
}

std::string to_csv(const DegreeDensityReport& rep) {
    std::ostringstream out;
    out << "X,M,C1,count,density,density_decimal,mertens_c_M,mertens_asymptotic\n";
    out << rep.X << ',' << rep.M << ',' << (rep.C1 ? fixed6(*rep.C1) : "") << ',' << rep.count << ','
        << rep.density.str() << ',' << fixed6(rep.density.to_double()) << ',' << rep.mertens_c_M.str() << ','
        << fixed6(rep.mertens_asymptotic) << '\n';
    return out.str();
}

} // namespace dynfactor::report
