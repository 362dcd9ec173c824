#pragma once

#include <string>

#include "json.hpp"

#include "dynfactor/densities.hpp"
#include "dynfactor/dynamics.hpp"
#include "dynfactor/factorizer.hpp"
#include "dynfactor/radicals.hpp"

// Machine-readable renderings. Exact rationals are written as "a/b" strings
// next to a decimal rounded to 6 places; key order is fixed, so identical
// reports serialize to identical bytes.
namespace dynfactor::report {

using Json = nlohmann::ordered_json;

double round6(double v);
Json rational(const Rational& q);

Json to_json(const Factorization& f);
Json to_json(const RadicalDecomposition& r);
Json to_json(const StabilityProblem& problem, const StabilityReport& rep);
Json to_json(const HypothesisReport& rep, const HypothesisConfig& config);
Json to_json(const OrbitDensityReport& rep);
Json to_json(const DegreeDensityReport& rep);
Json to_json(unsigned d, const Rational& a, const BinomialVerdict& verdict);

/// Rows (class, q_count, member_count, fraction, fraction_decimal).
std::string to_csv(const OrbitDensityReport& rep);
std::string to_csv(const StabilityReport& rep);
std::string to_csv(const Factorization& f);
std::string to_csv(const DegreeDensityReport& rep);

std::string fixed6(double v);

} // namespace dynfactor::report
