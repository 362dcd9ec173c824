#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dynfactor/rational.hpp"

namespace dynfactor {

/// Dense univariate polynomial over Q. Coefficients are indexed by exponent
/// and never carry trailing zeros, so the zero polynomial is empty.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> coeffs);
    QPoly(const Rational& constant); // NOLINT(google-explicit-constructor)

    static QPoly x();
    static QPoly monomial(const Rational& coeff, std::size_t exponent);

    /// Accepts the human form ("x^5 - 32", "9*x^2 - 16", "3/2x + 1") and the
    /// list form "[c0,c1,...,cn]".
    static QPoly parse(std::string_view text);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

    QPoly monic() const;
    QPoly derivative() const;
    QPoly pow(unsigned e) const;
    Rational eval(const Rational& at) const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const Rational& s);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(QPoly a, const Rational& s) { return a *= s; }
    friend QPoly operator*(const Rational& s, QPoly a) { return a *= s; }
    QPoly operator-() const;

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Human form, highest degree first, e.g. "x^4 - 2*x^2".
    std::string str() const;
    /// List form "[c0,c1,...,cn]"; "[0]" for the zero polynomial.
    std::string list_str() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws DomainError for a zero divisor.
std::pair<QPoly, QPoly> divrem(const QPoly& f, const QPoly& g);

/// Exact quotient; throws DomainError if g does not divide f.
QPoly exact_div(const QPoly& f, const QPoly& g);

/// g(f(x)).
QPoly compose(const QPoly& g, const QPoly& f);

/// Monic gcd, computed on primitive integer images.
QPoly gcd(const QPoly& f, const QPoly& g);

struct SquarefreeDecomposition {
    Rational unit;
    /// Monic, squarefree, pairwise coprime factors in increasing multiplicity.
    std::vector<std::pair<QPoly, int>> factors;
};

SquarefreeDecomposition squarefree_decompose(const QPoly& f);

/// The a-th cyclotomic polynomial.
QPoly cyclotomic(unsigned long a);

/// The map x -> x^d + c.
struct UnicriticalMap {
    unsigned d = 2;
    Rational c;

    UnicriticalMap() = default;
    UnicriticalMap(unsigned degree, Rational constant);

    QPoly poly() const;
    Rational apply(const Rational& x) const { return x.pow(d) + c; }
};

constexpr std::size_t kDefaultDegreeCap = 4096;

/// f^n(x) - alpha. Throws DomainError("degree cap exceeded") when d^n > cap.
QPoly iterate_shifted(const UnicriticalMap& map, unsigned n, const Rational& alpha,
                      std::size_t degree_cap = kDefaultDegreeCap);

/// d^n, saturating at SIZE_MAX.
std::size_t iterate_degree(unsigned d, unsigned n);

} // namespace dynfactor
