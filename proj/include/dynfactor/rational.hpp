#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dynfactor {

using BigInt = mpz_class;

/// Exact rational in lowest terms with a positive denominator; zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long v) : value_(v) {}                 // NOLINT(google-explicit-constructor)
    Rational(const BigInt& v) : value_(v) {}        // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

    /// Parses "a", "-a", "a/b" or "-a/b". Throws ParseError on malformed
    /// text or a zero denominator.
    static Rational parse(std::string_view text);

    const BigInt& num() const { return value_.get_num(); }
    const BigInt& den() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return den() == 1; }
    bool is_one() const { return value_ == 1; }

    Rational abs() const;
    Rational inverse() const;
    Rational pow(unsigned long e) const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// "a" for integers, "a/b" otherwise.
    std::string str() const;
    double to_double() const { return value_.get_d(); }

private:
    mpq_class value_;
};

/// Weil height over Q. exact_log_arg = max(|a|, |b|) for a/b in lowest terms
/// so inequalities between heights can be decided on integers.
struct HeightValue {
    double value = 0.0;
    BigInt exact_log_arg = 1;
};

HeightValue weil_height(const Rational& q);

/// r with r^k = n exactly, when it exists. Requires n >= 1, k >= 1.
std::optional<BigInt> integer_nth_root(const BigInt& n, unsigned long k);

/// y in Q with y^k = q exactly, when it exists. For odd k the sign of q is
/// carried by y; for even k the nonnegative root is returned.
std::optional<Rational> rational_nth_root(const Rational& q, unsigned long k);

/// Exponent of the prime p in q (negative for denominators). q must be nonzero.
long valuation(const Rational& q, const BigInt& p);

/// Number of bits in |n| (0 for n == 0).
std::size_t bit_length(const BigInt& n);

} // namespace dynfactor
