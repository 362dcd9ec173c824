#include "dynfactor/rational.hpp"

#include <cctype>
#include <cmath>

#include "dynfactor/error.hpp"

namespace dynfactor {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

} // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

    bool negative = false;
    if (s.starts_with("-")) {
        negative = true;
        s.remove_prefix(1);
    } else if (s.starts_with("\xE2\x88\x92")) { // U+2212 MINUS SIGN
        negative = true;
        s.remove_prefix(3);
    } else if (s.starts_with("+")) {
        s.remove_prefix(1);
    }

    std::string_view num_part = s;
    std::string_view den_part = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num_part = s.substr(0, slash);
        den_part = s.substr(slash + 1);
    }
    if (!all_digits(num_part) || !all_digits(den_part)) {
        throw ParseError("malformed rational: '" + std::string(text) + "'");
    }
    BigInt num(std::string(num_part), 10);
    BigInt den(std::string(den_part), 10);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (negative) num = -num;
    return Rational(num, den);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(unsigned long e) const {
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), e);
    // a/b in lowest terms stays in lowest terms under powering
    mpq_class r;
    r.get_num() = n;
    r.get_den() = d;
    return Rational(r);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    value_ /= o.value_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::size_t bit_length(const BigInt& n) {
    if (n == 0) return 0;
    return mpz_sizeinbase(n.get_mpz_t(), 2);
}

HeightValue weil_height(const Rational& q) {
    HeightValue h;
    BigInt a = ::abs(q.num());
    h.exact_log_arg = a > q.den() ? a : q.den();
    if (h.exact_log_arg == 0) h.exact_log_arg = 1; // 0 = 0/1
    // ln(m) = ln(mant) + exp*ln 2 avoids overflow for huge arguments
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, h.exact_log_arg.get_mpz_t());
    h.value = std::log(mant) + static_cast<double>(exp) * std::log(2.0);
    if (h.exact_log_arg == 1) h.value = 0.0;
    return h;
}

std::optional<BigInt> integer_nth_root(const BigInt& n, unsigned long k) {
    if (n < 1 || k < 1) return std::nullopt;
    BigInt r;
    if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) == 0) return std::nullopt;
    BigInt check;
    mpz_pow_ui(check.get_mpz_t(), r.get_mpz_t(), k);
    if (check != n) return std::nullopt;
    return r;
}

std::optional<Rational> rational_nth_root(const Rational& q, unsigned long k) {
    if (k < 1) return std::nullopt;
    if (q.is_zero()) return Rational(0);
    if (q.sign() < 0 && k % 2 == 0) return std::nullopt;
    // a/b in lowest terms is a k-th power iff a and b are separately
    auto a = integer_nth_root(::abs(q.num()), k);
    if (!a) return std::nullopt;
    auto b = integer_nth_root(q.den(), k);
    if (!b) return std::nullopt;
    BigInt num = q.sign() < 0 ? BigInt(-*a) : *a;
    return Rational(num, *b);
}

long valuation(const Rational& q, const BigInt& p) {
    if (q.is_zero()) throw DomainError("valuation of zero undefined");
    if (p < 2) throw DomainError("valuation needs a prime");
    auto count = [&](BigInt n) {
        long v = 0;
        n = ::abs(n);
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
            ++v;
        }
        return v;
    };
    return count(q.num()) - count(q.den());
}

} // namespace dynfactor
