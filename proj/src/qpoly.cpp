#include "dynfactor/qpoly.hpp"

#include <cctype>
#include <limits>
#include <map>

#include "dynfactor/error.hpp"
#include "dynfactor/fp_poly.hpp"
#include "dynfactor/intpoly.hpp"

namespace dynfactor {

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly::QPoly(const Rational& constant) {
    if (!constant.is_zero()) coeffs_.push_back(constant);
}

QPoly QPoly::x() { return monomial(1, 1); }

QPoly QPoly::monomial(const Rational& coeff, std::size_t exponent) {
    if (coeff.is_zero()) return {};
    std::vector<Rational> c(exponent + 1);
    c[exponent] = coeff;
    return QPoly(std::move(c));
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

QPoly QPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    }
    return QPoly(std::move(d));
}

QPoly QPoly::pow(unsigned e) const {
    QPoly result(Rational(1));
    QPoly base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

Rational QPoly::eval(const Rational& at) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * at + *it;
    }
    return acc;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // accumulate in mpq without canonicalizing every partial sum
    std::vector<mpq_class> acc(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            acc[i + j] += a.coeffs_[i].raw() * b.coeffs_[j].raw();
        }
    }
    std::vector<Rational> c;
    c.reserve(acc.size());
    for (auto& v : acc) c.emplace_back(v);
    return QPoly(std::move(c));
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

namespace {

std::string term_str(const Rational& abs_coeff, std::size_t exp) {
    std::string s;
    if (exp == 0) return abs_coeff.str();
    if (!abs_coeff.is_one()) s = abs_coeff.str() + "*";
    s += "x";
    if (exp > 1) s += "^" + std::to_string(exp);
    return s;
}

} // namespace

std::string QPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        out += term_str(c.abs(), k);
    }
    return out;
}

std::string QPoly::list_str() const {
    if (is_zero()) return "[0]";
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ",";
        out += coeffs_[i].str();
    }
    return out + "]";
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : src_(text) {
        // normalize U+2212 to '-' and drop whitespace
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
                s_ += '-';
                i += 2;
            } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
                s_ += text[i];
            }
        }
    }

    QPoly parse() {
        if (s_.empty()) fail("empty polynomial");
        if (s_.front() == '[') return parse_list();
        std::map<std::size_t, Rational> terms;
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            auto [coeff, exp] = parse_term();
            terms[exp] += sign < 0 ? -coeff : coeff;
            first = false;
        }
        std::size_t top = terms.empty() ? 0 : terms.rbegin()->first;
        std::vector<Rational> c(top + 1);
        for (auto& [e, v] : terms) c[e] = v;
        return QPoly(std::move(c));
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("cannot parse polynomial '" + std::string(src_) + "': " + why);
    }

    std::string digits() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    std::pair<Rational, std::size_t> parse_term() {
        Rational coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string text = digits();
            if (peek() == '/') {
                ++pos_;
                std::string den = digits();
                if (den.empty()) fail("missing denominator");
                text += "/" + den;
            }
            coeff = Rational::parse(text);
            have_coeff = true;
            if (peek() == '*') {
                ++pos_;
                if (peek() != 'x') fail("expected 'x' after '*'");
            }
        }
        if (peek() == 'x') {
            ++pos_;
            std::size_t exp = 1;
            if (peek() == '^') {
                ++pos_;
                std::string e = digits();
                if (e.empty()) fail("missing exponent");
                if (e.size() > 6) fail("exponent too large");
                exp = std::stoul(e);
            }
            return {coeff, exp};
        }
        if (!have_coeff) fail("expected a coefficient or 'x'");
        return {coeff, 0};
    }

    QPoly parse_list() {
        if (s_.back() != ']') fail("unterminated list");
        std::string body = s_.substr(1, s_.size() - 2);
        std::vector<Rational> c;
        std::size_t start = 0;
        while (start <= body.size()) {
            std::size_t comma = body.find(',', start);
            if (comma == std::string::npos) comma = body.size();
            std::string item = body.substr(start, comma - start);
            if (item.empty()) fail("empty list entry");
            c.push_back(Rational::parse(item));
            start = comma + 1;
        }
        return QPoly(std::move(c));
    }

    std::string_view src_;
    std::string s_;
    std::size_t pos_ = 0;
};

} // namespace

QPoly QPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

std::pair<QPoly, QPoly> divrem(const QPoly& f, const QPoly& g) {
    if (g.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rational> r = f.coeffs();
    int dg = g.degree();
    if (f.degree() < dg) return {QPoly(), f};
    std::vector<Rational> q(static_cast<std::size_t>(f.degree() - dg + 1));
    Rational inv = g.leading().inverse();
    for (int k = f.degree() - dg; k >= 0; --k) {
        Rational t = r[static_cast<std::size_t>(k + dg)] * inv;
        q[static_cast<std::size_t>(k)] = t;
        if (t.is_zero()) continue;
        for (int j = 0; j <= dg; ++j) {
            r[static_cast<std::size_t>(k + j)] -= t * g.coeffs()[static_cast<std::size_t>(j)];
        }
    }
    return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly exact_div(const QPoly& f, const QPoly& g) {
    auto [q, r] = divrem(f, g);
    if (!r.is_zero()) throw DomainError("inexact polynomial division");
    return q;
}

QPoly compose(const QPoly& g, const QPoly& f) {
    QPoly acc;
    const auto& c = g.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * f + QPoly(*it);
    }
    return acc;
}

QPoly gcd(const QPoly& f, const QPoly& g) {
    if (f.is_zero() && g.is_zero()) throw DomainError("gcd of two zero polynomials");
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    // primitive Euclidean remainder sequence over Z
    IntPoly a = intpoly::from_qpoly(f).second;
    IntPoly b = intpoly::from_qpoly(g).second;
    if (intpoly::degree(a) < intpoly::degree(b)) std::swap(a, b);
    while (!b.empty()) {
        IntPoly r = intpoly::pseudo_remainder(a, b);
        a = std::move(b);
        b = r.empty() ? r : intpoly::primitive_part(r);
    }
    return intpoly::to_qpoly(a).monic();
}

namespace {

// A prime of good reduction where f stays squarefree proves f squarefree
// over Q; a handful of attempts settles almost every input.
bool provably_squarefree(const QPoly& f) {
    if (f.degree() <= 1) return true;
    IntPoly F = intpoly::from_qpoly(f).second;
    int tries = 0;
    for (std::uint64_t p = 1000003; tries < 4; p += 2) {
        bool prime = true;
        for (std::uint64_t q = 3; q * q <= p; q += 2) {
            if (p % q == 0) {
                prime = false;
                break;
            }
        }
        if (!prime) continue;
        ++tries;
        BigInt lc_mod = intpoly::lc(F) % static_cast<unsigned long>(p);
        if (lc_mod == 0) continue;
        if (fp::is_squarefree(fp::from_int(F, p), p)) return true;
    }
    return false;
}

} // namespace

SquarefreeDecomposition squarefree_decompose(const QPoly& f) {
    if (f.is_zero()) throw DomainError("squarefree decomposition of zero");
    SquarefreeDecomposition out;
    out.unit = f.leading();
    if (f.degree() == 0) return out;
    QPoly m = f.monic();
    if (provably_squarefree(m)) {
        out.factors.emplace_back(m, 1);
        return out;
    }
    // Yun's algorithm
    QPoly dm = m.derivative();
    QPoly a = gcd(m, dm);
    QPoly b = exact_div(m, a);
    QPoly c = exact_div(dm, a);
    QPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        QPoly ai = gcd(b, d);
        b = exact_div(b, ai);
        c = exact_div(d, ai);
        d = c - b.derivative();
        if (ai.degree() > 0) out.factors.emplace_back(ai, i);
        ++i;
    }
    return out;
}

QPoly cyclotomic(unsigned long a) {
    if (a == 0) throw DomainError("cyclotomic index must be positive");
    std::vector<unsigned long> divisors;
    for (unsigned long e = 1; e <= a; ++e) {
        if (a % e == 0) divisors.push_back(e);
    }
    std::map<unsigned long, QPoly> phi;
    for (unsigned long e : divisors) {
        QPoly num = QPoly::monomial(1, e) - QPoly(Rational(1));
        for (auto& [k, pk] : phi) {
            if (e % k == 0) num = exact_div(num, pk);
        }
        phi.emplace(e, std::move(num));
    }
    return phi.at(a);
}

UnicriticalMap::UnicriticalMap(unsigned degree, Rational constant) : d(degree), c(std::move(constant)) {
    if (d < 2) throw DomainError("unicritical map needs degree d >= 2");
}

QPoly UnicriticalMap::poly() const { return QPoly::monomial(1, d) + QPoly(c); }

std::size_t iterate_degree(unsigned d, unsigned n) {
    std::size_t deg = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (deg > std::numeric_limits<std::size_t>::max() / d) return std::numeric_limits<std::size_t>::max();
        deg *= d;
    }
    return deg;
}

QPoly iterate_shifted(const UnicriticalMap& map, unsigned n, const Rational& alpha, std::size_t degree_cap) {
    if (n < 1) throw DomainError("iterate index must be >= 1");
    if (iterate_degree(map.d, n) > degree_cap) throw DomainError("degree cap exceeded");
    QPoly iter = QPoly::x();
    for (unsigned i = 0; i < n; ++i) {
        iter = iter.pow(map.d) + QPoly(map.c);
    }
    return iter - QPoly(alpha);
}

} // namespace dynfactor
