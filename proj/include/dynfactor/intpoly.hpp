#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dynfactor/qpoly.hpp"
#include "dynfactor/rational.hpp"

// Integer polynomials (dense, constant term first, no trailing zeros) and
// arithmetic modulo an integer m. Shared by the gcd and the factorizer.
namespace dynfactor {

using IntPoly = std::vector<BigInt>;

namespace intpoly {

void trim(IntPoly& f);
inline int degree(const IntPoly& f) { return static_cast<int>(f.size()) - 1; }
inline const BigInt& lc(const IntPoly& f) { return f.back(); }

BigInt content(const IntPoly& f);
/// f / content(f) with a positive leading coefficient.
IntPoly primitive_part(const IntPoly& f);

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly scale(const IntPoly& a, const BigInt& s);
IntPoly derivative(const IntPoly& f);

/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// q with a = q * b over Z, if one exists.
std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b);

/// Writes q = scale * f with f primitive integer and positive leading
/// coefficient. The zero polynomial maps to (0, {}).
std::pair<Rational, IntPoly> from_qpoly(const QPoly& q);
QPoly to_qpoly(const IntPoly& f);

/// Coefficients reduced to the symmetric range (-m/2, m/2].
IntPoly symmetric_mod(const IntPoly& f, const BigInt& m);
/// Coefficients reduced to [0, m).
IntPoly reduce_mod(const IntPoly& f, const BigInt& m);
IntPoly mul_mod(const IntPoly& a, const IntPoly& b, const BigInt& m);
/// Division by a monic b modulo m; results in [0, m).
std::pair<IntPoly, IntPoly> divrem_monic_mod(const IntPoly& a, const IntPoly& b, const BigInt& m);

std::string str(const IntPoly& f);

} // namespace intpoly
} // namespace dynfactor
