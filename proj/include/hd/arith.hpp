#ifndef HD_ARITH_HPP
#define HD_ARITH_HPP

#include <string>

#include <gmpxx.h>

#include "hd/errors.hpp"

namespace hd {

// Exact arithmetic foundation. Integers and rationals are GMP-backed;
// every decision in the library reduces to the comparisons below, no
// floating point anywhere in a decision path.

using Integer = mpz_class;
using Rational = mpq_class;

enum class Ord { LT, EQ, GT };

/// Binomial coefficient with the out-of-range convention
/// binom(n, r) = 0 for r < 0 or r > n; n must be >= 0.
Integer binom(const Integer& n, const Integer& r);

/// Floor division (rounds toward -infinity); b must be nonzero.
Integer floor_div(const Integer& a, const Integer& b);

/// Ceiling division; b must be nonzero.
Integer ceil_div(const Integer& a, const Integer& b);

/// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);

/// n/d in lowest terms with positive denominator; d must be nonzero.
Rational make_rational(const Integer& n, const Integer& d);

Integer floor_rat(const Rational& q);
Integer ceil_rat(const Rational& q);

/// Exact sign of q - r*sqrt(n) for n >= 0, decided by sign analysis
/// and squaring.
Ord cmp_rational_vs_surd(const Rational& q, const Rational& r, const Integer& n);

/// Exact sign of q - sqrt(rad) for a rational radicand rad >= 0.
Ord cmp_rational_vs_sqrt(const Rational& q, const Rational& rad);

/// floor((a + sqrt(b))/c) when plus, floor((a - sqrt(b))/c) otherwise;
/// b >= 0, c > 0. Exact for irrational and perfect-square b alike.
Integer floor_shifted_sqrt(const Integer& a, const Integer& b, const Integer& c,
                           bool plus);

/// Fixed-point decimal rendering of q, rounded half away from zero.
std::string decimal_string(const Rational& q, int places);

/// Parses "p/q", a plain integer, or a decimal like "0.125" exactly.
Rational rational_from_string(const std::string& text);

inline int sign_of(const Integer& x) { return sgn(x); }
inline int sign_of(const Rational& x) { return sgn(x); }

}  // namespace hd

#endif
