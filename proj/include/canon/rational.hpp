#ifndef CANON_RATIONAL_HPP
#define CANON_RATIONAL_HPP

#include "canon/error.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace canon {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator. GMP's mpq_class maintains that after every arithmetic op; the
/// helpers below canonicalize on construction from parts.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) throw InputError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1)
{
    return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

/// Parses "n", "n/d", or a finite decimal such as "-0.25".
Rational parse_rational(std::string_view text);

/// Always "num/den", denominator included even when it is 1.
std::string to_fraction_string(const Rational& r);

/// "num" when the denominator is 1, "num/den" otherwise.
std::string to_display_string(const Rational& r);

inline int sign(const Rational& r) { return sgn(r); }

} // namespace canon

#endif
