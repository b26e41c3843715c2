#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace hpzeta {

using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision fraction, kept in lowest terms with a positive
/// denominator after every operation.
using Rational = boost::multiprecision::cpp_rational;

inline Int rational_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int rational_den(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Round a rational to the nearest double (half-to-even), one rounding total.
inline double to_double(const Rational& value) {
    using boost::multiprecision::msb;
    const Int num0 = rational_num(value);
    const Int den = rational_den(value);
    if (num0.is_zero()) return 0.0;
    const bool neg = num0 < 0;
    Int num = neg ? Int(-num0) : num0;

    const long nb = static_cast<long>(msb(num));
    const long db = static_cast<long>(msb(den));
    // Scale so the integer quotient carries a few bits beyond a double mantissa.
    const long shift = 58 - (nb - db);
    Int n = num, d = den;
    if (shift > 0) n <<= shift;
    else if (shift < 0) d <<= -shift;

    Int q, rem;
    boost::multiprecision::divide_qr(n, d, q, rem);
    const long qbits = static_cast<long>(msb(q)) + 1;  // >= 58 by construction
    const long drop = qbits - 54;                      // keep 54 bits, last decides rounding
    bool sticky = !rem.is_zero();
    Int keep = q >> drop;
    if (!(q - (keep << drop)).is_zero()) sticky = true;
    const bool round_bit = boost::multiprecision::bit_test(keep, 0);
    keep >>= 1;
    if (round_bit && (sticky || boost::multiprecision::bit_test(keep, 0))) ++keep;

    const double mant = keep.convert_to<double>();  // <= 2^53, exact
    const double result = std::ldexp(mant, static_cast<int>(drop + 1 - shift));
    return neg ? -result : result;
}

/// Render as "p" or "p/q".
inline std::string to_string(const Rational& r) {
    const Int d = rational_den(r);
    if (d == 1) return rational_num(r).str();
    return rational_num(r).str() + "/" + d.str();
}

/// Parse "p" or "p/q"; q must be nonzero.
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(text));
        const Int num(text.substr(0, slash));
        const Int den(text.substr(slash + 1));
        if (den.is_zero()) throw std::domain_error("rational: zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::domain_error("rational: cannot parse '" + text + "'");
    }
}

}  // namespace hpzeta
