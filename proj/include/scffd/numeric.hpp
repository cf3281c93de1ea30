#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace scffd {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer abs_int(const Integer& a) { return a < 0 ? Integer(-a) : a; }

/** Magnitude-first total order: 0 < 1 < -1 < 2 < -2 < ...
 *
 * Used as the canonical order on integers and, coordinate-wise, on every
 * compound representation.  Positive elements precede their negatives so
 * that canonical representatives of associate classes come out sign-free.
 */
inline std::strong_ordering magnitude_order(const Integer& a, const Integer& b) {
    Integer aa = abs_int(a), ab = abs_int(b);
    if (aa != ab) return aa < ab ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a == b) return std::strong_ordering::equal;
    // same magnitude, different sign: positive first
    return a > b ? std::strong_ordering::less : std::strong_ordering::greater;
}

inline std::strong_ordering magnitude_order(const Rational& a, const Rational& b) {
    Rational aa = a < 0 ? Rational(-a) : a;
    Rational ab = b < 0 ? Rational(-b) : b;
    if (aa != ab) return aa < ab ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a == b) return std::strong_ordering::equal;
    return a > b ? std::strong_ordering::less : std::strong_ordering::greater;
}

inline Integer isqrt_floor(const Integer& n) { return boost::multiprecision::sqrt(n); }

inline Integer pow_int(const Integer& base, unsigned long e) {
    Integer r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline std::string to_string(const Integer& a) { return a.str(); }

}  // namespace scffd
