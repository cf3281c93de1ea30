#pragma once

#include <string>
#include <utility>

#include "scffd/ring.hpp"

namespace scffd {

/** Reduce a/b to lowest terms using divisor sets only.
 *
 * S = D(a) ∩ D(b); divide both by the element of S whose divisor set
 * meets S in the most elements (ties broken by the canonical order).
 * The result shares only unit divisors.  Reduced forms are unique up to
 * units over a UFD but need not be elsewhere; cross-multiplication is
 * the actual equality.
 */
std::pair<Elem, Elem> reduce_pair(const Ring& r, const Elem& a, const Elem& b,
                                  const SearchCaps& caps = {});

/** The common divisor that reduce_pair divides out: the canonically least
 * maximizer of |D(r) ∩ S| over S = D(a) ∩ D(b).  Over a UFD this is a
 * gcd.  When exactly one argument is zero, the other is returned. */
Elem reduce_gcd(const Ring& r, const Elem& a, const Elem& b, const SearchCaps& caps = {});

/** Element of the field of fractions of a divisor-capable ring.
 *
 * Canonical form: reduced, with the denominator replaced by the
 * canonically least element of its associate class (numerator adjusted
 * by the matching unit).  Zero is (0, 1).
 */
class Fraction {
public:
    Fraction(Elem num, Elem den, const SearchCaps& caps = {});
    static Fraction of(Elem value);

    const Elem& num() const { return num_; }
    const Elem& den() const { return den_; }
    const Ring& base() const { return num_.ring(); }
    RingPtr base_ptr() const { return num_.ring_ptr(); }

    bool is_zero() const { return base().is_zero(num_); }
    bool is_one() const;

    Fraction add(const Fraction& o) const;
    Fraction sub(const Fraction& o) const;
    Fraction mul(const Fraction& o) const;
    Fraction div(const Fraction& o) const;
    Fraction neg() const;
    Fraction inv() const;

    /** Cross-multiplication equality. */
    bool equals(const Fraction& o) const;

    /** Deterministic total order on canonical forms (numerator first,
     * then denominator, each under the base ring's canonical order). */
    std::strong_ordering order(const Fraction& o) const;

    /** Witness element when the value lies in the base ring. */
    std::optional<Elem> in_base() const;

    std::string print() const;

    void check_base(const Ring& expected) const;

private:
    Elem num_, den_;
};

inline Fraction operator+(const Fraction& a, const Fraction& b) { return a.add(b); }
inline Fraction operator-(const Fraction& a, const Fraction& b) { return a.sub(b); }
inline Fraction operator*(const Fraction& a, const Fraction& b) { return a.mul(b); }
inline Fraction operator/(const Fraction& a, const Fraction& b) { return a.div(b); }
inline Fraction operator-(const Fraction& a) { return a.neg(); }
inline bool operator==(const Fraction& a, const Fraction& b) { return a.equals(b); }
inline bool operator!=(const Fraction& a, const Fraction& b) { return !a.equals(b); }

/** Wrap a bare print in parentheses when embedding it in a larger
 * expression would change how it parses. */
std::string parenthesize_compound(const std::string& printed);

}  // namespace scffd
