#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scffd/caps.hpp"
#include "scffd/element.hpp"
#include "scffd/errors.hpp"
#include "scffd/numeric.hpp"
#include "scffd/trilean.hpp"

namespace scffd {

enum class RingKind { integers, quadratic, polynomial, destroy, laurent, fringe };

/** The exact, finite set of divisors of a nonzero element, sorted under
 * the canonical order.  Soundness (every member exactly divides the
 * target) and closure properties are enforced by the test suite. */
struct DivisorSet {
    Elem target;
    std::vector<Elem> members;

    bool contains(const Elem& e) const;
};

struct DividesResult {
    bool divides = false;
    std::optional<Elem> witness;  // c with a*c = b when divides
};

struct Factorization {
    Elem unit;
    std::vector<Elem> factors;  // each irreducible; unit * prod(factors) = input
};

/** Abstract computable integral domain.
 *
 * Constructions that admit a divisor function (the strongly computable
 * finite factorization domains) answer `supports_divisors() == true` and
 * get the full generic layer: units, associates, irreducibility,
 * factorization.  The remaining constructions keep exact arithmetic and
 * membership but answer only the predicates they can decide.
 */
class Ring : public std::enable_shared_from_this<Ring> {
public:
    virtual ~Ring() = default;

    virtual RingKind kind() const = 0;
    /** Canonical descriptor text; doubles as the element tag. */
    virtual const std::string& signature() const = 0;

    // --- element construction -------------------------------------------
    virtual Elem zero() const = 0;
    virtual Elem one() const = 0;
    virtual Elem from_int(const Integer& n) const = 0;

    // --- arithmetic ------------------------------------------------------
    virtual Elem add(const Elem& a, const Elem& b) const = 0;
    virtual Elem negate(const Elem& a) const = 0;
    virtual Elem mul(const Elem& a, const Elem& b) const = 0;
    Elem sub(const Elem& a, const Elem& b) const { return add(a, negate(b)); }
    Elem pow(const Elem& a, unsigned long e) const;

    virtual bool is_zero(const Elem& a) const = 0;
    /** Frozen total order; drives set ordering, tie-breaking and output. */
    virtual std::strong_ordering compare(const Elem& a, const Elem& b) const = 0;
    bool equal(const Elem& a, const Elem& b) const { return compare(a, b) == std::strong_ordering::equal; }
    virtual std::string print(const Elem& a) const = 0;

    // --- divisibility ----------------------------------------------------
    /** Witness c with den*c = num, or nullopt when den does not divide num.
     * den must be nonzero. */
    virtual std::optional<Elem> divide_exact(const Elem& num, const Elem& den) const = 0;

    virtual bool supports_divisors() const = 0;
    /** Dedicated gcd for rings with a fast algorithm (Euclid on Z).  The
     * result must match the generic divisor-set search in reduce_gcd: the
     * canonically least common divisor with the most common divisors.
     * Arguments are nonzero; nullopt defers to the generic search. */
    virtual std::optional<Elem> gcd(const Elem& a, const Elem& b) const { return std::nullopt; }
    DivisorSet divisors(const Elem& a, const SearchCaps& caps = {}) const;
    std::vector<Elem> units(const SearchCaps& caps = {}) const;
    bool is_unit(const Elem& a) const;
    bool are_associates(const Elem& a, const Elem& b, const SearchCaps& caps = {}) const;
    DividesResult divides(const Elem& a, const Elem& b) const;
    Trilean is_prime(const Elem& a, const SearchCaps& caps = {}) const;
    Trilean is_irreducible(const Elem& a, const SearchCaps& caps = {}) const;
    Factorization factor_irreducibles(const Elem& a, const SearchCaps& caps = {}) const;
    /** Divisors of a as all unit multiples of sub-products of an
     * irreducible factorization; defined on UFD-flagged rings only and
     * used as a differential check against the direct enumeration. */
    std::vector<Elem> divisors_from_factorization(const Elem& a, const SearchCaps& caps = {}) const;
    virtual bool is_ufd() const { return false; }

    // --- canonical enumeration (divisor-capable rings only) --------------
    /** Bucketed size: finitely many elements per size, zero iff size 0. */
    virtual Integer size_of(const Elem& a) const;
    virtual std::vector<Elem> elements_of_size(const Integer& s) const;
    /** 0, 1, -1, 2, -2, ... for the integers; size-bucketed elsewhere. */
    Elem enumerate(std::size_t index) const;

    // --- fraction-field superstructure ------------------------------------
    /** Polynomial cover: the free tower the ring's elements are coded in.
     * Expression evaluation happens in Frac(cover), membership second. */
    virtual RingPtr cover() const;
    /** Total embedding cover() -> this ring; defined only for rings whose
     * every cover element is a member (identity covers and Fringe are not
     * in that class — use member()). */
    virtual Elem embed_cover(const Elem& cover_elem) const;
    /** Membership test for the value num/den over cover() (den nonzero;
     * the pair need not be reduced).  Canonical element of this ring, or
     * nullopt when the value lies outside it. */
    virtual std::optional<Elem> member(const Elem& cover_num, const Elem& cover_den) const;
    /** The value of a as a cover fraction: (num, den) with den nonzero and
     * a = num/den.  Right inverse of member up to fraction equality. */
    virtual std::pair<Elem, Elem> lift_cover(const Elem& a) const;

    /** Variable identifiers bound along this construction's tower. */
    virtual std::vector<std::string> bound_vars() const { return {}; }

    void check_tag(const Elem& a) const;

    /** Sort under the canonical order and drop duplicates. */
    std::vector<Elem> sorted_unique(std::vector<Elem> elems) const;

protected:
    /** Members of D(a), unsorted; default throws UnsupportedRing. */
    virtual std::vector<Elem> divisor_members_impl(const Elem& a, const SearchCaps& caps) const;
    virtual std::vector<Elem> unit_set_impl(const SearchCaps& caps) const;
    virtual Trilean is_prime_impl(const Elem& a, const SearchCaps& caps) const = 0;
    /** Default: via the divisor set. */
    virtual Trilean is_irreducible_impl(const Elem& a, const SearchCaps& caps) const;
};

/** Shared constructor check: var is a fresh, well-formed identifier
 * (distinct from everything bound along the base tower and from the
 * quadratic symbol 's'). */
void validate_fresh_var(const Ring& base, const std::string& var);

// Convenience operators (tags checked by the ring).
inline Elem operator+(const Elem& a, const Elem& b) { return a.ring().add(a, b); }
inline Elem operator-(const Elem& a, const Elem& b) { return a.ring().sub(a, b); }
inline Elem operator*(const Elem& a, const Elem& b) { return a.ring().mul(a, b); }
inline Elem operator-(const Elem& a) { return a.ring().negate(a); }
inline bool operator==(const Elem& a, const Elem& b) { return a.ring().equal(a, b); }
inline bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

}  // namespace scffd
