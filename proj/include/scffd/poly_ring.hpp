#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "scffd/frac_poly.hpp"
#include "scffd/ring.hpp"

namespace scffd {

struct PolyPayload final : Payload {
    std::vector<Elem> coeffs;  // base-ring elements; back() nonzero
};

/** Precomputed Lagrange data for a fixed node set a_0..a_n over a base
 * ring A.  Writing L_i(x) = N_i(x)/D with N_i in A[x] and a single common
 * denominator D in A, the interpolant through values b_i is
 *
 *     p(x) = (sum_i b_i * N_i(x)) / D.
 *
 * Candidate filtering can therefore test "coefficient k lies in A" as
 * "D divides the raw numerator" with ring arithmetic only. */
class LagrangeBasis {
public:
    LagrangeBasis(RingPtr base, std::vector<Elem> nodes);

    const RingPtr& base() const { return base_; }
    const std::vector<Elem>& nodes() const { return nodes_; }
    std::size_t count() const { return nodes_.size(); }
    const Elem& common_den() const { return den_; }
    /** numerators()[i][k] = coefficient of x^k in N_i; all rows have
     * length count(). */
    const std::vector<std::vector<Elem>>& numerators() const { return numer_; }

    /** Raw numerator coefficients of the combination through `values`. */
    std::vector<Elem> raw_coeffs(const std::vector<Elem>& values) const;

    /** The exact interpolant through (nodes()[i], values[i]). */
    FracPoly interpolate(const std::vector<Elem>& values) const;

private:
    RingPtr base_;
    std::vector<Elem> nodes_;
    std::vector<std::vector<Elem>> numer_;
    Elem den_;
};

/** Exact Lagrange interpolation through distinct base-ring nodes; degree
 * of the result is at most points.size() - 1. */
FracPoly interpolate(const RingPtr& base, const std::vector<std::pair<Elem, Elem>>& points);

/** Odometer search over one candidate value per interpolation node.
 * For every tuple in the cartesian product of `candidates`, `accept` sees
 * the raw numerator coefficients (denominator basis.common_den()) and
 * returns the target-ring element when the interpolant lies in the target
 * ring; accepted elements go to `visit`, which returns true to stop the
 * search early.  Throws SearchCapExceeded when the product of candidate
 * counts exceeds max_tuples. */
void kronecker_search(const LagrangeBasis& basis,
                      const std::vector<std::vector<Elem>>& candidates, std::uint64_t max_tuples,
                      const std::function<std::optional<Elem>(const std::vector<Elem>&)>& accept,
                      const std::function<bool(const Elem&)>& visit);

/** Keep one representative (the canonically least) of each unit orbit
 * {u*d : u in units}; used to shrink the widest candidate axis, with the
 * orbit closure restored on the found divisors. */
std::vector<Elem> unit_orbit_transversal(const Ring& r, const std::vector<Elem>& elems,
                                         const std::vector<Elem>& units);

/** All coefficient vectors of length deg+1 over `base` whose sizes sum to
 * `budget`, with a nonzero leading entry when deg > 0; drives the size
 * bucketing of the canonical enumeration of coefficient-sequence rings. */
std::vector<std::vector<Elem>> coeff_vectors_of_size(const RingPtr& base, std::size_t deg,
                                                     const Integer& budget);

/** Polynomial ring A[x] over a divisor-capable base ring. */
class PolyRing final : public Ring {
public:
    static std::shared_ptr<const PolyRing> create(RingPtr base, std::string var);

    const RingPtr& base() const { return base_; }
    const std::string& var() const { return var_; }

    RingKind kind() const override { return RingKind::polynomial; }
    const std::string& signature() const override { return sig_; }

    Elem zero() const override;
    Elem one() const override;
    Elem from_int(const Integer& n) const override;

    Elem add(const Elem& a, const Elem& b) const override;
    Elem negate(const Elem& a) const override;
    Elem mul(const Elem& a, const Elem& b) const override;
    bool is_zero(const Elem& a) const override;
    std::strong_ordering compare(const Elem& a, const Elem& b) const override;
    std::string print(const Elem& a) const override;
    std::optional<Elem> divide_exact(const Elem& num, const Elem& den) const override;

    bool supports_divisors() const override { return true; }
    bool is_ufd() const override { return base_->is_ufd(); }

    Integer size_of(const Elem& a) const override;
    std::vector<Elem> elements_of_size(const Integer& s) const override;

    RingPtr cover() const override;
    Elem embed_cover(const Elem& cover_elem) const override;
    std::optional<Elem> member(const Elem& cover_num, const Elem& cover_den) const override;
    std::pair<Elem, Elem> lift_cover(const Elem& a) const override;
    std::vector<std::string> bound_vars() const override;

    // --- polynomial access -------------------------------------------------
    Elem make(std::vector<Elem> coeffs) const;
    const std::vector<Elem>& coeffs(const Elem& f) const;
    int degree(const Elem& f) const;
    Elem coeff(const Elem& f, std::size_t k) const;
    Elem embed(const Elem& c) const;
    Elem monomial(const Elem& c, std::size_t k) const;
    Elem variable() const { return monomial(base_->one(), 1); }
    Elem evaluate(const Elem& f, const Elem& point) const;

    /** The first `count` base elements, in canonical enumeration order,
     * at which f does not vanish. */
    std::vector<Elem> choose_eval_points(const Elem& f, std::size_t count) const;

    /** FracPoly view of f (coefficients as c/1). */
    FracPoly to_frac(const Elem& f) const;
    /** Inverse of to_frac when every coefficient lies in the base. */
    std::optional<Elem> from_frac(const FracPoly& p) const;

protected:
    std::vector<Elem> divisor_members_impl(const Elem& a, const SearchCaps& caps) const override;
    Trilean is_prime_impl(const Elem& a, const SearchCaps& caps) const override;

private:
    PolyRing(RingPtr base, std::string var);

    RingPtr base_;
    std::string var_;
    std::string sig_;

    const PolyPayload& payload(const Elem& e) const;
};

}  // namespace scffd
