#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "scffd/frac_poly.hpp"
#include "scffd/ring.hpp"

namespace scffd {

/** A = R + yR + y^2 F[y]: constant and linear coefficients in the base
 * ring R, everything above free over its fraction field F. */
struct FringePayload final : Payload {
    Elem c0, c1;                   // base-ring coefficients of y^0, y^1
    std::vector<Fraction> higher;  // over core = cover(R); slot k holds y^{k+2}; back nonzero
};

/** The fringe construction over R = Z or a staged Laurent ring.
 *
 * Primality in A is totally decidable: p is prime iff it has positive
 * degree, is irreducible over F as a univariate polynomial, and p(0) is
 * a unit of R.  Every nonzero nonunit p with p(0) not a unit is exposed
 * as non-prime by an explicit fraction-witness f with p*f in A, f not.
 * Divisor enumeration is not offered here.
 */
class FringeRing final : public Ring {
public:
    static std::shared_ptr<const FringeRing> create(RingPtr base, std::string var);

    const RingPtr& base() const { return base_; }
    /** cover(R): the SCFFD over which coefficient fractions live. */
    const RingPtr& core() const { return core_; }
    const std::string& var() const { return var_; }

    RingKind kind() const override { return RingKind::fringe; }
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

    bool supports_divisors() const override { return false; }

    RingPtr cover() const override;
    Elem embed_cover(const Elem& cover_elem) const override;
    std::optional<Elem> member(const Elem& cover_num, const Elem& cover_den) const override;
    std::pair<Elem, Elem> lift_cover(const Elem& a) const override;
    std::vector<std::string> bound_vars() const override;

    // --- element access ----------------------------------------------------
    Elem make(Elem c0, Elem c1, std::vector<Fraction> higher) const;
    Elem embed(const Elem& base_elem) const;
    /** -1 for zero. */
    int degree(const Elem& f) const;
    const Elem& coeff0(const Elem& f) const;
    const Elem& coeff1(const Elem& f) const;
    const std::vector<Fraction>& higher(const Elem& f) const;
    /** Coefficient of y^k as a fraction over the core (any k). */
    Fraction coeff_frac(const Elem& f, std::size_t k) const;

    FracPoly to_frac(const Elem& f) const;
    /** Membership test for a fraction-coefficient polynomial: the low two
     * coefficients must land in R. */
    std::optional<Elem> from_frac(const FracPoly& p) const;

    /** Irreducibility of f over the fraction field F of R, decided by
     * clearing to a primitive polynomial over the core and running the
     * finite factor search (Gauss direction).  Errors: ConstantArgument
     * for degree < 1; CapExceeded per the search caps. */
    bool irreducible_over_field(const Elem& f, const SearchCaps& caps = {}) const;

    /** Explicit non-primality witness: f in F[y] with p*f in A but f not
     * in A (f = y/p(0), or y/2 when p(0) = 0).  Both facts are re-checked
     * before returning.  Errors: ZeroArgument on zero;
     * ArgumentIsPrimeCandidate when p(0) is a unit of R. */
    FracPoly not_prime_witness(const Elem& p) const;

protected:
    std::vector<Elem> unit_set_impl(const SearchCaps& caps) const override;
    Trilean is_prime_impl(const Elem& a, const SearchCaps& caps) const override;
    Trilean is_irreducible_impl(const Elem& a, const SearchCaps& caps) const override;

private:
    FringeRing(RingPtr base, std::string var);

    const FringePayload& payload(const Elem& e) const;
    Fraction core_zero() const;
    Fraction lift_frac(const Elem& base_elem) const;

    RingPtr base_;
    RingPtr core_;
    std::string var_;
    std::string sig_;
};

}  // namespace scffd
