#pragma once

#include <memory>
#include <string>
#include <vector>

#include "scffd/poly_ring.hpp"
#include "scffd/ring.hpp"
#include "scffd/schedule.hpp"

namespace scffd {

struct DestPayload final : Payload {
    std::vector<Elem> numerators;  // over the base ring; back() nonzero
};

/** The subring B of F[x] of polynomials
 *
 *     n_0 + n_1 x + (n_2/q^2) x^2 + ... + (n_m/q^m) x^m
 *
 * for a fixed prime q of the base ring A.  Representation is the
 * numerator sequence (unique: equal powers of q force equal numerators).
 * In B the element q remains irreducible but stops being prime:
 * q | x*x because x*x = (q^2/q^2) x^2, while q does not divide x.
 */
class DestroyRing final : public Ring {
public:
    /** q must be a decided prime of the base ring. */
    static std::shared_ptr<const DestroyRing> create(RingPtr base, Elem q, std::string var);

    const RingPtr& base() const { return base_; }
    const Elem& destroyed_prime() const { return q_; }
    const std::string& var() const { return var_; }

    RingKind kind() const override { return RingKind::destroy; }
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

    Integer size_of(const Elem& a) const override;
    std::vector<Elem> elements_of_size(const Integer& s) const override;

    RingPtr cover() const override;
    Elem embed_cover(const Elem& cover_elem) const override;
    std::optional<Elem> member(const Elem& cover_num, const Elem& cover_den) const override;
    std::pair<Elem, Elem> lift_cover(const Elem& a) const override;
    std::vector<std::string> bound_vars() const override;

    // --- element access ------------------------------------------------------
    /** From the numerator sequence (coefficient i is numerators[i]/q^{e_i}). */
    Elem make(std::vector<Elem> numerators) const;
    const std::vector<Elem>& numerators(const Elem& f) const;
    int degree(const Elem& f) const;
    Elem embed(const Elem& c) const;
    Elem variable() const;

    /** Exponent schedule of the construction: 0, 0, 2, 3, 4, ... */
    static std::size_t exponent(std::size_t i) { return i < 2 ? 0 : i; }

    /** Exact value of f at the base point q^j (always lands in A for
     * j >= 1, and for j = 0 when f is constant-compatible;
     * e_i <= j*i is required and checked). */
    Elem eval_at_power(const Elem& f, std::size_t j) const;

protected:
    std::vector<Elem> divisor_members_impl(const Elem& a, const SearchCaps& caps) const override;
    Trilean is_prime_impl(const Elem& a, const SearchCaps& caps) const override;

private:
    DestroyRing(RingPtr base, Elem q, std::string var);

    const DestPayload& payload(const Elem& e) const;
    Elem q_power(std::size_t e) const;

    RingPtr base_;
    Elem q_;
    std::string var_;
    std::string sig_;
};

/** The stage-k ring A_k of the prime-destruction tower: nested Destroy
 * constructions over the integers, stage j destroying p_{schedule[j]}
 * with variable vars[j]. */
RingPtr staged_destroy(const EnumerationSchedule& schedule, const std::vector<std::string>& vars);

/** Primality of p_i in the staged tower: true iff i is not among the
 * indices destroyed by the queried stage (the whole schedule in limit
 * mode). */
bool staged_is_prime(const EnumerationSchedule& schedule, std::size_t index, const StageMode& mode);

}  // namespace scffd
