#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "scffd/ring.hpp"
#include "scffd/schedule.hpp"

namespace scffd {

/** Sparse Laurent term list: exponent vector (one signed entry per stage
 * variable) -> coefficient; sorted ascending lex, no zero coefficients. */
using LaurentTerms = std::vector<std::pair<std::vector<long long>, Rational>>;

struct LaurentPayload final : Payload {
    LaurentTerms terms;
};

/** The stage-k ring R_k = Z[x_0, p_{a(0)}/x_0][x_1, p_{a(1)}/x_1]...
 *
 * Realized flat inside Q(x_0..x_{k-1}): an element is a Laurent
 * polynomial whose coefficient at exponent vector v is an integer
 * divisible by prod_j p_{a(j)}^{max(0,-v_j)}.  Scheduled primes factor as
 * p = x_j * (p/x_j), so they stop being irreducible; units stay {1,-1}.
 *
 * No divisor function is exposed: the construction is not presented as an
 * SCFFD, and only the scheduled integer primes get an irreducibility
 * answer (everything else is Unsupported).
 */
class LaurentRing final : public Ring {
public:
    static std::shared_ptr<const LaurentRing> create(EnumerationSchedule schedule,
                                                     std::vector<std::string> vars);

    const EnumerationSchedule& schedule() const { return sched_; }
    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t stages() const { return sched_.size(); }
    /** p_{schedule[j]} */
    Integer stage_prime(std::size_t j) const;
    /** The stage-k prefix ring R_k. */
    std::shared_ptr<const LaurentRing> prefix(std::size_t k) const;

    RingKind kind() const override { return RingKind::laurent; }
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
    std::vector<std::string> bound_vars() const override { return vars_; }

    // --- element construction --------------------------------------------
    /** Validating entry point: throws NotInRing when the term list breaks
     * the divisibility constraint. */
    Elem make(LaurentTerms terms) const;
    const LaurentTerms& terms(const Elem& a) const;
    /** x_j */
    Elem variable(std::size_t j) const;
    /** p_{a(j)} / x_j, the scheduled cofactor generator. */
    Elem cofactor(std::size_t j) const;

    /** Does the term list satisfy the membership constraint? */
    bool admissible(const LaurentTerms& terms) const;

protected:
    std::vector<Elem> unit_set_impl(const SearchCaps& caps) const override;
    Trilean is_prime_impl(const Elem& a, const SearchCaps& caps) const override;
    Trilean is_irreducible_impl(const Elem& a, const SearchCaps& caps) const override;

private:
    LaurentRing(EnumerationSchedule schedule, std::vector<std::string> vars);

    const LaurentPayload& payload(const Elem& e) const;
    Elem make_unchecked(LaurentTerms terms) const;

    EnumerationSchedule sched_;
    std::vector<std::string> vars_;
    std::vector<Integer> primes_;  // p_{schedule[j]}
    std::string sig_;
};

/** Outcome of the staged irreducibility query: when the prime is
 * destroyed, the two witness factors x_j and p/x_j (in the queried stage
 * ring), each certified a nonunit. */
struct IrredStatus {
    bool irreducible = true;
    std::optional<std::pair<Elem, Elem>> witness;
};

/** Irreducibility of p_index in the stage ring selected by mode (the full
 * schedule in limit mode), per the staged characterization. */
IrredStatus irred_status(const LaurentRing& ring, std::size_t index, const StageMode& mode);

}  // namespace scffd
