#pragma once

#include "scffd/ring.hpp"

namespace scffd {

struct QuadPayload : Payload {
    Integer a, b;  // a + b*sqrt(-d)
    QuadPayload(Integer a_, Integer b_) : a(std::move(a_)), b(std::move(b_)) {}
};

/** Z[sqrt(-d)] for positive squarefree d.
 *
 * The multiplicative norm N(a + b*sqrt(-d)) = a^2 + d*b^2 bounds divisor
 * searches; primality is decided by exhaustively checking the finite
 * quotient ring (N(z) elements) for zero divisors.
 */
class QuadRing : public Ring {
public:
    static std::shared_ptr<const QuadRing> create(const Integer& d);

    RingKind kind() const override { return RingKind::quadratic; }
    const std::string& signature() const override { return sig_; }
    const Integer& d() const { return d_; }

    Elem zero() const override;
    Elem one() const override;
    Elem from_int(const Integer& n) const override;
    Elem make(const Integer& a, const Integer& b) const;
    /** sqrt(-d) */
    Elem root() const { return make(0, 1); }

    Elem add(const Elem& x, const Elem& y) const override;
    Elem negate(const Elem& x) const override;
    Elem mul(const Elem& x, const Elem& y) const override;
    bool is_zero(const Elem& x) const override;
    std::strong_ordering compare(const Elem& x, const Elem& y) const override;
    std::string print(const Elem& x) const override;

    Integer norm(const Elem& x) const;
    std::vector<Elem> elements_of_norm(const Integer& n) const;

    std::optional<Elem> divide_exact(const Elem& num, const Elem& den) const override;
    bool supports_divisors() const override { return true; }

    Integer size_of(const Elem& x) const override { return norm(x); }
    std::vector<Elem> elements_of_size(const Integer& s) const override { return elements_of_norm(s); }

protected:
    std::vector<Elem> divisor_members_impl(const Elem& a, const SearchCaps& caps) const override;
    Trilean is_prime_impl(const Elem& a, const SearchCaps& caps) const override;

private:
    explicit QuadRing(Integer d);
    const QuadPayload& payload(const Elem& x) const;

    Integer d_;
    std::string sig_;
};

}  // namespace scffd
