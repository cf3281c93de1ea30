#pragma once

#include "scffd/ring.hpp"

namespace scffd {

struct IntPayload : Payload {
    Integer value;
    explicit IntPayload(Integer v) : value(std::move(v)) {}
};

/** The rational integers: the base case of every construction. */
class IntRing : public Ring {
public:
    static std::shared_ptr<const IntRing> get();

    RingKind kind() const override { return RingKind::integers; }
    const std::string& signature() const override;

    Elem zero() const override;
    Elem one() const override;
    Elem from_int(const Integer& n) const override;
    const Integer& value(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const override;
    Elem negate(const Elem& a) const override;
    Elem mul(const Elem& a, const Elem& b) const override;
    bool is_zero(const Elem& a) const override;
    std::strong_ordering compare(const Elem& a, const Elem& b) const override;
    std::string print(const Elem& a) const override;

    std::optional<Elem> divide_exact(const Elem& num, const Elem& den) const override;
    bool supports_divisors() const override { return true; }
    /** Euclid; the positive gcd is the canonically least maximizer. */
    std::optional<Elem> gcd(const Elem& a, const Elem& b) const override;
    bool is_ufd() const override { return true; }

    Integer size_of(const Elem& a) const override;
    std::vector<Elem> elements_of_size(const Integer& s) const override;

protected:
    std::vector<Elem> divisor_members_impl(const Elem& a, const SearchCaps& caps) const override;
    Trilean is_prime_impl(const Elem& a, const SearchCaps& caps) const override;

private:
    IntRing() = default;
};

}  // namespace scffd
