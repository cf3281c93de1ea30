#include "scffd/int_ring.hpp"

#include "scffd/primes.hpp"

namespace scffd {

std::shared_ptr<const IntRing> IntRing::get() {
    static std::shared_ptr<const IntRing> instance(new IntRing());
    return instance;
}

const std::string& IntRing::signature() const {
    static const std::string sig = "Z";
    return sig;
}

Elem IntRing::from_int(const Integer& n) const {
    return Elem(shared_from_this(), std::make_shared<IntPayload>(n));
}

Elem IntRing::zero() const { return from_int(0); }
Elem IntRing::one() const { return from_int(1); }

const Integer& IntRing::value(const Elem& a) const {
    check_tag(a);
    return a.payload<IntPayload>().value;
}

Elem IntRing::add(const Elem& a, const Elem& b) const { return from_int(value(a) + value(b)); }
Elem IntRing::negate(const Elem& a) const { return from_int(-value(a)); }
Elem IntRing::mul(const Elem& a, const Elem& b) const { return from_int(value(a) * value(b)); }
bool IntRing::is_zero(const Elem& a) const { return value(a) == 0; }

std::strong_ordering IntRing::compare(const Elem& a, const Elem& b) const {
    return magnitude_order(value(a), value(b));
}

std::string IntRing::print(const Elem& a) const { return value(a).str(); }

std::optional<Elem> IntRing::divide_exact(const Elem& num, const Elem& den) const {
    const Integer& d = value(den);
    if (d == 0) throw Error(ErrorKind::division_by_zero, "division by zero");
    const Integer& n = value(num);
    if (n % d != 0) return std::nullopt;
    return from_int(n / d);
}

std::optional<Elem> IntRing::gcd(const Elem& a, const Elem& b) const {
    Integer g = boost::multiprecision::gcd(value(a), value(b));
    if (g == 0) return std::nullopt;
    return from_int(g);
}

std::vector<Elem> IntRing::divisor_members_impl(const Elem& a, const SearchCaps&) const {
    Integer n = abs_int(value(a));
    std::vector<Elem> out;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        Integer e = n / d;
        out.push_back(from_int(d));
        out.push_back(from_int(-d));
        if (e != d) {
            out.push_back(from_int(e));
            out.push_back(from_int(-e));
        }
    }
    return out;
}

Trilean IntRing::is_prime_impl(const Elem& a, const SearchCaps&) const {
    return to_trilean(is_prime_int(value(a)));
}

Integer IntRing::size_of(const Elem& a) const { return abs_int(value(a)); }

std::vector<Elem> IntRing::elements_of_size(const Integer& s) const {
    if (s == 0) return {zero()};
    return {from_int(s), from_int(-s)};
}

}  // namespace scffd
