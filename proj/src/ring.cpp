#include "scffd/ring.hpp"

#include <algorithm>
#include <cctype>

namespace scffd {

void validate_fresh_var(const Ring& base, const std::string& var) {
    bool ok = !var.empty() && (std::isalpha(static_cast<unsigned char>(var[0])) || var[0] == '_');
    for (char c : var)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') ok = false;
    if (!ok) throw Error(ErrorKind::validation, "'" + var + "' is not a valid variable name");
    if (var == "s")
        throw Error(ErrorKind::validation, "variable name 's' is reserved for the quadratic symbol");
    for (const std::string& bound : base.bound_vars())
        if (bound == var)
            throw Error(ErrorKind::validation,
                        "variable '" + var + "' is already bound in '" + base.signature() + "'");
}

bool DivisorSet::contains(const Elem& e) const {
    const Ring& r = target.ring();
    auto it = std::lower_bound(members.begin(), members.end(), e, [&](const Elem& x, const Elem& y) {
        return r.compare(x, y) == std::strong_ordering::less;
    });
    return it != members.end() && r.equal(*it, e);
}

void Ring::check_tag(const Elem& a) const {
    if (!a.valid() || a.ring().signature() != signature())
        throw Error(ErrorKind::tag_mismatch,
                    "element tagged '" + (a.valid() ? a.ring().signature() : std::string("<null>")) +
                        "' used in ring '" + signature() + "'");
}

Elem Ring::pow(const Elem& a, unsigned long e) const {
    Elem r = one(), b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

std::vector<Elem> Ring::sorted_unique(std::vector<Elem> elems) const {
    std::sort(elems.begin(), elems.end(), [this](const Elem& a, const Elem& b) {
        return compare(a, b) == std::strong_ordering::less;
    });
    elems.erase(std::unique(elems.begin(), elems.end(),
                            [this](const Elem& a, const Elem& b) { return equal(a, b); }),
                elems.end());
    return elems;
}

std::vector<Elem> Ring::divisor_members_impl(const Elem&, const SearchCaps&) const {
    throw Error(ErrorKind::unsupported_ring, "ring '" + signature() + "' has no divisor function");
}

DivisorSet Ring::divisors(const Elem& a, const SearchCaps& caps) const {
    check_tag(a);
    if (is_zero(a)) throw Error(ErrorKind::zero_argument, "divisors of zero are not defined");
    return DivisorSet{a, sorted_unique(divisor_members_impl(a, caps))};
}

std::vector<Elem> Ring::unit_set_impl(const SearchCaps& caps) const {
    // U(A) = D(1)
    return divisor_members_impl(one(), caps);
}

std::vector<Elem> Ring::units(const SearchCaps& caps) const { return sorted_unique(unit_set_impl(caps)); }

bool Ring::is_unit(const Elem& a) const {
    check_tag(a);
    if (is_zero(a)) return false;
    return divide_exact(one(), a).has_value();
}

bool Ring::are_associates(const Elem& a, const Elem& b, const SearchCaps& caps) const {
    check_tag(a);
    check_tag(b);
    if (is_zero(a) || is_zero(b)) return is_zero(a) && is_zero(b);
    for (const Elem& u : units(caps))
        if (equal(mul(a, u), b)) return true;
    return false;
}

DividesResult Ring::divides(const Elem& a, const Elem& b) const {
    check_tag(a);
    check_tag(b);
    if (is_zero(a)) return {is_zero(b), is_zero(b) ? std::optional<Elem>(zero()) : std::nullopt};
    if (is_zero(b)) return {true, zero()};
    auto q = divide_exact(b, a);
    return {q.has_value(), q};
}

Trilean Ring::is_prime(const Elem& a, const SearchCaps& caps) const {
    check_tag(a);
    if (is_zero(a) || is_unit(a)) return Trilean::no;
    return is_prime_impl(a, caps);
}

Trilean Ring::is_irreducible(const Elem& a, const SearchCaps& caps) const {
    check_tag(a);
    if (is_zero(a) || is_unit(a)) return Trilean::no;
    return is_irreducible_impl(a, caps);
}

Trilean Ring::is_irreducible_impl(const Elem& a, const SearchCaps& caps) const {
    // a (nonzero, nonunit) is irreducible iff every divisor is a unit or
    // an associate of a.
    DivisorSet d = divisors(a, caps);
    for (const Elem& m : d.members) {
        if (is_unit(m) || are_associates(m, a, caps)) continue;
        return Trilean::no;
    }
    return Trilean::yes;
}

Factorization Ring::factor_irreducibles(const Elem& a, const SearchCaps& caps) const {
    check_tag(a);
    if (is_zero(a)) throw Error(ErrorKind::zero_argument, "cannot factor zero");
    if (is_unit(a)) throw Error(ErrorKind::unit_argument, "cannot factor a unit");

    std::vector<Elem> factors;
    // Split off the canonically least nonunit proper divisor; the divisor
    // set of each part is strictly smaller, so this terminates.
    auto split = [&](auto&& self, const Elem& x) -> void {
        DivisorSet d = divisors(x, caps);
        std::optional<Elem> least;
        for (const Elem& m : d.members) {
            if (is_unit(m) || are_associates(m, x, caps)) continue;
            if (!least || compare(m, *least) == std::strong_ordering::less) least = m;
        }
        if (!least) {
            factors.push_back(x);
            return;
        }
        Elem rest = *divide_exact(x, *least);
        self(self, *least);
        self(self, rest);
    };
    split(split, a);

    Elem prod = one();
    for (const Elem& f : factors) prod = mul(prod, f);
    auto u = divide_exact(a, prod);
    if (!u || !is_unit(*u))
        throw Error(ErrorKind::validation, "internal: factorization does not multiply back");
    return Factorization{*u, std::move(factors)};
}

std::vector<Elem> Ring::divisors_from_factorization(const Elem& a, const SearchCaps& caps) const {
    check_tag(a);
    if (!is_ufd())
        throw Error(ErrorKind::not_ufd, "ring '" + signature() + "' is not flagged as a UFD");
    if (is_zero(a)) throw Error(ErrorKind::zero_argument, "divisors of zero are not defined");
    std::vector<Elem> us = units(caps);
    if (is_unit(a)) return us;

    Factorization f = factor_irreducibles(a, caps);
    // Group factors into associate classes.
    std::vector<std::pair<Elem, unsigned>> classes;
    for (const Elem& p : f.factors) {
        bool found = false;
        for (auto& [rep, count] : classes)
            if (are_associates(p, rep, caps)) {
                ++count;
                found = true;
                break;
            }
        if (!found) classes.emplace_back(p, 1);
    }

    // Every divisor is a unit times a sub-product of the factorization.
    std::vector<Elem> products{one()};
    for (auto& [rep, count] : classes) {
        std::vector<Elem> next;
        for (const Elem& base : products) {
            Elem acc = base;
            next.push_back(acc);
            for (unsigned i = 0; i < count; ++i) {
                acc = mul(acc, rep);
                next.push_back(acc);
            }
        }
        products = std::move(next);
    }
    std::vector<Elem> out;
    for (const Elem& p : products)
        for (const Elem& u : us) out.push_back(mul(u, p));
    return sorted_unique(std::move(out));
}

Integer Ring::size_of(const Elem&) const {
    throw Error(ErrorKind::unsupported_ring, "ring '" + signature() + "' has no canonical enumeration");
}

std::vector<Elem> Ring::elements_of_size(const Integer&) const {
    throw Error(ErrorKind::unsupported_ring, "ring '" + signature() + "' has no canonical enumeration");
}

Elem Ring::enumerate(std::size_t index) const {
    Integer s = 0;
    std::size_t seen = 0;
    while (true) {
        std::vector<Elem> bucket = sorted_unique(elements_of_size(s));
        if (seen + bucket.size() > index) return bucket[index - seen];
        seen += bucket.size();
        ++s;
        if (s > 1'000'000)
            throw Error(ErrorKind::cap_exceeded, "canonical enumeration ran away");
    }
}

RingPtr Ring::cover() const { return shared_from_this(); }

std::pair<Elem, Elem> Ring::lift_cover(const Elem& a) const {
    check_tag(a);
    return {a, one()};
}

Elem Ring::embed_cover(const Elem& cover_elem) const {
    check_tag(cover_elem);
    return cover_elem;
}

std::optional<Elem> Ring::member(const Elem& cover_num, const Elem& cover_den) const {
    // Default for rings that are their own cover: b | a decides a/b.
    cover()->check_tag(cover_num);
    cover()->check_tag(cover_den);
    if (cover()->is_zero(cover_den))
        throw Error(ErrorKind::division_by_zero, "membership of a fraction with zero denominator");
    return divide_exact(cover_num, cover_den);
}

}  // namespace scffd
