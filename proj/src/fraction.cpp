#include "scffd/fraction.hpp"

#include <cctype>

namespace scffd {

Elem reduce_gcd(const Ring& r, const Elem& a, const Elem& b, const SearchCaps& caps) {
    r.check_tag(a);
    r.check_tag(b);
    if (r.is_zero(a) && r.is_zero(b))
        throw Error(ErrorKind::zero_argument, "gcd of zero and zero is not defined");
    if (r.is_zero(a)) return b;
    if (r.is_zero(b)) return a;
    if (auto g = r.gcd(a, b)) return *g;

    DivisorSet da = r.divisors(a, caps);
    DivisorSet db = r.divisors(b, caps);
    std::vector<Elem> common;
    for (const Elem& d : da.members)
        if (db.contains(d)) common.push_back(d);
    DivisorSet s{a, common};  // members inherit sorted order from da

    std::optional<Elem> best;
    std::size_t best_count = 0;
    for (const Elem& cand : common) {
        std::size_t count = 0;
        for (const Elem& d : r.divisors(cand, caps).members)
            if (s.contains(d)) ++count;
        // strict improvement keeps the canonically least maximizer
        if (!best || count > best_count) {
            best = cand;
            best_count = count;
        }
    }
    return *best;
}

std::pair<Elem, Elem> reduce_pair(const Ring& r, const Elem& a, const Elem& b, const SearchCaps& caps) {
    r.check_tag(a);
    r.check_tag(b);
    if (r.is_zero(b)) throw Error(ErrorKind::division_by_zero, "denominator is zero");
    if (r.is_zero(a)) return {r.zero(), r.one()};

    Elem g = reduce_gcd(r, a, b, caps);
    Elem c = *r.divide_exact(a, g);
    Elem d = *r.divide_exact(b, g);
    return {c, d};
}

Fraction::Fraction(Elem num, Elem den, const SearchCaps& caps) : num_(std::move(num)), den_(std::move(den)) {
    const Ring& r = num_.ring();
    r.check_tag(den_);
    if (r.is_zero(den_)) throw Error(ErrorKind::division_by_zero, "denominator is zero");
    auto [c, d] = reduce_pair(r, num_, den_, caps);
    // Unit-normalize the denominator within its associate class.
    Elem bestd = d, bestn = c;
    for (const Elem& u : r.units(caps)) {
        Elem ud = r.mul(u, d);
        if (r.compare(ud, bestd) == std::strong_ordering::less) {
            bestd = ud;
            bestn = r.mul(u, c);
        }
    }
    num_ = std::move(bestn);
    den_ = std::move(bestd);
}

Fraction Fraction::of(Elem value) {
    const Ring& r = value.ring();
    return Fraction(std::move(value), r.one());
}

bool Fraction::is_one() const { return base().equal(num_, den_); }

Fraction Fraction::add(const Fraction& o) const {
    const Ring& r = base();
    o.check_base(r);
    return Fraction(r.add(r.mul(num_, o.den_), r.mul(o.num_, den_)), r.mul(den_, o.den_));
}

Fraction Fraction::sub(const Fraction& o) const { return add(o.neg()); }

Fraction Fraction::mul(const Fraction& o) const {
    const Ring& r = base();
    o.check_base(r);
    return Fraction(r.mul(num_, o.num_), r.mul(den_, o.den_));
}

Fraction Fraction::div(const Fraction& o) const {
    const Ring& r = base();
    o.check_base(r);
    if (o.is_zero()) throw Error(ErrorKind::division_by_zero, "division by zero fraction");
    return Fraction(r.mul(num_, o.den_), r.mul(den_, o.num_));
}

Fraction Fraction::neg() const {
    const Ring& r = base();
    Fraction out = *this;
    out.num_ = r.negate(num_);
    return out;
}

Fraction Fraction::inv() const {
    const Ring& r = base();
    if (is_zero()) throw Error(ErrorKind::division_by_zero, "zero fraction has no inverse");
    return Fraction(den_, num_);
}

bool Fraction::equals(const Fraction& o) const {
    const Ring& r = base();
    o.check_base(r);
    return r.equal(r.mul(num_, o.den_), r.mul(o.num_, den_));
}

std::strong_ordering Fraction::order(const Fraction& o) const {
    const Ring& r = base();
    o.check_base(r);
    if (auto c = r.compare(num_, o.num_); c != std::strong_ordering::equal) return c;
    return r.compare(den_, o.den_);
}

std::optional<Elem> Fraction::in_base() const { return base().divide_exact(num_, den_); }

void Fraction::check_base(const Ring& expected) const {
    if (base().signature() != expected.signature())
        throw Error(ErrorKind::tag_mismatch, "fraction over '" + base().signature() +
                                                 "' used where '" + expected.signature() + "' expected");
}

std::string parenthesize_compound(const std::string& printed) {
    bool bare = !printed.empty();
    for (std::size_t i = 0; i < printed.size(); ++i) {
        char c = printed[i];
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || (c == '-' && i == 0)) continue;
        bare = false;
        break;
    }
    return bare ? printed : "(" + printed + ")";
}

std::string Fraction::print() const {
    const Ring& r = base();
    if (r.is_unit(den_)) {
        // canonical form already folded the unit into the numerator
        if (r.equal(den_, r.one())) return r.print(num_);
    }
    return parenthesize_compound(r.print(num_)) + "/" + parenthesize_compound(r.print(den_));
}

}  // namespace scffd
