#include "scffd/dest_ring.hpp"

#include <algorithm>
#include <sstream>

#include "scffd/errors.hpp"
#include "scffd/int_ring.hpp"
#include "scffd/primes.hpp"

namespace scffd {

namespace {

/** Exact polynomial division on coefficient vectors over an arbitrary
 * base ring; inputs trimmed, divisor nonempty. */
std::optional<std::vector<Elem>> vec_div_exact(const Ring& base, std::vector<Elem> r,
                                               const std::vector<Elem>& d) {
    if (r.empty()) return std::vector<Elem>{};
    if (r.size() < d.size()) return std::nullopt;
    std::vector<Elem> q(r.size() - d.size() + 1, base.zero());
    const Elem& lead = d.back();
    while (r.size() >= d.size()) {
        auto c = base.divide_exact(r.back(), lead);
        if (!c) return std::nullopt;
        std::size_t shift = r.size() - d.size();
        q[shift] = *c;
        for (std::size_t k = 0; k < d.size(); ++k)
            r[shift + k] = base.sub(r[shift + k], base.mul(*c, d[k]));
        while (!r.empty() && base.is_zero(r.back())) r.pop_back();
        if (r.empty()) return q;
    }
    return std::nullopt;
}

}  // namespace

DestroyRing::DestroyRing(RingPtr base, Elem q, std::string var)
    : base_(std::move(base)), q_(std::move(q)), var_(std::move(var)) {
    sig_ = "Destroy(" + base_->signature() + "," + base_->print(q_) + "," + var_ + ")";
}

std::shared_ptr<const DestroyRing> DestroyRing::create(RingPtr base, Elem q, std::string var) {
    base->check_tag(q);
    validate_fresh_var(*base, var);
    switch (base->is_prime(q)) {
        case Trilean::yes:
            break;
        case Trilean::no:
            throw Error(ErrorKind::validation,
                        "'" + base->print(q) + "' is not prime in '" + base->signature() + "'");
        case Trilean::unsupported:
            throw Error(ErrorKind::validation, "primality of '" + base->print(q) +
                                                   "' is undecided in '" + base->signature() + "'");
    }
    return std::shared_ptr<const DestroyRing>(new DestroyRing(std::move(base), std::move(q), std::move(var)));
}

const DestPayload& DestroyRing::payload(const Elem& e) const {
    check_tag(e);
    return e.payload<DestPayload>();
}

Elem DestroyRing::q_power(std::size_t e) const { return base_->pow(q_, e); }

Elem DestroyRing::make(std::vector<Elem> numerators) const {
    for (const Elem& n : numerators) base_->check_tag(n);
    while (!numerators.empty() && base_->is_zero(numerators.back())) numerators.pop_back();
    auto p = std::make_shared<DestPayload>();
    p->numerators = std::move(numerators);
    return Elem(shared_from_this(), std::move(p));
}

const std::vector<Elem>& DestroyRing::numerators(const Elem& f) const { return payload(f).numerators; }

int DestroyRing::degree(const Elem& f) const {
    return static_cast<int>(payload(f).numerators.size()) - 1;
}

Elem DestroyRing::embed(const Elem& c) const { return make({c}); }

Elem DestroyRing::variable() const { return make({base_->zero(), base_->one()}); }

Elem DestroyRing::zero() const { return make({}); }
Elem DestroyRing::one() const { return embed(base_->one()); }
Elem DestroyRing::from_int(const Integer& n) const { return embed(base_->from_int(n)); }

Elem DestroyRing::add(const Elem& a, const Elem& b) const {
    const auto &pa = payload(a).numerators, &pb = payload(b).numerators;
    std::vector<Elem> out;
    for (std::size_t k = 0; k < std::max(pa.size(), pb.size()); ++k) {
        Elem ca = k < pa.size() ? pa[k] : base_->zero();
        Elem cb = k < pb.size() ? pb[k] : base_->zero();
        out.push_back(base_->add(ca, cb));
    }
    return make(std::move(out));
}

Elem DestroyRing::negate(const Elem& a) const {
    std::vector<Elem> out;
    for (const Elem& c : payload(a).numerators) out.push_back(base_->negate(c));
    return make(std::move(out));
}

Elem DestroyRing::mul(const Elem& a, const Elem& b) const {
    const auto &pa = payload(a).numerators, &pb = payload(b).numerators;
    if (pa.empty() || pb.empty()) return zero();
    // numerator k = sum_{i+j=k} n_i m_j q^{e_k - e_i - e_j}; the exponent
    // is nonnegative for the schedule e_0 = e_1 = 0, e_i = i.
    std::size_t deg = pa.size() + pb.size() - 2;
    std::vector<Elem> qp{base_->one()};
    for (std::size_t e = 1; e <= exponent(deg); ++e) qp.push_back(base_->mul(qp.back(), q_));
    std::vector<Elem> out(deg + 1, base_->zero());
    for (std::size_t i = 0; i < pa.size(); ++i)
        for (std::size_t j = 0; j < pb.size(); ++j) {
            std::size_t k = i + j;
            std::size_t e = exponent(k) - exponent(i) - exponent(j);
            out[k] = base_->add(out[k], base_->mul(base_->mul(pa[i], pb[j]), qp[e]));
        }
    return make(std::move(out));
}

bool DestroyRing::is_zero(const Elem& a) const { return payload(a).numerators.empty(); }

std::strong_ordering DestroyRing::compare(const Elem& a, const Elem& b) const {
    const auto &pa = payload(a).numerators, &pb = payload(b).numerators;
    if (pa.size() != pb.size())
        return pa.size() < pb.size() ? std::strong_ordering::less : std::strong_ordering::greater;
    for (std::size_t k = 0; k < pa.size(); ++k)
        if (auto c = base_->compare(pa[k], pb[k]); c != std::strong_ordering::equal) return c;
    return std::strong_ordering::equal;
}

std::string DestroyRing::print(const Elem& a) const {
    const auto& ns = payload(a).numerators;
    if (ns.empty()) return "0";
    Elem one_ = base_->one();
    Elem minus_one = base_->negate(one_);
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = ns.size(); k-- > 0;) {
        if (base_->is_zero(ns[k])) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << base_->print(ns[k]);
            continue;
        }
        std::string vp = var_;
        if (k > 1) vp += "^" + std::to_string(k);
        std::size_t e = exponent(k);
        if (e == 0) {
            if (base_->equal(ns[k], one_))
                os << vp;
            else if (base_->equal(ns[k], minus_one))
                os << "-" << vp;
            else
                os << parenthesize_compound(base_->print(ns[k])) << "*" << vp;
        } else {
            // canonical presentation n_k / q^{e_k}, shown with q^{e_k} as a value
            os << "(" << parenthesize_compound(base_->print(ns[k])) << "/"
               << parenthesize_compound(base_->print(q_power(e))) << ")*" << vp;
        }
    }
    return os.str();
}

std::optional<Elem> DestroyRing::divide_exact(const Elem& num, const Elem& den) const {
    const auto& pd = payload(den).numerators;
    if (pd.empty()) throw Error(ErrorKind::division_by_zero, "division by zero");
    if (is_zero(num)) return zero();
    const auto& pn = payload(num).numerators;
    if (pn.size() < pd.size()) return std::nullopt;

    // Clear denominators: f = F / q^{e_N}, g = G / q^{e_M} with F, G over
    // the base; then f/g = (F/G) / q^{e_N - e_M}, and F | G exactly in
    // A[x] whenever f/g lies in B.
    std::size_t en = exponent(pn.size() - 1), em = exponent(pd.size() - 1);
    auto clear = [&](const std::vector<Elem>& ns, std::size_t etop) {
        std::vector<Elem> out;
        out.reserve(ns.size());
        for (std::size_t i = 0; i < ns.size(); ++i)
            out.push_back(base_->mul(ns[i], q_power(etop - exponent(i))));
        return out;
    };
    auto t = vec_div_exact(*base_, clear(pn, en), clear(pd, em));
    if (!t) return std::nullopt;

    std::size_t s = en - em;
    std::vector<Elem> m;
    m.reserve(t->size());
    for (std::size_t k = 0; k < t->size(); ++k) {
        std::size_t e = exponent(k);
        if (e >= s) {
            m.push_back(base_->mul((*t)[k], q_power(e - s)));
        } else {
            auto w = base_->divide_exact((*t)[k], q_power(s - e));
            if (!w) return std::nullopt;
            m.push_back(std::move(*w));
        }
    }
    return make(std::move(m));
}

Integer DestroyRing::size_of(const Elem& a) const {
    const auto& ns = payload(a).numerators;
    if (ns.empty()) return 0;
    Integer s = static_cast<int>(ns.size()) - 1;
    for (const Elem& n : ns) s += base_->size_of(n);
    return s;
}

std::vector<Elem> DestroyRing::elements_of_size(const Integer& s) const {
    if (s == 0) return {zero()};
    std::vector<Elem> out;
    for (Integer n = 0; n <= s; ++n) {
        Integer budget = s - n;
        if (n > 0 && budget < 1) break;
        for (auto& ns : coeff_vectors_of_size(base_, static_cast<std::size_t>(n), budget))
            out.push_back(make(std::move(ns)));
    }
    return out;
}

std::vector<std::string> DestroyRing::bound_vars() const {
    std::vector<std::string> v = base_->bound_vars();
    v.push_back(var_);
    return v;
}

RingPtr DestroyRing::cover() const { return PolyRing::create(base_->cover(), var_); }

Elem DestroyRing::embed_cover(const Elem& cover_elem) const {
    auto cov = std::static_pointer_cast<const PolyRing>(cover());
    std::vector<Elem> ns;
    const auto& cs = cov->coeffs(cover_elem);
    for (std::size_t i = 0; i < cs.size(); ++i)
        ns.push_back(base_->mul(base_->embed_cover(cs[i]), q_power(exponent(i))));
    return make(std::move(ns));
}

std::optional<Elem> DestroyRing::member(const Elem& cover_num, const Elem& cover_den) const {
    auto cov = std::static_pointer_cast<const PolyRing>(cover());
    cov->check_tag(cover_num);
    cov->check_tag(cover_den);
    if (cov->is_zero(cover_den))
        throw Error(ErrorKind::division_by_zero, "membership of a fraction with zero denominator");
    if (cov->is_zero(cover_num)) return zero();

    const RingPtr& cbase = cov->base();
    auto lift = [&](const Elem& f) {
        std::vector<Fraction> cs;
        for (const Elem& c : cov->coeffs(f)) cs.push_back(Fraction::of(c));
        return FracPoly(cbase, std::move(cs));
    };
    auto [q, r] = lift(cover_num).divmod(lift(cover_den));
    if (!r.is_zero()) return std::nullopt;

    auto [qn, qd] = base_->lift_cover(q_);
    std::vector<Elem> ns;
    for (std::size_t k = 0; k < q.coeffs().size(); ++k) {
        // coefficient u/v at degree k lies in B iff u q^{e_k} / v is in A
        const Fraction& c = q.coeff(k);
        std::size_t e = exponent(k);
        auto w = base_->member(cbase->mul(c.num(), cbase->pow(qn, e)),
                               cbase->mul(c.den(), cbase->pow(qd, e)));
        if (!w) return std::nullopt;
        ns.push_back(std::move(*w));
    }
    return make(std::move(ns));
}

std::pair<Elem, Elem> DestroyRing::lift_cover(const Elem& a) const {
    auto cov = std::static_pointer_cast<const PolyRing>(cover());
    const RingPtr& cbase = cov->base();
    const auto& ns = payload(a).numerators;
    auto [qn, qd] = base_->lift_cover(q_);

    std::vector<std::pair<Elem, Elem>> lifts;
    lifts.reserve(ns.size());
    for (const Elem& n : ns) lifts.push_back(base_->lift_cover(n));

    std::size_t etop = ns.empty() ? 0 : exponent(ns.size() - 1);
    Elem den = cbase->pow(qn, etop);
    for (const auto& [u, v] : lifts) den = cbase->mul(den, v);

    std::vector<Elem> num;
    num.reserve(lifts.size());
    for (std::size_t i = 0; i < lifts.size(); ++i) {
        std::size_t e = exponent(i);
        Elem c = cbase->mul(lifts[i].first, cbase->pow(qd, e));
        c = cbase->mul(c, cbase->pow(qn, etop - e));
        for (std::size_t j = 0; j < lifts.size(); ++j)
            if (j != i) c = cbase->mul(c, lifts[j].second);
        num.push_back(c);
    }
    return {cov->make(std::move(num)), cov->embed(den)};
}

Elem DestroyRing::eval_at_power(const Elem& f, std::size_t j) const {
    const auto& ns = payload(f).numerators;
    Elem acc = base_->zero();
    for (std::size_t i = 0; i < ns.size(); ++i) {
        std::size_t e = exponent(i);
        if (j * i < e)
            throw Error(ErrorKind::validation, "evaluation point below the degree floor");
        acc = base_->add(acc, base_->mul(ns[i], q_power(j * i - e)));
    }
    return acc;
}

std::vector<Elem> DestroyRing::divisor_members_impl(const Elem& f, const SearchCaps& caps) const {
    const std::size_t n = static_cast<std::size_t>(degree(f));

    // evaluation points q^j, j >= n, skipping the finitely many roots
    std::vector<Elem> nodes;
    std::vector<std::vector<Elem>> axes;
    std::size_t widest = 0;
    for (std::size_t j = n; nodes.size() < n + 1; ++j) {
        Elem value = eval_at_power(f, j);
        if (base_->is_zero(value)) continue;
        nodes.push_back(q_power(j));
        axes.push_back(base_->divisors(value, caps).members);
        if (axes.back().size() > axes[widest].size()) widest = axes.size() - 1;
        if (j > 1'000'000) throw Error(ErrorKind::cap_exceeded, "evaluation point scan ran away");
    }
    std::vector<Elem> units = base_->units(caps);
    axes[widest] = unit_orbit_transversal(*base_, axes[widest], units);

    LagrangeBasis basis(base_, nodes);
    const Elem& den = basis.common_den();
    std::vector<Elem> qp{base_->one()};
    for (std::size_t e = 1; e <= exponent(n); ++e) qp.push_back(base_->mul(qp.back(), q_));

    std::vector<Elem> found;
    kronecker_search(
        basis, axes, caps.max_tuples,
        [&](const std::vector<Elem>& raw) -> std::optional<Elem> {
            std::vector<Elem> ns;
            ns.reserve(raw.size());
            for (std::size_t k = 0; k < raw.size(); ++k) {
                // coefficient raw_k / D = n_k / q^{e_k}
                auto nk = base_->divide_exact(base_->mul(raw[k], qp[exponent(k)]), den);
                if (!nk) return std::nullopt;
                ns.push_back(std::move(*nk));
            }
            return make(std::move(ns));
        },
        [&](const Elem& g) {
            if (divide_exact(f, g)) found.push_back(g);
            return false;
        });

    std::vector<Elem> out;
    out.reserve(found.size() * units.size());
    for (const Elem& g : found)
        for (const Elem& u : units) out.push_back(mul(embed(u), g));
    return out;
}

Trilean DestroyRing::is_prime_impl(const Elem& a, const SearchCaps& caps) const {
    // The construction classifies constants only: associates of q lose
    // primality (q | x*x, q does not divide x); every other prime of the
    // base stays prime, and base non-primes keep their base witnesses.
    if (degree(a) != 0) return Trilean::unsupported;
    const Elem& c = payload(a).numerators[0];
    if (base_->are_associates(c, q_, caps)) return Trilean::no;
    return base_->is_prime(c, caps);
}

RingPtr staged_destroy(const EnumerationSchedule& schedule, const std::vector<std::string>& vars) {
    if (vars.size() != schedule.size())
        throw Error(ErrorKind::validation, "schedule lists " + std::to_string(schedule.size()) +
                                               " primes but " + std::to_string(vars.size()) +
                                               " variables were given");
    RingPtr r = IntRing::get();
    for (std::size_t j = 0; j < schedule.size(); ++j)
        r = DestroyRing::create(r, r->from_int(nth_prime(schedule.entries()[j])), vars[j]);
    return r;
}

bool staged_is_prime(const EnumerationSchedule& schedule, std::size_t index, const StageMode& mode) {
    return !schedule.destroys(index, mode);
}

}  // namespace scffd
