#include "scffd/fringe_ring.hpp"

#include <algorithm>
#include <utility>

#include "scffd/int_ring.hpp"
#include "scffd/poly_ring.hpp"

namespace scffd {

namespace {

/** Largest integer magnitude appearing in an element of a polynomial
 * tower over the integers. */
Integer coeff_height(const Ring& r, const Elem& e) {
    if (r.kind() == RingKind::integers) return abs_int(static_cast<const IntRing&>(r).value(e));
    const auto& pr = static_cast<const PolyRing&>(r);
    Integer h = 0;
    for (const Elem& c : pr.coeffs(e)) h = std::max(h, coeff_height(*pr.base(), c));
    return h;
}

}  // namespace

FringeRing::FringeRing(RingPtr base, std::string var)
    : base_(std::move(base)), core_(base_->cover()), var_(std::move(var)) {
    sig_ = "Fringe(" + base_->signature() + "," + var_ + ")";
}

std::shared_ptr<const FringeRing> FringeRing::create(RingPtr base, std::string var) {
    if (base->kind() != RingKind::integers && base->kind() != RingKind::laurent)
        throw Error(ErrorKind::validation,
                    "fringe construction expects Z or a staged base, got '" + base->signature() + "'");
    validate_fresh_var(*base, var);
    return std::shared_ptr<const FringeRing>(new FringeRing(std::move(base), std::move(var)));
}

const FringePayload& FringeRing::payload(const Elem& e) const {
    check_tag(e);
    return e.payload<FringePayload>();
}

Fraction FringeRing::core_zero() const { return Fraction(core_->zero(), core_->one()); }

Fraction FringeRing::lift_frac(const Elem& base_elem) const {
    auto [u, v] = base_->lift_cover(base_elem);
    return Fraction(std::move(u), std::move(v));
}

Elem FringeRing::make(Elem c0, Elem c1, std::vector<Fraction> higher) const {
    base_->check_tag(c0);
    base_->check_tag(c1);
    for (const Fraction& fr : higher) fr.check_base(*core_);
    while (!higher.empty() && higher.back().is_zero()) higher.pop_back();
    auto p = std::make_shared<FringePayload>();
    p->c0 = std::move(c0);
    p->c1 = std::move(c1);
    p->higher = std::move(higher);
    return Elem(shared_from_this(), std::move(p));
}

Elem FringeRing::embed(const Elem& base_elem) const { return make(base_elem, base_->zero(), {}); }

int FringeRing::degree(const Elem& f) const {
    const FringePayload& p = payload(f);
    if (!p.higher.empty()) return static_cast<int>(p.higher.size()) + 1;
    if (!base_->is_zero(p.c1)) return 1;
    if (!base_->is_zero(p.c0)) return 0;
    return -1;
}

const Elem& FringeRing::coeff0(const Elem& f) const { return payload(f).c0; }
const Elem& FringeRing::coeff1(const Elem& f) const { return payload(f).c1; }
const std::vector<Fraction>& FringeRing::higher(const Elem& f) const { return payload(f).higher; }

Fraction FringeRing::coeff_frac(const Elem& f, std::size_t k) const {
    const FringePayload& p = payload(f);
    if (k == 0) return lift_frac(p.c0);
    if (k == 1) return lift_frac(p.c1);
    if (k - 2 < p.higher.size()) return p.higher[k - 2];
    return core_zero();
}

Elem FringeRing::zero() const { return embed(base_->zero()); }
Elem FringeRing::one() const { return embed(base_->one()); }
Elem FringeRing::from_int(const Integer& n) const { return embed(base_->from_int(n)); }

Elem FringeRing::add(const Elem& a, const Elem& b) const {
    const FringePayload& pa = payload(a);
    const FringePayload& pb = payload(b);
    std::vector<Fraction> higher;
    std::size_t n = std::max(pa.higher.size(), pb.higher.size());
    for (std::size_t k = 0; k < n; ++k) {
        Fraction fa = k < pa.higher.size() ? pa.higher[k] : core_zero();
        Fraction fb = k < pb.higher.size() ? pb.higher[k] : core_zero();
        higher.push_back(fa.add(fb));
    }
    return make(base_->add(pa.c0, pb.c0), base_->add(pa.c1, pb.c1), std::move(higher));
}

Elem FringeRing::negate(const Elem& a) const {
    const FringePayload& pa = payload(a);
    std::vector<Fraction> higher;
    for (const Fraction& fr : pa.higher) higher.push_back(fr.neg());
    return make(base_->negate(pa.c0), base_->negate(pa.c1), std::move(higher));
}

Elem FringeRing::mul(const Elem& a, const Elem& b) const {
    if (is_zero(a) || is_zero(b)) return zero();
    const FringePayload& pa = payload(a);
    const FringePayload& pb = payload(b);
    int da = degree(a), db = degree(b);
    // low coefficients straight in R (A is closed; no fraction detour)
    Elem c0 = base_->mul(pa.c0, pb.c0);
    Elem c1 = base_->add(base_->mul(pa.c0, pb.c1), base_->mul(pa.c1, pb.c0));
    std::vector<Fraction> higher;
    for (int k = 2; k <= da + db; ++k) {
        Fraction acc = core_zero();
        for (int i = std::max(0, k - db); i <= std::min(k, da); ++i)
            acc = acc.add(coeff_frac(a, static_cast<std::size_t>(i))
                              .mul(coeff_frac(b, static_cast<std::size_t>(k - i))));
        higher.push_back(std::move(acc));
    }
    return make(std::move(c0), std::move(c1), std::move(higher));
}

bool FringeRing::is_zero(const Elem& a) const { return degree(a) < 0; }

std::strong_ordering FringeRing::compare(const Elem& a, const Elem& b) const {
    int da = degree(a), db = degree(b);
    if (da != db) return da <=> db;
    const FringePayload& pa = payload(a);
    const FringePayload& pb = payload(b);
    if (auto c = base_->compare(pa.c0, pb.c0); c != std::strong_ordering::equal) return c;
    if (auto c = base_->compare(pa.c1, pb.c1); c != std::strong_ordering::equal) return c;
    for (std::size_t k = 0; k < pa.higher.size(); ++k)
        if (auto c = pa.higher[k].order(pb.higher[k]); c != std::strong_ordering::equal) return c;
    return std::strong_ordering::equal;
}

std::string FringeRing::print(const Elem& a) const {
    int deg = degree(a);
    if (deg < 0) return "0";
    std::string out;
    auto append = [&](const std::string& coeff, bool coeff_is_one, bool coeff_is_neg_one, int k) {
        std::string varpart;
        if (k == 1) varpart = var_;
        if (k >= 2) varpart = var_ + "^" + std::to_string(k);
        std::string term;
        if (k == 0) {
            term = coeff;
        } else if (coeff_is_one) {
            term = varpart;
        } else if (coeff_is_neg_one) {
            term = "-" + varpart;
        } else {
            term = parenthesize_compound(coeff) + "*" + varpart;
        }
        if (!out.empty()) out += " + ";
        out += term;
    };
    const FringePayload& p = payload(a);
    for (int k = deg; k >= 2; --k) {
        const Fraction& fr = p.higher[static_cast<std::size_t>(k - 2)];
        if (fr.is_zero()) continue;
        append(fr.print(), fr.is_one(), fr.neg().is_one(), k);
    }
    if (deg >= 1 && !base_->is_zero(p.c1))
        append(base_->print(p.c1), base_->equal(p.c1, base_->one()),
               base_->equal(p.c1, base_->negate(base_->one())), 1);
    if (!base_->is_zero(p.c0) || out.empty()) append(base_->print(p.c0), false, false, 0);
    return out;
}

FracPoly FringeRing::to_frac(const Elem& f) const {
    int deg = degree(f);
    std::vector<Fraction> cs;
    for (int k = 0; k <= deg; ++k) cs.push_back(coeff_frac(f, static_cast<std::size_t>(k)));
    return FracPoly(core_, std::move(cs));
}

std::optional<Elem> FringeRing::from_frac(const FracPoly& p) const {
    if (p.base()->signature() != core_->signature())
        throw Error(ErrorKind::tag_mismatch, "fraction polynomial over the wrong core");
    Fraction f0 = p.coeff(0);
    Fraction f1 = p.coeff(1);
    auto c0 = base_->member(f0.num(), f0.den());
    if (!c0) return std::nullopt;
    auto c1 = base_->member(f1.num(), f1.den());
    if (!c1) return std::nullopt;
    std::vector<Fraction> higher;
    for (int k = 2; k <= p.degree(); ++k) higher.push_back(p.coeff(static_cast<std::size_t>(k)));
    return make(std::move(*c0), std::move(*c1), std::move(higher));
}

std::optional<Elem> FringeRing::divide_exact(const Elem& num, const Elem& den) const {
    check_tag(num);
    check_tag(den);
    if (is_zero(den)) throw Error(ErrorKind::division_by_zero, "division by zero");
    if (is_zero(num)) return zero();
    auto [q, r] = to_frac(num).divmod(to_frac(den));
    if (!r.is_zero()) return std::nullopt;
    return from_frac(q);
}

std::vector<Elem> FringeRing::unit_set_impl(const SearchCaps& caps) const {
    std::vector<Elem> out;
    for (const Elem& u : base_->units(caps)) out.push_back(embed(u));
    return out;
}

Trilean FringeRing::is_prime_impl(const Elem& a, const SearchCaps& caps) const {
    if (degree(a) < 1) return Trilean::no;  // constants of A never stay prime
    if (!base_->is_unit(payload(a).c0)) return Trilean::no;
    return irreducible_over_field(a, caps) ? Trilean::yes : Trilean::no;
}

Trilean FringeRing::is_irreducible_impl(const Elem& a, const SearchCaps& caps) const {
    if (degree(a) == 0) return base_->is_irreducible(payload(a).c0, caps);
    return Trilean::unsupported;
}

bool FringeRing::irreducible_over_field(const Elem& f, const SearchCaps& caps) const {
    check_tag(f);
    int n = degree(f);
    if (n < 1)
        throw Error(ErrorKind::constant_argument,
                    "irreducibility over the fraction field needs positive degree");
    if (n == 1) return true;  // linear polynomials over a field
    if (n > caps.max_degree)
        throw Error(ErrorKind::cap_exceeded, "degree " + std::to_string(n) + " exceeds the cap of " +
                                                 std::to_string(caps.max_degree));
    if (static_cast<int>(base_->bound_vars().size()) > caps.max_stage_vars)
        throw Error(ErrorKind::cap_exceeded,
                    "base ring binds " + std::to_string(base_->bound_vars().size()) +
                        " stage variables, more than the cap of " + std::to_string(caps.max_stage_vars));

    // clear to a primitive polynomial over the core (Gauss direction)
    FracPoly q = to_frac(f);
    Elem den = core_->one();
    for (const Fraction& c : q.coeffs()) den = core_->mul(den, c.den());
    std::vector<Elem> P;
    for (const Fraction& c : q.coeffs())
        P.push_back(core_->mul(c.num(), *core_->divide_exact(den, c.den())));
    std::optional<Elem> content;
    for (const Elem& c : P) {
        if (core_->is_zero(c)) continue;
        content = content ? reduce_gcd(*core_, *content, c, caps) : c;
    }
    for (Elem& c : P)
        c = core_->is_zero(c) ? c : *core_->divide_exact(c, *content);
    for (const Elem& c : P)
        if (coeff_height(*core_, c) > caps.max_coeff_height)
            throw Error(ErrorKind::cap_exceeded, "coefficient height exceeds the cap of " +
                                                     std::to_string(caps.max_coeff_height));

    auto yring = PolyRing::create(core_, var_);
    Elem F = yring->make(std::move(P));
    // A proper factorization of F has a factor of degree <= n/2, and a
    // candidate of degree <= m is pinned down by m+1 evaluation points.
    const std::size_t m = static_cast<std::size_t>(n) / 2;
    std::vector<Elem> pts = yring->choose_eval_points(F, m + 1);
    std::vector<Elem> units = core_->units(caps);
    std::vector<std::vector<Elem>> axes;
    for (const Elem& pt : pts) axes.push_back(core_->divisors(yring->evaluate(F, pt), caps).members);
    std::size_t widest = 0;
    for (std::size_t i = 1; i < axes.size(); ++i)
        if (axes[i].size() > axes[widest].size()) widest = i;
    axes[widest] = unit_orbit_transversal(*core_, axes[widest], units);

    LagrangeBasis basis(core_, pts);
    bool found = false;
    kronecker_search(
        basis, axes, caps.max_tuples,
        [&](const std::vector<Elem>& raw) -> std::optional<Elem> {
            std::vector<Elem> cs;
            cs.reserve(raw.size());
            for (const Elem& rk : raw) {
                auto c = core_->divide_exact(rk, basis.common_den());
                if (!c) return std::nullopt;
                cs.push_back(std::move(*c));
            }
            return yring->make(std::move(cs));
        },
        [&](const Elem& g) {
            int dg = yring->degree(g);  // dg <= m < n by construction
            if (dg <= 0) return false;
            if (!yring->divide_exact(F, g)) return false;
            found = true;
            return true;
        });
    return !found;
}

FracPoly FringeRing::not_prime_witness(const Elem& p) const {
    check_tag(p);
    if (is_zero(p)) throw Error(ErrorKind::zero_argument, "zero has no non-primality witness");
    const Elem& c0 = payload(p).c0;
    if (base_->is_unit(c0))
        throw Error(ErrorKind::argument_is_prime_candidate,
                    "constant coefficient is a unit of the base ring; the argument may be prime");
    Fraction lin = base_->is_zero(c0) ? Fraction(core_->one(), core_->from_int(2))
                                      : lift_frac(c0).inv();
    FracPoly f(core_, {core_zero(), std::move(lin)});
    if (from_frac(f))
        throw Error(ErrorKind::validation, "witness unexpectedly lies in the ring");
    if (!from_frac(to_frac(p).mul(f)))
        throw Error(ErrorKind::validation, "witness product unexpectedly left the ring");
    return f;
}

RingPtr FringeRing::cover() const { return PolyRing::create(core_, var_); }

Elem FringeRing::embed_cover(const Elem& cover_elem) const {
    auto cov = std::static_pointer_cast<const PolyRing>(cover());
    cov->check_tag(cover_elem);
    auto e = member(cover_elem, cov->one());
    if (!e) throw Error(ErrorKind::validation, "cover element fell outside the ring");
    return *e;
}

std::optional<Elem> FringeRing::member(const Elem& cover_num, const Elem& cover_den) const {
    auto cov = std::static_pointer_cast<const PolyRing>(cover());
    cov->check_tag(cover_num);
    cov->check_tag(cover_den);
    if (cov->is_zero(cover_den)) throw Error(ErrorKind::division_by_zero, "division by zero");
    if (cov->is_zero(cover_num)) return zero();
    auto [q, r] = cov->to_frac(cover_num).divmod(cov->to_frac(cover_den));
    if (!r.is_zero()) return std::nullopt;
    return from_frac(q);
}

std::pair<Elem, Elem> FringeRing::lift_cover(const Elem& a) const {
    auto cov = std::static_pointer_cast<const PolyRing>(cover());
    FracPoly q = to_frac(a);
    Elem den = core_->one();
    for (const Fraction& c : q.coeffs()) den = core_->mul(den, c.den());
    std::vector<Elem> num;
    for (const Fraction& c : q.coeffs())
        num.push_back(core_->mul(c.num(), *core_->divide_exact(den, c.den())));
    return {cov->make(std::move(num)), cov->embed(den)};
}

std::vector<std::string> FringeRing::bound_vars() const {
    std::vector<std::string> out = base_->bound_vars();
    out.push_back(var_);
    return out;
}

}  // namespace scffd
