#include "scffd/poly_ring.hpp"

#include <algorithm>
#include <sstream>

#include "scffd/errors.hpp"

namespace scffd {

// ---------------------------------------------------------------------------
// LagrangeBasis

LagrangeBasis::LagrangeBasis(RingPtr base, std::vector<Elem> nodes)
    : base_(std::move(base)), nodes_(std::move(nodes)), den_(base_->one()) {
    if (nodes_.empty())
        throw Error(ErrorKind::validation, "interpolation needs at least one node");
    for (const Elem& a : nodes_) base_->check_tag(a);
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        for (std::size_t j = i + 1; j < nodes_.size(); ++j)
            if (base_->equal(nodes_[i], nodes_[j]))
                throw Error(ErrorKind::duplicate_node,
                            "interpolation node '" + base_->print(nodes_[i]) + "' repeated");

    const std::size_t n = nodes_.size();
    // w_i = prod_{j != i} (a_i - a_j); D = prod w_i; cofactor_i = D / w_i
    // assembled from prefix/suffix products so no division is needed.
    std::vector<Elem> w;
    w.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Elem acc = base_->one();
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) acc = base_->mul(acc, base_->sub(nodes_[i], nodes_[j]));
        w.push_back(acc);
    }
    std::vector<Elem> prefix(n, base_->one()), suffix(n, base_->one());
    for (std::size_t i = 1; i < n; ++i) prefix[i] = base_->mul(prefix[i - 1], w[i - 1]);
    for (std::size_t i = n; i-- > 1;) suffix[i - 1] = base_->mul(suffix[i], w[i]);
    den_ = base_->mul(prefix[n - 1], w[n - 1]);

    numer_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        // M_i(x) = prod_{j != i} (x - a_j), expanded low-to-high.
        std::vector<Elem> m{base_->one()};
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            std::vector<Elem> next(m.size() + 1, base_->zero());
            Elem neg = base_->negate(nodes_[j]);
            for (std::size_t k = 0; k < m.size(); ++k) {
                next[k + 1] = base_->add(next[k + 1], m[k]);
                next[k] = base_->add(next[k], base_->mul(m[k], neg));
            }
            m = std::move(next);
        }
        Elem cof = base_->mul(prefix[i], suffix[i]);
        numer_[i].reserve(n);
        for (std::size_t k = 0; k < n; ++k)
            numer_[i].push_back(k < m.size() ? base_->mul(m[k], cof) : base_->zero());
    }
}

std::vector<Elem> LagrangeBasis::raw_coeffs(const std::vector<Elem>& values) const {
    if (values.size() != nodes_.size())
        throw Error(ErrorKind::validation, "value count does not match node count");
    std::vector<Elem> raw(nodes_.size(), base_->zero());
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t k = 0; k < raw.size(); ++k)
            raw[k] = base_->add(raw[k], base_->mul(values[i], numer_[i][k]));
    return raw;
}

FracPoly LagrangeBasis::interpolate(const std::vector<Elem>& values) const {
    std::vector<Elem> raw = raw_coeffs(values);
    std::vector<Fraction> coeffs;
    coeffs.reserve(raw.size());
    for (const Elem& r : raw) coeffs.emplace_back(r, den_);
    return FracPoly(base_, std::move(coeffs));
}

FracPoly interpolate(const RingPtr& base, const std::vector<std::pair<Elem, Elem>>& points) {
    std::vector<Elem> nodes, values;
    nodes.reserve(points.size());
    values.reserve(points.size());
    for (const auto& [a, b] : points) {
        nodes.push_back(a);
        values.push_back(b);
    }
    return LagrangeBasis(base, std::move(nodes)).interpolate(values);
}

// ---------------------------------------------------------------------------
// Tuple search

void kronecker_search(const LagrangeBasis& basis,
                      const std::vector<std::vector<Elem>>& candidates, std::uint64_t max_tuples,
                      const std::function<std::optional<Elem>(const std::vector<Elem>&)>& accept,
                      const std::function<bool(const Elem&)>& visit) {
    const std::size_t n = basis.count();
    if (candidates.size() != n)
        throw Error(ErrorKind::validation, "candidate axis count does not match node count");

    std::uint64_t total = 1;
    for (const auto& axis : candidates) {
        if (axis.empty()) return;
        if (total > max_tuples / axis.size() + 1) total = max_tuples + 1;
        else total *= axis.size();
        if (total > max_tuples) {
            std::ostringstream os;
            os << "candidate tuple space exceeds the cap of " << max_tuples
               << " (axis sizes:";
            for (const auto& a : candidates) os << ' ' << a.size();
            os << ")";
            throw Error(ErrorKind::cap_exceeded, os.str());
        }
    }

    const Ring& base = *basis.base();
    // contrib[i][c] = candidate value c on axis i times N_i, precomputed.
    std::vector<std::vector<std::vector<Elem>>> contrib(n);
    for (std::size_t i = 0; i < n; ++i) {
        contrib[i].reserve(candidates[i].size());
        for (const Elem& b : candidates[i]) {
            std::vector<Elem> row;
            row.reserve(n);
            for (std::size_t k = 0; k < n; ++k)
                row.push_back(base.mul(b, basis.numerators()[i][k]));
            contrib[i].push_back(std::move(row));
        }
    }

    std::vector<std::size_t> idx(n, 0);
    std::vector<Elem> raw(n);
    while (true) {
        for (std::size_t k = 0; k < n; ++k) {
            Elem acc = contrib[0][idx[0]][k];
            for (std::size_t i = 1; i < n; ++i) acc = base.add(acc, contrib[i][idx[i]][k]);
            raw[k] = std::move(acc);
        }
        if (auto cand = accept(raw))
            if (visit(*cand)) return;

        std::size_t pos = 0;
        while (pos < n && ++idx[pos] == candidates[pos].size()) idx[pos++] = 0;
        if (pos == n) return;
    }
}

std::vector<Elem> unit_orbit_transversal(const Ring& r, const std::vector<Elem>& elems,
                                         const std::vector<Elem>& units) {
    auto less = [&](const Elem& a, const Elem& b) {
        return r.compare(a, b) == std::strong_ordering::less;
    };
    std::vector<bool> taken(elems.size(), false);
    std::vector<Elem> out;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (taken[i]) continue;
        out.push_back(elems[i]);  // sorted input: least in its orbit
        for (const Elem& u : units) {
            Elem img = r.mul(u, elems[i]);
            auto it = std::lower_bound(elems.begin(), elems.end(), img, less);
            if (it != elems.end() && r.equal(*it, img))
                taken[static_cast<std::size_t>(it - elems.begin())] = true;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// PolyRing

PolyRing::PolyRing(RingPtr base, std::string var) : base_(std::move(base)), var_(std::move(var)) {
    sig_ = "Poly(" + base_->signature() + "," + var_ + ")";
}

std::shared_ptr<const PolyRing> PolyRing::create(RingPtr base, std::string var) {
    if (!base->supports_divisors())
        throw Error(ErrorKind::validation,
                    "polynomial base '" + base->signature() + "' has no divisor function");
    validate_fresh_var(*base, var);
    return std::shared_ptr<const PolyRing>(new PolyRing(std::move(base), std::move(var)));
}

const PolyPayload& PolyRing::payload(const Elem& e) const {
    check_tag(e);
    return e.payload<PolyPayload>();
}

Elem PolyRing::make(std::vector<Elem> coeffs) const {
    for (const Elem& c : coeffs) base_->check_tag(c);
    while (!coeffs.empty() && base_->is_zero(coeffs.back())) coeffs.pop_back();
    auto p = std::make_shared<PolyPayload>();
    p->coeffs = std::move(coeffs);
    return Elem(shared_from_this(), std::move(p));
}

const std::vector<Elem>& PolyRing::coeffs(const Elem& f) const { return payload(f).coeffs; }

int PolyRing::degree(const Elem& f) const { return static_cast<int>(payload(f).coeffs.size()) - 1; }

Elem PolyRing::coeff(const Elem& f, std::size_t k) const {
    const auto& cs = payload(f).coeffs;
    return k < cs.size() ? cs[k] : base_->zero();
}

Elem PolyRing::embed(const Elem& c) const { return make({c}); }

Elem PolyRing::monomial(const Elem& c, std::size_t k) const {
    std::vector<Elem> cs(k + 1, base_->zero());
    cs[k] = c;
    return make(std::move(cs));
}

Elem PolyRing::zero() const { return make({}); }
Elem PolyRing::one() const { return embed(base_->one()); }
Elem PolyRing::from_int(const Integer& n) const { return embed(base_->from_int(n)); }

Elem PolyRing::add(const Elem& a, const Elem& b) const {
    const auto &pa = payload(a).coeffs, &pb = payload(b).coeffs;
    std::vector<Elem> out;
    out.reserve(std::max(pa.size(), pb.size()));
    for (std::size_t k = 0; k < std::max(pa.size(), pb.size()); ++k) {
        Elem ca = k < pa.size() ? pa[k] : base_->zero();
        Elem cb = k < pb.size() ? pb[k] : base_->zero();
        out.push_back(base_->add(ca, cb));
    }
    return make(std::move(out));
}

Elem PolyRing::negate(const Elem& a) const {
    std::vector<Elem> out;
    for (const Elem& c : payload(a).coeffs) out.push_back(base_->negate(c));
    return make(std::move(out));
}

Elem PolyRing::mul(const Elem& a, const Elem& b) const {
    const auto &pa = payload(a).coeffs, &pb = payload(b).coeffs;
    if (pa.empty() || pb.empty()) return zero();
    std::vector<Elem> out(pa.size() + pb.size() - 1, base_->zero());
    for (std::size_t i = 0; i < pa.size(); ++i)
        for (std::size_t j = 0; j < pb.size(); ++j)
            out[i + j] = base_->add(out[i + j], base_->mul(pa[i], pb[j]));
    return make(std::move(out));
}

bool PolyRing::is_zero(const Elem& a) const { return payload(a).coeffs.empty(); }

std::strong_ordering PolyRing::compare(const Elem& a, const Elem& b) const {
    const auto &pa = payload(a).coeffs, &pb = payload(b).coeffs;
    if (pa.size() != pb.size())
        return pa.size() < pb.size() ? std::strong_ordering::less : std::strong_ordering::greater;
    for (std::size_t k = 0; k < pa.size(); ++k)
        if (auto c = base_->compare(pa[k], pb[k]); c != std::strong_ordering::equal) return c;
    return std::strong_ordering::equal;
}

std::string PolyRing::print(const Elem& a) const {
    const auto& cs = payload(a).coeffs;
    if (cs.empty()) return "0";
    Elem one_ = base_->one();
    Elem minus_one = base_->negate(one_);
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = cs.size(); k-- > 0;) {
        if (base_->is_zero(cs[k])) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << base_->print(cs[k]);
            continue;
        }
        std::string vp = var_;
        if (k > 1) vp += "^" + std::to_string(k);
        if (base_->equal(cs[k], one_))
            os << vp;
        else if (base_->equal(cs[k], minus_one))
            os << "-" << vp;
        else
            os << parenthesize_compound(base_->print(cs[k])) << "*" << vp;
    }
    return os.str();
}

std::optional<Elem> PolyRing::divide_exact(const Elem& num, const Elem& den) const {
    const auto& pd = payload(den).coeffs;
    if (pd.empty()) throw Error(ErrorKind::division_by_zero, "polynomial division by zero");
    if (is_zero(num)) return zero();

    // Top-down exact division over the base ring: every leading-coefficient
    // division must succeed in A and the remainder must vanish.
    std::vector<Elem> r = payload(num).coeffs;
    if (r.size() < pd.size()) return std::nullopt;
    std::vector<Elem> q(r.size() - pd.size() + 1, base_->zero());
    const Elem& lead = pd.back();
    while (r.size() >= pd.size()) {
        auto c = base_->divide_exact(r.back(), lead);
        if (!c) return std::nullopt;
        std::size_t shift = r.size() - pd.size();
        q[shift] = *c;
        for (std::size_t k = 0; k < pd.size(); ++k)
            r[shift + k] = base_->sub(r[shift + k], base_->mul(*c, pd[k]));
        while (!r.empty() && base_->is_zero(r.back())) r.pop_back();
        if (r.empty()) return make(std::move(q));
    }
    return std::nullopt;
}

Integer PolyRing::size_of(const Elem& a) const {
    const auto& cs = payload(a).coeffs;
    if (cs.empty()) return 0;
    Integer s = static_cast<int>(cs.size()) - 1;
    for (const Elem& c : cs) s += base_->size_of(c);
    return s;
}

std::vector<std::vector<Elem>> coeff_vectors_of_size(const RingPtr& base, std::size_t deg,
                                                     const Integer& budget) {
    std::vector<std::vector<Elem>> out;
    std::vector<Elem> partial;
    auto rec = [&](auto&& self, std::size_t k, const Integer& left) -> void {
        if (k == deg) {
            if (deg > 0 && left == 0) return;  // leading coefficient must be nonzero
            for (const Elem& c : base->elements_of_size(left)) {
                if (base->is_zero(c) && deg > 0) continue;
                partial.push_back(c);
                out.push_back(partial);
                partial.pop_back();
            }
            return;
        }
        for (Integer use = 0; use <= left; ++use)
            for (const Elem& c : base->elements_of_size(use)) {
                partial.push_back(c);
                self(self, k + 1, left - use);
                partial.pop_back();
            }
    };
    rec(rec, 0, budget);
    return out;
}

std::vector<Elem> PolyRing::elements_of_size(const Integer& s) const {
    if (s == 0) return {zero()};
    std::vector<Elem> out;
    // degree n costs n, each coefficient costs its base size.
    for (Integer n = 0; n <= s; ++n) {
        Integer budget = s - n;
        if (n > 0 && budget < 1) break;
        for (auto& cs : coeff_vectors_of_size(base_, static_cast<std::size_t>(n), budget))
            out.push_back(make(std::move(cs)));
    }
    return out;
}

std::vector<std::string> PolyRing::bound_vars() const {
    std::vector<std::string> v = base_->bound_vars();
    v.push_back(var_);
    return v;
}

RingPtr PolyRing::cover() const {
    RingPtr bc = base_->cover();
    if (bc.get() == base_.get()) return shared_from_this();
    return PolyRing::create(bc, var_);
}

Elem PolyRing::embed_cover(const Elem& cover_elem) const {
    RingPtr cov = cover();
    if (cov.get() == this) {
        check_tag(cover_elem);
        return cover_elem;
    }
    const auto* cpoly = static_cast<const PolyRing*>(cov.get());
    std::vector<Elem> out;
    for (const Elem& c : cpoly->coeffs(cover_elem)) out.push_back(base_->embed_cover(c));
    return make(std::move(out));
}

std::optional<Elem> PolyRing::member(const Elem& cover_num, const Elem& cover_den) const {
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

    std::vector<Elem> out;
    for (const Fraction& c : q.coeffs()) {
        auto w = base_->member(c.num(), c.den());
        if (!w) return std::nullopt;
        out.push_back(*w);
    }
    return make(std::move(out));
}

std::pair<Elem, Elem> PolyRing::lift_cover(const Elem& a) const {
    auto cov = std::static_pointer_cast<const PolyRing>(cover());
    const auto& cs = payload(a).coeffs;
    std::vector<std::pair<Elem, Elem>> lifts;
    lifts.reserve(cs.size());
    for (const Elem& c : cs) lifts.push_back(base_->lift_cover(c));

    const RingPtr& cbase = cov->base();
    Elem den = cbase->one();
    for (const auto& [u, v] : lifts) den = cbase->mul(den, v);
    std::vector<Elem> num;
    num.reserve(lifts.size());
    for (std::size_t i = 0; i < lifts.size(); ++i) {
        Elem c = lifts[i].first;
        for (std::size_t j = 0; j < lifts.size(); ++j)
            if (j != i) c = cbase->mul(c, lifts[j].second);
        num.push_back(c);
    }
    return {cov->make(std::move(num)), cov->embed(den)};
}

Elem PolyRing::evaluate(const Elem& f, const Elem& point) const {
    base_->check_tag(point);
    const auto& cs = payload(f).coeffs;
    Elem acc = base_->zero();
    for (std::size_t k = cs.size(); k-- > 0;) acc = base_->add(base_->mul(acc, point), cs[k]);
    return acc;
}

std::vector<Elem> PolyRing::choose_eval_points(const Elem& f, std::size_t count) const {
    if (is_zero(f)) throw Error(ErrorKind::zero_argument, "cannot choose evaluation points for zero");
    std::vector<Elem> points;
    Integer s = 0;
    while (points.size() < count) {
        for (const Elem& a : base_->sorted_unique(base_->elements_of_size(s))) {
            if (base_->is_zero(evaluate(f, a))) continue;
            points.push_back(a);
            if (points.size() == count) break;
        }
        ++s;
        if (s > 1'000'000) throw Error(ErrorKind::cap_exceeded, "evaluation point scan ran away");
    }
    return points;
}

FracPoly PolyRing::to_frac(const Elem& f) const {
    std::vector<Fraction> cs;
    for (const Elem& c : payload(f).coeffs) cs.push_back(Fraction::of(c));
    return FracPoly(base_, std::move(cs));
}

std::optional<Elem> PolyRing::from_frac(const FracPoly& p) const {
    if (p.base().get() != base_.get() && p.base()->signature() != base_->signature())
        throw Error(ErrorKind::tag_mismatch, "fraction polynomial over the wrong base");
    auto cs = p.in_base();
    if (!cs) return std::nullopt;
    return make(std::move(*cs));
}

std::vector<Elem> PolyRing::divisor_members_impl(const Elem& f, const SearchCaps& caps) const {
    const std::size_t n = static_cast<std::size_t>(degree(f));
    std::vector<Elem> points = choose_eval_points(f, n + 1);
    std::vector<std::vector<Elem>> axes;
    axes.reserve(points.size());
    std::size_t widest = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        axes.push_back(base_->divisors(evaluate(f, points[i]), caps).members);
        if (axes[i].size() > axes[widest].size()) widest = i;
    }
    std::vector<Elem> units = base_->units(caps);
    axes[widest] = unit_orbit_transversal(*base_, axes[widest], units);

    LagrangeBasis basis(base_, points);
    const Elem& den = basis.common_den();

    std::vector<Elem> found;
    kronecker_search(
        basis, axes, caps.max_tuples,
        [&](const std::vector<Elem>& raw) -> std::optional<Elem> {
            std::vector<Elem> cs;
            cs.reserve(raw.size());
            for (const Elem& rk : raw) {
                auto c = base_->divide_exact(rk, den);
                if (!c) return std::nullopt;
                cs.push_back(std::move(*c));
            }
            return make(std::move(cs));
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

Trilean PolyRing::is_prime_impl(const Elem& a, const SearchCaps& caps) const {
    // Over a UFD base the polynomial ring is again a UFD, where prime and
    // irreducible coincide; other bases get no decision procedure here.
    if (is_ufd()) return is_irreducible_impl(a, caps);
    return Trilean::unsupported;
}

}  // namespace scffd
