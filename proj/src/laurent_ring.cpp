#include "scffd/laurent_ring.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "scffd/int_ring.hpp"
#include "scffd/poly_ring.hpp"
#include "scffd/primes.hpp"

namespace scffd {

namespace {

using Expo = std::vector<long long>;
using TermMap = std::map<Expo, Rational>;

void add_into(TermMap& acc, const Expo& v, const Rational& c) {
    if (c == 0) return;
    auto it = acc.find(v);
    if (it == acc.end()) {
        acc.emplace(v, c);
    } else {
        it->second += c;
        if (it->second == 0) acc.erase(it);
    }
}

LaurentTerms to_terms(const TermMap& m) {
    LaurentTerms out;
    out.reserve(m.size());
    for (const auto& [v, c] : m) out.emplace_back(v, c);
    return out;
}

std::strong_ordering expo_order(const Expo& a, const Expo& b) {
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] != b[j]) return a[j] <=> b[j];
    return std::strong_ordering::equal;
}

/** Exact division of Laurent polynomials over Q.  The quotient's support
 * is confined, variable by variable, to the box
 *   [low_j(f) - low_j(g), deg_j(f) - deg_j(g)]
 * (per-variable extremal degrees add under multiplication in a domain).
 * Eliminating the lex-leading term of the remainder produces strictly
 * lex-decreasing quotient exponents, so the loop visits each box point at
 * most once and either empties the remainder or walks out of the box. */
std::optional<LaurentTerms> div_terms(const LaurentTerms& f, const LaurentTerms& g, std::size_t k) {
    if (f.empty()) return LaurentTerms{};
    Expo lo(k, 0), hi(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
        auto span = [j](const LaurentTerms& t) {
            long long mn = t.front().first[j], mx = mn;
            for (const auto& [v, c] : t) {
                mn = std::min(mn, v[j]);
                mx = std::max(mx, v[j]);
            }
            return std::make_pair(mn, mx);
        };
        auto [flo, fhi] = span(f);
        auto [glo, ghi] = span(g);
        lo[j] = flo - glo;
        hi[j] = fhi - ghi;
        if (lo[j] > hi[j]) return std::nullopt;
    }
    const Expo& glt_v = g.back().first;
    const Rational& glt_c = g.back().second;
    TermMap r(f.begin(), f.end());
    TermMap q;
    Expo t(k, 0), w(k, 0);
    while (!r.empty()) {
        const Expo rv = r.rbegin()->first;
        const Rational rc = r.rbegin()->second;
        for (std::size_t j = 0; j < k; ++j) {
            t[j] = rv[j] - glt_v[j];
            if (t[j] < lo[j] || t[j] > hi[j]) return std::nullopt;
        }
        Rational tc = rc / glt_c;
        q.emplace(t, tc);
        for (const auto& [gv, gc] : g) {
            for (std::size_t j = 0; j < k; ++j) w[j] = t[j] + gv[j];
            add_into(r, w, -(tc * gc));
        }
    }
    return to_terms(q);
}

std::string rational_str(const Rational& c) {
    Integer n = boost::multiprecision::numerator(c);
    Integer d = boost::multiprecision::denominator(c);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

}  // namespace

LaurentRing::LaurentRing(EnumerationSchedule schedule, std::vector<std::string> vars)
    : sched_(std::move(schedule)), vars_(std::move(vars)) {
    for (std::size_t e : sched_.entries()) primes_.push_back(nth_prime(e));
    std::string ps, vs;
    for (std::size_t j = 0; j < sched_.size(); ++j) {
        if (j) {
            ps += ",";
            vs += ",";
        }
        ps += std::to_string(sched_.entries()[j]);
        vs += vars_[j];
    }
    sig_ = "StagedIrred(primes=[" + ps + "],vars=[" + vs + "])";
}

std::shared_ptr<const LaurentRing> LaurentRing::create(EnumerationSchedule schedule,
                                                       std::vector<std::string> vars) {
    if (vars.size() != schedule.size())
        throw Error(ErrorKind::validation, "expected " + std::to_string(schedule.size()) +
                                               " stage variable(s), got " + std::to_string(vars.size()));
    for (std::size_t i = 0; i < vars.size(); ++i) {
        validate_fresh_var(*IntRing::get(), vars[i]);
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j])
                throw Error(ErrorKind::validation, "stage variable '" + vars[i] + "' repeats");
    }
    return std::shared_ptr<const LaurentRing>(new LaurentRing(std::move(schedule), std::move(vars)));
}

Integer LaurentRing::stage_prime(std::size_t j) const {
    if (j >= primes_.size())
        throw Error(ErrorKind::stage_mismatch, "stage " + std::to_string(j) + " exceeds schedule length " +
                                                   std::to_string(primes_.size()));
    return primes_[j];
}

std::shared_ptr<const LaurentRing> LaurentRing::prefix(std::size_t k) const {
    std::vector<std::size_t> pre = sched_.destroyed_at(k);
    return create(EnumerationSchedule(std::move(pre)),
                  std::vector<std::string>(vars_.begin(), vars_.begin() + static_cast<std::ptrdiff_t>(k)));
}

const LaurentPayload& LaurentRing::payload(const Elem& e) const {
    check_tag(e);
    return e.payload<LaurentPayload>();
}

Elem LaurentRing::make_unchecked(LaurentTerms terms) const {
    TermMap m;
    for (auto& [v, c] : terms) {
        if (v.size() != vars_.size())
            throw Error(ErrorKind::validation, "exponent vector length " + std::to_string(v.size()) +
                                                   " does not match " + std::to_string(vars_.size()) +
                                                   " stage variable(s)");
        add_into(m, v, c);
    }
    auto p = std::make_shared<LaurentPayload>();
    p->terms = to_terms(m);
    return Elem(shared_from_this(), std::move(p));
}

bool LaurentRing::admissible(const LaurentTerms& terms) const {
    for (const auto& [v, c] : terms) {
        if (boost::multiprecision::denominator(c) != 1) return false;
        Integer need = 1;
        for (std::size_t j = 0; j < vars_.size(); ++j)
            if (j < v.size() && v[j] < 0) need *= pow_int(primes_[j], static_cast<unsigned long>(-v[j]));
        if (boost::multiprecision::numerator(c) % need != 0) return false;
    }
    return true;
}

Elem LaurentRing::make(LaurentTerms terms) const {
    Elem e = make_unchecked(std::move(terms));
    const LaurentTerms& t = payload(e).terms;
    if (!admissible(t))
        throw Error(ErrorKind::not_in_ring,
                    "'" + print(e) + "' breaks the coefficient divisibility constraint of '" + sig_ + "'");
    return e;
}

const LaurentTerms& LaurentRing::terms(const Elem& a) const { return payload(a).terms; }

Elem LaurentRing::variable(std::size_t j) const {
    Expo v(vars_.size(), 0);
    v.at(j) = 1;
    return make_unchecked({{v, Rational(1)}});
}

Elem LaurentRing::cofactor(std::size_t j) const {
    Expo v(vars_.size(), 0);
    v.at(j) = -1;
    return make_unchecked({{v, Rational(stage_prime(j))}});
}

Elem LaurentRing::zero() const { return make_unchecked({}); }

Elem LaurentRing::one() const { return from_int(1); }

Elem LaurentRing::from_int(const Integer& n) const {
    if (n == 0) return zero();
    return make_unchecked({{Expo(vars_.size(), 0), Rational(n)}});
}

Elem LaurentRing::add(const Elem& a, const Elem& b) const {
    TermMap m(payload(a).terms.begin(), payload(a).terms.end());
    for (const auto& [v, c] : payload(b).terms) add_into(m, v, c);
    return make_unchecked(to_terms(m));
}

Elem LaurentRing::negate(const Elem& a) const {
    LaurentTerms t = payload(a).terms;
    for (auto& [v, c] : t) c = -c;
    return make_unchecked(std::move(t));
}

Elem LaurentRing::mul(const Elem& a, const Elem& b) const {
    const LaurentTerms& ta = payload(a).terms;
    const LaurentTerms& tb = payload(b).terms;
    TermMap m;
    Expo v(vars_.size(), 0);
    for (const auto& [va, ca] : ta)
        for (const auto& [vb, cb] : tb) {
            for (std::size_t j = 0; j < vars_.size(); ++j) v[j] = va[j] + vb[j];
            add_into(m, v, ca * cb);
        }
    return make_unchecked(to_terms(m));
}

bool LaurentRing::is_zero(const Elem& a) const { return payload(a).terms.empty(); }

std::strong_ordering LaurentRing::compare(const Elem& a, const Elem& b) const {
    const LaurentTerms& ta = payload(a).terms;
    const LaurentTerms& tb = payload(b).terms;
    std::size_t n = std::min(ta.size(), tb.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = expo_order(ta[i].first, tb[i].first); c != std::strong_ordering::equal) return c;
        if (auto c = magnitude_order(ta[i].second, tb[i].second); c != std::strong_ordering::equal)
            return c;
    }
    return ta.size() <=> tb.size();
}

std::string LaurentRing::print(const Elem& a) const {
    const LaurentTerms& t = payload(a).terms;
    if (t.empty()) return "0";
    std::string out;
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        const auto& [v, c] = *it;
        std::string varpart;
        for (std::size_t j = 0; j < vars_.size(); ++j) {
            if (v[j] == 0) continue;
            if (!varpart.empty()) varpart += "*";
            varpart += vars_[j];
            if (v[j] != 1) varpart += "^" + std::to_string(v[j]);
        }
        std::string term;
        if (varpart.empty()) {
            term = rational_str(c);
        } else if (c == 1) {
            term = varpart;
        } else if (c == -1) {
            term = "-" + varpart;
        } else {
            term = parenthesize_compound(rational_str(c)) + "*" + varpart;
        }
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

std::optional<Elem> LaurentRing::divide_exact(const Elem& num, const Elem& den) const {
    check_tag(num);
    check_tag(den);
    if (is_zero(den)) throw Error(ErrorKind::division_by_zero, "division by zero");
    auto q = div_terms(payload(num).terms, payload(den).terms, vars_.size());
    if (!q || !admissible(*q)) return std::nullopt;
    return make_unchecked(std::move(*q));
}

std::vector<Elem> LaurentRing::unit_set_impl(const SearchCaps&) const {
    return sorted_unique({one(), negate(one())});
}

Trilean LaurentRing::is_prime_impl(const Elem&, const SearchCaps&) const {
    return Trilean::unsupported;
}

Trilean LaurentRing::is_irreducible_impl(const Elem& a, const SearchCaps&) const {
    const LaurentTerms& t = payload(a).terms;
    bool constant = t.size() == 1 &&
                    std::all_of(t[0].first.begin(), t[0].first.end(), [](long long e) { return e == 0; });
    if (constant) {
        const Rational& c = t[0].second;
        if (boost::multiprecision::denominator(c) == 1) {
            Integer n = abs_int(boost::multiprecision::numerator(c));
            if (is_prime_int(n)) {
                auto idx = prime_index(n);
                if (idx) return sched_.destroys(*idx, sched_.size()) ? Trilean::no : Trilean::yes;
            }
        }
    }
    return Trilean::unsupported;
}

RingPtr LaurentRing::cover() const {
    RingPtr c = IntRing::get();
    for (const std::string& v : vars_) c = PolyRing::create(c, v);
    return c;
}

namespace {

/** Spread a nested cover polynomial into flat terms; `index_of` maps a
 * polynomial variable name to its slot in the exponent vector. */
void flatten(const Ring& ring, const Elem& e, const std::vector<std::string>& vars, Expo& expo,
             TermMap& out) {
    if (ring.kind() == RingKind::integers) {
        const auto& zr = static_cast<const IntRing&>(ring);
        add_into(out, expo, Rational(zr.value(e)));
        return;
    }
    const auto& pr = static_cast<const PolyRing&>(ring);
    std::size_t j = vars.size();
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == pr.var()) j = i;
    const std::vector<Elem>& cs = pr.coeffs(e);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        expo[j] = static_cast<long long>(i);
        flatten(*pr.base(), cs[i], vars, expo, out);
    }
    expo[j] = 0;
}

/** Rebuild a nested cover polynomial from flat integer terms whose
 * exponents are all nonnegative.  `depth` counts the variables still
 * bound by `ring` (slots 0..depth-1). */
Elem build_cover(const RingPtr& ring, const std::vector<std::pair<Expo, Integer>>& terms,
                 std::size_t depth) {
    if (depth == 0) {
        Integer v = 0;
        for (const auto& [e, c] : terms) v += c;
        return ring->from_int(v);
    }
    auto pr = std::static_pointer_cast<const PolyRing>(ring);
    long long deg = -1;
    for (const auto& [e, c] : terms) deg = std::max(deg, e[depth - 1]);
    if (deg < 0) return pr->zero();
    std::vector<Elem> coeffs;
    for (long long i = 0; i <= deg; ++i) {
        std::vector<std::pair<Expo, Integer>> sub;
        for (const auto& [e, c] : terms)
            if (e[depth - 1] == i) sub.emplace_back(e, c);
        coeffs.push_back(build_cover(pr->base(), sub, depth - 1));
    }
    return pr->make(std::move(coeffs));
}

}  // namespace

Elem LaurentRing::embed_cover(const Elem& cover_elem) const {
    RingPtr cov = cover();
    cov->check_tag(cover_elem);
    TermMap m;
    Expo expo(vars_.size(), 0);
    flatten(*cov, cover_elem, vars_, expo, m);
    return make_unchecked(to_terms(m));
}

std::optional<Elem> LaurentRing::member(const Elem& cover_num, const Elem& cover_den) const {
    RingPtr cov = cover();
    cov->check_tag(cover_num);
    cov->check_tag(cover_den);
    if (cov->is_zero(cover_den)) throw Error(ErrorKind::division_by_zero, "division by zero");
    TermMap nm, dm;
    Expo expo(vars_.size(), 0);
    flatten(*cov, cover_num, vars_, expo, nm);
    flatten(*cov, cover_den, vars_, expo, dm);
    auto q = div_terms(to_terms(nm), to_terms(dm), vars_.size());
    if (!q || !admissible(*q)) return std::nullopt;
    return make_unchecked(std::move(*q));
}

std::pair<Elem, Elem> LaurentRing::lift_cover(const Elem& a) const {
    const LaurentTerms& t = payload(a).terms;
    Expo shift(vars_.size(), 0);
    for (const auto& [v, c] : t)
        for (std::size_t j = 0; j < vars_.size(); ++j) shift[j] = std::max(shift[j], -v[j]);
    std::vector<std::pair<Expo, Integer>> nt;
    for (const auto& [v, c] : t) {
        Expo w(vars_.size());
        for (std::size_t j = 0; j < vars_.size(); ++j) w[j] = v[j] + shift[j];
        nt.emplace_back(std::move(w), Integer(boost::multiprecision::numerator(c)));
    }
    RingPtr cov = cover();
    Elem num = build_cover(cov, nt, vars_.size());
    Elem den = build_cover(cov, {{shift, Integer(1)}}, vars_.size());
    return {std::move(num), std::move(den)};
}

IrredStatus irred_status(const LaurentRing& ring, std::size_t index, const StageMode& mode) {
    std::size_t k = mode.limit ? ring.stages() : mode.stage;
    if (!ring.schedule().destroys(index, k)) return {true, std::nullopt};
    auto rk = ring.prefix(k);
    std::size_t j = 0;
    while (rk->schedule().entries()[j] != index) ++j;
    Elem x = rk->variable(j);
    Elem cof = rk->cofactor(j);
    Elem p = rk->from_int(nth_prime(index));
    if (!rk->equal(rk->mul(x, cof), p) || rk->is_unit(x) || rk->is_unit(cof))
        throw Error(ErrorKind::validation, "staged witness failed verification");
    return {false, std::make_pair(std::move(x), std::move(cof))};
}

}  // namespace scffd
