#include "scffd/frac_poly.hpp"

#include <sstream>

#include "scffd/errors.hpp"

namespace scffd {

FracPoly::FracPoly(RingPtr base, std::vector<Fraction> coeffs)
    : base_(std::move(base)), coeffs_(std::move(coeffs)) {
    for (const Fraction& c : coeffs_) c.check_base(*base_);
    trim();
}

void FracPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FracPoly FracPoly::zero(RingPtr base) { return FracPoly(std::move(base), {}); }

FracPoly FracPoly::constant(const Fraction& c) {
    return FracPoly(c.base_ptr(), {c});
}

FracPoly FracPoly::monomial(const Fraction& c, size_t k) {
    std::vector<Fraction> cs(k + 1, Fraction::of(c.base_ptr()->zero()));
    cs[k] = c;
    return FracPoly(c.base_ptr(), std::move(cs));
}

Fraction FracPoly::coeff(size_t k) const {
    if (k < coeffs_.size()) return coeffs_[k];
    return Fraction::of(base_->zero());
}

FracPoly FracPoly::add(const FracPoly& o) const {
    std::vector<Fraction> out;
    size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    out.reserve(n);
    for (size_t k = 0; k < n; ++k) out.push_back(coeff(k).add(o.coeff(k)));
    return FracPoly(base_, std::move(out));
}

FracPoly FracPoly::sub(const FracPoly& o) const { return add(o.neg()); }

FracPoly FracPoly::neg() const {
    std::vector<Fraction> out;
    out.reserve(coeffs_.size());
    for (const Fraction& c : coeffs_) out.push_back(c.neg());
    return FracPoly(base_, std::move(out));
}

FracPoly FracPoly::mul(const FracPoly& o) const {
    if (is_zero() || o.is_zero()) return zero(base_);
    std::vector<Fraction> out(coeffs_.size() + o.coeffs_.size() - 1,
                              Fraction::of(base_->zero()));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] = out[i + j].add(coeffs_[i].mul(o.coeffs_[j]));
    return FracPoly(base_, std::move(out));
}

FracPoly FracPoly::scale(const Fraction& c) const {
    std::vector<Fraction> out;
    out.reserve(coeffs_.size());
    for (const Fraction& k : coeffs_) out.push_back(k.mul(c));
    return FracPoly(base_, std::move(out));
}

Fraction FracPoly::eval(const Fraction& x) const {
    Fraction acc = Fraction::of(base_->zero());
    for (size_t k = coeffs_.size(); k-- > 0;) acc = acc.mul(x).add(coeffs_[k]);
    return acc;
}

std::pair<FracPoly, FracPoly> FracPoly::divmod(const FracPoly& d) const {
    if (d.is_zero())
        throw Error(ErrorKind::division_by_zero, "polynomial division by zero");
    FracPoly q = zero(base_);
    FracPoly r = *this;
    Fraction lead = d.coeffs_.back();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        size_t shift = static_cast<size_t>(r.degree() - d.degree());
        Fraction c = r.coeffs_.back().div(lead);
        FracPoly t = monomial(c, shift);
        q = q.add(t);
        r = r.sub(t.mul(d));
    }
    return {q, r};
}

bool FracPoly::equals(const FracPoly& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return false;
    for (size_t k = 0; k < coeffs_.size(); ++k)
        if (!coeffs_[k].equals(o.coeffs_[k])) return false;
    return true;
}

std::optional<std::vector<Elem>> FracPoly::in_base() const {
    std::vector<Elem> out;
    out.reserve(coeffs_.size());
    for (const Fraction& c : coeffs_) {
        auto w = c.in_base();
        if (!w) return std::nullopt;
        out.push_back(*w);
    }
    return out;
}

std::string FracPoly::print(const std::string& var) const {
    if (is_zero()) return "0";
    Fraction one = Fraction::of(base_->one());
    Fraction minus_one = one.neg();
    std::ostringstream os;
    bool first = true;
    for (size_t k = coeffs_.size(); k-- > 0;) {
        const Fraction& c = coeffs_[k];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << c.print();
            continue;
        }
        std::string vp = var;
        if (k > 1) vp += "^" + std::to_string(k);
        if (c.equals(one))
            os << vp;
        else if (c.equals(minus_one))
            os << "-" << vp;
        else
            os << parenthesize_compound(c.print()) << "*" << vp;
    }
    return os.str();
}

}  // namespace scffd
