#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scffd/fraction.hpp"

namespace scffd {

// Dense polynomial with coefficients in Frac(A) for a base ring A.  This is
// the scratch representation used by interpolation and by divisibility tests
// over the fraction field; ring-level polynomial elements keep their own
// payloads and convert through here when they need field division.
class FracPoly {
public:
    FracPoly(RingPtr base, std::vector<Fraction> coeffs);

    static FracPoly zero(RingPtr base);
    static FracPoly constant(const Fraction& c);
    // x^k with coefficient c.
    static FracPoly monomial(const Fraction& c, size_t k);

    const RingPtr& base() const { return base_; }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Fraction coeff(size_t k) const;
    const std::vector<Fraction>& coeffs() const { return coeffs_; }

    FracPoly add(const FracPoly& o) const;
    FracPoly sub(const FracPoly& o) const;
    FracPoly mul(const FracPoly& o) const;
    FracPoly neg() const;
    FracPoly scale(const Fraction& c) const;

    Fraction eval(const Fraction& x) const;

    // Field long division: *this = q*d + r with deg r < deg d.
    std::pair<FracPoly, FracPoly> divmod(const FracPoly& d) const;

    bool equals(const FracPoly& o) const;

    // If every coefficient lies in A, the witnesses; otherwise nullopt.
    std::optional<std::vector<Elem>> in_base() const;

    std::string print(const std::string& var) const;

private:
    RingPtr base_;
    std::vector<Fraction> coeffs_;  // coeffs_[k] multiplies x^k; back() nonzero

    void trim();
};

}  // namespace scffd
