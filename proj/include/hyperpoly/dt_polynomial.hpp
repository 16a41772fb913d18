#pragma once

#include <string>
#include <vector>

#include "hyperpoly/rational.hpp"

namespace hyperpoly {

// Polynomial in the infinitesimal indeterminate dt, with exact rational
// coefficients indexed by degree. The zero polynomial has no
// coefficients; otherwise the leading coefficient is nonzero.
class DtPolynomial {
public:
    DtPolynomial() = default;
    DtPolynomial(Rational constant);
    explicit DtPolynomial(std::vector<Rational> coeffs);

    static DtPolynomial indeterminate();  // the polynomial "dt"

    bool is_zero() const { return coeffs_.empty(); }
    // Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // Lowest degree with a nonzero coefficient; -1 for zero.
    int order() const;

    const Rational& coeff(size_t deg) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading_coeff() const;
    const Rational& trailing_coeff() const;  // coefficient at order()

    bool is_constant() const { return degree() <= 0; }

    DtPolynomial operator+(const DtPolynomial& o) const;
    DtPolynomial operator-(const DtPolynomial& o) const;
    DtPolynomial operator*(const DtPolynomial& o) const;
    DtPolynomial operator-() const;
    DtPolynomial scaled(const Rational& k) const;
    bool operator==(const DtPolynomial& o) const { return coeffs_ == o.coeffs_; }

    // Euclidean division: *this = q * d + r with deg(r) < deg(d).
    std::pair<DtPolynomial, DtPolynomial> divmod(const DtPolynomial& d) const;

    Rational eval(const Rational& x) const;

    // Monic leading coefficient.
    DtPolynomial monic() const;

    // Lowest-degree first, e.g. "1 - 2*dt + 1/2*dt*dt".
    std::string str() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Monic gcd; gcd(0, p) = monic(p).
DtPolynomial poly_gcd(DtPolynomial a, DtPolynomial b);

}  // namespace hyperpoly
