#pragma once

#include <optional>
#include <string>

#include "hyperpoly/dt_polynomial.hpp"

namespace hyperpoly {

enum class Ordering { LT, EQ, GT };

// Element of the ordered field of rational functions in the
// infinitesimal dt. The order takes dt to be positive yet smaller than
// every positive rational: the sign of a nonzero element is the sign it
// eventually has as dt decreases to 0 from above, which is the sign of
// the lowest-degree numerator coefficient once the denominator is
// normalized.
//
// Canonical form: gcd(num, den) = 1 and the trailing (lowest-degree
// nonzero) coefficient of den is exactly 1.
class DtScalar {
public:
    DtScalar() : num_(), den_(Rational(1)) {}
    DtScalar(Rational r) : num_(std::move(r)), den_(Rational(1)) {}
    DtScalar(long n) : num_(Rational(n)), den_(Rational(1)) {}
    DtScalar(DtPolynomial num, DtPolynomial den);

    static DtScalar dt();  // the infinitesimal itself

    const DtPolynomial& num() const { return num_; }
    const DtPolynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    // Exact rational value; only valid when is_rational().
    Rational rational_value() const;

    DtScalar operator+(const DtScalar& o) const;
    DtScalar operator-(const DtScalar& o) const;
    DtScalar operator*(const DtScalar& o) const;
    DtScalar operator/(const DtScalar& o) const;  // throws on zero divisor
    DtScalar operator-() const;
    DtScalar inverse() const;
    DtScalar abs() const { return sign() < 0 ? -*this : *this; }

    // Sign as dt -> 0+ (Prop-5 style: agrees with evaluation at every
    // sufficiently small positive rational).
    int sign() const;

    bool operator==(const DtScalar& o) const;
    bool operator!=(const DtScalar& o) const { return !(*this == o); }

    // Limit as dt -> 0; nullopt when the element is infinite.
    std::optional<Rational> standard_part() const;
    bool is_finite() const { return den_.order() == 0; }

    // Substitution dt := r; throws std::domain_error on a pole.
    Rational eval_at(const Rational& r) const;

    // "1 - 2*dt", "(1 - 2*dt)/(1 + dt)", "1/dt", ...
    std::string str() const;

private:
    void canonicalize();
    DtPolynomial num_, den_;
};

Ordering compare(const DtScalar& a, const DtScalar& b);
inline bool operator<(const DtScalar& a, const DtScalar& b) { return compare(a, b) == Ordering::LT; }
inline bool operator<=(const DtScalar& a, const DtScalar& b) { return compare(a, b) != Ordering::GT; }
inline bool operator>(const DtScalar& a, const DtScalar& b) { return compare(a, b) == Ordering::GT; }
inline bool operator>=(const DtScalar& a, const DtScalar& b) { return compare(a, b) != Ordering::LT; }

// A positive rational r0 such that sign(eval_at(a, r)) = sign(a) for
// every rational 0 < r < r0, from a Cauchy-type lower bound on the
// positive roots of num * den.
Rational sign_stability_bound(const DtScalar& a);

}  // namespace hyperpoly
