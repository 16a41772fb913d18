#include "hyperpoly/dt_scalar.hpp"

#include <stdexcept>

namespace hyperpoly {

DtScalar::DtScalar(DtPolynomial num, DtPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("division by zero scalar");
    canonicalize();
}

DtScalar DtScalar::dt() {
    return DtScalar(DtPolynomial::indeterminate(), DtPolynomial(Rational(1)));
}

void DtScalar::canonicalize() {
    if (num_.is_zero()) {
        den_ = DtPolynomial(Rational(1));
        return;
    }
    DtPolynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    Rational t = den_.trailing_coeff();
    Rational inv = Rational(1) / t;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
}

Rational DtScalar::rational_value() const {
    if (!is_rational()) throw std::logic_error("not a rational constant");
    if (num_.is_zero()) return Rational(0);
    return num_.coeff(0) / den_.coeff(0);
}

DtScalar DtScalar::operator+(const DtScalar& o) const {
    return DtScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

DtScalar DtScalar::operator-(const DtScalar& o) const {
    return DtScalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

DtScalar DtScalar::operator*(const DtScalar& o) const {
    return DtScalar(num_ * o.num_, den_ * o.den_);
}

DtScalar DtScalar::operator/(const DtScalar& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero scalar");
    return DtScalar(num_ * o.den_, den_ * o.num_);
}

DtScalar DtScalar::operator-() const {
    DtScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

DtScalar DtScalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero scalar");
    return DtScalar(den_, num_);
}

int DtScalar::sign() const {
    if (num_.is_zero()) return 0;
    // den's trailing coefficient is +1 in canonical form.
    return num_.trailing_coeff().sign();
}

bool DtScalar::operator==(const DtScalar& o) const {
    // Cross-multiplication; equivalent to coefficientwise equality of
    // canonical forms.
    return num_ * o.den_ == o.num_ * den_;
}

Ordering compare(const DtScalar& a, const DtScalar& b) {
    int s = (a - b).sign();
    return s < 0 ? Ordering::LT : s > 0 ? Ordering::GT : Ordering::EQ;
}

std::optional<Rational> DtScalar::standard_part() const {
    if (den_.order() > 0) return std::nullopt;  // infinite
    // den(0) = 1 in canonical form.
    return num_.coeff(0);
}

Rational DtScalar::eval_at(const Rational& r) const {
    Rational d = den_.eval(r);
    if (d.is_zero()) throw std::domain_error("pole at substitution point");
    return num_.eval(r) / d;
}

std::string DtScalar::str() const {
    if (den_ == DtPolynomial(Rational(1))) return num_.str();
    auto wrap = [](const DtPolynomial& p) {
        // Parenthesize unless the rendering is a single term.
        std::string s = p.str();
        return s.find(' ') == std::string::npos ? s : "(" + s + ")";
    };
    return wrap(num_) + "/" + wrap(den_);
}

Rational sign_stability_bound(const DtScalar& a) {
    if (a.is_zero()) throw std::logic_error("sign stability bound of zero");
    DtPolynomial p = a.num() * a.den();
    // Strip the dt^k factor, then bound nonzero roots away from zero:
    // |root| >= |c_low| / (|c_low| + max |c_j|).
    int ord = p.order();
    Rational low = p.coeff(ord).abs();
    Rational maxc(0);
    for (int i = ord + 1; i <= p.degree(); ++i) {
        Rational c = p.coeff(i).abs();
        if (c > maxc) maxc = c;
    }
    if (maxc.is_zero()) return Rational(1);  // monomial: any positive point works
    return low / (low + maxc);
}

}  // namespace hyperpoly
