#include "hyperpoly/dt_polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace hyperpoly {

DtPolynomial::DtPolynomial(Rational constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

DtPolynomial::DtPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

DtPolynomial DtPolynomial::indeterminate() {
    return DtPolynomial(std::vector<Rational>{Rational(0), Rational(1)});
}

void DtPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

int DtPolynomial::order() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return static_cast<int>(i);
    return -1;
}

const Rational& DtPolynomial::coeff(size_t deg) const {
    static const Rational zero;
    return deg < coeffs_.size() ? coeffs_[deg] : zero;
}

const Rational& DtPolynomial::leading_coeff() const {
    if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

const Rational& DtPolynomial::trailing_coeff() const {
    if (is_zero()) throw std::logic_error("trailing coefficient of zero polynomial");
    return coeffs_[order()];
}

DtPolynomial DtPolynomial::operator+(const DtPolynomial& o) const {
    std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()));
    for (size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
    return DtPolynomial(std::move(out));
}

DtPolynomial DtPolynomial::operator-(const DtPolynomial& o) const {
    std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()));
    for (size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - o.coeff(i);
    return DtPolynomial(std::move(out));
}

DtPolynomial DtPolynomial::operator*(const DtPolynomial& o) const {
    if (is_zero() || o.is_zero()) return DtPolynomial();
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    return DtPolynomial(std::move(out));
}

DtPolynomial DtPolynomial::operator-() const {
    std::vector<Rational> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
    return DtPolynomial(std::move(out));
}

DtPolynomial DtPolynomial::scaled(const Rational& k) const {
    if (k.is_zero()) return DtPolynomial();
    std::vector<Rational> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * k;
    return DtPolynomial(std::move(out));
}

std::pair<DtPolynomial, DtPolynomial> DtPolynomial::divmod(const DtPolynomial& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    DtPolynomial rem = *this;
    std::vector<Rational> q(degree() >= d.degree() ? degree() - d.degree() + 1 : 0);
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int shift = rem.degree() - d.degree();
        Rational f = rem.leading_coeff() / d.leading_coeff();
        q[shift] = f;
        std::vector<Rational> sub(shift + d.coeffs_.size());
        for (size_t i = 0; i < d.coeffs_.size(); ++i) sub[shift + i] = d.coeffs_[i] * f;
        rem = rem - DtPolynomial(std::move(sub));
    }
    return {DtPolynomial(std::move(q)), rem};
}

Rational DtPolynomial::eval(const Rational& x) const {
    Rational acc;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

DtPolynomial DtPolynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / leading_coeff());
}

DtPolynomial poly_gcd(DtPolynomial a, DtPolynomial b) {
    while (!b.is_zero()) {
        DtPolynomial r = a.divmod(b).second;
        a = std::move(b);
        b = r.monic();  // keeps coefficient growth in check
    }
    return a.monic();
}

std::string DtPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) out << "-";
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = a == Rational(1);
        if (i == 0) {
            out << a.str();
        } else {
            if (!unit) out << a.str() << "*";
            out << "dt";
            for (size_t k = 1; k < i; ++k) out << "*dt";
        }
    }
    return out.str();
}

}  // namespace hyperpoly
