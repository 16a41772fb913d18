#include "hyperpoly/rational.hpp"

namespace hyperpoly {

Rational Rational::parse(const std::string& text) {
    std::string s = text;
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s = s.substr(1);
    }
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        mpz_class num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) throw std::domain_error("division by zero");
        Rational r(mpq_class(num, den));
        return neg ? -r : r;
    }

    auto dot = s.find('.');
    if (dot == std::string::npos) {
        Rational r{mpq_class(mpz_class(s))};
        return neg ? -r : r;
    }
    // Exact decimal: digits on either side of the dot, scaled by 10^k.
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    if (digits.empty()) throw std::invalid_argument("bad decimal literal: " + text);
    mpz_class num(digits);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    Rational r(mpq_class(num, den));
    return neg ? -r : r;
}

std::string Rational::str() const {
    return v_.get_str();
}

}  // namespace hyperpoly
