#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hyperpoly {

// Exact rational number, always in lowest terms with a positive
// denominator. Backed by GMP; this alias is the only place the
// dependency shows.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw std::domain_error("division by zero");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Parses "17", "-3/4" or an exact decimal such as "0.2" (= 1/5).
    static Rational parse(const std::string& text);

    Rational operator+(const Rational& o) const { return Rational::raw(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return Rational::raw(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return Rational::raw(v_ * o.v_); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("division by zero");
        return Rational::raw(v_ / o.v_);
    }
    Rational operator-() const { return Rational::raw(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    Rational abs() const { return Rational::raw(::abs(v_)); }

    // "p/q", or just "p" when q = 1.
    std::string str() const;

    const mpq_class& value() const { return v_; }

private:
    static Rational raw(mpq_class v) {
        Rational r;
        r.v_ = std::move(v);
        return r;
    }
    mpq_class v_;
};

inline Rational operator*(long n, const Rational& r) { return Rational(n) * r; }

}  // namespace hyperpoly
