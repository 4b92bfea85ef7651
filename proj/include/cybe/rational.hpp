#ifndef CYBE_RATIONAL_HPP
#define CYBE_RATIONAL_HPP

#include <gmpxx.h>

#include <iostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace cybe {

/// Exact rational scalar, the coefficient field for the whole library.
///
/// Canonical form is maintained at all times: lowest terms, denominator > 0,
/// zero stored as 0/1. There is no floating point anywhere; every identity
/// the library certifies is an exact one.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long num) : v_(num) {}
    Rational(int num) : v_(num) {}
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "p" or "p/q" with optional sign, decimal digits only.
    static Rational parse(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
        for (char c : s) {
            if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
                throw std::invalid_argument("Rational::parse: bad character in '" + s + "'");
        }
        mpq_class v;
        if (v.set_str(s, 10) != 0)
            throw std::invalid_argument("Rational::parse: cannot parse '" + s + "'");
        if (v.get_den() == 0) throw std::domain_error("Rational::parse: zero denominator");
        v.canonicalize();
        return Rational(std::move(v));
    }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_one() const { return v_ == 1; }

    /// Renders "p" when the denominator is 1, else "p/q".
    std::string str() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// 1/2, used for the chain Cartan normalization.
inline const Rational& half() {
    static const Rational h(1, 2);
    return h;
}

}  // namespace cybe

#endif
