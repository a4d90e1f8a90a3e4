#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace geomcrystal {

/// Exact arbitrary-precision rational number.
///
/// Always held in canonical form: denominator > 0 and
/// gcd(|numerator|, denominator) = 1. Every operation re-canonicalizes,
/// so two equal values always compare equal bit-for-bit.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}
    Rational(int n) : value_(static_cast<long>(n)) {}

    Rational(long num, long den) {
        if (den == 0)
            throw std::domain_error("Rational: zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    /// Parses "p", "p/q" or "-p/q". Surrounding whitespace is ignored.
    static Rational from_string(std::string_view text) {
        std::size_t begin = text.find_first_not_of(" \t\r\n");
        std::size_t end = text.find_last_not_of(" \t\r\n");
        if (begin == std::string_view::npos)
            throw std::invalid_argument("Rational: empty string");
        std::string s(text.substr(begin, end - begin + 1));
        if (!looks_like_rational(s))
            throw std::invalid_argument("Rational: malformed value '" + s + "'");
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw std::invalid_argument("Rational: malformed value '" + s + "'");
        if (q.get_den() == 0)
            throw std::domain_error("Rational: zero denominator in '" + s + "'");
        q.canonicalize();
        Rational r;
        r.value_ = std::move(q);
        return r;
    }

    /// Renders as "p/q", or "p" when the denominator is 1.
    std::string str() const { return value_.get_str(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_positive() const { return sgn(value_) > 0; }

    std::string numerator_str() const { return value_.get_num().get_str(); }
    std::string denominator_str() const { return value_.get_den().get_str(); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.value_ + b.value_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.value_ - b.value_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.value_ * b.value_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero())
            throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(a.value_ / b.value_));
    }
    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.value_;
    }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {
        value_.canonicalize();
    }

    static bool looks_like_rational(const std::string& s) {
        // [-]digits[/digits], no embedded spaces or exponents
        std::size_t i = 0;
        if (i < s.size() && s[i] == '-') ++i;
        std::size_t digits = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++digits; }
        if (digits == 0) return false;
        if (i == s.size()) return true;
        if (s[i] != '/') return false;
        ++i;
        digits = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++digits; }
        return digits > 0 && i == s.size();
    }

    mpq_class value_;
};

/// Exact integer power. pow(r, 0) = 1 for any r; a zero base with a
/// negative exponent is a domain error.
inline Rational pow(const Rational& r, long n) {
    if (n == 0) return Rational(1);
    if (r.is_zero() && n < 0)
        throw std::domain_error("pow: zero base with negative exponent");
    Rational base = n > 0 ? r : Rational(1) / r;
    unsigned long e = n > 0 ? static_cast<unsigned long>(n)
                            : static_cast<unsigned long>(-(n + 1)) + 1;
    Rational acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

}  // namespace geomcrystal
