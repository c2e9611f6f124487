#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include "sympoly/errors.hpp"

namespace sympoly {

/**
 * Exact rational number with arbitrary-precision numerator and denominator.
 *
 * Always kept in lowest terms with a positive denominator; zero is 0/1.
 * Backed by GMP (mpq), which maintains exactly this canonical form.
 */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den) {
        if (den == 0) throw ZeroDenominatorError("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(mpz_class num, mpz_class den) {
        if (den == 0) throw ZeroDenominatorError("rational with zero denominator");
        v_ = mpq_class(std::move(num), std::move(den));
        v_.canonicalize();
    }

    /// Parses "p" or "p/q" with an optional leading minus. Throws
    /// ZeroDenominatorError on q == 0 and SyntaxError on malformed text.
    static Rational from_string(std::string_view text) {
        std::size_t pos = 0;
        const auto digits = [&](const char* what) {
            std::size_t start = pos;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
            if (pos == start) throw SyntaxError(pos, std::string("expected ") + what);
            return std::string(text.substr(start, pos - start));
        };
        bool negative = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            negative = text[pos] == '-';
            ++pos;
        }
        mpz_class num(digits("digits"), 10);
        mpz_class den(1);
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            den = mpz_class(digits("denominator digits"), 10);
        }
        if (pos != text.size()) throw SyntaxError(pos, "trailing characters in rational");
        if (negative) num = -num;
        return Rational(std::move(num), std::move(den));
    }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    const mpz_class& numerator() const { return v_.get_num(); }
    const mpz_class& denominator() const { return v_.get_den(); }

    Rational abs() const {
        Rational r = *this;
        if (sign() < 0) r.v_ = -r.v_;
        return r;
    }

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string str() const {
        std::string s = v_.get_num().get_str();
        if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
        return s;
    }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ZeroDenominatorError("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return cmp(a.v_, b.v_) <=> 0;
    }

private:
    mpq_class v_;
};

}  // namespace sympoly
