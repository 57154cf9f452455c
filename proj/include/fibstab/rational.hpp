#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdlib>
#include <ostream>
#include <string>
#include <string_view>

#include "fibstab/error.hpp"

namespace fibstab {

// Exact rational number, always held in canonical reduced form with positive
// denominator. Thin value wrapper over GMP's mpq_class so that arithmetic
// never leaves the exact world and expression templates never leak into
// client code.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}             // NOLINT: implicit by design
    Rational(long n) : v_(static_cast<long>(n)) {}

    Rational(long num, long den) {
        if (den == 0) throw ParseError("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    // Accepts "p", "p/q" and exact finite decimals "d.d", with ASCII '-' or
    // U+2212 as the sign. Anything else (including "p/0") is a parse error.
    static Rational parse(std::string_view text) {
        std::string s = normalize_minus(text);
        if (s.empty()) throw ParseError("empty rational token");

        std::size_t pos = 0;
        bool negative = false;
        if (s[pos] == '-' || s[pos] == '+') {
            negative = (s[pos] == '-');
            ++pos;
        }
        if (pos >= s.size()) throw ParseError("malformed rational '" + s + "'");

        auto take_digits = [&](std::size_t& at) -> std::string {
            std::size_t start = at;
            while (at < s.size() && s[at] >= '0' && s[at] <= '9') ++at;
            return s.substr(start, at - start);
        };

        std::string intpart = take_digits(pos);
        if (intpart.empty()) throw ParseError("malformed rational '" + s + "'");

        mpz_class num(intpart);
        mpz_class den(1);
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            std::string denpart = take_digits(pos);
            if (denpart.empty() || pos != s.size())
                throw ParseError("malformed rational '" + s + "'");
            den = mpz_class(denpart);
            if (den == 0) throw ParseError("rational with zero denominator: '" + s + "'");
        } else if (pos < s.size() && s[pos] == '.') {
            ++pos;
            std::string fracpart = take_digits(pos);
            if (fracpart.empty() || pos != s.size())
                throw ParseError("malformed decimal '" + s + "'");
            for (char c : fracpart) {
                num *= 10;
                num += c - '0';
                den *= 10;
            }
        } else if (pos != s.size()) {
            throw ParseError("malformed rational '" + s + "'");
        }

        if (negative) num = -num;
        Rational r;
        r.v_ = mpq_class(num, den);
        r.v_.canonicalize();
        return r;
    }

    // Canonical text form: "p" when the denominator is 1, else "p/q".
    std::string str() const { return v_.get_str(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const {
        Rational r = *this;
        if (sgn(r.v_) < 0) r.v_ = -r.v_;
        return r;
    }

    Rational reciprocal() const {
        if (is_zero()) throw InvalidParamsError("reciprocal of zero");
        Rational r;
        r.v_ = 1 / v_;
        return r;
    }

    // Approximate double value; only for the clearly-labeled plot output.
    double approx() const { return v_.get_d(); }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    friend Rational operator-(const Rational& a) { return from(-a.v_); }
    friend Rational operator+(const Rational& a, const Rational& b) { return from(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return from(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return from(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw InvalidParamsError("division by zero");
        return from(a.v_ / b.v_);
    }

    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    static Rational from(mpq_class q) {
        Rational r;
        r.v_ = std::move(q);
        return r;
    }

    // Replaces a leading U+2212 minus sign with ASCII '-'.
    static std::string normalize_minus(std::string_view text) {
        static constexpr char u2212[] = "\xe2\x88\x92";
        std::string s(text);
        if (s.rfind(u2212, 0) == 0) s.replace(0, 3, "-");
        return s;
    }

    mpq_class v_;
};

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

} // namespace fibstab
