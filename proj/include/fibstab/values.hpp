#pragma once

#include <string>
#include <utility>

#include "fibstab/error.hpp"
#include "fibstab/rational.hpp"

namespace fibstab {

// Slope value of a central charge: an exact rational or +infinity (the
// Im Z = 0 case). +infinity compares strictly greater than every finite
// value; two infinities compare equal.
class Slope {
public:
    static Slope infinite() { return Slope(true, Rational(0)); }
    static Slope finite(Rational v) { return Slope(false, std::move(v)); }

    bool is_finite() const { return !infinite_; }

    const Rational& finite_value() const {
        if (infinite_) throw InvalidParamsError("slope is +infinity");
        return value_;
    }

    std::string str() const { return infinite_ ? "inf" : value_.str(); }

    friend bool operator==(const Slope& a, const Slope& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
        return a.value_ == b.value_;
    }
    friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }
    friend bool operator<(const Slope& a, const Slope& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator>(const Slope& a, const Slope& b) { return b < a; }
    friend bool operator<=(const Slope& a, const Slope& b) { return !(b < a); }
    friend bool operator>=(const Slope& a, const Slope& b) { return !(a < b); }

private:
    Slope(bool infinite, Rational value) : infinite_(infinite), value_(std::move(value)) {}

    bool infinite_;
    Rational value_;
};

// Exact complex value of a central charge. Phase comparisons are done by
// cross-multiplication, never through division or floating point.
struct ChargeValue {
    Rational re;
    Rational im;

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    // -Re/Im when Im != 0, the slope attached to this charge.
    Slope slope() const {
        if (im.is_zero()) return Slope::infinite();
        return Slope::finite(-re / im);
    }

    friend bool operator==(const ChargeValue& a, const ChargeValue& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend ChargeValue operator+(const ChargeValue& a, const ChargeValue& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ChargeValue operator-(const ChargeValue& a, const ChargeValue& b) {
        return {a.re - b.re, a.im - b.im};
    }
};

// Re(a) Im(b) - Re(b) Im(a); zero exactly when the charges are aligned.
inline Rational alignment_residue(const ChargeValue& a, const ChargeValue& b) {
    return a.re * b.im - b.re * a.im;
}

} // namespace fibstab
