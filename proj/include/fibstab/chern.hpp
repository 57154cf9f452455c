#pragma once

#include <array>

#include "fibstab/geometry.hpp"
#include "fibstab/rational.hpp"

namespace fibstab {

// Numerical class of a derived-category object, stored through its six
// contractions (ch0, H^2 ch1, HF ch1, H ch2, F ch2, ch3). Classes of actual
// objects live in Z + Z + Z + (1/2)Z + (1/2)Z + (1/6)Z; intermediate
// arithmetic (rational twists) is allowed to leave that lattice, so the
// check is advisory and never enforced on construction.
struct ContractedClass {
    Rational ch0;
    Rational h2_ch1;
    Rational hf_ch1;
    Rational h_ch2;
    Rational f_ch2;
    Rational ch3;

    bool is_zero() const {
        return ch0.is_zero() && h2_ch1.is_zero() && hf_ch1.is_zero() &&
               h_ch2.is_zero() && f_ch2.is_zero() && ch3.is_zero();
    }

    std::array<Rational, 6> components() const {
        return {ch0, h2_ch1, hf_ch1, h_ch2, f_ch2, ch3};
    }

    friend bool operator==(const ContractedClass& a, const ContractedClass& b) {
        return a.ch0 == b.ch0 && a.h2_ch1 == b.h2_ch1 && a.hf_ch1 == b.hf_ch1 &&
               a.h_ch2 == b.h_ch2 && a.f_ch2 == b.f_ch2 && a.ch3 == b.ch3;
    }

    friend ContractedClass operator+(const ContractedClass& a, const ContractedClass& b) {
        return {a.ch0 + b.ch0, a.h2_ch1 + b.h2_ch1, a.hf_ch1 + b.hf_ch1,
                a.h_ch2 + b.h_ch2, a.f_ch2 + b.f_ch2, a.ch3 + b.ch3};
    }

    friend ContractedClass operator-(const ContractedClass& a, const ContractedClass& b) {
        return {a.ch0 - b.ch0, a.h2_ch1 - b.h2_ch1, a.hf_ch1 - b.hf_ch1,
                a.h_ch2 - b.h_ch2, a.f_ch2 - b.f_ch2, a.ch3 - b.ch3};
    }

    friend ContractedClass operator-(const ContractedClass& a) {
        return {-a.ch0, -a.h2_ch1, -a.hf_ch1, -a.h_ch2, -a.f_ch2, -a.ch3};
    }

    friend ContractedClass operator*(const Rational& k, const ContractedClass& a) {
        return {k * a.ch0, k * a.h2_ch1, k * a.hf_ch1, k * a.h_ch2, k * a.f_ch2, k * a.ch3};
    }
};

// Full numerical Chow class on P(E) in the basis {1; H, F; H^2, HF; pt},
// with the point class normalized to degree 1 (consistent with H^2F = 1).
// Only defined relative to a projective-bundle geometry.
struct ChowClass {
    Rational ch0;
    Rational c1_h, c1_f;     // ch1 = c1_h H + c1_f F
    Rational c2_h2, c2_hf;   // ch2 = c2_h2 H^2 + c2_hf HF
    Rational ch3;            // multiple of the point class

    friend bool operator==(const ChowClass& a, const ChowClass& b) {
        return a.ch0 == b.ch0 && a.c1_h == b.c1_h && a.c1_f == b.c1_f &&
               a.c2_h2 == b.c2_h2 && a.c2_hf == b.c2_hf && a.ch3 == b.ch3;
    }
};

inline ChowClass structure_sheaf_chow() { return ChowClass{1, 0, 0, 0, 0, 0}; }

// Contractions of the twisted Chern character ch^{beta H} = e^{-beta H} ch.
struct TwistedComponents {
    Rational beta;
    Rational ch0;      // rank is twist-invariant
    Rational h2_ch1b;
    Rational hf_ch1b;
    Rational h_ch2b;
    Rational f_ch2b;
    Rational ch3b;
};

// ch^b_1 = ch1 - bH ch0, ch^b_2 = ch2 - bH ch1 + (b^2H^2/2) ch0,
// ch^b_3 = ch3 - bH ch2 + (b^2H^2/2) ch1 - (b^3H^3/6) ch0, contracted
// against H^2, HF, H, F and 1 using F^2 = 0.
inline TwistedComponents twist(const ContractedClass& v, const Rational& beta,
                               const FibredGeometry& geom) {
    const Rational& e = geom.h3();
    const Rational& h2f = geom.h2f();
    Rational b2_half = beta * beta / Rational(2);
    Rational b3_sixth = beta * beta * beta / Rational(6);

    TwistedComponents t;
    t.beta = beta;
    t.ch0 = v.ch0;
    t.h2_ch1b = v.h2_ch1 - beta * e * v.ch0;
    t.hf_ch1b = v.hf_ch1 - beta * h2f * v.ch0;
    t.h_ch2b = v.h_ch2 - beta * v.h2_ch1 + b2_half * e * v.ch0;
    t.f_ch2b = v.f_ch2 - beta * v.hf_ch1 + b2_half * h2f * v.ch0;
    t.ch3b = v.ch3 - beta * v.h_ch2 + b2_half * v.h2_ch1 - b3_sixth * e * v.ch0;
    return t;
}

// Multiplication by e^{xH + yF} in the Chow ring of P(E), using
// H^3 = e, H^2F = 1, F^2 = 0.
inline ChowClass tensor_by_divisor(const ChowClass& v, const DivisorClass& d,
                                   const FibredGeometry& geom) {
    geom.require_projective_bundle("tensor_by_divisor");
    const Rational& e = geom.deg_e();
    const Rational& x = d.h;
    const Rational& y = d.f;
    Rational half(1, 2);
    Rational sixth(1, 6);

    ChowClass r;
    r.ch0 = v.ch0;
    r.c1_h = v.c1_h + x * v.ch0;
    r.c1_f = v.c1_f + y * v.ch0;
    // D ch1 = x c1_h H^2 + (x c1_f + y c1_h) HF,  D^2 = x^2 H^2 + 2xy HF
    r.c2_h2 = v.c2_h2 + x * v.c1_h + half * x * x * v.ch0;
    r.c2_hf = v.c2_hf + x * v.c1_f + y * v.c1_h + x * y * v.ch0;
    // degrees: D ch2 = x c2_h2 e + x c2_hf + y c2_h2,
    //          D^2 ch1 = x^2 c1_h e + x^2 c1_f + 2xy c1_h,
    //          D^3 = x^3 e + 3 x^2 y
    r.ch3 = v.ch3 + (x * v.c2_h2 * e + x * v.c2_hf + y * v.c2_h2) +
            half * (x * x * v.c1_h * e + x * x * v.c1_f + Rational(2) * x * y * v.c1_h) +
            sixth * (x * x * x * e + Rational(3) * x * x * y) * v.ch0;
    return r;
}

inline ContractedClass contract(const ChowClass& v, const FibredGeometry& geom) {
    geom.require_projective_bundle("contract");
    const Rational& e = geom.deg_e();
    return ContractedClass{v.ch0,
                           v.c1_h * e + v.c1_f,
                           v.c1_h,
                           v.c2_h2 * e + v.c2_hf,
                           v.c2_h2,
                           v.ch3};
}

// Inverse of contract; well defined because the pairing of {H, F} against
// {H^2, HF} has matrix [[e, 1], [1, 0]], unimodular up to sign.
inline ChowClass lift(const ContractedClass& v, const FibredGeometry& geom) {
    geom.require_projective_bundle("lift");
    const Rational& e = geom.deg_e();
    return ChowClass{v.ch0,
                     v.hf_ch1,
                     v.h2_ch1 - e * v.hf_ch1,
                     v.f_ch2,
                     v.h_ch2 - e * v.f_ch2,
                     v.ch3};
}

// Tensoring directly on the contracted data; equals
// contract(tensor_by_divisor(lift(v), d)) but without the round trip.
inline ContractedClass tensor_class_by_divisor(const ContractedClass& v, const DivisorClass& d,
                                               const FibredGeometry& geom) {
    geom.require_projective_bundle("tensor_class_by_divisor");
    const Rational& e = geom.deg_e();
    const Rational& x = d.h;
    const Rational& y = d.f;
    Rational half(1, 2);
    ContractedClass r;
    r.ch0 = v.ch0;
    r.h2_ch1 = v.h2_ch1 + (x * e + y) * v.ch0;
    r.hf_ch1 = v.hf_ch1 + x * v.ch0;
    r.h_ch2 = v.h_ch2 + x * v.h2_ch1 + y * v.hf_ch1 + (half * x * x * e + x * y) * v.ch0;
    r.f_ch2 = v.f_ch2 + x * v.hf_ch1 + half * x * x * v.ch0;
    r.ch3 = v.ch3 + x * v.h_ch2 + y * v.f_ch2 + half * x * x * v.h2_ch1 + x * y * v.hf_ch1 +
            (x * x * x * e + Rational(3) * x * x * y) / Rational(6) * v.ch0;
    return r;
}

inline ContractedClass line_bundle_class(const Rational& a, const Rational& b,
                                         const FibredGeometry& geom) {
    return tensor_class_by_divisor(ContractedClass{1, 0, 0, 0, 0, 0}, DivisorClass{a, b}, geom);
}

inline ContractedClass structure_sheaf_class() { return ContractedClass{1, 0, 0, 0, 0, 0}; }

// Class of RHom(-, O_X)[1]: the signwise dual (ch0, -ch1, ch2, -ch3)
// followed by the shift's global negation.
inline ContractedClass dual_class(const ContractedClass& v) {
    return ContractedClass{-v.ch0, v.h2_ch1, v.hf_ch1, -v.h_ch2, -v.f_ch2, v.ch3};
}

inline ContractedClass shift_class(const ContractedClass& v, long k) {
    return (k % 2 == 0) ? v : -v;
}

// Class of i_{W*}Q for W a reduced point and Q on the fiber with rank r,
// H_s-degree d of ch1 and ch2-length l: pushforward shifts ch by one step.
inline ContractedClass pushforward_fiber_class(const FibredGeometry& geom, const Rational& r,
                                               const Rational& d, const Rational& l) {
    return ContractedClass{0, r * geom.h2f(), 0, d, 0, l};
}

// Class of i_{W*}(E_W) for W one reduced point, i.e. multiplication by F.
inline ContractedClass fiber_restriction_class(const ContractedClass& v,
                                               const FibredGeometry& geom) {
    return ContractedClass{0, geom.h2f() * v.ch0, 0, v.hf_ch1, 0, v.f_ch2};
}

// The three contraction functionals of the tangent-bundle Chern classes of
// P(E), plus chi(O_X): c1 = 3H - (2g-2+e)F and
// c1^2 + c2 pairs with a divisor D as 12 DH^2 - (18g-18+8e) DHF.
struct ChernContractions {
    Rational k;      // 2g - 2 + e
    Rational m;      // 18g - 18 + 8e
    Rational chi_o;  // 1 - g

    // c1 . (2-cycle with contractions hc = H.c, fc = F.c)
    Rational c1_dot_two_cycle(const Rational& hc, const Rational& fc) const {
        return Rational(3) * hc - k * fc;
    }
    // (c1^2 + c2) . (divisor with contractions h2c = H^2.c, hfc = HF.c)
    Rational c1sq_c2_dot_divisor(const Rational& h2c, const Rational& hfc) const {
        return Rational(12) * h2c - m * hfc;
    }
    // D H c1 for a divisor D
    Rational c1_h_dot_divisor(const DivisorClass& d, const FibredGeometry& geom) const {
        Rational dh2 = d.h * geom.h3() + d.f * geom.h2f();
        Rational dhf = d.h * geom.h2f();
        return Rational(3) * dh2 - k * dhf;
    }
    // D F c1 for a divisor D
    Rational c1_f_dot_divisor(const DivisorClass& d, const FibredGeometry& geom) const {
        return Rational(3) * d.h * geom.h2f();
    }
};

inline ChernContractions chern_contractions(const FibredGeometry& geom) {
    geom.require_projective_bundle("chern_contractions");
    Rational g(geom.genus());
    const Rational& e = geom.deg_e();
    return ChernContractions{Rational(2) * g - Rational(2) + e,
                             Rational(18) * g - Rational(18) + Rational(8) * e,
                             Rational(1) - g};
}

// chi(v) by Grothendieck-Riemann-Roch on P(E):
// ch3 + (1/2) c1 ch2 + (1/12)(c1^2+c2) ch1 + chi(O_X) ch0.
inline Rational euler_char(const ContractedClass& v, const FibredGeometry& geom) {
    geom.require_projective_bundle("euler_char");
    ChernContractions cc = chern_contractions(geom);
    return v.ch3 + Rational(1, 2) * cc.c1_dot_two_cycle(v.h_ch2, v.f_ch2) +
           Rational(1, 12) * cc.c1sq_c2_dot_divisor(v.h2_ch1, v.hf_ch1) + cc.chi_o * v.ch0;
}

// Advisory check against Z + Z + Z + (1/2)Z + (1/2)Z + (1/6)Z.
inline bool validate_integrality(const ContractedClass& v) {
    return v.ch0.is_integer() && v.h2_ch1.is_integer() && v.hf_ch1.is_integer() &&
           (Rational(2) * v.h_ch2).is_integer() && (Rational(2) * v.f_ch2).is_integer() &&
           (Rational(6) * v.ch3).is_integer();
}

} // namespace fibstab
