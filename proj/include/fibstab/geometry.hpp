#pragma once

#include <string>
#include <utility>

#include "fibstab/error.hpp"
#include "fibstab/rational.hpp"

namespace fibstab {

// Numerical intersection theory of a threefold X fibred over a curve C:
// genus of C, H^3 and H^2F, with F^2 = 0 built into every formula. Divisor
// and curve classes are restricted to the rational span of {H, F}, which on
// P(E) is the whole numerical group.
enum class GeometryKind { projective_bundle, generic };

class FibredGeometry {
public:
    // P(E) for a rank-3 bundle E of degree deg_e on a genus-g curve:
    // H^3 = deg E and H^2F = 1.
    static FibredGeometry projective_bundle(long genus, long deg_e) {
        check_genus(genus);
        return FibredGeometry(GeometryKind::projective_bundle, genus,
                              Rational(deg_e), Rational(1));
    }

    static FibredGeometry generic(long genus, Rational h3, Rational h2f) {
        check_genus(genus);
        if (!(h2f > Rational(0)))
            throw InvalidGeometryError("h2f must be positive (H relatively ample)");
        return FibredGeometry(GeometryKind::generic, genus, std::move(h3), std::move(h2f));
    }

    GeometryKind kind() const { return kind_; }
    bool is_projective_bundle() const { return kind_ == GeometryKind::projective_bundle; }
    long genus() const { return genus_; }
    const Rational& h3() const { return h3_; }
    const Rational& h2f() const { return h2f_; }

    // deg E on P(E); normalizing E makes H ample, which forces deg E >= 1.
    // Nonpositive values are a warning, not an error.
    const Rational& deg_e() const {
        require_projective_bundle("deg_e");
        return h3_;
    }

    bool ample_normalization_warning() const {
        return is_projective_bundle() && h3_ <= Rational(0);
    }

    void require_projective_bundle(const std::string& op) const {
        if (!is_projective_bundle())
            throw UnsupportedGeometryError(op + " is defined only for projective-bundle geometries");
    }

    friend bool operator==(const FibredGeometry& a, const FibredGeometry& b) {
        return a.kind_ == b.kind_ && a.genus_ == b.genus_ && a.h3_ == b.h3_ && a.h2f_ == b.h2f_;
    }

private:
    FibredGeometry(GeometryKind kind, long genus, Rational h3, Rational h2f)
        : kind_(kind), genus_(genus), h3_(std::move(h3)), h2f_(std::move(h2f)) {}

    static void check_genus(long genus) {
        if (genus < 0) throw InvalidGeometryError("negative genus");
    }

    GeometryKind kind_;
    long genus_;
    Rational h3_;
    Rational h2f_;
};

// x H + y F.
struct DivisorClass {
    Rational h;
    Rational f;

    friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
        return a.h == b.h && a.f == b.f;
    }
};

struct InequalitySides {
    Rational lhs;
    Rational rhs;
    bool holds() const { return lhs <= rhs; }
};

// (H^2F)(F D^2) <= (HF D)^2.  With F^2 = 0 both sides equal (x h2f)^2.
inline InequalitySides hodge_sides_1(const FibredGeometry& geom, const DivisorClass& d) {
    Rational fd2 = d.h * d.h * geom.h2f();           // F(xH+yF)^2 = x^2 H^2F
    Rational hfd = d.h * geom.h2f();                 // HF(xH+yF)  = x H^2F
    return InequalitySides{geom.h2f() * fd2, hfd * hfd};
}

inline bool hodge_check_1(const FibredGeometry& geom, const DivisorClass& d) {
    return hodge_sides_1(geom, d).holds();
}

// (H^2F)(H D^2) <= 2(H^2 D)(HF D).  rhs - lhs = x^2 h3 h2f.
inline InequalitySides hodge_sides_2(const FibredGeometry& geom, const DivisorClass& d) {
    Rational hd2 = d.h * d.h * geom.h3() + Rational(2) * d.h * d.f * geom.h2f();
    Rational h2d = d.h * geom.h3() + d.f * geom.h2f();
    Rational hfd = d.h * geom.h2f();
    return InequalitySides{geom.h2f() * hd2, Rational(2) * h2d * hfd};
}

inline bool hodge_check_2(const FibredGeometry& geom, const DivisorClass& d) {
    return hodge_sides_2(geom, d).holds();
}

} // namespace fibstab
