#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "fibstab/chern.hpp"
#include "fibstab/tilt.hpp"

namespace fibstab {

// Solution of nu_{alpha,beta,t}(v) = nu_{alpha,beta,t}(w) in alpha^2: a
// single positive value, none, or identically all of them (charges
// proportional for every alpha).
struct WallSolution {
    enum class Kind { all_alpha, no_wall, at_alpha_sq };

    Kind kind;
    Rational alpha_sq;  // meaningful only for at_alpha_sq

    static WallSolution all_alpha() { return {Kind::all_alpha, Rational(0)}; }
    static WallSolution no_wall() { return {Kind::no_wall, Rational(0)}; }
    static WallSolution at(Rational a) { return {Kind::at_alpha_sq, std::move(a)}; }

    bool is_wall() const { return kind == Kind::at_alpha_sq; }

    friend bool operator==(const WallSolution& a, const WallSolution& b) {
        if (a.kind != b.kind) return false;
        return a.kind != Kind::at_alpha_sq || a.alpha_sq == b.alpha_sq;
    }
};

// The alignment equation Re z(v) Im z(w) = Re z(w) Im z(v) is affine in
// alpha^2 (Re is affine, Im constant): A alpha^2 = B with
//   A = ((t+1)/2) h2f (ch0(v) Im_w - ch0(w) Im_v),
//   B = P_v Im_w - P_w Im_v,  P = H ch2^b + t F ch2^b.
inline WallSolution wall_alpha_sq(const ContractedClass& v, const ContractedClass& w,
                                  const Rational& beta, const Rational& t,
                                  const FibredGeometry& geom) {
    if (t < Rational(0)) throw InvalidParamsError("t must be nonnegative");
    TwistedComponents tv = twist(v, beta, geom);
    TwistedComponents tw = twist(w, beta, geom);
    Rational pv = tv.h_ch2b + t * tv.f_ch2b;
    Rational pw = tw.h_ch2b + t * tw.f_ch2b;
    Rational a = (t + Rational(1)) / Rational(2) * geom.h2f() *
                 (tv.ch0 * tw.hf_ch1b - tw.ch0 * tv.hf_ch1b);
    Rational b = pv * tw.hf_ch1b - pw * tv.hf_ch1b;
    if (a.is_zero()) return b.is_zero() ? WallSolution::all_alpha() : WallSolution::no_wall();
    Rational sol = b / a;
    if (sol > Rational(0)) return WallSolution::at(sol);
    return WallSolution::no_wall();
}

namespace detail {
inline bool class_less(const ContractedClass& a, const ContractedClass& b) {
    auto ca = a.components();
    auto cb = b.components();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] < cb[i]) return true;
        if (cb[i] < ca[i]) return false;
    }
    return false;
}
} // namespace detail

enum class WallDirection { below, above };

struct FirstWall {
    bool found = false;
    Rational alpha_sq;
    std::vector<ContractedClass> witnesses;  // every candidate achieving the wall
};

// First wall crossed when moving alpha^2 away from the start value:
// direction below picks the maximal wall < start, direction above the
// minimal wall > start. Witnesses are returned in canonical order, so the
// result is invariant under permutations of the candidate list.
inline FirstWall first_wall(const ContractedClass& v,
                            const std::vector<ContractedClass>& candidates, const Rational& beta,
                            const Rational& t, const Rational& alpha_sq_start,
                            const FibredGeometry& geom,
                            WallDirection direction = WallDirection::below) {
    if (alpha_sq_start <= Rational(0))
        throw InvalidParamsError("alpha_sq_start must be positive");
    FirstWall result;
    for (const ContractedClass& w : candidates) {
        WallSolution sol = wall_alpha_sq(v, w, beta, t, geom);
        if (!sol.is_wall()) continue;
        bool right_side = direction == WallDirection::below ? sol.alpha_sq < alpha_sq_start
                                                            : sol.alpha_sq > alpha_sq_start;
        if (!right_side) continue;
        bool better = !result.found ||
                      (direction == WallDirection::below ? sol.alpha_sq > result.alpha_sq
                                                         : sol.alpha_sq < result.alpha_sq);
        if (better) {
            result.found = true;
            result.alpha_sq = sol.alpha_sq;
            result.witnesses.clear();
            result.witnesses.push_back(w);
        } else if (sol.alpha_sq == result.alpha_sq) {
            result.witnesses.push_back(w);  // multiset semantics, duplicates kept
        }
    }
    std::sort(result.witnesses.begin(), result.witnesses.end(), detail::class_less);
    return result;
}

// Finite search box for destabilizer enumeration: per-component bounds on
// |ch0|, |H^2 ch1|, |HF ch1|, |H ch2|, |F ch2|, |ch3|. With lattice set the
// grid steps by the lattice denominators (1,1,1,2,2,6); otherwise by
// integers.
struct EnumerationBounds {
    std::array<Rational, 6> max_abs;
    bool lattice = true;

    static EnumerationBounds uniform(const Rational& bound, bool lattice = true) {
        EnumerationBounds b;
        b.max_abs = {bound, bound, bound, bound, bound, bound};
        b.lattice = lattice;
        return b;
    }
};

// Numerical over-approximation of the proof's subobject-charge set W:
// every lattice class w in the box with
//   0 <= HF ch1^b(w) <= HF ch1^b(v),
//   delta_tilde_t(w) >= 0 and delta_tilde_t(v - w) >= 0,
//   heart membership not violated by w or v - w,
//   w not in {0, v}.
// Deterministic canonical output order.
inline std::vector<ContractedClass> enumerate_destabilizer_classes(
    const ContractedClass& v, const Rational& beta, const Rational& t,
    const FibredGeometry& geom, const EnumerationBounds& bounds) {
    if (t < Rational(0)) throw InvalidParamsError("t must be nonnegative");
    TwistedComponents tv = twist(v, beta, geom);
    if (tv.hf_ch1b <= Rational(0))
        throw EmptyAmbientError("ambient class has HF ch1^b <= 0; no positive-Im subcharges");

    const std::array<long, 6> dens = bounds.lattice ? std::array<long, 6>{1, 1, 1, 2, 2, 6}
                                                    : std::array<long, 6>{1, 1, 1, 1, 1, 1};
    std::array<std::vector<Rational>, 6> axis_values;
    for (std::size_t i = 0; i < 6; ++i) {
        if (bounds.max_abs[i] < Rational(0))
            throw InvalidParamsError("enumeration bounds must be nonnegative");
        // integer numerators n with |n / den| <= max_abs
        Rational scaled = bounds.max_abs[i] * Rational(dens[i]);
        mpz_class floor_scaled = scaled.num() / scaled.den();  // exact floor, scaled >= 0
        long hi = floor_scaled.get_si();
        for (long n = -hi; n <= hi; ++n) axis_values[i].push_back(Rational(n, dens[i]));
    }

    // Twisting is linear in the class, so each nesting level adds its own
    // contribution to a running twisted-component partial; the complement's
    // twist is the componentwise difference from the ambient twist.
    const Rational& e = geom.h3();
    const Rational& h2f = geom.h2f();
    Rational b2_half = beta * beta / Rational(2);
    Rational b3_sixth = beta * beta * beta / Rational(6);

    std::vector<ContractedClass> out;
    for (const Rational& ch0 : axis_values[0]) {
        TwistedComponents t0{beta,          ch0,
                             -beta * e * ch0, -beta * h2f * ch0,
                             b2_half * e * ch0, b2_half * h2f * ch0,
                             -b3_sixth * e * ch0};
        for (const Rational& h2 : axis_values[1]) {
            TwistedComponents t1 = t0;
            t1.h2_ch1b += h2;
            t1.h_ch2b -= beta * h2;
            t1.ch3b += b2_half * h2;
            for (const Rational& hf : axis_values[2]) {
                TwistedComponents t2 = t1;
                t2.hf_ch1b += hf;
                t2.f_ch2b -= beta * hf;
                // Im monotonicity: prune before the inner three levels
                if (t2.hf_ch1b < Rational(0) || t2.hf_ch1b > tv.hf_ch1b) continue;
                for (const Rational& hc2 : axis_values[3]) {
                    TwistedComponents t3 = t2;
                    t3.h_ch2b += hc2;
                    t3.ch3b -= beta * hc2;
                    for (const Rational& fc2 : axis_values[4]) {
                        TwistedComponents t4 = t3;
                        t4.f_ch2b += fc2;
                        for (const Rational& c3 : axis_values[5]) {
                            ContractedClass w{ch0, h2, hf, hc2, fc2, c3};
                            if (w.is_zero() || w == v) continue;
                            TwistedComponents tw = t4;
                            tw.ch3b += c3;
                            TwistedComponents rest{beta,
                                                   tv.ch0 - tw.ch0,
                                                   tv.h2_ch1b - tw.h2_ch1b,
                                                   tv.hf_ch1b - tw.hf_ch1b,
                                                   tv.h_ch2b - tw.h_ch2b,
                                                   tv.f_ch2b - tw.f_ch2b,
                                                   tv.ch3b - tw.ch3b};
                            if (delta_tilde_t_twisted(tw, t, geom) < Rational(0)) continue;
                            if (delta_tilde_t_twisted(rest, t, geom) < Rational(0)) continue;
                            if (heart_membership_twisted(tw).violates()) continue;
                            if (heart_membership_twisted(rest).violates()) continue;
                            out.push_back(w);
                        }
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), detail::class_less);
    return out;
}

struct WallCurvePoint {
    Rational beta;
    Rational alpha_sq;
};

struct WallCurve {
    std::vector<WallCurvePoint> points;
    bool all_alpha_seen = false;  // diagnostic: some sample had aligned charges for every alpha
};

// Traces the locus nu(v) = nu(w) over an inclusive rational beta grid.
// Equal endpoints give a single-beta trace.
inline WallCurve wall_curve_sample(const ContractedClass& v, const ContractedClass& w,
                                   const Rational& t, const Rational& beta_lo,
                                   const Rational& beta_hi, long steps,
                                   const FibredGeometry& geom) {
    if (steps < 1) throw InvalidParamsError("steps must be at least 1");
    if (beta_lo > beta_hi) throw InvalidParamsError("beta_lo must not exceed beta_hi");

    std::vector<Rational> grid;
    if (steps == 1 || beta_lo == beta_hi) {
        grid.push_back(beta_lo);
    } else {
        Rational step = (beta_hi - beta_lo) / Rational(steps - 1);
        for (long k = 0; k < steps; ++k) grid.push_back(beta_lo + Rational(k) * step);
    }

    WallCurve curve;
    for (const Rational& beta : grid) {
        WallSolution sol = wall_alpha_sq(v, w, beta, t, geom);
        if (sol.is_wall()) curve.points.push_back(WallCurvePoint{beta, sol.alpha_sq});
        if (sol.kind == WallSolution::Kind::all_alpha) curve.all_alpha_seen = true;
    }
    return curve;
}

} // namespace fibstab
