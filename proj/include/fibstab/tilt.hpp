#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "fibstab/chern.hpp"
#include "fibstab/geometry.hpp"
#include "fibstab/slopes.hpp"
#include "fibstab/values.hpp"

namespace fibstab {

// The tilt parameter triple (alpha^2, beta, t). alpha is stored squared so
// every quantity stays rational; alpha = 0 is admitted for wall-limit
// queries but flagged, since the stability constructions need alpha > 0.
struct TiltParams {
    Rational alpha_sq;
    Rational beta;
    Rational t;

    static TiltParams make(Rational alpha_sq, Rational beta, Rational t = Rational(0)) {
        if (alpha_sq < Rational(0)) throw InvalidParamsError("alpha_sq must be nonnegative");
        if (t < Rational(0)) throw InvalidParamsError("t must be nonnegative");
        return TiltParams{std::move(alpha_sq), std::move(beta), std::move(t)};
    }

    bool alpha_is_zero() const { return alpha_sq.is_zero(); }
};

// z^{alpha,beta}_{H,F} = (alpha^2/2) H^2F ch0 - F ch2^b + i HF ch1^b.
inline ChargeValue z_relative(const ContractedClass& v, const Rational& alpha_sq,
                              const Rational& beta, const FibredGeometry& geom) {
    TwistedComponents tw = twist(v, beta, geom);
    return ChargeValue{alpha_sq / Rational(2) * geom.h2f() * tw.ch0 - tw.f_ch2b, tw.hf_ch1b};
}

inline Slope nu_relative(const ContractedClass& v, const Rational& alpha_sq,
                         const Rational& beta, const FibredGeometry& geom) {
    TwistedComponents tw = twist(v, beta, geom);
    if (tw.hf_ch1b.is_zero()) return Slope::infinite();
    return Slope::finite((tw.f_ch2b - alpha_sq / Rational(2) * geom.h2f() * tw.ch0) / tw.hf_ch1b);
}

// z_{alpha,beta,t} = ((t+1)alpha^2/2) H^2F ch0 - (H + tF) ch2^b + i HF ch1^b.
inline ChargeValue z_mixed(const ContractedClass& v, const TiltParams& p,
                           const FibredGeometry& geom) {
    TwistedComponents tw = twist(v, p.beta, geom);
    Rational re = (p.t + Rational(1)) * p.alpha_sq / Rational(2) * geom.h2f() * tw.ch0 -
                  (tw.h_ch2b + p.t * tw.f_ch2b);
    return ChargeValue{re, tw.hf_ch1b};
}

inline Slope nu_mixed(const ContractedClass& v, const TiltParams& p, const FibredGeometry& geom) {
    TwistedComponents tw = twist(v, p.beta, geom);
    if (tw.hf_ch1b.is_zero()) return Slope::infinite();
    Rational num = tw.h_ch2b + p.t * tw.f_ch2b -
                   (p.t + Rational(1)) / Rational(2) * p.alpha_sq * geom.h2f() * tw.ch0;
    return Slope::finite(num / tw.hf_ch1b);
}

// Z^{alpha,beta}_{C-tor} = (alpha^2/2) H^2 ch1^b - ch3^b + i H ch2^b.
inline ChargeValue z_relative_torsion(const ContractedClass& v, const Rational& alpha_sq,
                                      const Rational& beta, const FibredGeometry& geom) {
    TwistedComponents tw = twist(v, beta, geom);
    return ChargeValue{alpha_sq / Rational(2) * tw.h2_ch1b - tw.ch3b, tw.h_ch2b};
}

// nu_C^{alpha,beta}: the relative tilt slope when HF ch1^b != 0, the
// C-torsion branch (ch3^b - (alpha^2/2) H^2 ch1^b) / (H ch2^b) when the
// torsion proxy holds, +infinity otherwise.
inline Slope nu_c_alpha_beta(const ContractedClass& v, const Rational& alpha_sq,
                             const Rational& beta, const FibredGeometry& geom,
                             std::optional<bool> c_torsion_hint = std::nullopt) {
    bool torsion = detail::c_torsion_proxy(v, c_torsion_hint);
    TwistedComponents tw = twist(v, beta, geom);
    if (!tw.hf_ch1b.is_zero()) return nu_relative(v, alpha_sq, beta, geom);
    if (torsion && !tw.h_ch2b.is_zero())
        return Slope::finite((tw.ch3b - alpha_sq / Rational(2) * tw.h2_ch1b) / tw.h_ch2b);
    return Slope::infinite();
}

inline SlopeFunction slope_function_nu_relative(const Rational& alpha_sq, const Rational& beta,
                                                const FibredGeometry& geom) {
    return SlopeFunction{
        "nu_relative",
        [=](const ContractedClass& v) { return nu_relative(v, alpha_sq, beta, geom); },
        [=](const ContractedClass& v) { return z_relative(v, alpha_sq, beta, geom); }};
}

inline SlopeFunction slope_function_nu_mixed(const TiltParams& p, const FibredGeometry& geom) {
    return SlopeFunction{
        "nu_mixed",
        [=](const ContractedClass& v) { return nu_mixed(v, p, geom); },
        [=](const ContractedClass& v) { return z_mixed(v, p, geom); }};
}

// Sign pattern necessarily satisfied by classes of objects of the tilted
// heart Coh_C^{beta H}. A Consistent verdict means "not numerically
// excluded"; sufficiency is categorical and out of reach here.
struct MembershipReport {
    enum class Status { violates, consistent, consistent_degenerate };

    Status status = Status::consistent;
    std::string reason;            // violated clause, when status == violates
    // equalities observed in the degenerate branch
    bool hf_ch1b_zero = false;
    bool ch0_zero = false;
    bool h_ch2b_zero = false;
    bool f_ch2b_zero = false;
    bool ch3b_zero = false;

    bool violates() const { return status == Status::violates; }
};

inline MembershipReport heart_membership_twisted(const TwistedComponents& tw) {
    MembershipReport rep;
    auto violate = [&](const char* why) {
        rep.status = MembershipReport::Status::violates;
        rep.reason = why;
        return rep;
    };

    if (tw.hf_ch1b < Rational(0)) return violate("hf_ch1b-negative");
    if (!tw.hf_ch1b.is_zero()) return rep;  // consistent

    rep.hf_ch1b_zero = true;
    if (tw.h_ch2b < Rational(0)) return violate("h_ch2b-negative");
    if (tw.f_ch2b < Rational(0)) return violate("f_ch2b-negative");
    if (tw.ch0 > Rational(0)) return violate("ch0-positive");
    rep.ch0_zero = tw.ch0.is_zero();
    rep.h_ch2b_zero = tw.h_ch2b.is_zero();
    rep.f_ch2b_zero = tw.f_ch2b.is_zero();
    if (rep.ch0_zero && rep.h_ch2b_zero) {
        if (tw.ch3b < Rational(0)) return violate("ch3b-negative");
        rep.ch3b_zero = tw.ch3b.is_zero();
    }
    rep.status = MembershipReport::Status::consistent_degenerate;
    return rep;
}

inline MembershipReport heart_membership_necessary(const ContractedClass& v, const Rational& beta,
                                                   const FibredGeometry& geom) {
    return heart_membership_twisted(twist(v, beta, geom));
}

// Delta-bar = (HF ch1^b)^2 - 2 (H^2F ch0)(F ch2^b); independent of beta.
inline Rational delta_bar(const ContractedClass& v, const Rational& beta,
                          const FibredGeometry& geom) {
    TwistedComponents tw = twist(v, beta, geom);
    return tw.hf_ch1b * tw.hf_ch1b - Rational(2) * geom.h2f() * tw.ch0 * tw.f_ch2b;
}

// Delta-tilde = (HF ch1^b)(H^2 ch1^b) - (H^2F ch0)(H ch2^b); invariant
// under tensoring by O(mF), in general not under changes of beta.
inline Rational delta_tilde(const ContractedClass& v, const Rational& beta,
                            const FibredGeometry& geom) {
    TwistedComponents tw = twist(v, beta, geom);
    return tw.hf_ch1b * tw.h2_ch1b - geom.h2f() * tw.ch0 * tw.h_ch2b;
}

// Delta-tilde_t, the H_t = H + tF discriminant. Satisfies
// delta_tilde_t = delta_tilde + (t/2) delta_bar + (t/2)(HF ch1^b)^2.
inline Rational delta_tilde_t_twisted(const TwistedComponents& tw, const Rational& t,
                                      const FibredGeometry& geom) {
    return tw.hf_ch1b * (tw.h2_ch1b + t * tw.hf_ch1b) -
           geom.h2f() * tw.ch0 * (tw.h_ch2b + t * tw.f_ch2b);
}

inline Rational delta_tilde_t(const ContractedClass& v, const Rational& beta, const Rational& t,
                              const FibredGeometry& geom) {
    if (t < Rational(0)) throw InvalidParamsError("t must be nonnegative");
    return delta_tilde_t_twisted(twist(v, beta, geom), t, geom);
}

// q_t^beta(r, c, d) = (H_t H c)(F H c) - r d on the {H, F} span.
inline Rational q_form(const Rational& r, const DivisorClass& c, const Rational& d,
                       const Rational& t, const FibredGeometry& geom) {
    if (t < Rational(0)) throw InvalidParamsError("t must be nonnegative");
    Rational ht_h_c = c.h * geom.h3() + (c.f + t * c.h) * geom.h2f();
    Rational f_h_c = c.h * geom.h2f();
    return ht_h_c * f_h_c - r * d;
}

// The kernel of Z(r, c, d) = ((t+1)/2) alpha^2 r - d + i FHc consists of
// (r, yF, ((t+1)/2) alpha^2 r); on it q_t^beta evaluates to
// -((t+1)/2) alpha^2 r^2 <= 0. Sampled verification with explicit seed.
inline bool kernel_seminegativity_check(const Rational& alpha_sq, const Rational& t,
                                        const FibredGeometry& geom, int samples,
                                        std::uint64_t seed = 0x5eed) {
    if (alpha_sq <= Rational(0)) throw InvalidParamsError("alpha_sq must be positive");
    if (t < Rational(0)) throw InvalidParamsError("t must be nonnegative");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> nums(-40, 40);
    std::uniform_int_distribution<long> dens(1, 12);
    for (int i = 0; i < samples; ++i) {
        Rational r(nums(rng), dens(rng));
        Rational y(nums(rng), dens(rng));
        Rational d = (t + Rational(1)) / Rational(2) * alpha_sq * r;
        if (q_form(r, DivisorClass{Rational(0), y}, d, t, geom) > Rational(0)) return false;
    }
    return true;
}

// The support-property quadratic form Q of the relative tilt charge;
// numerically identical to delta_bar, named separately as in its role.
inline Rational support_q_form(const ContractedClass& v, const Rational& beta,
                               const FibredGeometry& geom) {
    return delta_bar(v, beta, geom);
}

// Threshold above which a nu_{H,F}^{alpha,beta}-stable object stays stable
// for the mixed slope: t0 = max(0, (nu1 - nu0) / (nu_hf - nu2)), where nu1
// is the maximal nu_{alpha,beta,0}-slope of E, nu0 and nu_hf its own slopes
// and nu2 the best competing relative slope. Requires nu2 < nu_hf.
inline Rational t_stability_threshold(const Rational& nu1, const Rational& nu0_of_e,
                                      const Rational& nu_hf_of_e, const Rational& nu2) {
    if (!(nu2 < nu_hf_of_e))
        throw InvalidParamsError("t_stability_threshold needs nu2 < nu_hf(E)");
    return max(Rational(0), (nu1 - nu0_of_e) / (nu_hf_of_e - nu2));
}

} // namespace fibstab
