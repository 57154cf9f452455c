#pragma once

#include <array>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "fibstab/chern.hpp"
#include "fibstab/geometry.hpp"
#include "fibstab/tilt.hpp"

namespace fibstab {

// K_X = -3H + (2g - 2 + deg E) F on P(E).
inline DivisorClass canonical_class(const FibredGeometry& geom) {
    geom.require_projective_bundle("canonical_class");
    Rational k = Rational(2) * Rational(geom.genus()) - Rational(2) + geom.deg_e();
    return DivisorClass{Rational(-3), k};
}

// The constants of inequality (6.1): for every class v,
//   chi(v (-H)) = ch3^b + (b + 1/2) H ch2^b + (b(b+1)/2) H^2 ch1^b
//                 - a2 F ch2^b - a1 HF ch1^b - a0 ch0,
// all twisted at the same beta. a0, a1, a2 depend on beta and the geometry
// only; notably not on alpha.
struct BmtCoefficients {
    Rational beta;
    Rational a0;
    Rational a1;
    Rational a2;
};

inline Rational bmt_identity_rhs(const ContractedClass& v, const BmtCoefficients& c,
                                 const FibredGeometry& geom) {
    TwistedComponents tw = twist(v, c.beta, geom);
    const Rational& b = c.beta;
    return tw.ch3b + (b + Rational(1, 2)) * tw.h_ch2b +
           b * (b + Rational(1)) / Rational(2) * tw.h2_ch1b - c.a2 * tw.f_ch2b -
           c.a1 * tw.hf_ch1b - c.a0 * tw.ch0;
}

namespace detail {

// Exact solve of rows * (a0, a1, a2)^T = rhs; the system is overdetermined
// and every extra row must be consistent.
inline std::array<Rational, 3> solve_exact_3(std::vector<std::array<Rational, 4>> rows) {
    std::size_t pivot_row = 0;
    std::array<std::size_t, 3> pivot_of_col{};
    std::array<bool, 3> has_pivot{false, false, false};
    for (std::size_t col = 0; col < 3 && pivot_row < rows.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[pivot_row]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row || rows[r][col].is_zero()) continue;
            Rational factor = rows[r][col] / rows[pivot_row][col];
            for (std::size_t c = col; c < 4; ++c) rows[r][c] -= factor * rows[pivot_row][c];
        }
        pivot_of_col[col] = pivot_row;
        has_pivot[col] = true;
        ++pivot_row;
    }
    if (!(has_pivot[0] && has_pivot[1] && has_pivot[2]))
        throw InconsistentIdentityError("coefficient system is rank-deficient");
    for (std::size_t r = pivot_row; r < rows.size(); ++r)
        if (!rows[r][3].is_zero())
            throw InconsistentIdentityError("coefficient system is inconsistent");
    std::array<Rational, 3> sol;
    for (std::size_t col = 0; col < 3; ++col) {
        const auto& row = rows[pivot_of_col[col]];
        sol[col] = row[3] / row[col];
    }
    return sol;
}

} // namespace detail

// Derives (a0, a1, a2) by evaluating the defining identity on the six
// standard basis classes: chi(e_i (-H)) minus the known (b+1/2), b(b+1)/2
// and ch3 terms leaves an exact linear system in (a0, a1, a2). Memoized per
// (beta, g, e).
inline BmtCoefficients bmt_coefficients(const Rational& beta, const FibredGeometry& geom) {
    geom.require_projective_bundle("bmt_coefficients");

    static std::mutex memo_mutex;
    static std::map<std::tuple<Rational, long, Rational>, BmtCoefficients> memo;
    std::tuple<Rational, long, Rational> key{beta, geom.genus(), geom.deg_e()};
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    DivisorClass minus_h{Rational(-1), Rational(0)};
    std::vector<std::array<Rational, 4>> rows;
    for (int i = 0; i < 6; ++i) {
        ContractedClass basis{0, 0, 0, 0, 0, 0};
        switch (i) {
            case 0: basis.ch0 = 1; break;
            case 1: basis.h2_ch1 = 1; break;
            case 2: basis.hf_ch1 = 1; break;
            case 3: basis.h_ch2 = 1; break;
            case 4: basis.f_ch2 = 1; break;
            case 5: basis.ch3 = 1; break;
        }
        Rational lhs = euler_char(tensor_class_by_divisor(basis, minus_h, geom), geom);
        TwistedComponents tw = twist(basis, beta, geom);
        Rational known = tw.ch3b + (beta + Rational(1, 2)) * tw.h_ch2b +
                         beta * (beta + Rational(1)) / Rational(2) * tw.h2_ch1b;
        // lhs - known = -a0 ch0 - a1 hf_ch1b - a2 f_ch2b
        rows.push_back({-tw.ch0, -tw.hf_ch1b, -tw.f_ch2b, lhs - known});
    }
    auto sol = detail::solve_exact_3(std::move(rows));
    BmtCoefficients result{beta, sol[0], sol[1], sol[2]};

    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(key, result);
    return result;
}

// The general constants of the conjectural inequality (BG1); the conjecture
// requires a1 > 0.
struct ConjectureCoefficients {
    Rational a1;
    Rational b1;
    Rational a2;
    Rational b2;
    Rational c;

    bool a1_positive() const { return a1 > Rational(0); }
};

// Specialization matching inequality (6.1) term for term:
// (a1', b1', a2', b2', c') = (-b(b+1)/2, a1, -(b+1/2), a2, a0).
inline ConjectureCoefficients main2_specialization(const Rational& beta,
                                                   const FibredGeometry& geom) {
    BmtCoefficients c = bmt_coefficients(beta, geom);
    return ConjectureCoefficients{-beta * (beta + Rational(1)) / Rational(2), c.a1,
                                  -(beta + Rational(1, 2)), c.a2, c.a0};
}

namespace detail {
inline Rational margin_value(const ContractedClass& v, const Rational& beta,
                             const ConjectureCoefficients& c, const FibredGeometry& geom) {
    TwistedComponents tw = twist(v, beta, geom);
    return c.a1 * tw.h2_ch1b + c.b1 * tw.hf_ch1b + c.a2 * tw.h_ch2b + c.b2 * tw.f_ch2b +
           c.c * tw.ch0 - tw.ch3b;
}
} // namespace detail

// RHS - LHS of (BG1); margin >= 0 means the inequality holds on this class.
// The conjecture's standing hypothesis a1 > 0 is enforced here.
inline Rational conjecture_margin(const ContractedClass& v, const TiltParams& params,
                                  const ConjectureCoefficients& coeffs,
                                  const FibredGeometry& geom) {
    if (!coeffs.a1_positive())
        throw InvalidCoefficientsError("conjecture coefficients need a1 > 0");
    return detail::margin_value(v, params.beta, coeffs, geom);
}

// Margin of the unconditional inequality-(6.1) evaluator; identical to
// -chi(v (-H)) and defined for every beta, including where the derived
// H^2 ch1 coefficient vanishes or goes negative.
inline Rational main2_margin(const ContractedClass& v, const Rational& beta,
                             const FibredGeometry& geom) {
    return detail::margin_value(v, beta, main2_specialization(beta, geom), geom);
}

// Parameter-region test of the P(E) theorem:
//   (1) alpha - 2 < beta < 1 - alpha, checked in squared form;
//   (2) t strictly above both t0 and
//       (-b(b+2)H^3 + 4(b+2)(g-1) + alpha^2) / ((b+2)^2 - alpha^2).
// Failed preconditions are diagnostics, never exceptions.
struct RegionReport {
    bool ok = false;
    bool alpha_positive = false;
    bool t_nonnegative = false;
    bool condition1 = false;
    bool condition2 = false;
    bool threshold_defined = false;
    Rational threshold;  // meaningful when threshold_defined
    Rational t0;
    bool t0_defaulted = false;  // t0 = 0 optimistically stands in for the stability threshold
};

inline RegionReport region_check(const Rational& alpha_sq, const Rational& beta,
                                 const Rational& t, const Rational& t0,
                                 const FibredGeometry& geom, bool t0_defaulted = false) {
    geom.require_projective_bundle("region_check");
    RegionReport rep;
    rep.t0 = t0;
    rep.t0_defaulted = t0_defaulted;
    rep.alpha_positive = alpha_sq > Rational(0);
    rep.t_nonnegative = t >= Rational(0);

    Rational b2 = beta + Rational(2);
    Rational one_minus = Rational(1) - beta;
    Rational bound = min(b2, one_minus);
    rep.condition1 =
        rep.alpha_positive && b2 > Rational(0) && one_minus > Rational(0) && alpha_sq < bound * bound;

    Rational denom = b2 * b2 - alpha_sq;
    rep.threshold_defined = !denom.is_zero();
    if (rep.threshold_defined) {
        Rational g_minus_1 = Rational(geom.genus()) - Rational(1);
        rep.threshold = (-beta * b2 * geom.deg_e() + Rational(4) * b2 * g_minus_1 + alpha_sq) / denom;
        rep.condition2 = t > max(rep.threshold, t0);
    }

    rep.ok = rep.alpha_positive && rep.t_nonnegative && rep.condition1 && rep.condition2;
    return rep;
}

inline RegionReport region_check(const TiltParams& params, const Rational& t0,
                                 const FibredGeometry& geom, bool t0_defaulted = false) {
    return region_check(params.alpha_sq, params.beta, params.t, t0, geom, t0_defaulted);
}

// nu_{alpha,beta,t}(O_X(H)) in closed form:
// (H^3(1-b)^2 - a^2)/(2(1-b)) + t((1-b)^2 - a^2)/(2(1-b)).
inline Rational slope_of_oh(const TiltParams& p, const FibredGeometry& geom) {
    geom.require_projective_bundle("slope_of_oh");
    if (p.beta == Rational(1)) throw PoleAtBetaError("slope of O(H) has a pole at beta = 1");
    Rational u = Rational(1) - p.beta;
    Rational two_u = Rational(2) * u;
    return (geom.deg_e() * u * u - p.alpha_sq) / two_u + p.t * (u * u - p.alpha_sq) / two_u;
}

// nu_{alpha,beta,t}(O_X(K_X + H)[1]) in closed form:
// (H^3(b+2)^2 - 2(b+2)(2g-2+H^3) - a^2)/(2(-2-b)) + t((b+2)^2 - a^2)/(2(-2-b)).
inline Rational slope_of_shifted_canonical_twist(const TiltParams& p,
                                                 const FibredGeometry& geom) {
    geom.require_projective_bundle("slope_of_shifted_canonical_twist");
    if (p.beta == Rational(-2))
        throw PoleAtBetaError("slope of O(K_X + H)[1] has a pole at beta = -2");
    Rational u = p.beta + Rational(2);
    Rational k = Rational(2) * Rational(geom.genus()) - Rational(2) + geom.deg_e();
    Rational two_mu = Rational(2) * (-u);
    return (geom.deg_e() * u * u - Rational(2) * u * k - p.alpha_sq) / two_mu +
           p.t * (u * u - p.alpha_sq) / two_mu;
}

// z_l = (a1 H^2 + l HF) ch1^b + (a2 H + b2 F) ch2^b + c ch0^b - ch3^b
//       + i ((H + tF) ch2^b - ((t+1)/2) alpha^2 H^2F ch0).
// Im z_l = -Re z_mixed; both displays are followed literally.
inline ChargeValue z_l(const ContractedClass& v, const TiltParams& p, const Rational& l,
                       const ConjectureCoefficients& coeffs, const FibredGeometry& geom) {
    TwistedComponents tw = twist(v, p.beta, geom);
    Rational re = coeffs.a1 * tw.h2_ch1b + l * tw.hf_ch1b + coeffs.a2 * tw.h_ch2b +
                  coeffs.b2 * tw.f_ch2b + coeffs.c * tw.ch0 - tw.ch3b;
    Rational im = tw.h_ch2b + p.t * tw.f_ch2b -
                  (p.t + Rational(1)) / Rational(2) * p.alpha_sq * geom.h2f() * tw.ch0;
    return ChargeValue{re, im};
}

// The positivity argument needs l > max{b1, 0}; evaluation does not.
inline bool z_l_advisory_ok(const Rational& l, const ConjectureCoefficients& coeffs) {
    return l > max(coeffs.b1, Rational(0));
}

// The H^2 ch1^b coefficient -b(b+1)/2 of (6.1) is positive exactly on
// -1 < beta < 0, the window where the corollary applies.
inline bool corollary_window_check(const Rational& beta) {
    return -beta * (beta + Rational(1)) / Rational(2) > Rational(0);
}

} // namespace fibstab
