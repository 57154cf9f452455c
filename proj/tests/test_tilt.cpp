#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"

using namespace fibstab;
using namespace testutil;

namespace {
const FibredGeometry g00 = FibredGeometry::projective_bundle(0, 0);
const FibredGeometry g01 = FibredGeometry::projective_bundle(0, 1);
} // namespace

TEST_CASE("tilt parameter validation") {
    CHECK_NOTHROW(TiltParams::make(Rational(1), Rational(-1, 2), Rational(0)));
    CHECK(TiltParams::make(Rational(0), Rational(0)).alpha_is_zero());
    CHECK_FALSE(TiltParams::make(Rational(1, 4), Rational(0)).alpha_is_zero());
    CHECK_THROWS_AS(TiltParams::make(Rational(-1), Rational(0)), InvalidParamsError);
    CHECK_THROWS_AS(TiltParams::make(Rational(1), Rational(0), Rational(-1)), InvalidParamsError);
}

TEST_CASE("relative tilt charge") {
    CHECK(z_relative(structure_sheaf_class(), Rational(1), Rational(-1), g00) ==
          (ChargeValue{0, 1}));
    CHECK(z_relative(oh_class(g00), Rational(1), Rational(0), g00) == (ChargeValue{0, 1}));

    std::mt19937_64 rng(61);
    for (int i = 0; i < 50; ++i) {
        // every fiber class is killed, not just O_F
        FibredGeometry geom = rand_geometry(rng);
        ContractedClass of = pushforward_fiber_class(geom, rand_rational(rng), rand_rational(rng),
                                                     rand_rational(rng));
        CHECK(z_relative(of, rand_positive_rational(rng), rand_rational(rng), geom).is_zero());
        CHECK(z_relative(shift_class(of, 1), rand_positive_rational(rng), rand_rational(rng), geom)
                  .is_zero());
    }
}

TEST_CASE("relative tilt slope") {
    CHECK(nu_relative(oh_class(g00), Rational(1), Rational(0), g00) == Slope::finite(Rational(0)));
    CHECK(nu_relative(structure_sheaf_class(), Rational(1), Rational(0), g00) ==
          Slope::infinite());
    CHECK(nu_relative(structure_sheaf_class(), Rational(1), Rational(-1), g00) ==
          Slope::finite(Rational(0)));
}

TEST_CASE("mixed tilt charge") {
    TiltParams p = TiltParams::make(Rational(1), Rational(0), Rational(2));
    CHECK(z_mixed(oh_class(g00), p, g00) == (ChargeValue{Rational(1, 2), 1}));

    std::mt19937_64 rng(67);
    for (int i = 0; i < 50; ++i) {
        // the mixed charge does NOT kill O_F: its value is (beta, 0)
        Rational beta = rand_rational(rng, 6, 4);
        TiltParams q = TiltParams::make(rand_positive_rational(rng), beta,
                                        rand_positive_rational(rng, 5, 3));
        ContractedClass of = pushforward_fiber_class(g00, 1, 0, 0);
        CHECK(z_mixed(of, q, g00) == (ChargeValue{beta, 0}));
    }
    CHECK(z_mixed(ContractedClass{0, 0, 0, 0, 0, 0}, p, g00).is_zero());
}

TEST_CASE("mixed tilt slope") {
    CHECK(nu_mixed(oh_class(g00), TiltParams::make(1, 0, 2), g00) ==
          Slope::finite(Rational(-1, 2)));
    CHECK(nu_mixed(structure_sheaf_class(), TiltParams::make(7, 0, 11), g00) ==
          Slope::infinite());
    CHECK(nu_mixed(ContractedClass{2, 0, 1, -1, 0, 0}, TiltParams::make(1, Rational(-1, 2), 0),
                   g00) == Slope::finite(Rational(-1)));
}

TEST_CASE("nu_C^{alpha,beta} branches") {
    // branch 2 on a pushed-forward O_F(1)
    ContractedClass of1 = pushforward_fiber_class(g01, 1, 1, Rational(1, 2));
    CHECK(nu_c_alpha_beta(of1, Rational(1), Rational(0), g01) == Slope::finite(Rational(0)));
    // branch 1 delegates to nu_relative
    std::mt19937_64 rng(71);
    for (int i = 0; i < 50; ++i) {
        Rational a2 = rand_positive_rational(rng);
        Rational beta = rand_rational(rng, 6, 4);
        CHECK(nu_c_alpha_beta(oh_class(g01), a2, beta, g01) ==
              nu_relative(oh_class(g01), a2, beta, g01));
    }
    // both denominators vanish
    CHECK(nu_c_alpha_beta(ContractedClass{0, 0, 0, 0, 0, 1}, Rational(1), Rational(0), g00) ==
          Slope::infinite());
    CHECK_THROWS_AS(nu_c_alpha_beta(oh_class(g00), Rational(1), Rational(0), g00, true),
                    InconsistentHintError);
}

TEST_CASE("heart membership necessary conditions") {
    MembershipReport of = heart_membership_necessary(pushforward_fiber_class(g00, 1, 0, 0),
                                                     Rational(0), g00);
    CHECK(of.status == MembershipReport::Status::consistent_degenerate);
    CHECK(of.hf_ch1b_zero);
    CHECK(of.ch0_zero);
    CHECK(of.h_ch2b_zero);
    CHECK(of.f_ch2b_zero);
    CHECK(of.ch3b_zero);

    CHECK(heart_membership_necessary(oh_class(g00), Rational(0), g00).status ==
          MembershipReport::Status::consistent);

    MembershipReport neg =
        heart_membership_necessary(structure_sheaf_class(), Rational(1, 2), g00);
    CHECK(neg.violates());
    CHECK(neg.reason == "hf_ch1b-negative");

    // rank must be nonpositive once HF ch1^b vanishes
    MembershipReport rank = heart_membership_necessary(
        ContractedClass{1, 0, 0, 0, 0, 0}, Rational(0), g00);
    CHECK(rank.violates());
    CHECK(rank.reason == "ch0-positive");

    // clause (3): ch3^b must be nonnegative in the doubly degenerate case
    MembershipReport c3 = heart_membership_necessary(
        ContractedClass{0, 0, 0, 0, 0, -1}, Rational(0), g00);
    CHECK(c3.violates());
    CHECK(c3.reason == "ch3b-negative");

    MembershipReport h2neg = heart_membership_necessary(
        ContractedClass{0, 0, 0, -1, 0, 0}, Rational(0), g00);
    CHECK(h2neg.violates());
    CHECK(h2neg.reason == "h_ch2b-negative");

    MembershipReport f2neg = heart_membership_necessary(
        ContractedClass{0, 0, 0, 1, -1, 0}, Rational(0), g00);
    CHECK(f2neg.violates());
    CHECK(f2neg.reason == "f_ch2b-negative");
}

TEST_CASE("membership verdict is stable under O(mF) twists on the strict branch") {
    std::mt19937_64 rng(73);
    int done = 0;
    while (done < 100) {
        FibredGeometry geom = rand_projective_bundle(rng);
        ContractedClass v = rand_class(rng);
        Rational beta = rand_rational(rng, 4, 3);
        if (!(twist(v, beta, geom).hf_ch1b > Rational(0))) continue;
        std::uniform_int_distribution<long> m(-4, 4);
        ContractedClass moved =
            contract(tensor_by_divisor(lift(v, geom), DivisorClass{0, Rational(m(rng))}, geom), geom);
        CHECK(heart_membership_necessary(moved, beta, geom).status ==
              MembershipReport::Status::consistent);
        ++done;
    }
}

TEST_CASE("delta_bar on documented instances") {
    std::mt19937_64 rng(79);
    std::uniform_int_distribution<long> z(-4, 4);
    for (int i = 0; i < 60; ++i) {
        // line bundles have vanishing delta_bar identically
        FibredGeometry geom = rand_projective_bundle(rng);
        ContractedClass lb = line_bundle_class(Rational(z(rng)), Rational(z(rng)), geom);
        CHECK(delta_bar(lb, rand_rational(rng, 5, 4), geom) == Rational(0));
    }
    CHECK(delta_bar(ContractedClass{1, 0, 0, -1, 0, 0}, Rational(-1, 2), g00) == Rational(0));
    CHECK(delta_bar(ContractedClass{0, 0, 1, 0, 1, 0}, Rational(17, 3), g00) == Rational(1));
}

TEST_CASE("delta_tilde on documented instances") {
    // symbolic oracle: delta_tilde(O(aH+bF)) at twist beta is (e/2)(a-beta)^2,
    // independent of b (the F-twist invariance); at beta = 0 this is a^2 e / 2
    std::mt19937_64 rng(83);
    std::uniform_int_distribution<long> z(-4, 4);
    for (int i = 0; i < 100; ++i) {
        FibredGeometry geom = rand_projective_bundle(rng);
        Rational a(z(rng)), b(z(rng));
        Rational beta = rand_rational(rng, 5, 4);
        ContractedClass lb = line_bundle_class(a, b, geom);
        Rational expected = geom.deg_e() / Rational(2) * (a - beta) * (a - beta);
        CHECK(delta_tilde(lb, beta, geom) == expected);
        CHECK(delta_tilde(lb, Rational(0), geom) == a * a * geom.deg_e() / Rational(2));
    }
    CHECK(delta_tilde(ContractedClass{1, 0, 0, -1, 0, 0}, Rational(-1, 2), g00) == Rational(1));
    CHECK(delta_tilde(ContractedClass{0, 0, 0, 0, 0, 0}, Rational(2, 7), g00) == Rational(0));
}

TEST_CASE("delta_tilde_t on documented instances") {
    CHECK(delta_tilde_t(ContractedClass{1, 0, 0, -1, 0, 0}, Rational(-1, 2), Rational(1), g00) ==
          Rational(9, 8));
    CHECK_THROWS_AS(
        delta_tilde_t(structure_sheaf_class(), Rational(0), Rational(-1), g00),
        InvalidParamsError);

    std::mt19937_64 rng(89);
    std::uniform_int_distribution<long> z(-4, 4);
    for (int i = 0; i < 60; ++i) {
        FibredGeometry geom = rand_geometry(rng);
        ContractedClass v = rand_class(rng);
        Rational beta = rand_rational(rng, 5, 4);
        CHECK(delta_tilde_t(v, beta, Rational(0), geom) == delta_tilde(v, beta, geom));
    }
    for (int i = 0; i < 60; ++i) {
        // line bundles: delta_bar = 0, so delta_tilde_t = delta_tilde + (t/2) hf_ch1b^2
        FibredGeometry geom = rand_projective_bundle(rng);
        Rational a(z(rng)), b(z(rng));
        Rational beta = rand_rational(rng, 5, 4);
        Rational t = rand_positive_rational(rng, 6, 3);
        ContractedClass lb = line_bundle_class(a, b, geom);
        Rational hfb = a - beta;
        CHECK(delta_tilde_t(lb, beta, t, geom) ==
              delta_tilde(lb, beta, geom) + t / Rational(2) * hfb * hfb);
    }
}

TEST_CASE("discriminant expansion identity") {
    std::mt19937_64 rng(97);
    for (int i = 0; i < 1000; ++i) {
        FibredGeometry geom = rand_geometry(rng);
        ContractedClass v = rand_class(rng);
        Rational beta = rand_rational(rng, 6, 4);
        Rational t = rand_positive_rational(rng, 8, 4);
        Rational hfb = twist(v, beta, geom).hf_ch1b;
        CHECK(delta_tilde_t(v, beta, t, geom) ==
              delta_tilde(v, beta, geom) + t / Rational(2) * delta_bar(v, beta, geom) +
                  t / Rational(2) * hfb * hfb);
    }
}

TEST_CASE("delta_bar is independent of beta") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 500; ++i) {
        FibredGeometry geom = rand_geometry(rng);
        ContractedClass v = rand_class(rng);
        CHECK(delta_bar(v, rand_rational(rng, 8, 5), geom) ==
              delta_bar(v, rand_rational(rng, 8, 5), geom));
    }
}

TEST_CASE("delta_tilde is invariant under tensoring by O(mF)") {
    std::mt19937_64 rng(103);
    std::uniform_int_distribution<long> m(-6, 6);
    for (int i = 0; i < 500; ++i) {
        FibredGeometry geom = rand_projective_bundle(rng);
        ChowClass v = lift(rand_class(rng), geom);
        Rational beta = rand_rational(rng, 6, 4);
        ContractedClass moved =
            contract(tensor_by_divisor(v, DivisorClass{0, Rational(m(rng))}, geom), geom);
        CHECK(delta_tilde(moved, beta, geom) == delta_tilde(contract(v, geom), beta, geom));
    }
}

TEST_CASE("slopes match -Re/Im of their charges") {
    std::mt19937_64 rng(107);
    for (int i = 0; i < 400; ++i) {
        FibredGeometry geom = rand_geometry(rng);
        ContractedClass v = rand_class(rng);
        Rational a2 = rand_positive_rational(rng);
        Rational beta = rand_rational(rng, 6, 4);
        Rational t = rand_positive_rational(rng, 5, 3);
        TiltParams p = TiltParams::make(a2, beta, t);

        ChargeValue zr = z_relative(v, a2, beta, geom);
        if (!zr.im.is_zero()) CHECK(nu_relative(v, a2, beta, geom) == zr.slope());
        ChargeValue zm = z_mixed(v, p, geom);
        if (!zm.im.is_zero()) CHECK(nu_mixed(v, p, geom) == zm.slope());
    }
}

TEST_CASE("relative charge of v equals torsion charge of its fiber restriction") {
    std::mt19937_64 rng(109);
    for (int i = 0; i < 500; ++i) {
        FibredGeometry geom = rand_geometry(rng);
        ContractedClass v = rand_class(rng);
        Rational a2 = rand_positive_rational(rng);
        Rational beta = rand_rational(rng, 6, 4);
        CHECK(z_relative(v, a2, beta, geom) ==
              z_relative_torsion(fiber_restriction_class(v, geom), a2, beta, geom));
    }
}

TEST_CASE("q_form on the documented instances") {
    CHECK(q_form(Rational(1), DivisorClass{1, 2}, Rational(3), Rational(1), g00) == Rational(0));

    std::mt19937_64 rng(113);
    for (int i = 0; i < 50; ++i) {
        Rational r = rand_rational(rng);
        Rational d = rand_rational(rng);
        Rational y = rand_rational(rng);
        Rational t = rand_positive_rational(rng, 5, 3);
        FibredGeometry geom = rand_geometry(rng);
        // vertical classes have FHc = 0, so only the -rd term survives
        CHECK(q_form(r, DivisorClass{0, y}, d, t, geom) == -r * d);
        // r = 0 drops the -rd term
        DivisorClass c{rand_rational(rng, 5, 3), rand_rational(rng, 5, 3)};
        Rational ht_h_c = c.h * geom.h3() + (c.f + t * c.h) * geom.h2f();
        CHECK(q_form(Rational(0), c, d, t, geom) == ht_h_c * c.h * geom.h2f());
    }
}

TEST_CASE("q_form is semi-negative on the kernel of the mixed charge") {
    // hand instances from the documentation
    Rational q1 = q_form(Rational(2), DivisorClass{0, 5},
                         (Rational(0) + Rational(1)) / Rational(2) * Rational(1) * Rational(2),
                         Rational(0), g00);
    CHECK(q1 == Rational(-2));
    Rational q2 = q_form(Rational(1), DivisorClass{0, 1},
                         (Rational(3) + Rational(1)) / Rational(2) * Rational(4) * Rational(1),
                         Rational(3), g00);
    CHECK(q2 == Rational(-8));
    CHECK(q_form(Rational(0), DivisorClass{0, 1}, Rational(0), Rational(0), g00) == Rational(0));

    CHECK(kernel_seminegativity_check(Rational(1), Rational(0), g00, 200));
    CHECK(kernel_seminegativity_check(Rational(4), Rational(3), g00, 200, 77));
    CHECK(kernel_seminegativity_check(Rational(1, 2), Rational(5, 2),
                                      FibredGeometry::generic(1, Rational(5, 2), Rational(2)),
                                      200, 99));
    CHECK_THROWS_AS(kernel_seminegativity_check(Rational(0), Rational(0), g00, 10),
                    InvalidParamsError);
}

TEST_CASE("support quadratic form is delta_bar under another name") {
    CHECK(support_q_form(oh_class(g00), Rational(0), g00) == Rational(0));
    CHECK(support_q_form(ContractedClass{0, 0, 1, 0, 1, 0}, Rational(1, 3), g00) == Rational(1));
    std::mt19937_64 rng(127);
    for (int i = 0; i < 100; ++i) {
        FibredGeometry geom = rand_geometry(rng);
        ContractedClass v = rand_class(rng);
        Rational beta = rand_rational(rng, 6, 4);
        CHECK(support_q_form(v, beta, geom) == delta_bar(v, beta, geom));
    }
}

TEST_CASE("mixed-slope decomposition nu_t = nu_0 + t nu_{H,F}") {
    std::mt19937_64 rng(131);
    int done = 0;
    while (done < 1000) {
        FibredGeometry geom = rand_geometry(rng);
        ContractedClass v = rand_class(rng);
        Rational a2 = rand_positive_rational(rng);
        Rational beta = rand_rational(rng, 6, 4);
        Rational t = rand_positive_rational(rng, 8, 4);
        TwistedComponents tw = twist(v, beta, geom);
        if (tw.hf_ch1b.is_zero()) {
            CHECK(nu_mixed(v, TiltParams::make(a2, beta, t), geom) == Slope::infinite());
            CHECK(nu_mixed(v, TiltParams::make(a2, beta, Rational(0)), geom) ==
                  Slope::infinite());
            CHECK(nu_relative(v, a2, beta, geom) == Slope::infinite());
            continue;
        }
        Slope lhs = nu_mixed(v, TiltParams::make(a2, beta, t), geom);
        Rational rhs = nu_mixed(v, TiltParams::make(a2, beta, Rational(0)), geom).finite_value() +
                       t * nu_relative(v, a2, beta, geom).finite_value();
        CHECK(lhs == Slope::finite(rhs));
        ++done;
    }
}

TEST_CASE("t-stability threshold evaluator") {
    CHECK(t_stability_threshold(Rational(3), Rational(1), Rational(2), Rational(0)) ==
          Rational(1));
    CHECK(t_stability_threshold(Rational(0), Rational(1), Rational(2), Rational(0)) ==
          Rational(0));  // negative ratio clamps to the lemma's nonnegative t0
    CHECK(t_stability_threshold(Rational(5, 2), Rational(1, 2), Rational(1), Rational(1, 3)) ==
          Rational(3));
    CHECK_THROWS_AS(t_stability_threshold(Rational(1), Rational(0), Rational(1), Rational(2)),
                    InvalidParamsError);
}
