#include <gtest/gtest.h>

#include "darboux/certify.hpp"
#include "darboux/parse.hpp"
#include "test_util.hpp"

using namespace darboux;
using testutil::Rng;

namespace {
VectorField e1() { return make_field(parse_poly("1 + y^2"), parse_poly("x*y + y")); }
VectorField e2() { return make_field(parse_poly("2*y"), parse_poly("3*x^2")); }
VectorField e3() {
    return make_field(parse_poly("-y + x*(x^2 + y^2 - 1)"), parse_poly("x + y*(x^2 + y^2 - 1)"));
}

/// Planted instance: P = alpha f + beta f_y, Q = gamma f - beta f_x gives
/// P f_x + Q f_y = (alpha f_x + gamma f_y) f.
struct Planted {
    VectorField V;
    BiPoly f, k;
};

std::optional<Planted> plant(Rng& rng, int max_n = 4) {
    int n = 1 + static_cast<int>(rng.below(max_n));
    BiPoly f = testutil::random_bipoly(rng, n, 4);
    if (f.degree() < 1) return std::nullopt;
    n = f.degree();
    int a = static_cast<int>(rng.below(std::max(1, 4 - n + 1)));
    int b = static_cast<int>(rng.below(std::max(1, 4 - n + 2)));
    BiPoly alpha = testutil::random_bipoly(rng, a, 3);
    BiPoly gamma = testutil::random_bipoly(rng, std::max(0, a - 0), 3);
    BiPoly beta = testutil::random_bipoly(rng, b, 3);
    BiPoly P = alpha * f + beta * f.dy();
    BiPoly Q = gamma * f - beta * f.dx();
    BiPoly k = alpha * f.dx() + gamma * f.dy();
    VectorField V;
    try {
        V = make_field(P, Q);
    } catch (const ValidationError&) {
        return std::nullopt;
    }
    if (k.degree() > V.m - 1) return std::nullopt;
    return Planted{V, f, k};
}
} // namespace

TEST(Cofactor, SpecExamples) {
    auto c1 = compute_cofactor(e1(), parse_poly("y"));
    ASSERT_TRUE(c1);
    EXPECT_EQ(c1->k, parse_poly("x + 1"));
    EXPECT_FALSE(c1->first_integral);
    EXPECT_EQ(c1->irreducibility, Irreducibility::verified); // a line

    auto c2 = compute_cofactor(e2(), parse_poly("y^2 - x^3"));
    ASSERT_TRUE(c2);
    EXPECT_TRUE(c2->k.zero_p());
    EXPECT_TRUE(c2->first_integral);

    auto c3 = compute_cofactor(e3(), parse_poly("x^2 + y^2 - 1"));
    ASSERT_TRUE(c3);
    EXPECT_EQ(c3->k, parse_poly("2*x^2 + 2*y^2"));
    EXPECT_EQ(c3->irreducibility, Irreducibility::verified); // smooth conic

    EXPECT_FALSE(compute_cofactor(e1(), parse_poly("x")));
}

TEST(Cofactor, VerifySpecExamples) {
    Certificate good;
    good.field = e1();
    good.f = parse_poly("y");
    good.k = parse_poly("x + 1");
    EXPECT_TRUE(verify_certificate(good).ok);

    Certificate bad = good;
    bad.k = parse_poly("x");
    VerifyResult r = verify_certificate(bad);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.residual, parse_poly("y"));

    // perturbing k by +1 leaves residual f
    Certificate bumped = good;
    bumped.k = good.k + BiPoly(Rational(1));
    VerifyResult r2 = verify_certificate(bumped);
    EXPECT_FALSE(r2.ok);
    EXPECT_EQ(r2.residual, -good.f);
}

TEST(Cofactor, RoundTripOnPlanted) {
    Rng rng(71);
    int done = 0;
    for (int it = 0; it < 400 && done < 60; ++it) {
        auto p = plant(rng);
        if (!p) continue;
        auto cert = compute_cofactor(p->V, p->f);
        ASSERT_TRUE(cert) << to_string(p->f);
        EXPECT_EQ(cert->k, p->k);
        EXPECT_TRUE(verify_certificate(*cert).ok);
        EXPECT_LE(cert->k.degree(), p->V.m - 1);
        ++done;
    }
    EXPECT_GE(done, 50);
}

TEST(Cofactor, ScalingInvariance) {
    Rng rng(73);
    int done = 0;
    for (int it = 0; it < 200 && done < 30; ++it) {
        auto p = plant(rng);
        if (!p) continue;
        Rational c = Rational(1 + static_cast<long>(rng.below(5)));
        auto c1 = compute_cofactor(p->V, p->f);
        auto c2 = compute_cofactor(p->V, p->f.scaled(c));
        ASSERT_TRUE(c1 && c2);
        EXPECT_EQ(c1->k, c2->k);
        ++done;
    }
    EXPECT_GE(done, 20);
}

TEST(Cofactor, Remark1Additivity) {
    // plant f = f1 * f2; both factors are then partial integrals and the
    // cofactors add
    Rng rng(79);
    int done = 0;
    for (int it = 0; it < 600 && done < 30; ++it) {
        BiPoly f1 = testutil::random_bipoly(rng, 2, 3);
        BiPoly f2 = testutil::random_bipoly(rng, 2, 3);
        if (f1.degree() < 1 || f2.degree() < 1) continue;
        BiPoly f = f1 * f2;
        BiPoly beta = testutil::random_bipoly(rng, 1, 2);
        BiPoly alpha = BiPoly(Rational(static_cast<long>(rng.below(3))));
        BiPoly P = alpha * f + beta * f.dy();
        BiPoly Q = -beta * f.dx();
        VectorField V;
        try {
            V = make_field(P, Q);
        } catch (const ValidationError&) {
            continue;
        }
        auto cf = compute_cofactor(V, f);
        auto cf1 = compute_cofactor(V, f1);
        auto cf2 = compute_cofactor(V, f2);
        if (!cf) continue;
        ASSERT_TRUE(cf1);
        ASSERT_TRUE(cf2);
        EXPECT_EQ(cf->k, cf1->k + cf2->k);
        ++done;
    }
    EXPECT_GE(done, 20);
}

TEST(LeadingCofactor, SpecExamples) {
    auto k1 = leading_cofactor(e1(), parse_poly("y"));
    ASSERT_TRUE(k1);
    EXPECT_EQ(*k1, parse_poly("x"));

    auto k2 = leading_cofactor(e2(), parse_poly("-x^3"));
    ASSERT_TRUE(k2);
    EXPECT_TRUE(k2->zero_p());

    // numerator 4xy^2 is not divisible by x^2 + y^2
    auto k3 = leading_cofactor(e1(), parse_poly("x^2 + y^2"));
    EXPECT_FALSE(k3);
}

TEST(ChartTransport, CertificateIdentity) {
    // A dF/du + B dF/dv = K F for every certificate (consistency of the
    // chart formulas, including the -n u^m P term of K)
    auto check = [](const VectorField& V, const BiPoly& f) {
        auto cert = compute_cofactor(V, f);
        ASSERT_TRUE(cert);
        InfinityChart ch = infinity_chart(V, f, cert->k);
        ASSERT_TRUE(ch.F && ch.K);
        BiPoly lhs = ch.A * ch.F->dx() + ch.B * ch.F->dy();
        EXPECT_EQ(lhs, *ch.K * *ch.F);
    };
    check(e1(), parse_poly("y"));
    check(e2(), parse_poly("y^2 - x^3"));
    check(e3(), parse_poly("x^2 + y^2 - 1"));

    Rng rng(83);
    int done = 0;
    for (int it = 0; it < 300 && done < 25; ++it) {
        auto p = plant(rng);
        if (!p) continue;
        check(p->V, p->f);
        ++done;
    }
    EXPECT_GE(done, 20);
}

TEST(Theorem1, SpecExamples) {
    EXPECT_EQ(check_theorem1(e1(), parse_poly("y")).status, VerdictStatus::holds);
    EXPECT_EQ(check_theorem1(e2(), parse_poly("y^2 - x^3")).status, VerdictStatus::holds);

    Theorem1Verdict bad = check_theorem1(e1(), parse_poly("x"));
    EXPECT_EQ(bad.status, VerdictStatus::fails);
    EXPECT_EQ(bad.offending, parse_poly("x"));

    EXPECT_EQ(check_theorem1(e3(), parse_poly("x^2 + y^2 - 1")).status,
              VerdictStatus::not_applicable);
}

TEST(Theorem1, HoldsOnPlanted) {
    Rng rng(89);
    int done = 0;
    for (int it = 0; it < 400 && done < 40; ++it) {
        auto p = plant(rng);
        if (!p) continue;
        if (r_infinity(p->V).zero_p()) continue;
        EXPECT_EQ(check_theorem1(p->V, p->f).status, VerdictStatus::holds)
            << to_string(p->f) << " | " << to_string(p->V.P) << " ; " << to_string(p->V.Q);
        ++done;
    }
    EXPECT_GE(done, 30);
}

int main(int argc, char** argv) {
    ::testing::InitGoogleTest(&argc, argv);
    return RUN_ALL_TESTS();
}
