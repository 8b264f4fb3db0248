#include <gtest/gtest.h>

#include "darboux/field.hpp"
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
} // namespace

TEST(MakeField, SpecExamples) {
    EXPECT_EQ(e1().m, 2);
    EXPECT_EQ(e2().m, 2);
    EXPECT_EQ(e3().m, 3);
    EXPECT_THROW(make_field(parse_poly("x*y"), parse_poly("x*(x + 1)")), CommonFactor);
    EXPECT_THROW(make_field(parse_poly("x"), parse_poly("y")), DegreeTooLow);
    EXPECT_THROW(make_field(BiPoly::zero(), BiPoly::zero()), DegreeTooLow);
    try {
        make_field(parse_poly("x*y"), parse_poly("x*(x + 1)"));
        FAIL();
    } catch (const CommonFactor& e) {
        EXPECT_EQ(e.factor, "x");
    }
}

TEST(RInfinity, SpecExamples) {
    EXPECT_EQ(r_infinity(e1()), parse_poly("x^2*y - y^3"));
    EXPECT_EQ(r_infinity(e2()), parse_poly("3*x^3"));
    EXPECT_TRUE(r_infinity(e3()).zero_p());
}

TEST(Divisor, E1) {
    DarbouxDivisor d = darboux_divisor(e1());
    ASSERT_EQ(d.points.size(), 3u);
    EXPECT_EQ(d.total, 3);
    std::vector<std::string> keys;
    for (const auto& p : d.points) {
        keys.push_back(p.key());
        EXPECT_EQ(p.multiplicity, 1);
        EXPECT_EQ(p.class_size, 1);
    }
    std::vector<std::string> expect = {"[1:-1]", "[1:0]", "[1:1]"};
    EXPECT_EQ(keys, expect);
}

TEST(Divisor, E2TripleAtVertical) {
    DarbouxDivisor d = darboux_divisor(e2());
    ASSERT_EQ(d.points.size(), 1u);
    EXPECT_EQ(d.points[0].key(), "[0:1]");
    EXPECT_EQ(d.points[0].multiplicity, 3);
    EXPECT_EQ(d.total, 3);
}

TEST(Divisor, E3Dicritical) { EXPECT_THROW(darboux_divisor(e3()), DicriticalInfinity); }

TEST(Divisor, ConjugateClassesSumToMPlus1) {
    // R = x(x^2 + 2y^2): one rational point and one conjugate pair
    VectorField V = make_field(parse_poly("-x*y + 1"), parse_poly("x^2 + y^2"));
    BiPoly R = r_infinity(V);
    EXPECT_EQ(R, parse_poly("x^3 + 2*x*y^2"));
    DarbouxDivisor d = darboux_divisor(V);
    EXPECT_EQ(d.total, 3);
    int classes = 0;
    for (const auto& p : d.points)
        if (!p.rational) {
            classes++;
            EXPECT_EQ(p.class_size, 2);
        }
    EXPECT_EQ(classes, 1);
}

TEST(Divisor, TotalIsMPlus1Randomized) {
    Rng rng(57);
    int done = 0;
    for (int it = 0; it < 200 && done < 40; ++it) {
        BiPoly P = testutil::random_bipoly(rng, 3);
        BiPoly Q = testutil::random_bipoly(rng, 3);
        VectorField V;
        try {
            V = make_field(P, Q);
        } catch (const ValidationError&) {
            continue;
        }
        try {
            DarbouxDivisor d = darboux_divisor(V);
            EXPECT_EQ(d.total, V.m + 1);
        } catch (const DicriticalInfinity&) {
            EXPECT_TRUE(r_infinity(V).zero_p());
        }
        ++done;
    }
    EXPECT_GE(done, 30);
}

TEST(Chart, E1BoundaryMatchesR) {
    InfinityChart ch = infinity_chart(e1());
    // B(0, v) = v - v^3 = R_3(1, v)
    UniPoly<Rational> b0 = ch.B.restrict_x0();
    UniPoly<Rational> expect(std::vector<Rational>{Rational(0), Rational(1), Rational(0), Rational(-1)});
    EXPECT_EQ(b0, expect);
}

TEST(Chart, BoundaryIdentityRandomized) {
    Rng rng(61);
    int done = 0;
    for (int it = 0; it < 200 && done < 40; ++it) {
        VectorField V;
        try {
            V = make_field(testutil::random_bipoly(rng, 3), testutil::random_bipoly(rng, 3));
        } catch (const ValidationError&) {
            continue;
        }
        InfinityChart ch = infinity_chart(V);
        // A(0, v) identically zero
        EXPECT_TRUE(ch.A.restrict_x0().zero_p());
        // B(0, v) = R(1, v)
        BiPoly R = r_infinity(V);
        UniPoly<Rational> rv = R.zero_p() ? UniPoly<Rational>() : dehomogenize(R);
        EXPECT_EQ(ch.B.restrict_x0(), rv);
        ++done;
    }
    EXPECT_GE(done, 30);
}

TEST(Chart, CurveTransportE2) {
    // f = y^2 - x^3 (n = 3): F(u,v) = u*v^2 - 1; the curve misses u = 0 in
    // this chart (its infinity point is [0:1:0])
    InfinityChart ch = infinity_chart(e2(), parse_poly("y^2 - x^3"));
    ASSERT_TRUE(ch.F.has_value());
    EXPECT_EQ(*ch.F, parse_poly("x*y^2 - 1")); // chart vars (u, v) stored as (x, y)
    EXPECT_EQ(ch.F->eval(Rational(0), Rational(7)), Rational(-1));
}

TEST(Equilibria, E1ConjugatePair) {
    Equilibria eq = finite_equilibria(e1());
    EXPECT_TRUE(eq.rational_points.empty());
    ASSERT_EQ(eq.classes.size(), 1u);
    const auto& c = eq.classes[0];
    ASSERT_TRUE(c.x_value.has_value());
    EXPECT_EQ(*c.x_value, Rational(-1));
    ASSERT_TRUE(c.y_poly.has_value());
    EXPECT_EQ(to_string(*c.y_poly, "y"), "y^2 + 1");
    EXPECT_EQ(c.size, 2);
    EXPECT_TRUE(c.certified);
    EXPECT_TRUE(eq.exact);
    EXPECT_EQ(eq.count_min, 2);
}

TEST(Equilibria, E2Origin) {
    Equilibria eq = finite_equilibria(e2());
    ASSERT_EQ(eq.rational_points.size(), 1u);
    EXPECT_EQ(eq.rational_points[0].first, Rational(0));
    EXPECT_EQ(eq.rational_points[0].second, Rational(0));
    EXPECT_TRUE(eq.classes.empty());
}

TEST(Equilibria, E3OriginOnly) {
    // P = Q = 0 forces x^2 + y^2 = 0 and then x = y = 0 (substituting back
    // shows the f^2 = -1 branch is empty), so the origin is the only
    // equilibrium over C.
    Equilibria eq = finite_equilibria(e3());
    ASSERT_EQ(eq.rational_points.size(), 1u);
    EXPECT_EQ(eq.rational_points[0].first, Rational(0));
    EXPECT_TRUE(eq.classes.empty());
    EXPECT_EQ(eq.count_max, 1);
}

TEST(Equilibria, CountBoundRandomized) {
    Rng rng(67);
    int done = 0;
    for (int it = 0; it < 300 && done < 50; ++it) {
        VectorField V;
        try {
            V = make_field(testutil::random_bipoly(rng, 2), testutil::random_bipoly(rng, 2));
        } catch (const ValidationError&) {
            continue;
        }
        Equilibria eq = finite_equilibria(V);
        EXPECT_LE(eq.count_max, V.m * V.m) << to_string(V.P) << " ; " << to_string(V.Q);
        ++done;
    }
    EXPECT_GE(done, 40);
}

TEST(Equilibria, QuadraticXClass) {
    // P = x^2 - 2, Q = y - x: equilibria (+-sqrt2, +-sqrt2)
    VectorField V = make_field(parse_poly("x^2 - 2"), parse_poly("y - x"));
    Equilibria eq = finite_equilibria(V);
    ASSERT_EQ(eq.classes.size(), 1u);
    const auto& c = eq.classes[0];
    EXPECT_EQ(to_string(c.x_poly, "x"), "x^2 - 2");
    ASSERT_TRUE(c.y_affine.has_value());
    EXPECT_EQ(c.y_affine->first, Rational(0));
    EXPECT_EQ(c.y_affine->second, Rational(1)); // y = x on the class
    EXPECT_TRUE(c.certified);
    EXPECT_EQ(eq.count_min, 2);
}

int main(int argc, char** argv) {
    ::testing::InitGoogleTest(&argc, argv);
    return RUN_ALL_TESTS();
}
