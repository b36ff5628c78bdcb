#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bfc/roots.hpp"

using namespace bfc;

namespace {

BigFloat abs_bf(const BigFloat& x) { return x < 0 ? BigFloat(-x) : x; }

// independent Newton oracle for the real cube root of 2
BigFloat cbrt2(unsigned prec) {
    BigFloat x(1.26, prec);
    for (int i = 0; i < 200; ++i)
        x = BigFloat((2 * x + 2 / (x * x)) / 3);
    return x;
}

BigComplex cpx(double re, double im, unsigned prec = 256) {
    return BigComplex::with_prec(re, im, prec);
}

} // namespace

TEST_CASE("roots of X^2+Y^2 are +-i") {
    RootSet rs = roots(BinaryForm::parse("2:1,0,1"), 128);
    REQUIRE(rs.points.size() == 2);
    for (const auto& p : rs.points) {
        CHECK(!p.infinite);
        CHECK(abs_bf(p.z.re) < 1e-30);
        CHECK(abs_bf(abs_bf(p.z.im) - 1) < 1e-30);
    }
    CHECK(rs.points[0].z.im < 0);
    CHECK(rs.points[1].z.im > 0);
}

TEST_CASE("roots of XY are 0 and infinity") {
    RootSet rs = roots(BinaryForm::parse("2:0,1,0"), 128);
    REQUIRE(rs.points.size() == 2);
    CHECK(!rs.points[0].infinite);
    CHECK(rs.points[0].z.re == 0);
    CHECK(rs.points[1].infinite);
}

TEST_CASE("roots of X^3-2Y^3 contain the real cube root of 2") {
    RootSet rs = roots(BinaryForm::parse("3:1,0,0,-2"), 256);
    REQUIRE(rs.points.size() == 3);
    BigFloat target = cbrt2(256);
    bool found = false;
    for (const auto& p : rs.points)
        if (!p.infinite && abs_bf(p.z.im) < 1e-60 && abs_bf(p.z.re - target) < 1e-60)
            found = true;
    CHECK(found);
    CHECK(rs.max_radius() < 1e-40);
}

TEST_CASE("roots rejects non-squarefree input") {
    CHECK_THROWS_AS(roots(BinaryForm::parse("2:1,2,1"), 128), not_squarefree_error);
}

TEST_CASE("roots is deterministic") {
    BinaryForm f = BinaryForm::parse("5:3,-1,2,0,-5,7");
    RootSet a = roots(f, 192), b = roots(f, 192);
    REQUIRE(a.points.size() == b.points.size());
    for (size_t i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i].z.re == b.points[i].z.re);
        CHECK(a.points[i].z.im == b.points[i].z.im);
    }
}

TEST_CASE("cross ratio with a point at infinity") {
    BigComplex cr = cross_ratio(ProjectivePoint::finite(cpx(0, 0)),
                                ProjectivePoint::inf(),
                                ProjectivePoint::finite(cpx(1, 0)),
                                ProjectivePoint::finite(cpx(2, 0)));
    CHECK(abs_bf(cr.re + 1) < 1e-50);
    CHECK(abs_bf(cr.im) < 1e-50);
}

TEST_CASE("cross ratio of t,-t,it,-it is 2 for any t") {
    for (double t : {1.0, 0.5, 3.25}) {
        BigComplex cr = cross_ratio(ProjectivePoint::finite(cpx(t, 0)),
                                    ProjectivePoint::finite(cpx(-t, 0)),
                                    ProjectivePoint::finite(cpx(0, t)),
                                    ProjectivePoint::finite(cpx(0, -t)));
        CHECK(abs_bf(cr.re - 2) < 1e-12);
        CHECK(abs_bf(cr.im) < 1e-12);
    }
}

TEST_CASE("cross ratio is invariant under z -> 1/z") {
    double zs[4] = {1.0, 2.0, 3.0, 5.0};
    ProjectivePoint p[4], q[4];
    for (int i = 0; i < 4; ++i) {
        p[i] = ProjectivePoint::finite(cpx(zs[i], 0));
        q[i] = ProjectivePoint::finite(cpx(1.0 / zs[i], 0));
    }
    BigComplex a = cross_ratio(p[0], p[1], p[2], p[3]);
    BigComplex b = cross_ratio(q[0], q[1], q[2], q[3]);
    CHECK(abs_bf(a.re - b.re) < 1e-12);
    CHECK(abs_bf(a.im - b.im) < 1e-12);
}

TEST_CASE("cross ratio degeneracy errors") {
    auto z0 = ProjectivePoint::finite(cpx(0, 0));
    auto z1 = ProjectivePoint::finite(cpx(1, 0));
    auto z2 = ProjectivePoint::finite(cpx(2, 0));
    CHECK_THROWS_AS(cross_ratio(z0, z0, z1, z2), degenerate_error);
    CHECK_THROWS_AS(cross_ratio(ProjectivePoint::inf(), ProjectivePoint::inf(), z1, z2),
                    degenerate_error);
}

TEST_CASE("cross-ratio profile of a quartic") {
    BinaryForm f = BinaryForm::parse("4:1,0,0,0,-2");
    CrossRatioProfile prof = cross_ratio_profile(f, 256);
    CHECK(prof.values.size() == 4 * 3 * 2 * 1);

    // contains the value 2 (roots of x^4 = 2 are t, -t, it, -it)
    bool has_two = false;
    for (const auto& v : prof.values)
        if (abs_bf(v.re - 2) < 1e-40 && abs_bf(v.im) < 1e-40) has_two = true;
    CHECK(has_two);

    // projective invariance of the profile under a unimodular shear
    BinaryForm g = transform(f, IntMatrix2{Int(1), Int(1), Int(0), Int(1)});
    CrossRatioProfile pg = cross_ratio_profile(g, 256);
    CHECK(prof.hash == pg.hash);
    CHECK(profiles_consistent(prof, pg));
}

TEST_CASE("complementary cross ratios sum to 1") {
    for (const char* enc : {"4:1,0,0,0,-2", "4:1,2,0,-1,1", "5:1,0,-1,0,0,-3"}) {
        BinaryForm f = BinaryForm::parse(enc);
        RootSet rs = roots(f, 256);
        int r = f.degree();
        BigFloat tol(1e-30);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                for (int k = 0; k < r; ++k)
                    for (int l = 0; l < r; ++l) {
                        if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
                        BigComplex x = cross_ratio(rs.points[i], rs.points[j], rs.points[k], rs.points[l]);
                        BigComplex y = cross_ratio(rs.points[i], rs.points[l], rs.points[k], rs.points[j]);
                        CHECK(abs_bf(x.re + y.re - 1) < tol);
                        CHECK(abs_bf(x.im + y.im) < tol);
                    }
    }
}

TEST_CASE("weak equivalence: self match is the identity") {
    BinaryForm f = BinaryForm::parse("3:1,0,0,-2");
    auto res = weak_equivalence_transform(f, f, 256);
    REQUIRE(res.has_value());
    CHECK(res->T == RatMatrix2::make(Rat(1), Rat(0), Rat(0), Rat(1)));
    CHECK(res->lambda == 1);
}

TEST_CASE("weak equivalence: unimodular shear round trip") {
    BinaryForm f = BinaryForm::parse("3:1,0,0,-2");
    IntMatrix2 u{Int(1), Int(1), Int(0), Int(1)};
    BinaryForm g = transform(f, u);
    auto res = weak_equivalence_transform(f, g, 256);
    REQUIRE(res.has_value());
    // contract: G = lambda * F_{T^-1}, re-verified here
    RatBinaryForm h = transform(f, res->T.inverse());
    for (size_t i = 0; i < h.coeffs().size(); ++i)
        CHECK(res->lambda * h.coeffs()[i] == Rat(g.coeff(static_cast<int>(i))));
}

TEST_CASE("weak equivalence: diagonal scaling with lambda a power of 2") {
    BinaryForm f = BinaryForm::parse("3:1,0,0,-2");
    BinaryForm g = BinaryForm::parse("3:1,0,0,-16"); // F(X, 2Y)
    auto res = weak_equivalence_transform(f, g, 256);
    REQUIRE(res.has_value());
    CHECK(res->lambda.get_den() == 1);
    Int num = res->lambda.get_num();
    CHECK(mpz_popcount(num.get_mpz_t()) == 1); // positive power of 2
}

TEST_CASE("weak equivalence: no match for forms with different profiles") {
    BinaryForm f = BinaryForm::parse("4:1,0,0,0,-2");
    BinaryForm g = BinaryForm::parse("4:1,0,1,0,-2");
    auto res = weak_equivalence_transform(f, g, 256);
    CHECK(!res.has_value());
}
