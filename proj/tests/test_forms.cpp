#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bfc/forms.hpp"

using namespace bfc;

namespace {

std::mt19937_64 rng(0xb19f0435u);

Int rnd_int(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return Int(d(rng));
}

BinaryForm rnd_form(int degree, long height) {
    for (;;) {
        std::vector<Int> cs;
        for (int i = 0; i <= degree; ++i) cs.push_back(rnd_int(-height, height));
        bool any = false;
        for (auto& c : cs) if (c != 0) any = true;
        if (any) return BinaryForm(cs);
    }
}

IntMatrix2 rnd_matrix(long height) {
    for (;;) {
        IntMatrix2 u{rnd_int(-height, height), rnd_int(-height, height),
                     rnd_int(-height, height), rnd_int(-height, height)};
        if (u.det() != 0) return u;
    }
}

IntMatrix2 rnd_unimodular(long shear_height) {
    // product of elementary shears and swaps, det +-1
    IntMatrix2 u = IntMatrix2::identity();
    std::uniform_int_distribution<int> steps(2, 5);
    int n = steps(rng);
    for (int i = 0; i < n; ++i) {
        Int t = rnd_int(-shear_height, shear_height);
        if (rng() % 2)
            u = u * IntMatrix2{Int(1), t, Int(0), Int(1)};
        else
            u = u * IntMatrix2{Int(1), Int(0), t, Int(1)};
        if (rng() % 3 == 0) u = u * IntMatrix2{Int(0), Int(1), Int(-1), Int(0)};
    }
    return u;
}

Int pow_int(Int base, long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

Rat pow_rat(const Rat& base, long e) {
    Rat r = 1;
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

// Discriminant of a rational form via the primitive part and the
// scaling law D(s*P) = s^{2r-2} D(P) (homogeneity of degree 2r-2).
Rat disc_rat(const RatBinaryForm& f) {
    auto [s, p] = f.primitive_part();
    return pow_rat(s, 2L * f.degree() - 2) * Rat(discriminant(p));
}

} // namespace

TEST_CASE("make_form basics") {
    BinaryForm f = make_form({Int(1), Int(0), Int(1)});
    CHECK(f.degree() == 2);
    CHECK(f.coeff(0) == 1);
    BinaryForm g = make_form({Int(1), Int(0), Int(0), Int(-2)});
    CHECK(g.degree() == 3);
    CHECK_THROWS_AS(make_form({Int(0), Int(0), Int(0)}), all_zero_error);
}

TEST_CASE("encode / parse round trip") {
    BinaryForm f = make_form({Int(1), Int(0), Int(0), Int(-2)});
    CHECK(f.encode() == "3:1,0,0,-2");
    CHECK(BinaryForm::parse("3:1,0,0,-2") == f);
    CHECK_THROWS_AS(BinaryForm::parse("2:1,0,0,-2"), parse_error);
    CHECK_THROWS_AS(BinaryForm::parse("1,2,3"), parse_error);
    CHECK_THROWS_AS(BinaryForm::parse("3:1,0,0,"), parse_error);
    CHECK_THROWS_AS(BinaryForm::parse("3:0,0,0,0"), all_zero_error);

    for (int it = 0; it < 50; ++it) {
        BinaryForm g = rnd_form(1 + static_cast<int>(rng() % 6), 1000);
        CHECK(BinaryForm::parse(g.encode()) == g);
    }
}

TEST_CASE("content") {
    CHECK(content(make_form({Int(2), Int(4), Int(6)})) == 2);
    CHECK(content(make_form({Int(1), Int(0), Int(0), Int(-2)})) == 1);
    // Gauss: content(F*G) = content(F)*content(G)
    BinaryForm f = make_form({Int(2), Int(2)});
    BinaryForm g = make_form({Int(3), Int(-3)});
    CHECK(content(multiply(f, g)) == 6);
    for (int it = 0; it < 100; ++it) {
        BinaryForm a = rnd_form(1 + static_cast<int>(rng() % 4), 20);
        BinaryForm b = rnd_form(1 + static_cast<int>(rng() % 4), 20);
        CHECK(content(multiply(a, b)) == content(a) * content(b));
    }
}

TEST_CASE("discriminant examples") {
    CHECK(discriminant(BinaryForm::parse("2:0,1,0")) == 1);    // XY
    CHECK(discriminant(BinaryForm::parse("2:1,1,1")) == -3);   // X^2+XY+Y^2
    CHECK(discriminant(BinaryForm::parse("3:1,0,-1,0")) == 4); // X^3-XY^2
    CHECK(discriminant(BinaryForm::parse("3:1,0,0,-2")) == -108);
    CHECK(discriminant(BinaryForm::parse("1:3,5")) == 1);
    // repeated factor => 0
    CHECK(discriminant(BinaryForm::parse("2:1,2,1")) == 0);
    // leading zero band
    // X^2 Y - Y^3 = Y(X-Y)(X+Y): root pairs (0,-1),(1,1),(1,-1) give 1*1*4
    CHECK(discriminant(BinaryForm::parse("3:0,1,0,-1")) == 4);
}

TEST_CASE("transform examples") {
    BinaryForm f = BinaryForm::parse("2:1,0,1");
    IntMatrix2 swap{Int(0), Int(1), Int(1), Int(0)};
    CHECK(transform(f, swap) == f);

    BinaryForm x2 = BinaryForm::parse("2:1,0,0");
    IntMatrix2 shear{Int(1), Int(1), Int(0), Int(1)};
    CHECK(transform(x2, shear) == BinaryForm::parse("2:1,2,1"));

    BinaryForm c = BinaryForm::parse("3:1,0,0,-2");
    BinaryForm ct = transform(c, shear);
    CHECK(ct == BinaryForm::parse("3:1,3,3,-1"));
    CHECK(discriminant(ct) == -108);

    IntMatrix2 singular{Int(1), Int(2), Int(2), Int(4)};
    CHECK_THROWS_AS(transform(c, singular), singular_matrix_error);
}

TEST_CASE("resultant examples") {
    CHECK(resultant(BinaryForm::parse("1:1,0"), BinaryForm::parse("1:0,1")) == 1);
    CHECK(resultant(BinaryForm::parse("2:1,0,1"), BinaryForm::parse("2:1,0,-1")) == 4);
    CHECK(resultant(BinaryForm::parse("3:1,0,0,-2"), BinaryForm::parse("1:1,-1")) == 1);
}

TEST_CASE("discriminant_product examples") {
    auto id1 = discriminant_product({BinaryForm::parse("1:1,-1"), BinaryForm::parse("1:1,1")});
    CHECK(id1.disc_of_product == 4);
    CHECK(id1.holds());
    auto id2 = discriminant_product({BinaryForm::parse("1:1,0"), BinaryForm::parse("1:0,1")});
    CHECK(id2.disc_of_product == 1);
    CHECK(id2.holds());
    auto id3 = discriminant_product({BinaryForm::parse("2:1,0,1"), BinaryForm::parse("1:1,-1")});
    CHECK(id3.holds());
}

TEST_CASE("transformation law, integer matrices") {
    for (int it = 0; it < 200; ++it) {
        int r = 2 + static_cast<int>(rng() % 4);
        BinaryForm f = rnd_form(r, 30);
        IntMatrix2 u = rnd_matrix(8);
        Int expected = pow_int(u.det(), static_cast<long>(r) * (r - 1)) * discriminant(f);
        CHECK(discriminant(transform(f, u)) == expected);
    }
}

TEST_CASE("transformation law, rational matrices") {
    for (int it = 0; it < 60; ++it) {
        int r = 2 + static_cast<int>(rng() % 3);
        BinaryForm f = rnd_form(r, 12);
        Rat a(rnd_int(-6, 6), rnd_int(1, 6)), b(rnd_int(-6, 6), rnd_int(1, 6));
        Rat c(rnd_int(-6, 6), rnd_int(1, 6)), d(rnd_int(-6, 6), rnd_int(1, 6));
        a.canonicalize(); b.canonicalize(); c.canonicalize(); d.canonicalize();
        if (a * d - c * b == 0) continue;
        RatMatrix2 t = RatMatrix2::make(a, b, c, d);
        Rat expected = pow_rat(t.det(), static_cast<long>(r) * (r - 1)) * Rat(discriminant(f));
        CHECK(disc_rat(transform(f, t)) == expected);
    }
}

TEST_CASE("unimodular matrices preserve the discriminant exactly") {
    for (int it = 0; it < 100; ++it) {
        int r = 2 + static_cast<int>(rng() % 5);
        BinaryForm f = rnd_form(r, 25);
        IntMatrix2 u = rnd_unimodular(4);
        REQUIRE(u.unimodular());
        CHECK(discriminant(transform(f, u)) == discriminant(f));
    }
}

TEST_CASE("resultant symmetry and transform law") {
    for (int it = 0; it < 100; ++it) {
        int r = 1 + static_cast<int>(rng() % 4);
        int s = 1 + static_cast<int>(rng() % 4);
        BinaryForm f = rnd_form(r, 15);
        BinaryForm g = rnd_form(s, 15);
        Int sym = resultant(g, f);
        if ((static_cast<long>(r) * s) % 2 != 0) sym = -sym;
        CHECK(resultant(f, g) == sym);

        IntMatrix2 u = rnd_matrix(6);
        Int expected = pow_int(u.det(), static_cast<long>(r) * s) * resultant(f, g);
        CHECK(resultant(transform(f, u), transform(g, u)) == expected);
    }
}

TEST_CASE("discriminant product identity, randomized") {
    for (int it = 0; it < 100; ++it) {
        int nfactors = 2 + static_cast<int>(rng() % 3);
        std::vector<BinaryForm> fs;
        int total = 0;
        for (int i = 0; i < nfactors && total < 7; ++i) {
            int d = 1 + static_cast<int>(rng() % 3);
            if (total + d > 8) d = 1;
            total += d;
            fs.push_back(rnd_form(d, 10));
        }
        CHECK(discriminant_product(fs).holds());
    }
}

TEST_CASE("transform composition") {
    for (int it = 0; it < 100; ++it) {
        int r = 1 + static_cast<int>(rng() % 5);
        BinaryForm f = rnd_form(r, 20);
        IntMatrix2 u = rnd_matrix(5), v = rnd_matrix(5);
        CHECK(transform(transform(f, u), v) == transform(f, u * v));
    }
}

TEST_CASE("matrix encode / parse") {
    IntMatrix2 u{Int(2), Int(1), Int(1), Int(1)};
    CHECK(u.encode() == "2,1;1,1");
    CHECK(IntMatrix2::parse("2,1;1,1") == u);
    CHECK_THROWS_AS(IntMatrix2::parse("2,1,1,1"), parse_error);
    CHECK_THROWS_AS(IntMatrix2::parse("a,b;c,d"), parse_error);
}

TEST_CASE("rational matrix normalization is canonical") {
    RatMatrix2 t1 = RatMatrix2::make(Rat(2), Rat(4), Rat(6), Rat(2));
    RatMatrix2 t2 = RatMatrix2::make(Rat(1), Rat(2), Rat(3), Rat(1));
    CHECK(t1 == t2);
    RatMatrix2 t3 = RatMatrix2::make(Rat(0), Rat(3), Rat(5), Rat(7));
    CHECK(t3.b == 1);
    CHECK_THROWS_AS(RatMatrix2::make(Rat(1), Rat(2), Rat(2), Rat(4)), singular_matrix_error);

    IntMatrix2 p = RatMatrix2::make(Rat(1), Rat(1, 2), Rat(0), Rat(3, 2)).primitive_integer();
    CHECK(p == IntMatrix2{Int(2), Int(1), Int(0), Int(3)});
}
