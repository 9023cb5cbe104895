#include "common.hpp"

using namespace hypertorsion;

TEST_CASE("curve validation") {
    const Field f = Field::prime(11);
    CHECK_NOTHROW(Curve::make(2, P("x^5+1", f)));
    auto reason = [&](unsigned g, const char* text) {
        try {
            Curve::make(g, P(text, f));
        } catch (const CurveError& e) {
            return e.reason();
        }
        FAIL("expected CurveError");
        return CurveError::Reason::bad_genus;
    };
    CHECK(reason(2, "x^4+1") == CurveError::Reason::wrong_degree);
    CHECK(reason(2, "2x^5+1") == CurveError::Reason::not_monic);
    CHECK(reason(2, "x^3(x-1)^2") == CurveError::Reason::not_squarefree);
    CHECK(reason(0, "x+1") == CurveError::Reason::bad_genus);
    // degree is checked before monicity
    CHECK(reason(2, "2x^4") == CurveError::Reason::wrong_degree);
}

TEST_CASE("points over a given abscissa") {
    const Field f = Field::prime(11);
    const Curve c = Curve::make(2, P("x^5+1", f));
    const auto p0 = points_with_x(c, f.zero());
    REQUIRE(p0.size() == 2);
    CHECK(p0[0] == AffinePoint{f.zero(), f.from_int(1)});
    CHECK(p0[1] == AffinePoint{f.zero(), f.from_int(10)});
    const auto pm = points_with_x(c, -f.one());
    REQUIRE(pm.size() == 1);
    CHECK(pm[0].y.is_zero());
    const auto p2 = points_with_x(c, f.from_int(2));  // 2^5 + 1 = 33
    REQUIRE(p2.size() == 1);
    CHECK(p2[0] == AffinePoint{f.from_int(2), f.zero()});
    // 3^5 + 1 = 244 = 2 mod 11, a nonsquare
    REQUIRE_FALSE(oracle::sqrt_mod(2, 11).has_value());
    CHECK(points_with_x(c, f.from_int(3)).empty());

    SUBCASE("agrees with a scan") {
        std::size_t total = 0;
        for (std::uint64_t x = 0; x < 11; ++x) {
            std::size_t scan = 0;
            for (std::uint64_t y = 0; y < 11; ++y)
                if (oracle::mulmod(y, y, 11) == oracle::eval_mod({1, 0, 0, 0, 0, 1}, x, 11)) ++scan;
            const auto pts = points_with_x(c, f.from_int(static_cast<std::int64_t>(x)));
            CHECK(pts.size() == scan);
            for (const auto& p : pts) CHECK(c.contains(p));
            total += scan;
        }
        CHECK(total > 0);
    }
}

TEST_CASE("embedding points and negation") {
    const Field f = Field::prime(11);
    const Curve c = Curve::make(2, P("x^5+1", f));
    const AffinePoint p{f.zero(), f.one()};
    const Mumford d = embed(c, p);
    CHECK(d.u == P("x", f));
    CHECK(d.v == P("1", f));
    CHECK(is_reduced_divisor(c, d));
    CHECK(negate(c, d) == embed(c, involution(p)));
    CHECK(is_identity(cantor_add(c, d, embed(c, involution(p)))));
    CHECK(is_identity(identity(c)));
    CHECK(cantor_add(c, d, identity(c)) == d);
    CHECK_THROWS(embed(c, AffinePoint{f.from_int(3), f.one()}));
    // Weierstrass points have order 2
    const Mumford w = embed(c, AffinePoint{f.from_int(2), f.zero()});
    CHECK(negate(c, w) == w);
    CHECK(exact_order(c, w, 2) == 2u);
    CHECK(exact_order(c, w, 5) == std::nullopt);
}

TEST_CASE("group laws on random divisors") {
    gen::Gen rng(43);
    struct Case {
        Field f;
        unsigned g;
        const char* curve;
    };
    const std::vector<Case> cases{{Field::prime(11), 2, "x^5+1"},
                                  {Field::prime(31), 2, "x^5+3x^2+x+7"},
                                  {Field::prime(13), 3, "x^7+2x+5"},
                                  {Field::extension(3, 2), 2, "x^5+x+1"},
                                  {Field::prime(101), 4, "x^9+x^3+17"}};
    for (const Case& k : cases) {
        Poly fx = P(k.curve, k.f);
        while (!is_squarefree(fx)) fx += Poly::constant(k.f.one());
        const Curve c = Curve::make(k.g, fx);
        for (int i = 0; i < 60; ++i) {
            const Mumford a = rng.divisor(c), b = rng.divisor(c), d = rng.divisor(c);
            REQUIRE(is_reduced_divisor(c, a));
            const Mumford ab = cantor_add(c, a, b);
            CHECK(is_reduced_divisor(c, ab));
            CHECK(ab == cantor_add(c, b, a));
            CHECK(cantor_add(c, ab, d) == cantor_add(c, a, cantor_add(c, b, d)));
            CHECK(is_identity(cantor_add(c, a, negate(c, a))));
            const std::uint64_t n = rng.uniform(0, 40);
            Mumford rep = identity(c);
            for (std::uint64_t j = 0; j < n; ++j) rep = cantor_add(c, rep, a);
            CHECK(scalar_mul(c, n, a) == rep);
        }
    }
}

TEST_CASE("exact order against repeated addition") {
    gen::Gen rng(47);
    const Curve c = Curve::make(2, P("x^5+3x^2+x+7", Field::prime(13)));
    for (int i = 0; i < 40; ++i) {
        const Mumford d = rng.divisor(c);
        const auto o = oracle::order_by_repeated_addition(c, d, 400);
        REQUIRE(o.has_value());
        CHECK(exact_order(c, d, *o) == *o);
        CHECK(exact_order(c, d, 2 * *o) == *o);
        if (*o > 1) CHECK(exact_order(c, d, *o - 1) == std::nullopt);
        CHECK(is_identity(scalar_mul(c, mpz_class(*o), d)));
    }
}

TEST_CASE("genus one agrees with chord and tangent") {
    gen::Gen rng(53);
    for (std::uint64_t p : {7u, 23u, 101u}) {
        const Field f = Field::prime(p);
        for (int t = 0; t < 4; ++t) {
            const oracle::EcCurve e{p, rng.uniform(0, p - 1), rng.uniform(0, p - 1), rng.uniform(0, p - 1)};
            const Poly fx = Poly::from_ints(f, {static_cast<std::int64_t>(e.a6), static_cast<std::int64_t>(e.a4),
                                                static_cast<std::int64_t>(e.a2), 1});
            if (!is_squarefree(fx)) continue;
            const Curve c = Curve::make(1, fx);
            auto to_div = [&](const oracle::EcPoint& q) {
                if (q.infinity) return identity(c);
                return embed(c, AffinePoint{f.from_index(q.x), f.from_index(q.y)});
            };
            for (int i = 0; i < 50; ++i) {
                const auto a = rng.point(c), b = rng.point(c);
                if (!a || !b) continue;
                const oracle::EcPoint ea{false, a->x.index(), a->y.index()};
                const oracle::EcPoint eb{false, b->x.index(), b->y.index()};
                CHECK(cantor_add(c, embed(c, *a), embed(c, *b)) == to_div(oracle::ec_add(e, ea, eb)));
            }
        }
    }
}

TEST_CASE("base change") {
    const Field f = Field::prime(7);
    const Field big = extend(f, 3);
    const Embedding emb(f, big);
    const Curve c = Curve::make(1, P("x^3+x+3", f));
    const Curve cb = base_change(c, emb);
    CHECK(cb.field() == big);
    const auto pts = points_with_x(c, f.from_int(4));  // 64 + 4 + 3 = 71 = 1 mod 7
    REQUIRE(pts.size() == 2);
    const AffinePoint pb{emb(pts[0].x), emb(pts[0].y)};
    CHECK(cb.contains(pb));
    const auto o = oracle::order_by_repeated_addition(c, embed(c, pts[0]), 100);
    REQUIRE(o.has_value());
    CHECK(exact_order(cb, embed(cb, pb), *o) == o);
}
