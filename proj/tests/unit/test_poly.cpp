#include "common.hpp"

using namespace hypertorsion;

TEST_CASE("basic ring operations") {
    const Field q = Field::rationals();
    const auto [qt, r] = divrem(P("x^2+1", q), P("x", q));
    CHECK(qt == P("x", q));
    CHECK(r == P("1", q));
    CHECK(gcd(P("x^2-1", q), P("x-1", q)) == P("x-1", q));
    CHECK(shift(P("x^2", q), q.one()) == P("x^2+2x+1", q));
    CHECK(scale_arg(P("x^2+x", q), q.from_int(3)) == P("9x^2+3x", q));
    CHECK_THROWS_AS(divrem(P("x", q), Poly(q)), std::domain_error);
    CHECK_THROWS_AS(Poly(q).degree(), std::domain_error);
    CHECK(P("x^3", q).coeff(7).is_zero());
}

TEST_CASE("ring properties on random polynomials") {
    gen::Gen rng(17);
    for (const Field& f : {Field::rationals(), Field::prime(7), Field::extension(3, 3)}) {
        for (int i = 0; i < 150; ++i) {
            const Poly a = rng.poly_upto(f, 9), b = rng.poly(f, rng.uniform(0, 5)), c = rng.poly_upto(f, 4);
            const auto [qt, r] = divrem(a, b);
            CHECK(qt * b + r == a);
            CHECK(r.deg_or_neg() < b.deg_or_neg());
            const Poly g = gcd(a * c, b * c);
            if (!g.is_zero()) {
                CHECK(g.is_monic());
                CHECK(((a * c) % g).is_zero());
                CHECK(((b * c) % g).is_zero());
            }
            CHECK(derivative(a * b) == derivative(a) * b + a * derivative(b));
            CHECK(derivative(a + c) == derivative(a) + derivative(c));
            const XGcd x = xgcd(a, b);
            CHECK(x.s * a + x.t * b == x.g);
            const Elem s = rng.elem(f);
            CHECK(shift(a, s)(f.zero()) == a(s));
        }
    }
}

TEST_CASE("gcd over Q with large coefficients") {
    const Field q = Field::rationals();
    const Poly a = pow(P("x+1", q), 30) * P("x-2/3", q);
    const Poly b = pow(P("x+1", q), 12) * P("7x^2+1", q);
    CHECK(gcd(a, b) == pow(P("x+1", q), 12));
}

TEST_CASE("squarefree") {
    CHECK(is_squarefree(P("x^5+1", Field::prime(11))));
    CHECK_FALSE(is_squarefree(P("(x+1)^2", Field::rationals())));
    CHECK(is_squarefree(P("x^5+(x+1)^2", Field::prime(5))));
    CHECK_FALSE(is_squarefree(P("x^5+1", Field::prime(5))));
    CHECK_FALSE(is_squarefree(P("x^3+2", Field::prime(3))));  // derivative vanishes
    CHECK(is_squarefree(P("7", Field::rationals())));

    SUBCASE("agrees with the root scan on split polynomials") {
        gen::Gen rng(23);
        const Field f = Field::prime(13);
        for (int i = 0; i < 200; ++i) {
            Poly p = Poly::constant(f.one());
            std::vector<std::uint64_t> rs;
            for (int k = 0; k < 4; ++k) {
                const auto r = rng.uniform(0, 12);
                rs.push_back(r);
                p *= Poly::linear(f.from_int(static_cast<std::int64_t>(r)));
            }
            std::sort(rs.begin(), rs.end());
            CHECK(is_squarefree(p) == (std::adjacent_find(rs.begin(), rs.end()) == rs.end()));
        }
    }
}

TEST_CASE("polynomial square roots") {
    const Field q = Field::rationals();
    CHECK(*poly_sqrt(P("(x+1)^2", q)) == P("x+1", q));
    // x^2 + 2x + 2 = (x+1)^2 + 1
    CHECK_FALSE(poly_sqrt(P("x^2+2x+2", q)).has_value());
    const Field f = Field::prime(11);
    const Poly t = P("3x^2+9x+7", f);
    const auto s = poly_sqrt(t * t);
    REQUIRE(s.has_value());
    CHECK(*s * *s == t * t);
    CHECK((*s == t || *s == -t));
    CHECK(s->leading().is_canonical_sign());
    CHECK(*poly_sqrt(Poly(q)) == Poly(q));
    CHECK(*poly_sqrt(P("x^4", q)) == P("x^2", q));
    CHECK_FALSE(poly_sqrt(P("x^3", q)).has_value());
    CHECK_FALSE(poly_sqrt(P("2x^2", q)).has_value());

    SUBCASE("round trip") {
        gen::Gen rng(29);
        for (const Field& fld : {Field::rationals(), Field::prime(3), Field::prime(31), Field::extension(5, 2)}) {
            for (int i = 0; i < 200; ++i) {
                Poly u = rng.poly(fld, rng.uniform(0, 7));
                if (u(fld.zero()).is_zero()) u += Poly::constant(fld.one());
                const auto r = poly_sqrt(u * u);
                REQUIRE(r.has_value());
                CHECK((*r == u || *r == -u));
            }
        }
    }
}

TEST_CASE("reverse scaling") {
    const Field q = Field::rationals();
    CHECK(reverse_scale(P("x+1", q), q.one()) == P("x+1", q));
    const Poly w = P("2x+1", q);
    const Poly wt = reverse_scale(w, q.one());
    CHECK(wt == P("x+2", q));
    // wt(a/x) = w(x)/x^g at x = 3
    const Elem x3 = q.from_int(3);
    CHECK(wt(q.one() / x3) == w(x3) / x3);
    CHECK_THROWS(reverse_scale(P("x^2+x", q), q.one()));
    CHECK_THROWS(reverse_scale(w, q.zero()));

    SUBCASE("applying twice divides by a^g") {
        gen::Gen rng(31);
        for (const Field& f : {Field::rationals(), Field::prime(13)}) {
            for (int i = 0; i < 100; ++i) {
                Poly u = rng.poly(f, rng.uniform(1, 6));
                if (u(f.zero()).is_zero()) u += Poly::constant(f.one());
                const Elem a = rng.nonzero(f);
                const std::size_t g = u.degree();
                const Poly once = reverse_scale(u, a);
                CHECK(once.degree() == g);
                CHECK_FALSE(once(f.zero()).is_zero());
                CHECK(reverse_scale(once, a) == u * a.pow(std::uint64_t{g}).inverse());
                const Elem x0 = rng.nonzero(f);
                CHECK(once(a / x0) == u(x0) / x0.pow(std::uint64_t{g}));
                if (a.pow(std::uint64_t{g}).is_one()) CHECK(reverse_scale(once, a) == u);
            }
        }
    }
}

TEST_CASE("cyclotomic polynomials") {
    const Field q = Field::rationals();
    CHECK(cyclotomic(3) == P("x^2+x+1", q));
    CHECK(cyclotomic(105).degree() == 48);
    Poly prod = Poly::constant(q.one());
    for (unsigned d : {3u, 5u, 15u}) prod *= cyclotomic(d);
    CHECK(prod == exact_div(P("x^15-1", q), P("x-1", q)));
    for (unsigned n = 2; n <= 225; ++n) {
        std::size_t total = 0;
        for (auto d : oracle::divisors_by_scan(n))
            if (d > 1) total += cyclotomic(static_cast<unsigned>(d)).degree();
        CHECK(total == n - 1);
    }
    CHECK(cyclotomic(Field::prime(7), 3) == P("x^2+x+1", Field::prime(7)));
}

TEST_CASE("difference powers") {
    const Field f = Field::prime(11);
    // (x+1)^5 - x^5 mod 11
    const Poly d = diff_power(f.zero(), -f.one(), 5);
    CHECK(d == Poly::from_ints(f, {1, 5, 10, 10, 5}));
    CHECK(is_squarefree(d));
    CHECK(d.leading() == f.from_int(5));
    CHECK_THROWS(diff_power(f.one(), f.one(), 5));

    const Field f3 = Field::prime(3);
    const Poly d9 = diff_power(f3.zero(), -f3.one(), 9);
    CHECK(derivative(d9).is_zero());
    CHECK(d9 == pow(diff_power(f3.zero(), -f3.one(), 3), 3));

    SUBCASE("squarefree when the characteristic does not divide n") {
        gen::Gen rng(37);
        for (const Field& fld : {Field::rationals(), Field::prime(7), Field::prime(13), Field::extension(3, 2)}) {
            for (int i = 0; i < 25; ++i) {
                unsigned n;
                do n = 2 * static_cast<unsigned>(rng.uniform(1, 15)) + 1;
                while (fld.characteristic() && n % fld.characteristic() == 0);
                const Elem a1 = rng.elem(fld);
                Elem a2 = rng.elem(fld);
                while (a2 == a1) a2 = rng.elem(fld);
                const Poly dp = diff_power(a1, a2, n);
                CHECK(dp.degree() == n - 1);
                CHECK(gcd(dp, derivative(dp)).degree() == 0);
            }
        }
    }
}

TEST_CASE("finite-field root finding and irreducibility") {
    gen::Gen rng(41);
    const std::uint64_t p = 17;
    const Field f = Field::prime(p);
    for (int i = 0; i < 100; ++i) {
        const Poly u = rng.poly(f, rng.uniform(1, 6)).monic();
        oracle::RawPoly raw;
        for (const Elem& c : u.coeffs()) raw.push_back(c.index());
        std::vector<std::uint64_t> got;
        for (const Elem& r : roots(u)) got.push_back(r.index());
        CHECK(got == oracle::roots_by_scan(raw, p));
        CHECK(is_irreducible(u) == oracle::is_irreducible_by_trial(raw, p));
    }
    // x^4 + 1 splits into quadratics mod 3
    const Poly x4 = P("x^4+1", Field::prime(3));
    CHECK(factor_degrees(x4) == std::vector<unsigned>{2, 2});
    CHECK(splitting_degree(x4) == 2);
}

TEST_CASE("expression parser") {
    const Field q = Field::rationals();
    CHECK(P("x^5+(x+1)^2", q) == pow(P("x", q), 5) + P("x^2+2x+1", q));
    CHECK(P("3*x^2 - x/2 + 7", q) == Poly(q, {q.from_int(7), q.from_rational(mpq_class(-1, 2)), q.from_int(3)}));
    CHECK(P("2x^3", q) == Poly::monomial(q.from_int(2), 3));
    CHECK(P("-(x-1)(x+1)", q) == P("1-x^2", q));
    try {
        parse_poly("x^^2", q);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS(parse_poly("x/(x+1)", q), ParseError);
    CHECK_THROWS_AS(parse_poly("(x+1", q), ParseError);
    CHECK_THROWS_AS(parse_poly("y+1", q), ParseError);
    CHECK_THROWS_AS(parse_poly("x/0", q), ParseError);
}
