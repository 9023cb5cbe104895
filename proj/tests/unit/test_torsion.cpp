#include "common.hpp"

using namespace hypertorsion;

namespace {

CertError::Kind cert_kind(const auto& fn) {
    try {
        fn();
    } catch (const CertError& e) {
        return e.kind();
    }
    FAIL("expected CertError");
    return CertError::Kind::not_normalized;
}

/// A valid normalized pair over f for genus g from the first template.
PairCert first_good_pair(const Field& f, unsigned g) {
    const CoprimeFamilies fam = nice_pairs_coprime(f, g);
    const auto cands = mu_candidates(f, 1000);
    return find_good_mu(f, g, fam.templates.front().pair, cands).cert;
}

} // namespace

TEST_CASE("single certificates") {
    const Field q = Field::rationals();
    const SingleCurve sc = make_single(q, 2, q.zero(), P("x+1", q));
    CHECK(sc.curve.f() == P("x^5+x^2+2x+1", q));
    CHECK(sc.P == AffinePoint{q.zero(), q.one()});
    CHECK(exact_order(sc.curve, embed(sc.curve, sc.P), 5) == 5u);

    const SingleCurve shifted = make_single(q, 1, q.from_int(2), P("3", q));
    CHECK(shifted.curve.f() == P("(x-2)^3+9", q));
    CHECK(shifted.P == AffinePoint{q.from_int(2), q.from_int(3)});

    SUBCASE("errors") {
        const Field f5 = Field::prime(5);
        // (x)^5 + 1 = (x+1)^5 over GF(5)
        CHECK(cert_kind([&] { make_single(f5, 2, f5.zero(), P("1", f5)); }) == CertError::Kind::multiple_roots);
        CHECK(cert_kind([&] { make_single(q, 2, q.zero(), P("x", q)); }) == CertError::Kind::v_vanishes_at_a);
        CHECK(cert_kind([&] { make_single(q, 1, q.zero(), P("x^2+1", q)); }) == CertError::Kind::degree_bound);
    }
}

TEST_CASE("verifying single certificates") {
    const Field f = Field::prime(11);
    const Curve c = Curve::make(2, P("x^5+1", f));
    const AffinePoint p{f.zero(), f.one()};
    const auto cert = verify_single(c, p);
    REQUIRE(cert.has_value());
    CHECK(cert->v == P("1", f));
    const auto neg = verify_single(c, involution(p));
    REQUIRE(neg.has_value());
    CHECK(neg->v == -cert->v);
    // a Weierstrass point has order 2
    CHECK_FALSE(verify_single(c, AffinePoint{f.from_int(2), f.zero()}).has_value());
}

TEST_CASE("single certificates are sound and complete") {
    gen::Gen rng(59);
    for (std::uint64_t p : {7u, 11u, 13u, 19u, 31u}) {
        const Field f = Field::prime(p);
        for (unsigned g = 1; g <= 3; ++g) {
            const std::uint64_t n = 2 * g + 1;
            for (int t = 0; t < 6; ++t) {
                // half the curves carry a point of order n by construction
                Poly fx = pow(Poly::x(f), 2 * g + 1);
                if (rng.coin()) {
                    const Elem a = rng.elem(f);
                    const Poly v = rng.poly_upto(f, g);
                    fx = pow(Poly::linear(a), static_cast<unsigned>(n)) + v * v;
                } else {
                    fx += rng.poly_upto(f, 2 * g);
                }
                if (!is_squarefree(fx)) continue;
                const Curve c = Curve::make(g, fx);
                for (const Elem& x0 : f.elements()) {
                    for (const AffinePoint& pt : points_with_x(c, x0)) {
                        const auto o = oracle::order_by_repeated_addition(c, embed(c, pt), n);
                        const auto cert = verify_single(c, pt);
                        CHECK(cert.has_value() == (o == n));
                        if (cert) {
                            CHECK(cert->a == pt.x);
                            CHECK(cert->v(pt.x) == pt.y);
                            CHECK(pow(Poly::linear(pt.x), static_cast<unsigned>(n)) + cert->v * cert->v == c.f());
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("pair certificates") {
    const Field f = Field::prime(11);
    const PairCert cert = first_good_pair(f, 2);
    CHECK(evaluation_identities_hold(2, cert));
    CHECK_NOTHROW(validate_pair_cert(2, cert));
    const EnhancedCurve e = make_pair(f, 2, cert);
    CHECK(e.P.x.is_zero());
    CHECK(e.Q.x == -f.one());
    CHECK(exact_order(e.curve, embed(e.curve, e.P), 5) == 5u);
    CHECK(exact_order(e.curve, embed(e.curve, e.Q), 5) == 5u);
    CHECK(recover_pair(e.curve, e.P, e.Q) == cert);

    SUBCASE("swapping u1 and u2 replaces Q by its conjugate") {
        const EnhancedCurve s = make_pair(f, 2, PairCert{cert.a1, cert.a2, cert.u2, cert.u1});
        CHECK(s.curve.f() == e.curve.f());
        CHECK(s.P == e.P);
        CHECK(s.Q == involution(e.Q));
    }
    SUBCASE("degenerate and malformed certificates") {
        const CoprimeFamilies fam = nice_pairs_coprime(f, 2);
        const auto it = std::find_if(fam.templates.begin(), fam.templates.end(),
                                     [](const CoprimeTemplate& t) { return t.I == std::vector<std::size_t>{0, 1}; });
        REQUIRE(it != fam.templates.end());
        CHECK(cert_kind([&] { make_pair(f, 2, instantiate(it->pair, f.one())); }) ==
              CertError::Kind::q_side_degenerate);
        CHECK(cert_kind([&] { validate_pair_cert(2, PairCert{f.zero(), f.zero(), cert.u1, cert.u2}); }) ==
              CertError::Kind::equal_abscissas);
        CHECK(cert_kind([&] { validate_pair_cert(2, PairCert{cert.a1, cert.a2, cert.u1, cert.u2 * f.from_int(2)}); }) ==
              CertError::Kind::product_identity);
        CHECK(cert_kind([&] { recover_pair(e.curve, e.P, e.P); }) == CertError::Kind::equal_abscissas);
    }
}

TEST_CASE("decorations") {
    const Field f = Field::prime(31);
    const PairCert cert = first_good_pair(f, 2);
    const EnhancedCurve e = make_pair(f, 2, cert);
    const auto decs = decorations_of(e.curve, e.P, e.Q);
    REQUIRE(decs.size() == 4);
    CHECK(std::count_if(decs.begin(), decs.end(), [](const Decoration& d) { return d.matches_input; }) == 1);
    for (const Decoration& d : decs) {
        CHECK(evaluation_identities_hold(2, d.cert));
        const EnhancedCurve back = make_pair(f, 2, d.cert);
        CHECK(back.curve.f() == e.curve.f());
        CHECK(back.P == d.P);
        CHECK(back.Q == d.Q);
        if (d.P == involution(e.P) && d.Q == involution(e.Q)) {
            CHECK(d.cert.u1 == -cert.u1);
            CHECK(d.cert.u2 == -cert.u2);
        }
        if (d.matches_input) CHECK(d.cert == cert);
    }
}

TEST_CASE("normalization") {
    const Field f = Field::prime(41);
    const PairCert cert = first_good_pair(f, 2);
    const EnhancedCurve e = make_pair(f, 2, cert);

    const Normalized same = normalize_enhanced(e.curve, e.P, e.Q);
    CHECK(same.enhanced.curve.f() == e.curve.f());
    CHECK(same.map.r.is_zero());
    CHECK(same.map.lambda.pow(std::uint64_t{2}).is_one());

    gen::Gen rng(61);
    for (int i = 0; i < 30; ++i) {
        const IsoMap m{rng.nonzero(f), rng.elem(f)};
        const Curve moved = Curve::make(2, apply(m, 2, e.curve.f()));
        const AffinePoint mp = apply(m, 2, e.P), mq = apply(m, 2, e.Q);
        REQUIRE(moved.contains(mp));
        REQUIRE(moved.contains(mq));
        const Normalized n = normalize_enhanced(moved, mp, mq);
        CHECK(n.enhanced.curve.f() == e.curve.f());
        CHECK(n.enhanced.P.x.is_zero());
        CHECK(n.enhanced.Q.x == -f.one());
        CHECK(apply(n.map, 2, mp) == n.enhanced.P);
        CHECK(apply(n.map, 2, mq) == n.enhanced.Q);
        const Normalized twice = normalize_enhanced(n.enhanced.curve, n.enhanced.P, n.enhanced.Q);
        CHECK(twice.enhanced.curve.f() == n.enhanced.curve.f());
        CHECK(twice.enhanced.P == n.enhanced.P);
        CHECK(twice.enhanced.Q == n.enhanced.Q);
    }
}

TEST_CASE("torsion census") {
    SUBCASE("GF(5)") {
        const Field f = Field::prime(5);
        const Curve c = Curve::make(2, P("x^5+(x+1)^2", f));
        const auto cen = torsion_census(c, 5);
        REQUIRE(cen.size() == 2);
        CHECK(cen[0].point == AffinePoint{f.zero(), f.from_int(1)});
        CHECK(cen[1].point == AffinePoint{f.zero(), f.from_int(4)});
        CHECK(cen[0].order == 5);
    }
    SUBCASE("GF(5^4)") {
        const Field f = Field::extension(5, 4);
        const Curve c = Curve::make(2, P("x^5+(x+1)^2", f));
        CHECK(torsion_census(c, 5, 2).size() == 2);
    }
    SUBCASE("GF(11) agrees with a per-point order scan") {
        const Field f = Field::prime(11);
        const Curve c = Curve::make(2, P("x^5+1", f));
        const auto cen = torsion_census(c, 5);
        CHECK(cen.size() >= 2);
        CHECK(cen.size() % 2 == 0);
        std::size_t scan = 0;
        for (const Elem& x0 : f.elements())
            for (const AffinePoint& pt : points_with_x(c, x0))
                if (oracle::order_by_repeated_addition(c, embed(c, pt), 5) == 5u) ++scan;
        CHECK(cen.size() == scan);
    }
    CHECK_THROWS(torsion_census(Curve::make(1, P("x^3+1", Field::rationals())), 3));
}
