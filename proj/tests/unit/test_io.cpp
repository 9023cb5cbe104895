#include "common.hpp"

using namespace hypertorsion;
using io::json;

TEST_CASE("field descriptions") {
    CHECK(io::to_json(Field::rationals()) == json{{"kind", "Q"}});
    CHECK(io::to_json(Field::prime(11)) == json{{"kind", "GF"}, {"p", 11}});
    CHECK(io::field_from_spec("Q") == Field::rationals());
    CHECK(io::field_from_spec("GF:11") == Field::prime(11));
    CHECK(io::field_from_spec("GF:3,4", 5) == Field::extension(3, 4, std::nullopt, 5));
    CHECK_THROWS_AS(io::field_from_spec("F:7"), io::FormatError);
    CHECK_THROWS_AS(io::field_from_spec("GF:x"), io::FormatError);
    CHECK_THROWS_AS(io::field_from_json(json{{"kind", "R"}}), io::FormatError);
    CHECK_THROWS_AS(io::field_from_json(json{{"kind", "GF"}}), io::FormatError);
}

TEST_CASE("element encodings") {
    const Field q = Field::rationals();
    CHECK(io::to_json(q.from_rational(mpq_class(-3, 4))) == json("-3/4"));
    CHECK(io::elem_from_json(q, json("6/8")) == q.from_rational(mpq_class(3, 4)));
    CHECK_THROWS_AS(io::elem_from_json(q, json("1/0")), io::FormatError);
    CHECK_THROWS_AS(io::elem_from_json(q, json("abc")), io::FormatError);
    const Field f = Field::prime(11);
    CHECK(io::to_json(f.from_int(-1)) == json(10));
    CHECK_THROWS_AS(io::elem_from_json(f, json::object()), io::FormatError);
    const Field e = Field::extension(3, 2);
    const Elem a = e.from_index(7);
    CHECK(io::to_json(a) == json(a.coeffs()));
}

TEST_CASE("structure round trips") {
    gen::Gen rng(67);
    for (const Field& f : {Field::prime(13), Field::extension(3, 3), Field::rationals()}) {
        for (int i = 0; i < 30; ++i) {
            const Poly p = rng.poly_upto(f, 6);
            CHECK(io::poly_from_json(f, io::to_json(p)) == p);
        }
        const SingleCurve sc = [&] {
            for (;;) {
                try {
                    return make_single(f, 2, rng.elem(f), rng.poly(f, 2));
                } catch (const CertError&) {
                }
            }
        }();
        const Curve back = io::curve_from_json(io::to_json(sc.curve));
        CHECK(back.f() == sc.curve.f());
        CHECK(back.genus() == 2);
        CHECK(io::point_from_json(f, io::to_json(sc.P)) == sc.P);
        const SingleCert cert = io::single_cert_from_json(f, io::to_json(sc.cert));
        CHECK(cert.a == sc.cert.a);
        CHECK(cert.v == sc.cert.v);
        const Mumford d = scalar_mul(sc.curve, 2, embed(sc.curve, sc.P));
        CHECK(io::mumford_from_json(f, io::to_json(d)) == d);
    }
    const Field f = Field::prime(11);
    CHECK(io::poly_from_json(f, json("x^5+1")) == P("x^5+1", f));
    CHECK_THROWS_AS(io::poly_from_json(f, json(5)), io::FormatError);
}

TEST_CASE("points from text") {
    const Field q = Field::rationals();
    CHECK(io::point_from_string(q, "(0, 1)") == AffinePoint{q.zero(), q.one()});
    CHECK(io::point_from_string(q, "(-1/2,3)") == AffinePoint{q.from_rational(mpq_class(-1, 2)), q.from_int(3)});
    CHECK_THROWS_AS(io::point_from_string(q, "0,1"), io::FormatError);
    CHECK_THROWS_AS(io::point_from_string(q, "(x,1)"), io::FormatError);
}

TEST_CASE("pair certificates and partitions") {
    const Field f = Field::prime(11);
    const PairTemplate t = family_template(f, 2, FamilyIndex{std::vector<std::size_t>{0, 2}, std::nullopt});
    const PairCert c = instantiate(t, f.from_int(3));
    CHECK(io::pair_cert_from_json(f, io::to_json(c)) == c);

    const TotientPartition part{105, {105, 5}, {3, 7, 15, 21, 35}};
    const json j = io::to_json(part);
    CHECK(j == json::parse(R"({"n":105,"S1":[105,5],"S2":[3,7,15,21,35]})"));
    const TotientPartition back = io::partition_from_json(j);
    CHECK(back.n == part.n);
    CHECK(back.s1 == part.s1);
    CHECK(back.s2 == part.s2);
    CHECK_THROWS_AS(io::partition_from_json(json{{"n", 105}}), io::FormatError);
}

TEST_CASE("family indices") {
    const Field f = Field::prime(11);
    const FamilyIndex fam{std::vector<std::size_t>{0, 3}, f.from_int(4)};
    const json j = io::to_json(fam);
    CHECK(j.at("regime") == "coprime");
    CHECK(j.at("I") == json::array({0, 3}));
    const FamilyIndex back = io::family_from_json(f, 2, j);
    CHECK(std::get<std::vector<std::size_t>>(back.regime) == std::vector<std::size_t>{0, 3});
    CHECK(back.mu == fam.mu);

    const Field e = Field::extension(3, 4);
    const FamilyIndex up{AdmissibleFn{*char_split(3, 7), {2, 1, 2, 1}}, std::nullopt};
    const json ju = io::to_json(up);
    CHECK(ju.at("regime") == "char");
    CHECK_FALSE(ju.contains("mu"));
    const FamilyIndex upb = io::family_from_json(e, 7, ju);
    CHECK(std::get<AdmissibleFn>(upb.regime) == std::get<AdmissibleFn>(up.regime));
    CHECK_FALSE(upb.mu.has_value());
    CHECK_THROWS(io::family_from_json(f, 2, json{{"regime", "other"}}));
}
