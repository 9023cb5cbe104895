#include "common.hpp"

using namespace hypertorsion;

namespace {

PairingCurve family_curve(const Field& f, unsigned g, std::vector<std::size_t> I) {
    const PairTemplate t = family_template(f, g, FamilyIndex{std::move(I), std::nullopt});
    const auto cands = mu_candidates(f, 2000);
    const GoodMu good = find_good_mu(f, g, t, cands);
    return pairing_curve(good.enhanced, good.cert);
}

} // namespace

TEST_CASE("closed form") {
    const Field f = Field::prime(11);
    const std::size_t I[] = {0, 1};
    const std::size_t J[] = {2, 3};
    // complement roots 5 and 4
    CHECK(weil_closed(f, 2, I) == f.from_int(9));
    CHECK(weil_closed(f, 2, I).pow(std::uint64_t{5}).is_one());
    CHECK((weil_closed(f, 2, I) * weil_closed(f, 2, J)).is_one());
}

TEST_CASE("generic and per-root evaluations agree") {
    const Field f = Field::prime(11);
    const PairingCurve pc = family_curve(f, 2, {0, 1});
    CHECK_NOTHROW(validate(pc));
    const std::size_t I[] = {0, 1};
    const Elem e = weil_explicit_generic(pc);
    CHECK(e == weil_closed(f, 2, I));

    const PairingSetup setup = pairing_setup(pc);
    CHECK(setup.weierstrass.size() == 5);
    for (const Elem& w : setup.weierstrass) CHECK(weil_explicit(setup.curve, w) == setup.embedding(e));
    CHECK(setup.embedding.in_image(weil_explicit(setup.curve, setup.weierstrass.front())));
}

TEST_CASE("pairing relations") {
    const Field f = Field::prime(31);
    const CoprimeFamilies fam = nice_pairs_coprime(f, 2);
    for (const CoprimeTemplate& t : fam.templates) {
        const auto cands = mu_candidates(f, 100);
        const GoodMu good = find_good_mu(f, 2, t.pair, cands);
        const PairingCurve pc = pairing_curve(good.enhanced, good.cert);
        const Elem e = weil_explicit_generic(pc);
        CHECK(e == weil_closed(f, 2, t.I));
        CHECK(e.pow(std::uint64_t{5}).is_one());

        // (-u2, -u1) keeps Q and replaces P by its conjugate
        const PairCert swapped{good.cert.a1, good.cert.a2, -good.cert.u2, -good.cert.u1};
        const EnhancedCurve ec = make_pair(f, 2, swapped);
        CHECK(ec.P == involution(good.enhanced.P));
        CHECK(ec.Q == good.enhanced.Q);
        CHECK((e * weil_explicit_generic(pairing_curve(ec, swapped))).is_one());
    }
}

TEST_CASE("validation rejects inconsistent data") {
    const Field f = Field::prime(11);
    const PairingCurve pc = family_curve(f, 2, {0, 1});
    PairingCurve bad = pc;
    std::swap(bad.v1, bad.v2);
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad = pc;
    bad.Q = involution(bad.Q);
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}
