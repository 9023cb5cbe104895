#include "hypertorsion/pairing.hpp"

#include <algorithm>

namespace hypertorsion {

PairingCurve pairing_curve(const EnhancedCurve& e, const PairCert& cert) {
    const Elem h = e.curve.field().from_int(2).inverse();
    PairingCurve pc{e.curve, (cert.u1 + cert.u2) * h, (cert.u1 - cert.u2) * h, e.P, e.Q};
    validate(pc);
    return pc;
}

void validate(const PairingCurve& pc) {
    const Field& f = pc.curve.field();
    const unsigned n = 2 * pc.curve.genus() + 1;
    const Poly x = Poly::x(f);
    const Poly x1 = Poly(f, {f.one(), f.one()});
    if (!(pc.curve.f() == pow(x, n) + pc.v1 * pc.v1)) throw std::invalid_argument("pairing: f != x^n + v1^2");
    if (!(pc.curve.f() == pow(x1, n) + pc.v2 * pc.v2)) throw std::invalid_argument("pairing: f != (x+1)^n + v2^2");
    if (!(pc.P == AffinePoint{f.zero(), pc.v1(f.zero())})) throw std::invalid_argument("pairing: P != (0, v1(0))");
    if (!(pc.Q == AffinePoint{-f.one(), pc.v2(-f.one())})) throw std::invalid_argument("pairing: Q != (-1, v2(-1))");
}

Elem weil_explicit(const PairingCurve& pc, const Elem& w) {
    validate(pc);
    if (!pc.curve.f()(w).is_zero()) throw std::invalid_argument("pairing: f(w) != 0");
    const unsigned g = pc.curve.genus();
    const unsigned n = 2 * g + 1;
    const AffinePoint W{w, w.field().zero()};

    // g_P = (y - v1)^2 / (x - w)^n, which is 1 at infinity.
    auto gP = [&](const AffinePoint& R) {
        const Elem t = R.y - pc.v1(R.x);
        return t * t / (R.x - w).pow(static_cast<std::uint64_t>(n));
    };
    // g_Q = (y - v2)^2
    auto gQ = [&](const AffinePoint& R) {
        const Elem t = R.y - pc.v2(R.x);
        return t * t;
    };
    const Elem gP_DQ = gP(pc.Q);
    const Elem gQ_D = gQ(pc.P) / gQ(W);
    const Elem e = (gP_DQ / gQ_D).pow(static_cast<std::uint64_t>(g + 1));
    if (!e.pow(static_cast<std::uint64_t>(n)).is_one()) throw std::logic_error("weil_explicit: e^(2g+1) != 1");
    return e;
}

Elem weil_explicit_generic(const PairingCurve& pc) {
    validate(pc);
    const Field& f = pc.curve.field();
    const Poly& m = pc.curve.f();
    const unsigned g = pc.curve.genus();
    const unsigned n = 2 * g + 1;
    const Poly w = Poly::x(f);
    auto inverse_mod = [&](const Poly& a) {
        const XGcd r = xgcd(a % m, m);
        if (r.g.degree() != 0) throw std::logic_error("weil_explicit_generic: non-invertible class");
        return r.s % m;
    };
    auto square = [](const Elem& t) { return t * t; };

    // g_P(Q) = (y_Q - v1(x_Q))^2 / (x_Q - w)^n
    const Poly denom = pow(Poly::constant(pc.Q.x) - w, n) % m;
    const Poly gP_DQ = (Poly::constant(square(pc.Q.y - pc.v1(pc.Q.x))) * inverse_mod(denom)) % m;
    // g_Q(D) = g_Q(P) / g_Q(W) with g_Q(W) = v2(w)^2
    const Poly gQ_W = (pc.v2 * pc.v2) % m;
    const Elem gQ_P = square(pc.P.y - pc.v2(pc.P.x));
    const Poly e2 = (gP_DQ * gQ_W * gQ_P.inverse()) % m;
    const Poly e = powmod(e2, mpz_class(g + 1), m);
    if (e.deg_or_neg() > 0) throw std::logic_error("weil_explicit_generic: value depends on the Weierstrass point");
    const Elem ec = e.coeff(0);
    if (!ec.pow(static_cast<std::uint64_t>(n)).is_one()) throw std::logic_error("weil_explicit_generic: e^(2g+1) != 1");
    return ec;
}

Elem weil_closed(const Field& f, unsigned g, std::span<const std::size_t> I) {
    const std::uint64_t n = 2 * static_cast<std::uint64_t>(g) + 1;
    const std::vector<Elem> eps = nth_roots_of_unity(f, n);
    Elem r = f.one();
    for (std::size_t i = 0; i < eps.size(); ++i)
        if (std::find(I.begin(), I.end(), i) == I.end()) r *= eps[i];
    return r;
}

PairingSetup pairing_setup(const PairingCurve& pc, std::uint64_t seed) {
    const Field& base = pc.curve.field();
    if (!base.is_finite())
        throw InsufficientField("pairing over Q needs the roots of f; no splitting field is available over Q", 0);
    const unsigned g = pc.curve.genus();
    const unsigned d = splitting_degree(pc.curve.f());
    const Field big = extend(base, d, seed);
    Embedding emb(base, big);
    PairingCurve bc{base_change(pc.curve, emb), emb(pc.v1), emb(pc.v2), {emb(pc.P.x), emb(pc.P.y)},
                    {emb(pc.Q.x), emb(pc.Q.y)}};
    std::vector<Elem> ws = roots(bc.curve.f());
    if (ws.size() != 2 * g + 1) throw std::logic_error("pairing_setup: f does not split in the chosen field");
    return {big, std::move(emb), std::move(bc), std::move(ws)};
}

} // namespace hypertorsion
