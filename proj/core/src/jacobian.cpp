#include "hypertorsion/jacobian.hpp"

#include "hypertorsion/numtheory.hpp"

namespace hypertorsion {

Curve Curve::make(unsigned g, Poly f) {
    if (g == 0) throw CurveError(CurveError::Reason::bad_genus, "genus must be >= 1");
    if (f.is_zero() || f.degree() != 2 * g + 1)
        throw CurveError(CurveError::Reason::wrong_degree,
                         "f must have degree " + std::to_string(2 * g + 1) + ", got " + std::to_string(f.deg_or_neg()));
    if (!f.is_monic()) throw CurveError(CurveError::Reason::not_monic, "f must be monic");
    if (!is_squarefree(f)) throw CurveError(CurveError::Reason::not_squarefree, "f has multiple roots");
    return Curve(g, std::move(f));
}

bool Curve::contains(const AffinePoint& p) const { return p.y * p.y == f_(p.x); }

Curve base_change(const Curve& c, const Embedding& e) { return Curve::make(c.genus(), e(c.f())); }

Mumford identity(const Curve& c) { return {Poly::constant(c.field().one()), Poly(c.field())}; }

bool is_identity(const Mumford& d) { return d.u.degree() == 0 && d.v.is_zero(); }

bool is_reduced_divisor(const Curve& c, const Mumford& d) {
    if (!d.u.is_monic()) return false;
    if (d.u.degree() > c.genus()) return false;
    if (d.v.deg_or_neg() >= d.u.deg_or_neg()) return false;
    return ((d.v * d.v - c.f()) % d.u).is_zero();
}

std::vector<AffinePoint> points_with_x(const Curve& c, const Elem& x0) {
    const Elem fx = c.f()(x0);
    if (fx.is_zero()) return {{x0, fx}};
    const auto s = fx.sqrt();
    if (!s) return {};
    return {{x0, *s}, {x0, -*s}};
}

Mumford embed(const Curve& c, const AffinePoint& p) {
    if (!c.contains(p)) throw std::invalid_argument("embed: point is not on the curve");
    return {Poly::linear(p.x), Poly::constant(p.y)};
}

Mumford negate(const Curve&, const Mumford& d) { return {d.u, -d.v}; }

Mumford cantor_add(const Curve& c, const Mumford& a, const Mumford& b) {
    const Poly& f = c.f();
    const XGcd e = xgcd(a.u, b.u);
    const XGcd k = xgcd(e.g, a.v + b.v);
    const Poly& d = k.g;
    const Poly s1 = k.s * e.s;
    const Poly s2 = k.s * e.t;
    const Poly& s3 = k.t;

    Poly u = exact_div(a.u * b.u, d * d);
    Poly v = exact_div(s1 * a.u * b.v + s2 * b.u * a.v + s3 * (a.v * b.v + f), d) % u;

    const std::size_t bound = u.degree() + 1;
    for (std::size_t it = 0; u.degree() > c.genus(); ++it) {
        if (it > bound) throw std::logic_error("cantor_add: reduction did not terminate");
        Poly un = exact_div(f - v * v, u);
        v = (-v) % un;
        u = std::move(un);
    }
    u = u.monic();
    v = v % u;
    return {std::move(u), std::move(v)};
}

Mumford scalar_mul(const Curve& c, const mpz_class& n, const Mumford& d) {
    if (n < 0) return scalar_mul(c, mpz_class(-n), negate(c, d));
    Mumford r = identity(c);
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = cantor_add(c, r, r);
        if (mpz_tstbit(n.get_mpz_t(), i)) r = cantor_add(c, r, d);
    }
    return r;
}

std::optional<std::uint64_t> exact_order(const Curve& c, const Mumford& d, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("exact_order: n must be >= 1");
    if (!is_identity(scalar_mul(c, n, d))) return std::nullopt;
    std::uint64_t ord = n;
    for (auto [r, e] : factor(n)) {
        while (ord % r == 0 && is_identity(scalar_mul(c, ord / r, d))) ord /= r;
    }
    return ord;
}

} // namespace hypertorsion
