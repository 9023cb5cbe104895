#include "hypertorsion/torsion.hpp"

#include <algorithm>
#include <exception>
#include <thread>

namespace hypertorsion {

namespace {

Poly linear_power(const Elem& a, unsigned n) { return pow(Poly::linear(a), n); }

unsigned order_2g1(unsigned g) { return 2 * g + 1; }

Elem half(const Field& f) { return f.from_int(2).inverse(); }

} // namespace

const char* cert_error_name(CertError::Kind k) {
    switch (k) {
    case CertError::Kind::equal_abscissas: return "equal_abscissas";
    case CertError::Kind::product_identity: return "product_identity";
    case CertError::Kind::degree_bound: return "degree_bound";
    case CertError::Kind::p_side_degenerate: return "p_side_degenerate";
    case CertError::Kind::q_side_degenerate: return "q_side_degenerate";
    case CertError::Kind::zero_derivative: return "zero_derivative";
    case CertError::Kind::v_vanishes_at_a: return "v_vanishes_at_a";
    case CertError::Kind::multiple_roots: return "multiple_roots";
    case CertError::Kind::not_order_2g1: return "not_order_2g1";
    case CertError::Kind::not_normalized: return "not_normalized";
    }
    return "unknown";
}

AffinePoint apply(const IsoMap& m, unsigned g, const AffinePoint& p) {
    const Elem l2 = m.lambda * m.lambda;
    return {(p.x - m.r) / l2, p.y / m.lambda.pow(static_cast<std::uint64_t>(order_2g1(g)))};
}

Poly apply(const IsoMap& m, unsigned g, const Poly& f) {
    const Elem l2 = m.lambda * m.lambda;
    const Poly sub = Poly(f.field(), {m.r, l2});
    return compose(f, sub) * l2.pow(static_cast<std::uint64_t>(order_2g1(g))).inverse();
}

SingleCurve make_single(const Field& f, unsigned g, const Elem& a, const Poly& v) {
    if (!(a.field() == f) || !(v.field() == f)) throw FieldError("make_single: inputs are not over " + f.name());
    if (!v.is_zero() && v.degree() > g) throw CertError(CertError::Kind::degree_bound, "deg v must be <= g");
    const Elem va = v(a);
    if (va.is_zero()) throw CertError(CertError::Kind::v_vanishes_at_a, "v(a) = 0");
    Poly fx = linear_power(a, order_2g1(g)) + v * v;
    if (!is_squarefree(fx))
        throw CertError(CertError::Kind::multiple_roots, "f = (x - a)^(2g+1) + v^2 has multiple roots");
    Curve c = Curve::make(g, std::move(fx));
    return {std::move(c), {a, va}, {a, v}};
}

std::optional<SingleCert> verify_single(const Curve& c, const AffinePoint& p) {
    if (p.y.is_zero()) return std::nullopt;
    if (!c.contains(p)) return std::nullopt;
    const Poly h = c.f() - linear_power(p.x, order_2g1(c.genus()));
    const auto t = poly_sqrt(h);
    if (!t) return std::nullopt;
    if (!t->is_zero() && t->degree() > c.genus()) return std::nullopt;
    const Elem ta = (*t)(p.x);
    if (ta == p.y) return SingleCert{p.x, *t};
    if (ta == -p.y) return SingleCert{p.x, -*t};
    return std::nullopt;
}

bool evaluation_identities_hold(unsigned g, const PairCert& c) {
    const Elem rhs = (c.a1 - c.a2).pow(static_cast<std::uint64_t>(order_2g1(g)));
    return c.u1(c.a1) * c.u2(c.a1) == rhs && c.u1(c.a2) * c.u2(c.a2) == rhs;
}

void validate_pair_cert(unsigned g, const PairCert& c, bool check_derivatives) {
    using K = CertError::Kind;
    const unsigned n = order_2g1(g);
    if (c.a1 == c.a2) throw CertError(K::equal_abscissas, "a1 = a2");
    if (!(c.u1 * c.u2 == diff_power(c.a1, c.a2, n)))
        throw CertError(K::product_identity, "u1 u2 != (x - a2)^(2g+1) - (x - a1)^(2g+1)");
    const std::uint64_t p = c.a1.field().characteristic();
    const bool coprime = p == 0 || n % p != 0;
    for (const Poly* u : {&c.u1, &c.u2}) {
        const std::size_t d = u->degree();
        if (d > g || (coprime && d != g))
            throw CertError(K::degree_bound, "deg u_i = " + std::to_string(d) + " violates the bound for g = " + std::to_string(g));
    }
    if ((c.u1(c.a1) + c.u2(c.a1)).is_zero()) throw CertError(K::p_side_degenerate, "u1(a1) + u2(a1) = 0");
    if ((c.u1(c.a2) - c.u2(c.a2)).is_zero()) throw CertError(K::q_side_degenerate, "u1(a2) - u2(a2) = 0");
    if (!evaluation_identities_hold(g, c))
        throw CertError(K::product_identity, "u1(a_i) u2(a_i) != (a1 - a2)^(2g+1)");
    if (check_derivatives && (derivative(c.u1).is_zero() || derivative(c.u2).is_zero()))
        throw CertError(K::zero_derivative, "u1' = 0 or u2' = 0");
}

EnhancedCurve make_pair(const Field& f, unsigned g, const PairCert& c) {
    validate_pair_cert(g, c, false);
    const unsigned n = order_2g1(g);
    const Elem h = half(f);
    const Poly v1 = (c.u1 + c.u2) * h;
    const Poly v2 = (c.u1 - c.u2) * h;
    Poly fx = linear_power(c.a1, n) + v1 * v1;
    if (!(fx == linear_power(c.a2, n) + v2 * v2))
        throw CertError(CertError::Kind::product_identity, "the two expressions for f disagree");
    if (!is_squarefree(fx)) throw CertError(CertError::Kind::multiple_roots, "f has multiple roots");
    if (derivative(c.u1).is_zero() || derivative(c.u2).is_zero())
        throw std::logic_error("make_pair: squarefree f with u_i' = 0");
    Curve curve = Curve::make(g, std::move(fx));
    return {std::move(curve), {c.a1, v1(c.a1)}, {c.a2, v2(c.a2)}};
}

PairCert recover_pair(const Curve& c, const AffinePoint& P, const AffinePoint& Q) {
    if (P.x == Q.x) throw CertError(CertError::Kind::equal_abscissas, "x(P) = x(Q)");
    const auto s1 = verify_single(c, P);
    if (!s1) throw CertError(CertError::Kind::not_order_2g1, "P is not of order 2g+1");
    const auto s2 = verify_single(c, Q);
    if (!s2) throw CertError(CertError::Kind::not_order_2g1, "Q is not of order 2g+1");
    PairCert pc{P.x, Q.x, s1->v + s2->v, s1->v - s2->v};
    validate_pair_cert(c.genus(), pc, true);
    return pc;
}

std::vector<Decoration> decorations_of(const Curve& c, const AffinePoint& P, const AffinePoint& Q) {
    const Field& f = c.field();
    if (!P.x.is_zero() || !(Q.x == -f.one()))
        throw CertError(CertError::Kind::not_normalized, "decorations_of expects x(P) = 0 and x(Q) = -1");
    const PairCert base = recover_pair(c, P, Q);
    const PairCert variants[4] = {
        base,
        {base.a1, base.a2, -base.u1, -base.u2},
        {base.a1, base.a2, base.u2, base.u1},
        {base.a1, base.a2, -base.u2, -base.u1},
    };
    std::vector<Decoration> out;
    for (const PairCert& pc : variants) {
        validate_pair_cert(c.genus(), pc, true);
        const EnhancedCurve e = make_pair(f, c.genus(), pc);
        if (!(e.curve.f() == c.f())) throw std::logic_error("decorations_of: variant changes f");
        out.push_back({pc, e.P, e.Q, e.P == P && e.Q == Q});
    }
    return out;
}

Normalized normalize_enhanced(const Curve& c, const AffinePoint& P, const AffinePoint& Q) {
    if (P.x == Q.x) throw CertError(CertError::Kind::equal_abscissas, "x(P) = x(Q)");
    if (!verify_single(c, P)) throw CertError(CertError::Kind::not_order_2g1, "P is not of order 2g+1");
    if (!verify_single(c, Q)) throw CertError(CertError::Kind::not_order_2g1, "Q is not of order 2g+1");
    const Field& f = c.field();
    const Elem d = P.x - Q.x;
    const auto lambda = d.sqrt();
    if (!lambda) {
        if (!f.is_finite())
            throw InsufficientField("x(P) - x(Q) = " + d.to_string() + " is not a square in Q", 0);
        throw InsufficientField("x(P) - x(Q) is not a square in " + f.name() + "; need GF(" +
                                    std::to_string(f.characteristic()) + "^" + std::to_string(2 * f.degree()) + ")",
                                2 * f.degree());
    }
    const IsoMap m{*lambda, P.x};
    const unsigned g = c.genus();
    Curve nc = Curve::make(g, apply(m, g, c.f()));
    const AffinePoint P1 = apply(m, g, P);
    const AffinePoint Q1 = apply(m, g, Q);
    if (!P1.x.is_zero() || !(Q1.x == -f.one())) throw std::logic_error("normalize_enhanced: wrong abscissas");
    if (!verify_single(nc, P1) || !verify_single(nc, Q1))
        throw std::logic_error("normalize_enhanced: image points lost order 2g+1");
    return {{std::move(nc), P1, Q1}, m};
}

std::vector<CensusEntry> torsion_census(const Curve& c, std::uint64_t n, unsigned threads) {
    const Field& f = c.field();
    if (!f.is_finite()) throw FieldError("torsion_census: the rational field cannot be enumerated");
    const std::uint64_t q = f.order();
    threads = std::max(1u, threads);
    std::vector<std::vector<CensusEntry>> parts(threads);
    std::vector<std::exception_ptr> errs(threads);
    auto work = [&](unsigned t) {
        try {
            for (std::uint64_t i = t; i < q; i += threads) {
                for (const AffinePoint& p : points_with_x(c, f.from_index(i))) {
                    const auto ord = exact_order(c, embed(c, p), n);
                    if (ord && *ord == n) parts[t].push_back({p, *ord});
                }
            }
        } catch (...) {
            errs[t] = std::current_exception();
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    std::vector<CensusEntry> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end(), [](const CensusEntry& a, const CensusEntry& b) {
        if (a.point.x.index() != b.point.x.index()) return a.point.x.index() < b.point.x.index();
        return a.point.y.index() < b.point.y.index();
    });
    return out;
}

} // namespace hypertorsion
