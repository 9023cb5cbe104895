#include "hypertorsion/families.hpp"

#include <algorithm>
#include <map>

namespace hypertorsion {

namespace {

// k-subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    for (;;) {
        out.push_back(c);
        std::size_t i = k;
        while (i > 0 && c[i - 1] == n - k + i - 1) --i;
        if (i == 0) return out;
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

std::vector<std::size_t> complement_of(std::size_t n, const std::vector<std::size_t>& s) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0, j = 0; i < n; ++i) {
        if (j < s.size() && s[j] == i)
            ++j;
        else
            out.push_back(i);
    }
    return out;
}

} // namespace

std::vector<RootLabel> eta_roots(const Field& f, std::uint64_t n) {
    const std::vector<Elem> eps = nth_roots_of_unity(f, n);
    std::vector<RootLabel> out;
    out.reserve(eps.size());
    Poly prod = Poly::constant(f.from_int(static_cast<std::int64_t>(n)));
    for (const Elem& e : eps) {
        const Elem eta = (e - f.one()).inverse();
        out.push_back({e, eta});
        prod *= Poly::linear(eta);
    }
    if (!(prod == diff_power(f.zero(), -f.one(), static_cast<unsigned>(n))))
        throw std::logic_error("eta_roots: product identity failed");
    return out;
}

Poly eta_poly(const Field& f, const std::vector<RootLabel>& roots, std::span<const std::size_t> idx) {
    Poly r = Poly::constant(f.one());
    for (std::size_t i : idx) r *= Poly::linear(roots.at(i).eta);
    return r;
}

PairCert instantiate(const PairTemplate& t, const Elem& mu) {
    const Field& f = mu.field();
    return {f.zero(), -f.one(), t.u1 * mu, t.u2 * mu.inverse()};
}

CoprimeFamilies nice_pairs_coprime(const Field& f, unsigned g) {
    const std::uint64_t n = 2 * g + 1;
    const std::uint64_t p = f.characteristic();
    if (p != 0 && n % p == 0)
        throw FieldError("characteristic " + std::to_string(p) + " divides 2g+1 = " + std::to_string(n) +
                         "; use the admissible-function families");
    CoprimeFamilies out;
    out.g = g;
    out.roots = eta_roots(f, n);
    const Elem nn = f.from_int(static_cast<std::int64_t>(n));
    std::map<std::vector<std::size_t>, std::size_t> class_of;
    for (auto& I : combinations(2 * g, g)) {
        auto comp = complement_of(2 * g, I);
        const auto& key = std::min(I, comp);
        auto [it, fresh] = class_of.try_emplace(key, class_of.size());
        PairTemplate t{eta_poly(f, out.roots, I), eta_poly(f, out.roots, comp) * nn};
        out.templates.push_back({I, comp, std::move(t), it->second});
    }
    out.class_count = class_of.size();
    return out;
}

std::optional<CharSplit> char_split(std::uint64_t p, unsigned g) {
    const std::uint64_t n = 2 * static_cast<std::uint64_t>(g) + 1;
    if (p < 3 || n % p != 0) return std::nullopt;
    CharSplit s;
    s.p = p;
    std::uint64_t rest = n;
    while (rest % p == 0) {
        rest /= p;
        s.pk *= p;
        ++s.k;
    }
    s.l = static_cast<unsigned>((rest - 1) / 2);
    return s;
}

std::uint64_t AdmissibleFn::degree() const {
    std::uint64_t d = 0;
    for (auto v : values) d += v;
    return d;
}

AdmissibleFn AdmissibleFn::bar() const {
    AdmissibleFn b{split, values};
    for (auto& v : b.values) v = split.pk - v;
    return b;
}

AdmissibleCheck check_admissible(const AdmissibleFn& u) {
    if (u.values.size() != 2 * u.split.l) return AdmissibleCheck::out_of_range;
    bool some_unit = false;
    std::uint64_t deg = 0, bar = 0;
    for (auto v : u.values) {
        if (v > u.split.pk) return AdmissibleCheck::out_of_range;
        if (v % u.split.p != 0) some_unit = true;
        deg += v;
        bar += u.split.pk - v;
    }
    if (!some_unit) return AdmissibleCheck::all_divisible_by_p;
    if (deg > u.split.g() || bar > u.split.g()) return AdmissibleCheck::degree_too_large;
    return AdmissibleCheck::ok;
}

std::vector<AdmissibleFn> admissible_enum(const CharSplit& s) {
    const std::size_t m = 2 * s.l;
    double space = 1;
    for (std::size_t i = 0; i < m; ++i) space *= static_cast<double>(s.pk + 1);
    if (space > 5e7) throw std::invalid_argument("admissible_enum: search space too large");
    std::vector<AdmissibleFn> out;
    AdmissibleFn cur{s, std::vector<std::uint64_t>(m, 0)};
    for (;;) {
        if (check_admissible(cur) == AdmissibleCheck::ok) out.push_back(cur);
        std::size_t i = m;
        while (i > 0 && cur.values[i - 1] == s.pk) cur.values[--i] = 0;
        if (i == 0) return out;
        ++cur.values[i - 1];
    }
}

std::vector<AdmissibleFn> upsilon_ij_family(const CharSplit& s) {
    std::vector<AdmissibleFn> out;
    for (auto& I : combinations(2 * s.l, s.l)) {
        AdmissibleFn u{s, std::vector<std::uint64_t>(2 * s.l, (s.pk - 1) / 2)};
        for (std::size_t i : I) u.values[i] = (s.pk + 1) / 2;
        out.push_back(std::move(u));
    }
    return out;
}

PairTemplate upsilon_template(const Field& f, const std::vector<RootLabel>& roots, const AdmissibleFn& u) {
    const CharSplit& s = u.split;
    if (f.characteristic() != s.p) throw FieldError("upsilon_template: field characteristic is not p");
    if (roots.size() != u.values.size()) throw std::invalid_argument("upsilon_template: root count mismatch");
    if (check_admissible(u) != AdmissibleCheck::ok) throw std::invalid_argument("upsilon_template: not admissible");
    auto build = [&](const AdmissibleFn& w) {
        Poly r = Poly::constant(f.one());
        for (std::size_t i = 0; i < roots.size(); ++i) r *= pow(Poly::linear(roots[i].eta), static_cast<unsigned>(w.values[i]));
        return r;
    };
    const Poly up = build(u);
    const Poly ub = build(u.bar()) * f.from_int(2 * s.l + 1);
    const unsigned n = 2 * s.g() + 1;
    const Poly target = diff_power(f.zero(), -f.one(), n);
    if (!(target % up).is_zero()) throw std::logic_error("upsilon_template: Upsilon does not divide the difference");
    if (!(up * ub == target)) throw std::logic_error("upsilon_template: product identity failed");
    if (derivative(up).is_zero() || derivative(ub).is_zero())
        throw std::logic_error("upsilon_template: zero derivative for an admissible function");
    return {up, ub};
}

PairTemplate family_template(const Field& f, unsigned g, const FamilyIndex& fam) {
    if (const auto* I = std::get_if<std::vector<std::size_t>>(&fam.regime)) {
        std::vector<std::size_t> s = *I;
        std::sort(s.begin(), s.end());
        if (s.size() != g || std::adjacent_find(s.begin(), s.end()) != s.end() || (!s.empty() && s.back() >= 2 * g))
            throw std::invalid_argument("family: I must be " + std::to_string(g) + " distinct indices below " +
                                        std::to_string(2 * g));
        const auto roots = eta_roots(f, 2 * static_cast<std::uint64_t>(g) + 1);
        const auto comp = complement_of(2 * g, s);
        return {eta_poly(f, roots, s), eta_poly(f, roots, comp) * f.from_int(2 * static_cast<std::int64_t>(g) + 1)};
    }
    const auto& u = std::get<AdmissibleFn>(fam.regime);
    const auto split = char_split(f.characteristic(), g);
    if (!split || split->pk != u.split.pk || split->l != u.split.l)
        throw FieldError("family: admissible function does not match " + f.name() + " at genus " + std::to_string(g));
    return upsilon_template(f, eta_roots(f, 2 * u.split.l + 1), u);
}

std::vector<Elem> mu_candidates(const Field& f, std::size_t limit) {
    std::vector<Elem> out;
    if (f.is_finite()) {
        for (std::uint64_t i = 1; i < f.order() && out.size() < limit; ++i) out.push_back(f.from_index(i));
        return out;
    }
    for (std::int64_t k = 1; out.size() < limit; ++k) {
        out.push_back(f.from_int(k));
        if (out.size() < limit) out.push_back(f.from_int(-k));
    }
    return out;
}

GoodMu find_good_mu(const Field& f, unsigned g, const PairTemplate& t, std::span<const Elem> candidates) {
    std::size_t rejected = 0;
    for (const Elem& mu : candidates) {
        if (mu.is_zero()) continue;
        PairCert cert = instantiate(t, mu);
        try {
            EnhancedCurve e = make_pair(f, g, cert);
            return {mu, std::move(cert), std::move(e), rejected};
        } catch (const CertError& err) {
            switch (err.kind()) {
            case CertError::Kind::p_side_degenerate:
            case CertError::Kind::q_side_degenerate:
            case CertError::Kind::multiple_roots: ++rejected; break;
            default: throw;
            }
        }
    }
    if (f.is_finite())
        throw ScanExhausted("no good mu among " + std::to_string(candidates.size()) + " candidates over " + f.name() +
                                "; retry over GF(" + std::to_string(f.characteristic()) + "^" +
                                std::to_string(2 * f.degree()) + ")",
                            2 * f.degree());
    throw ScanExhausted("no good mu among " + std::to_string(candidates.size()) + " rational candidates", 0);
}

RationalFourTorsion rational_four_torsion(unsigned g, std::optional<std::vector<std::uint64_t>> s1,
                                          std::size_t mu_limit) {
    const std::uint64_t n = 2 * static_cast<std::uint64_t>(g) + 1;
    TotientPartition part;
    if (s1) {
        part.n = n;
        part.s1 = *s1;
        for (std::uint64_t d : divisors(n))
            if (d > 1 && std::find(s1->begin(), s1->end(), d) == s1->end()) part.s2.push_back(d);
        if (std::find(part.s1.begin(), part.s1.end(), n) == part.s1.end()) std::swap(part.s1, part.s2);
        std::sort(part.s1.rbegin(), part.s1.rend());
        std::sort(part.s2.begin(), part.s2.end());
        if (!is_valid_partition(part))
            throw std::invalid_argument("rational_four_torsion: supplied set is not a totient partition of " +
                                        std::to_string(n));
    } else {
        auto c = hyperelliptic_cert(n);
        if (!c) throw std::invalid_argument(std::to_string(n) + " is not a hyperelliptic number");
        part = *c;
    }
    const Field q = Field::rationals();
    auto product = [&](const std::vector<std::uint64_t>& ds) {
        Poly r = Poly::constant(q.one());
        for (std::uint64_t d : ds) r *= cyclotomic(static_cast<unsigned>(d));
        return r;
    };
    const Poly u1 = reverse_scale(shift(product(part.s1), q.one()), q.one());
    const Poly u2 = reverse_scale(shift(product(part.s2), q.one()), q.one());
    if (!(u1 * u2 == diff_power(q.zero(), -q.one(), static_cast<unsigned>(n))))
        throw std::logic_error("rational_four_torsion: u1 u2 is not (x+1)^n - x^n");
    const auto cands = mu_candidates(q, mu_limit);
    GoodMu gm = find_good_mu(q, g, {u1, u2}, cands);
    const AffinePoint P = gm.enhanced.P, Q = gm.enhanced.Q;
    return {std::move(part), gm.cert, gm.mu, gm.enhanced, {P, involution(P), Q, involution(Q)}};
}

} // namespace hypertorsion
