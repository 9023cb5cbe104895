#include "hypertorsion/selftest/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

#include <hypertorsion/hypertorsion.hpp>

#include "hypertorsion/selftest/generators.hpp"
#include "hypertorsion/selftest/oracles.hpp"

namespace hypertorsion::selftest {

namespace {

// Collects failed checks; the first few are kept for the report.
class Checks {
public:
    void expect(bool ok, const std::string& what) {
        ++total_;
        if (ok) return;
        ++failed_;
        if (messages_.size() < 6) messages_.push_back(what);
    }
    void note(const std::string& s) { notes_.push_back(s); }
    bool ok() const { return failed_ == 0; }
    std::string summary() const {
        std::ostringstream os;
        os << (total_ - failed_) << "/" << total_ << " checks";
        for (const auto& n : notes_) os << "; " << n;
        for (const auto& m : messages_) os << "; FAILED: " << m;
        if (failed_ > messages_.size()) os << "; ... " << (failed_ - messages_.size()) << " more failures";
        return os.str();
    }

private:
    std::size_t total_ = 0;
    std::size_t failed_ = 0;
    std::vector<std::string> messages_;
    std::vector<std::string> notes_;
};

Field make_field(std::uint64_t p, unsigned m, std::uint64_t seed) {
    return m == 1 ? Field::prime(p) : Field::extension(p, m, std::nullopt, seed);
}

std::string join(const std::vector<std::size_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

// Order 2g+1 confirmed by stepping through the multiples.
bool oracle_order_is(const Curve& c, const AffinePoint& p, std::uint64_t n) {
    const auto o = oracle::order_by_repeated_addition(c, embed(c, p), n + 1);
    return o && *o == n;
}

// ---------------------------------------------------------------------------

void small_examples(Checks& ck, const Options&) {
    struct Case {
        std::uint64_t p;
        const char* f;
        const char* v;
    };
    for (const Case& cs : {Case{11, "x^5+1", "1"}, Case{5, "x^5+(x+1)^2", "x+1"}}) {
        const Field F = Field::prime(cs.p);
        const Curve c = Curve::make(2, parse_poly(cs.f, F));
        const std::string tag = std::string(cs.f) + " over " + F.name();
        const SingleCurve built = make_single(F, 2, F.zero(), parse_poly(cs.v, F));
        ck.expect(built.curve.f() == c.f(), tag + ": construction reproduces f");
        for (std::int64_t y : {1, -1}) {
            const AffinePoint P{F.zero(), F.from_int(y)};
            const std::string pt = tag + " point (0," + std::to_string(y) + ")";
            const auto cert = verify_single(c, P);
            ck.expect(cert.has_value(), pt + ": certificate");
            if (cert) {
                const Poly x5 = pow(Poly::x(F), 5);
                ck.expect(c.f() == x5 + cert->v * cert->v && cert->v(F.zero()) == P.y, pt + ": certificate identity");
            }
            ck.expect(oracle_order_is(c, P, 5), pt + ": Cantor order 5");
            ck.expect(exact_order(c, embed(c, P), 5) == std::optional<std::uint64_t>(5), pt + ": exact_order 5");
        }
    }
}

void census_bound(Checks& ck, const Options& opt) {
    struct Case {
        std::uint64_t p;
        unsigned k;
        unsigned g;
    };
    gen::Gen rng(opt.seed);
    std::size_t censuses = 0;
    for (const Case& cs : {Case{3, 1, 1}, Case{5, 1, 2}, Case{3, 2, 4}}) {
        std::uint64_t n = 1;
        for (unsigned i = 0; i < cs.k; ++i) n *= cs.p;
        std::set<std::pair<unsigned, std::vector<std::string>>> distinct;
        std::size_t max_count = 0;
        for (unsigned m = 1; m <= 4; ++m) {
            const Field F = make_field(cs.p, m, opt.seed);
            for (int built = 0; built < 20;) {
                const Elem a = rng.elem(F);
                const Poly v = rng.poly_upto(F, cs.g);
                if (v.is_zero() || v(a).is_zero()) continue;
                std::optional<SingleCurve> sc;
                try {
                    sc = make_single(F, cs.g, a, v);
                } catch (const CertError&) {
                    continue;
                }
                ++built;
                ++censuses;
                std::vector<std::string> key;
                for (const Elem& e : sc->curve.f().coeffs()) key.push_back(e.to_string());
                distinct.insert({m, key});
                const auto census = torsion_census(sc->curve, n, opt.threads);
                max_count = std::max(max_count, census.size());
                const std::string tag = "g=" + std::to_string(cs.g) + " " + F.name() + " f=" + sc->curve.f().to_string();
                ck.expect(census.size() <= 2, tag + ": " + std::to_string(census.size()) + " points of order " +
                                                  std::to_string(n));
                const bool has_p = std::any_of(census.begin(), census.end(),
                                               [&](const CensusEntry& e) { return e.point == sc->P; });
                ck.expect(has_p, tag + ": constructed point missing from census");
            }
        }
        ck.expect(distinct.size() >= 20, "fewer than 20 distinct curves for g=" + std::to_string(cs.g));
        ck.note("p^k=" + std::to_string(n) + " g=" + std::to_string(cs.g) + ": " + std::to_string(distinct.size()) +
                " distinct curves, max count " + std::to_string(max_count));
    }
    ck.note(std::to_string(censuses) + " censuses");
}

void coprime_enumeration(Checks& ck, const Options&) {
    const Field F = Field::prime(11);
    const CoprimeFamilies fam = nice_pairs_coprime(F, 2);
    ck.expect(fam.templates.size() == 6, "template count " + std::to_string(fam.templates.size()) + " != 6");
    ck.expect(fam.class_count == 3, "class count " + std::to_string(fam.class_count) + " != 3");
    const auto cands = mu_candidates(F, F.order());
    std::set<std::size_t> classes_done;
    for (const auto& t : fam.templates) {
        const std::string tag = "I=" + join(t.I);
        try {
            const GoodMu gm = find_good_mu(F, 2, t.pair, cands);
            const auto& e = gm.enhanced;
            ck.expect(oracle_order_is(e.curve, e.P, 5), tag + ": P order 5");
            ck.expect(oracle_order_is(e.curve, e.Q, 5), tag + ": Q order 5");
            ck.expect(!(e.Q == e.P) && !(e.Q == involution(e.P)), tag + ": Q in {P, iota P}");
            classes_done.insert(t.symmetry_class);
        } catch (const ScanExhausted& err) {
            ck.expect(false, tag + ": " + err.what());
        }
    }
    ck.expect(classes_done.size() == 3, "good mu for every class");
}

void char_regime(Checks& ck, const Options& opt) {
    const Field F = make_field(3, 4, opt.seed);
    const auto split = char_split(3, 7);
    ck.expect(split && split->k == 1 && split->l == 2 && split->pk == 3, "15 = 3 * 5 split");
    if (!split) return;
    const auto family = upsilon_ij_family(*split);
    ck.expect(family.size() == binomial(4, 2), "upsilon_IJ count " + std::to_string(family.size()) + " != 6");
    const auto roots = eta_roots(F, 5);
    const auto cands = mu_candidates(F, F.order());
    for (const AdmissibleFn& u : family) {
        std::string tag = "upsilon=(";
        for (auto v : u.values) tag += std::to_string(v);
        tag += ")";
        ck.expect(check_admissible(u) == AdmissibleCheck::ok && u.degree() == 6, tag + ": admissible of degree 6");
        try {
            const PairTemplate t = upsilon_template(F, roots, u);
            const GoodMu gm = find_good_mu(F, 7, t, cands);
            ck.expect(oracle_order_is(gm.enhanced.curve, gm.enhanced.P, 15), tag + ": P order 15");
            ck.expect(oracle_order_is(gm.enhanced.curve, gm.enhanced.Q, 15), tag + ": Q order 15");
        } catch (const std::exception& err) {
            ck.expect(false, tag + ": " + err.what());
        }
    }
}

void hyperelliptic_numbers(Checks& ck, const Options& opt) {
    const auto scan = hyperelliptic_scan(201, opt.threads);
    ck.expect(scan == std::vector<std::uint64_t>{105, 165}, "scan to 201");
    const auto c105 = hyperelliptic_cert(105);
    ck.expect(c105 && c105->s1 == std::vector<std::uint64_t>{105, 5}, "105 certificate {105,5}");
    ck.expect(euler_phi(105) == 48 && euler_phi(5) == 4, "105: 48 + 4");
    const auto c165 = hyperelliptic_cert(165);
    ck.expect(c165 && c165->s1 == std::vector<std::uint64_t>{165, 3}, "165 certificate {165,3}");
    ck.expect(euler_phi(165) == 80 && euler_phi(3) == 2, "165: 80 + 2");
    std::size_t flagged = 0, hyper = 0;
    for (std::uint64_t n = 3; n <= 2000; n += 2) {
        const bool dp = oracle::is_hyperelliptic_dp(n);
        const auto cert = hyperelliptic_cert(n);
        ck.expect(cert.has_value() == dp, "n=" + std::to_string(n) + ": certificate search disagrees with DP");
        if (cert) {
            ++hyper;
            ck.expect(is_valid_partition(*cert), "n=" + std::to_string(n) + ": invalid partition");
        }
        if (overq_filter(n) != FilterVerdict::unknown) {
            ++flagged;
            ck.expect(!dp, "n=" + std::to_string(n) + ": filter flags a hyperelliptic number");
        }
    }
    ck.note(std::to_string(hyper) + " hyperelliptic and " + std::to_string(flagged) + " filtered odd n <= 2000");
}

void rational_genus_52(Checks& ck, const Options&) {
    const RationalFourTorsion r = rational_four_torsion(52);
    const Field Q = Field::rationals();
    const Poly& f = r.enhanced.curve.f();
    ck.expect(r.partition.s1 == std::vector<std::uint64_t>{105, 5}, "partition {105,5}");
    ck.expect(f.degree() == 105 && f.is_monic(), "f monic of degree 105");
    ck.expect(is_squarefree(f), "f squarefree");
    const Elem abscissa[4] = {Q.zero(), Q.zero(), -Q.one(), -Q.one()};
    for (int i = 0; i < 4; ++i) {
        const AffinePoint& P = r.points[i];
        const std::string tag = "point " + std::to_string(i);
        ck.expect(P.x == abscissa[i], tag + ": abscissa");
        ck.expect(r.enhanced.curve.contains(P), tag + ": on curve");
        const auto cert = verify_single(r.enhanced.curve, P);
        ck.expect(cert.has_value(), tag + ": certificate");
        if (cert) {
            ck.expect(cert->v.degree() <= 52, tag + ": deg v <= 52");
            ck.expect(f == pow(Poly::linear(P.x), 105) + cert->v * cert->v, tag + ": f = (x - a)^105 + v^2");
            ck.expect(cert->v(P.x) == P.y, tag + ": v(a) = y");
        }
        for (int j = 0; j < i; ++j) ck.expect(!(r.points[j] == P), tag + ": distinct");
    }
    ck.note("mu = " + r.mu.to_string());
}

void weil_pairing(Checks& ck, const Options& opt) {
    struct Case {
        std::uint64_t p;
        unsigned g;
    };
    std::size_t families = 0, concrete = 0, trivial = 0;
    std::vector<std::string> trivial_names;
    for (const Case& cs : {Case{11, 2}, Case{11, 3}, Case{29, 2}, Case{29, 3}}) {
        const std::uint64_t n = 2 * cs.g + 1;
        const Field F = make_field(cs.p, multiplicative_order_mod(cs.p, n), opt.seed);
        const CoprimeFamilies fam = nice_pairs_coprime(F, cs.g);
        const auto cands = mu_candidates(F, 4096);
        for (const auto& t : fam.templates) {
            ++families;
            const std::string tag = F.name() + " g=" + std::to_string(cs.g) + " I=" + join(t.I);
            try {
                const GoodMu gm = find_good_mu(F, cs.g, t.pair, cands);
                const PairingCurve pc = pairing_curve(gm.enhanced, gm.cert);
                const Elem closed = weil_closed(F, cs.g, t.I);
                const Elem generic = weil_explicit_generic(pc);
                ck.expect(generic == closed, tag + ": explicit " + generic.to_string() + " != closed " + closed.to_string());
                ck.expect(closed.pow(n).is_one(), tag + ": e^(2g+1) != 1");
                if (closed.is_one()) {
                    ++trivial;
                    trivial_names.push_back(tag);
                }
                ck.expect(!closed.is_one(), tag + ": e = 1");
                try {
                    const PairingSetup s = pairing_setup(pc, opt.seed);
                    ++concrete;
                    for (const Elem& w : s.weierstrass) {
                        const Elem e = weil_explicit(s.curve, w);
                        ck.expect(e == s.embedding(closed), tag + ": W-dependence at w = " + w.to_string());
                    }
                } catch (const InsufficientField&) {
                    throw;
                } catch (const FieldError&) {
                    // splitting field beyond 2^62; the K[x]/(f) route above covers every W
                }
            } catch (const std::exception& err) {
                ck.expect(false, tag + ": " + err.what());
            }
        }
    }
    ck.note(std::to_string(families) + " families, " + std::to_string(concrete) +
            " also checked at every root over the splitting field");
    if (trivial) {
        std::string s = std::to_string(trivial) + " families with e = 1:";
        for (const auto& t : trivial_names) s += " [" + t + "]";
        ck.note(s);
    }
}

void property_suites(Checks& ck, const Options& opt) {
    gen::Gen rng(opt.seed);

    // square roots of squares
    const std::vector<Field> fields = {Field::rationals(), Field::prime(3), Field::prime(11), make_field(3, 4, opt.seed),
                                       make_field(29, 2, opt.seed)};
    for (const Field& F : fields) {
        std::size_t bad = 0;
        for (int i = 0; i < 1000; ++i) {
            Poly t = rng.poly(F, rng.uniform(0, 8));
            if (t(F.zero()).is_zero()) t += Poly::constant(F.one());
            const auto s = poly_sqrt(t * t);
            if (!s || !(*s == t || *s == -t)) ++bad;
        }
        ck.expect(bad == 0, F.name() + ": " + std::to_string(bad) + " poly_sqrt round-trip failures");
    }

    // make_pair / recover_pair on random families
    struct Config {
        Field F;
        unsigned g;
    };
    const std::vector<Config> configs = {{Field::prime(7), 1}, {Field::prime(13), 1}, {Field::prime(11), 2},
                                         {Field::prime(31), 2}, {Field::prime(29), 3}, {make_field(3, 4, opt.seed), 7}};
    std::size_t done = 0, degenerate = 0, certs = 0;
    while (done < 200) {
        const Config& cf = configs[rng.uniform(0, configs.size() - 1)];
        const PairTemplate t = [&] {
            if (const auto split = char_split(cf.F.characteristic(), cf.g)) {
                const auto fam = upsilon_ij_family(*split);
                return upsilon_template(cf.F, eta_roots(cf.F, 2 * split->l + 1), fam[rng.uniform(0, fam.size() - 1)]);
            }
            const auto fam = nice_pairs_coprime(cf.F, cf.g);
            return fam.templates[rng.uniform(0, fam.templates.size() - 1)].pair;
        }();
        const PairCert cert = instantiate(t, rng.nonzero(cf.F));
        ++certs;
        ck.expect(evaluation_identities_hold(cf.g, cert), "evaluation identities on a generated certificate");
        std::optional<EnhancedCurve> e;
        try {
            e = make_pair(cf.F, cf.g, cert);
        } catch (const CertError&) {
            ++degenerate;
            continue;
        }
        ++done;
        const PairCert back = recover_pair(e->curve, e->P, e->Q);
        ck.expect(back == cert, "recover_pair(make_pair(c)) != c over " + cf.F.name());
        ck.expect(evaluation_identities_hold(cf.g, back), "evaluation identities on a recovered certificate");
        ck.expect(make_pair(cf.F, cf.g, back).curve.f() == e->curve.f(), "round trip changes f");
        const auto decs = decorations_of(e->curve, e->P, e->Q);
        ck.expect(std::count_if(decs.begin(), decs.end(), [](const Decoration& d) { return d.matches_input; }) == 1,
                  "exactly one decoration matches (P, Q)");
        for (const auto& d : decs) ck.expect(evaluation_identities_hold(cf.g, d.cert), "evaluation identities on a decoration");
    }
    ck.note("200 round trips (" + std::to_string(degenerate) + " degenerate draws skipped), " + std::to_string(certs) +
            " certificates");

    // group laws
    std::vector<Curve> curves;
    curves.push_back(Curve::make(2, parse_poly("x^5+1", Field::prime(11))));
    curves.push_back(Curve::make(2, parse_poly("x^5+(x+1)^2", Field::prime(5))));
    curves.push_back(Curve::make(1, parse_poly("x^3+2*x+3", Field::prime(13))));
    curves.push_back(make_single(Field::prime(29), 3, Field::prime(29).from_int(2), parse_poly("x^3+4*x+1", Field::prime(29))).curve);
    {
        const Field F = make_field(3, 4, opt.seed);
        for (;;) {
            try {
                curves.push_back(make_single(F, 4, rng.elem(F), rng.poly(F, 4)).curve);
                break;
            } catch (const CertError&) {
            }
        }
    }
    for (const Curve& c : curves) {
        std::size_t bad = 0;
        const Mumford zero = identity(c);
        for (int i = 0; i < 500; ++i) {
            const Mumford a = rng.divisor(c), b = rng.divisor(c), d = rng.divisor(c);
            const Mumford ab = cantor_add(c, a, b);
            const Mumford ab_d = cantor_add(c, ab, d);
            const Mumford a_bd = cantor_add(c, a, cantor_add(c, b, d));
            const bool ok = ab == cantor_add(c, b, a) && ab_d == a_bd && cantor_add(c, a, zero) == a &&
                            is_identity(cantor_add(c, a, negate(c, a))) && is_reduced_divisor(c, ab) &&
                            is_reduced_divisor(c, ab_d);
            if (!ok) ++bad;
        }
        ck.expect(bad == 0, "group laws on " + c.f().to_string() + " over " + c.field().name() + ": " +
                                std::to_string(bad) + " failures");
    }

    // squarefree difference powers
    std::size_t sqf_bad = 0;
    const std::vector<Field> dfields = {Field::rationals(), Field::prime(3), Field::prime(5), Field::prime(11),
                                        Field::prime(29), make_field(3, 4, opt.seed)};
    for (int i = 0; i < 100; ++i) {
        const Field& F = dfields[rng.uniform(0, dfields.size() - 1)];
        unsigned n;
        do n = 2 * static_cast<unsigned>(rng.uniform(1, 20)) + 1;
        while (F.characteristic() != 0 && n % F.characteristic() == 0);
        const Elem a1 = rng.elem(F);
        Elem a2 = rng.elem(F);
        while (a2 == a1) a2 = rng.elem(F);
        const Poly d = diff_power(a1, a2, n);
        const bool ok = d.degree() == n - 1 && d.leading() == F.from_int(n) * (a1 - a2) &&
                        gcd(d, derivative(d)).degree() == 0 && is_squarefree(d);
        if (!ok) ++sqf_bad;
    }
    ck.expect(sqf_bad == 0, std::to_string(sqf_bad) + " non-squarefree difference powers");
}

struct Criterion {
    const char* name;
    double budget;
    void (*run)(Checks&, const Options&);
};

const Criterion kCriteria[criterion_count] = {
    {"order-5 examples over GF(11) and GF(5)", 1.0, small_examples},
    {"census bound for 2g+1 = p^k", 120.0, census_bound},
    {"family enumeration GF(11) g=2", 10.0, coprime_enumeration},
    {"admissible families GF(81) g=7", 60.0, char_regime},
    {"hyperelliptic numbers", 30.0, hyperelliptic_numbers},
    {"rational genus-52 four-torsion", 300.0, rational_genus_52},
    {"Weil pairing routes", 60.0, weil_pairing},
    {"property suites", 120.0, property_suites},
};

} // namespace

CriterionResult run_criterion(int id, const Options& opt) {
    if (id < 1 || id > criterion_count) throw std::out_of_range("criterion id " + std::to_string(id));
    const Criterion& c = kCriteria[id - 1];
    CriterionResult r;
    r.id = id;
    r.name = c.name;
    r.budget_seconds = c.budget;
    Checks ck;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        c.run(ck, opt);
    } catch (const std::exception& e) {
        ck.expect(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = r.seconds <= r.budget_seconds;
    r.pass = ck.ok() && in_time;
    r.detail = ck.summary();
    if (!in_time) r.detail += "; over time budget";
    return r;
}

std::vector<CriterionResult> run_all(const Options& opt) {
    std::vector<CriterionResult> out;
    for (int i = 1; i <= criterion_count; ++i) out.push_back(run_criterion(i, opt));
    return out;
}

std::string format_line(const CriterionResult& r) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "(%.2f s / %g s)", r.seconds, r.budget_seconds);
    return std::string(r.pass ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.name + " " + buf + ": " + r.detail;
}

} // namespace hypertorsion::selftest
