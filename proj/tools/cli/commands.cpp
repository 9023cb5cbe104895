#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <hypertorsion/hypertorsion.hpp>
#include <hypertorsion/selftest/acceptance.hpp>

namespace hypertorsion::cli {

json CommandResult::to_json(const std::string& command) const {
    json j;
    j["command"] = command;
    if (ok) {
        j["status"] = "ok";
    } else {
        j["status"] = "error";
        j["error"] = {{"code", code}, {"message", message}};
    }
    j["provenance"] = provenance;
    j["payload"] = payload;
    return j;
}

namespace {

Field field_of(const Common& c) { return io::field_from_spec(c.field, c.seed); }

std::optional<json> read_json_file(const std::string& path) {
    std::error_code ec;
    if (path.empty() || !std::filesystem::is_regular_file(path, ec)) return std::nullopt;
    std::ifstream in(path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw io::FormatError(path + ": " + e.what());
    }
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw io::FormatError(std::string("malformed JSON: ") + e.what());
    }
}

Elem parse_elem(const Field& f, const std::string& s) {
    const Poly p = parse_poly(s, f);
    if (!p.is_constant()) throw io::FormatError("expected a constant, got '" + s + "'");
    return p.coeff(0);
}

Poly parse_poly_arg(const Field& f, const std::string& s) {
    if (!s.empty() && s.front() == '[') return io::poly_from_json(f, parse_json_text(s));
    return parse_poly(s, f);
}

template <class T>
std::vector<T> parse_list(const std::string& s) {
    std::vector<T> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(item, &used);
        } catch (const std::exception&) {
            throw io::FormatError("bad list entry '" + item + "'");
        }
        if (used != item.size()) throw io::FormatError("bad list entry '" + item + "'");
        out.push_back(static_cast<T>(v));
    }
    return out;
}

// A curve from a JSON file, or from an expression with --g over --field.
Curve load_curve(const std::string& spec, std::optional<unsigned> g, const Field& f) {
    if (auto j = read_json_file(spec)) return io::curve_from_json(*j);
    if (!g) throw std::invalid_argument("--g is required when --curve is an expression");
    return Curve::make(*g, parse_poly_arg(f, spec));
}

json enhanced_json(const EnhancedCurve& e) {
    return {{"curve", io::to_json(e.curve)}, {"P", io::to_json(e.P)}, {"Q", io::to_json(e.Q)}};
}

FamilyIndex resolve_family(const Field& f, const FamilyArgs& a) {
    FamilyIndex fam;
    if (!a.family.empty()) {
        auto j = read_json_file(a.family);
        fam = io::family_from_json(f, a.g, j ? *j : parse_json_text(a.family));
    } else if (!a.I.empty()) {
        fam.regime = parse_list<std::size_t>(a.I);
    } else if (!a.upsilon.empty()) {
        const auto split = char_split(f.characteristic(), a.g);
        if (!split) throw FieldError("--upsilon needs char(" + f.name() + ") to divide 2g+1");
        fam.regime = AdmissibleFn{*split, parse_list<std::uint64_t>(a.upsilon)};
    } else {
        throw std::invalid_argument("one of --family, --I or --upsilon is required");
    }
    if (!a.mu.empty()) fam.mu = parse_elem(f, a.mu);
    return fam;
}

GoodMu build_family(const Field& f, unsigned g, const FamilyIndex& fam, std::size_t limit) {
    const PairTemplate t = family_template(f, g, fam);
    if (fam.mu) {
        PairCert cert = instantiate(t, *fam.mu);
        EnhancedCurve e = make_pair(f, g, cert);
        return {*fam.mu, std::move(cert), std::move(e), 0};
    }
    const auto cands = mu_candidates(f, limit);
    return find_good_mu(f, g, t, cands);
}

} // namespace

CommandResult construct_single(const Common& c, const SingleArgs& a) {
    const Field f = field_of(c);
    const SingleCurve s = make_single(f, a.g, parse_elem(f, a.a), parse_poly_arg(f, a.v));
    CommandResult r;
    r.provenance = "single-certificate";
    r.payload = {{"curve", io::to_json(s.curve)},
                 {"point", io::to_json(s.P)},
                 {"cert", io::to_json(s.cert)},
                 {"order", 2 * a.g + 1}};
    return r;
}

CommandResult verify(const Common& c, const VerifyArgs& a) {
    const Field f0 = field_of(c);
    const Curve curve = load_curve(a.curve, a.g, f0);
    const AffinePoint p = io::point_from_string(curve.field(), a.point);
    if (!curve.contains(p)) throw std::invalid_argument("point " + a.point + " is not on the curve");
    const auto cert = verify_single(curve, p);
    CommandResult r;
    r.provenance = "single-certificate";
    r.payload = {{"curve", io::to_json(curve)},
                 {"point", io::to_json(p)},
                 {"order_2g1", cert.has_value()},
                 {"cert", cert ? io::to_json(*cert) : json(nullptr)}};
    return r;
}

CommandResult construct_pair(const Common& c, const PairArgs& a) {
    const Field f = field_of(c);
    PairCert cert = [&] {
        if (auto j = read_json_file(a.cert)) return io::pair_cert_from_json(f, *j);
        if (!a.cert.empty()) return io::pair_cert_from_json(f, parse_json_text(a.cert));
        if (a.u1.empty() || a.u2.empty()) throw std::invalid_argument("--u1 and --u2 (or --cert) are required");
        return PairCert{parse_elem(f, a.a1), parse_elem(f, a.a2), parse_poly_arg(f, a.u1), parse_poly_arg(f, a.u2)};
    }();
    const EnhancedCurve e = make_pair(f, a.g, cert);
    CommandResult r;
    r.provenance = "pair-certificate";
    r.payload = enhanced_json(e);
    r.payload["cert"] = io::to_json(cert);
    if (a.normalize) {
        const Normalized n = normalize_enhanced(e.curve, e.P, e.Q);
        r.payload["normalized"] = enhanced_json(n.enhanced);
        r.payload["normalized"]["map"] = {{"lambda", io::to_json(n.map.lambda)}, {"r", io::to_json(n.map.r)}};
    }
    if (a.decorations) {
        const Normalized n = normalize_enhanced(e.curve, e.P, e.Q);
        json ds = json::array();
        for (const Decoration& d : decorations_of(n.enhanced.curve, n.enhanced.P, n.enhanced.Q))
            ds.push_back({{"cert", io::to_json(d.cert)},
                          {"P", io::to_json(d.P)},
                          {"Q", io::to_json(d.Q)},
                          {"matches_input", d.matches_input}});
        r.payload["decorations"] = std::move(ds);
    }
    return r;
}

CommandResult enumerate_families(const Common& c, const FamiliesArgs& a) {
    const Field f = field_of(c);
    CommandResult r;
    r.provenance = "family-enumeration";
    json templates = json::array();
    json roots = json::array();
    auto roots_json = [&](const std::vector<RootLabel>& rs) {
        for (const RootLabel& l : rs) roots.push_back({{"eps", io::to_json(l.eps)}, {"eta", io::to_json(l.eta)}});
    };
    if (const auto split = char_split(f.characteristic(), a.g)) {
        const auto rs = eta_roots(f, 2 * split->l + 1);
        roots_json(rs);
        const auto fns = a.all_admissible ? admissible_enum(*split) : upsilon_ij_family(*split);
        for (const AdmissibleFn& u : fns) {
            const PairTemplate t = upsilon_template(f, rs, u);
            templates.push_back({{"family", io::to_json(FamilyIndex{u, std::nullopt})},
                                 {"u1", io::to_json(t.u1)},
                                 {"u2", io::to_json(t.u2)}});
        }
        r.payload = {{"regime", "char"}, {"p", split->p}, {"k", split->k}, {"l", split->l}};
    } else {
        const CoprimeFamilies fam = nice_pairs_coprime(f, a.g);
        roots_json(fam.roots);
        for (const auto& t : fam.templates)
            templates.push_back({{"family", io::to_json(FamilyIndex{t.I, std::nullopt})},
                                 {"u1", io::to_json(t.pair.u1)},
                                 {"u2", io::to_json(t.pair.u2)},
                                 {"class", t.symmetry_class}});
        r.payload = {{"regime", "coprime"}, {"class_count", fam.class_count}};
    }
    r.payload["field"] = io::to_json(f);
    r.payload["g"] = a.g;
    r.payload["roots"] = std::move(roots);
    r.payload["count"] = templates.size();
    r.payload["templates"] = std::move(templates);
    return r;
}

CommandResult find_mu(const Common& c, const FamilyArgs& a) {
    const Field f = field_of(c);
    FamilyIndex fam = resolve_family(f, a);
    const GoodMu gm = build_family(f, a.g, fam, a.limit);
    fam.mu = gm.mu;
    CommandResult r;
    r.provenance = "good-mu-scan";
    r.payload = enhanced_json(gm.enhanced);
    r.payload["family"] = io::to_json(fam);
    r.payload["rejected"] = gm.rejected;
    r.payload["cert"] = io::to_json(gm.cert);
    return r;
}

CommandResult rational(const Common&, const RationalArgs& a) {
    std::optional<std::vector<std::uint64_t>> s1;
    if (!a.s1.empty()) s1 = parse_list<std::uint64_t>(a.s1);
    const RationalFourTorsion t = rational_four_torsion(a.g, s1, a.mu_limit);
    CommandResult r;
    r.provenance = "totient-partition";
    json pts = json::array();
    for (const AffinePoint& p : t.points) pts.push_back(io::to_json(p));
    r.payload = {{"partition", io::to_json(t.partition)},
                 {"mu", io::to_json(t.mu)},
                 {"curve", io::to_json(t.enhanced.curve)},
                 {"cert", io::to_json(t.cert)},
                 {"points", std::move(pts)},
                 {"order", 2 * a.g + 1}};
    return r;
}

CommandResult hyperelliptic(const Common& c, const HyperArgs& a) {
    CommandResult r;
    r.provenance = "totient-partition";
    if (a.max) {
        r.payload = {{"max", *a.max}, {"hyperelliptic", hyperelliptic_scan(*a.max, c.threads)}};
        return r;
    }
    if (!a.n) throw std::invalid_argument("one of --n or --max is required");
    const std::uint64_t n = *a.n;
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("--n must be odd and >= 3");
    const auto cert = hyperelliptic_cert(n);
    r.payload = {{"n", n},
                 {"hyperelliptic", cert.has_value()},
                 {"filter", verdict_name(overq_filter(n))},
                 {"certificate", cert ? io::to_json(*cert) : json(nullptr)}};
    return r;
}

CommandResult census(const Common& c, const CensusArgs& a) {
    const Field f = a.p ? (a.m == 1 ? Field::prime(*a.p) : Field::extension(*a.p, a.m, std::nullopt, c.seed))
                        : field_of(c);
    const Curve curve = load_curve(a.curve, a.g, f);
    const std::uint64_t n = a.n.value_or(2 * curve.genus() + 1);
    const auto entries = torsion_census(curve, n, c.threads);
    json pts = json::array();
    for (const CensusEntry& e : entries) {
        json p = io::to_json(e.point);
        p["order"] = e.order;
        pts.push_back(std::move(p));
    }
    CommandResult r;
    r.provenance = "cantor-oracle";
    r.payload = {{"curve", io::to_json(curve)}, {"n", n}, {"count", entries.size()}, {"points", std::move(pts)}};
    return r;
}

CommandResult weil(const Common& c, const FamilyArgs& a) {
    const Field f = field_of(c);
    FamilyIndex fam = resolve_family(f, a);
    const auto* I = std::get_if<std::vector<std::size_t>>(&fam.regime);
    if (!I) throw std::invalid_argument("the pairing is defined for the coprime regime only");
    const GoodMu gm = build_family(f, a.g, fam, a.limit);
    fam.mu = gm.mu;
    const PairingCurve pc = pairing_curve(gm.enhanced, gm.cert);
    const Elem closed = weil_closed(f, a.g, *I);
    const Elem explicit_value = weil_explicit_generic(pc);
    CommandResult r;
    r.provenance = "weil-closed-form";
    r.payload = {{"family", io::to_json(fam)},
                 {"I", *I},
                 {"closed", io::to_json(closed)},
                 {"explicit", io::to_json(explicit_value)},
                 {"agree", closed == explicit_value},
                 {"curve", io::to_json(gm.enhanced.curve)}};
    try {
        const PairingSetup s = pairing_setup(pc, c.seed);
        json ws = json::array();
        for (const Elem& w : s.weierstrass) ws.push_back({{"w", io::to_json(w)}, {"e", io::to_json(weil_explicit(s.curve, w))}});
        r.payload["splitting_field"] = io::to_json(s.field);
        r.payload["weierstrass"] = std::move(ws);
    } catch (const InsufficientField&) {
        throw;
    } catch (const FieldError& e) {
        r.payload["splitting_field"] = nullptr;
        r.payload["weierstrass_note"] = e.what();
    }
    return r;
}

CommandResult selftest(const Common& c, const SelftestArgs& a) {
    selftest::Options opt;
    opt.threads = c.threads;
    std::vector<int> ids = a.criteria;
    if (ids.empty())
        for (int i = 1; i <= selftest::criterion_count; ++i) ids.push_back(i);
    json rows = json::array();
    std::size_t passed = 0;
    for (int id : ids) {
        const auto res = selftest::run_criterion(id, opt);
        if (res.pass) ++passed;
        rows.push_back({{"id", res.id},
                        {"name", res.name},
                        {"pass", res.pass},
                        {"seconds", res.seconds},
                        {"budget_seconds", res.budget_seconds},
                        {"detail", res.detail}});
    }
    CommandResult r;
    r.provenance = "acceptance";
    r.payload = {{"criteria", std::move(rows)}, {"passed", passed}, {"total", ids.size()}};
    if (passed != ids.size()) {
        r.ok = false;
        r.code = "selftest-failed";
        r.message = std::to_string(ids.size() - passed) + " of " + std::to_string(ids.size()) + " criteria failed";
    }
    return r;
}

CommandResult from_exception(std::exception_ptr e) {
    CommandResult r;
    r.ok = false;
    try {
        std::rethrow_exception(e);
    } catch (const ScanExhausted& x) {
        r.code = "scan-exhausted";
        r.message = x.what();
        r.payload = {{"required_degree", x.required_degree()}};
    } catch (const InsufficientField& x) {
        r.code = "insufficient-field";
        r.message = x.what();
        r.payload = {{"required_degree", x.required_degree()}};
    } catch (const FieldError& x) {
        r.code = "field";
        r.message = x.what();
    } catch (const io::FormatError& x) {
        r.code = "format";
        r.message = x.what();
    } catch (const ParseError& x) {
        r.code = "parse";
        r.message = x.what();
        r.payload = {{"position", x.position()}};
    } catch (const CurveError& x) {
        r.code = "curve";
        r.message = x.what();
    } catch (const CertError& x) {
        r.code = std::string("certificate:") + cert_error_name(x.kind());
        r.message = x.what();
    } catch (const json::exception& x) {
        r.code = "format";
        r.message = x.what();
    } catch (const std::invalid_argument& x) {
        r.code = "invalid-argument";
        r.message = x.what();
    } catch (const std::exception& x) {
        r.code = "internal";
        r.message = x.what();
    }
    return r;
}

} // namespace hypertorsion::cli
