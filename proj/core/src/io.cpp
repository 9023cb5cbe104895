#include "hypertorsion/io.hpp"

#include <cctype>
#include <charconv>

namespace hypertorsion::io {

namespace {

std::uint64_t parse_u64(std::string_view s, const char* what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw FormatError(std::string("bad ") + what + ": '" + std::string(s) + "'");
    return v;
}

template <class T>
T get_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing key '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw FormatError(std::string("key '") + key + "': " + e.what());
    }
}

} // namespace

json to_json(const Field& f) {
    switch (f.kind()) {
    case FieldKind::rationals: return {{"kind", "Q"}};
    case FieldKind::prime: return {{"kind", "GF"}, {"p", f.characteristic()}};
    case FieldKind::extension:
        return {{"kind", "GF"}, {"p", f.characteristic()}, {"m", f.degree()}, {"modulus", f.modulus()}};
    }
    return {};
}

Field field_from_json(const json& j) {
    const auto kind = get_field<std::string>(j, "kind");
    if (kind == "Q") return Field::rationals();
    if (kind != "GF") throw FormatError("unknown field kind '" + kind + "'");
    const auto p = get_field<std::uint64_t>(j, "p");
    const unsigned m = j.contains("m") ? get_field<unsigned>(j, "m") : 1;
    if (m == 1 && !j.contains("modulus")) return Field::prime(p);
    std::optional<std::vector<std::uint64_t>> mod;
    if (j.contains("modulus")) mod = get_field<std::vector<std::uint64_t>>(j, "modulus");
    return Field::extension(p, m, mod);
}

Field field_from_spec(std::string_view spec, std::uint64_t seed) {
    if (spec == "Q") return Field::rationals();
    if (spec.substr(0, 3) != "GF:") throw FormatError("field spec must be Q, GF:p or GF:p,m; got '" + std::string(spec) + "'");
    spec.remove_prefix(3);
    const auto comma = spec.find(',');
    const std::uint64_t p = parse_u64(spec.substr(0, comma), "characteristic");
    if (comma == std::string_view::npos) return Field::prime(p);
    const auto m = parse_u64(spec.substr(comma + 1), "extension degree");
    return Field::extension(p, static_cast<unsigned>(m), std::nullopt, seed);
}

json to_json(const Elem& e) {
    switch (e.field().kind()) {
    case FieldKind::rationals: return e.rational().get_str();
    case FieldKind::prime: return e.index();
    case FieldKind::extension: return e.coeffs();
    }
    return {};
}

Elem elem_from_json(const Field& f, const json& j) {
    try {
        if (!f.is_finite()) {
            if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
            if (!j.is_string()) throw FormatError("rational must be a \"num/den\" string");
            mpq_class q;
            if (q.set_str(j.get<std::string>(), 10) != 0) throw FormatError("bad rational '" + j.get<std::string>() + "'");
            if (q.get_den() == 0) throw FormatError("zero denominator");
            q.canonicalize();
            return f.from_rational(q);
        }
        if (j.is_array()) {
            const auto c = j.get<std::vector<std::uint64_t>>();
            return f.from_coeffs(c);
        }
        if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
        if (j.is_string()) return f.from_mpz(mpz_class(j.get<std::string>()));
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad field element: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("bad field element: ") + e.what());
    }
    throw FormatError("bad field element " + j.dump());
}

json to_json(const Poly& p) {
    json a = json::array();
    for (const Elem& e : p.coeffs()) a.push_back(to_json(e));
    return a;
}

Poly poly_from_json(const Field& f, const json& j) {
    if (j.is_string()) return parse_poly(j.get<std::string>(), f);
    if (!j.is_array()) throw FormatError("polynomial must be a coefficient array or an expression string");
    std::vector<Elem> c;
    for (const auto& e : j) c.push_back(elem_from_json(f, e));
    return Poly(f, std::move(c));
}

json to_json(const AffinePoint& p) { return {{"x", to_json(p.x)}, {"y", to_json(p.y)}}; }

AffinePoint point_from_json(const Field& f, const json& j) {
    if (!j.is_object() || !j.contains("x") || !j.contains("y")) throw FormatError("point needs x and y");
    return {elem_from_json(f, j.at("x")), elem_from_json(f, j.at("y"))};
}

AffinePoint point_from_string(const Field& f, std::string_view s) {
    auto strip = [](std::string_view v) {
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
        return v;
    };
    s = strip(s);
    if (s.size() < 5 || s.front() != '(' || s.back() != ')') throw FormatError("point must look like (x,y)");
    s = s.substr(1, s.size() - 2);
    const auto comma = s.find(',');
    if (comma == std::string_view::npos) throw FormatError("point must look like (x,y)");
    auto coord = [&](std::string_view t) {
        const Poly c = parse_poly(strip(t), f);
        if (!c.is_constant()) throw FormatError("point coordinate must be a constant");
        return c.coeff(0);
    };
    return {coord(s.substr(0, comma)), coord(s.substr(comma + 1))};
}

json to_json(const Curve& c) { return {{"field", to_json(c.field())}, {"g", c.genus()}, {"f", to_json(c.f())}}; }

Curve curve_from_json(const json& j) {
    const Field f = field_from_json(j.at("field"));
    const auto g = get_field<unsigned>(j, "g");
    return Curve::make(g, poly_from_json(f, j.at("f")));
}

json to_json(const Mumford& d) { return {{"u", to_json(d.u)}, {"v", to_json(d.v)}}; }

Mumford mumford_from_json(const Field& f, const json& j) {
    return {poly_from_json(f, j.at("u")), poly_from_json(f, j.at("v"))};
}

json to_json(const SingleCert& c) { return {{"a", to_json(c.a)}, {"v", to_json(c.v)}}; }

SingleCert single_cert_from_json(const Field& f, const json& j) {
    return {elem_from_json(f, j.at("a")), poly_from_json(f, j.at("v"))};
}

json to_json(const PairCert& c) {
    return {{"a1", to_json(c.a1)}, {"a2", to_json(c.a2)}, {"u1", to_json(c.u1)}, {"u2", to_json(c.u2)}};
}

PairCert pair_cert_from_json(const Field& f, const json& j) {
    return {elem_from_json(f, j.at("a1")), elem_from_json(f, j.at("a2")), poly_from_json(f, j.at("u1")),
            poly_from_json(f, j.at("u2"))};
}

json to_json(const TotientPartition& t) { return {{"n", t.n}, {"S1", t.s1}, {"S2", t.s2}}; }

TotientPartition partition_from_json(const json& j) {
    TotientPartition t;
    t.n = get_field<std::uint64_t>(j, "n");
    t.s1 = get_field<std::vector<std::uint64_t>>(j, "S1");
    t.s2 = get_field<std::vector<std::uint64_t>>(j, "S2");
    return t;
}

json to_json(const AdmissibleFn& u) {
    return {{"p", u.split.p}, {"k", u.split.k}, {"l", u.split.l}, {"values", u.values}};
}

json to_json(const FamilyIndex& fam) {
    json j;
    if (const auto* I = std::get_if<std::vector<std::size_t>>(&fam.regime)) {
        j["regime"] = "coprime";
        j["I"] = *I;
    } else {
        j["regime"] = "char";
        j["upsilon"] = std::get<AdmissibleFn>(fam.regime).values;
    }
    if (fam.mu) j["mu"] = to_json(*fam.mu);
    return j;
}

FamilyIndex family_from_json(const Field& f, unsigned g, const json& j) {
    const auto regime = get_field<std::string>(j, "regime");
    FamilyIndex fam;
    if (regime == "coprime") {
        fam.regime = get_field<std::vector<std::size_t>>(j, "I");
    } else if (regime == "char") {
        const auto split = char_split(f.characteristic(), g);
        if (!split) throw FormatError("char regime needs the characteristic to divide 2g+1");
        fam.regime = AdmissibleFn{*split, get_field<std::vector<std::uint64_t>>(j, "upsilon")};
    } else {
        throw FormatError("unknown regime '" + regime + "'");
    }
    if (j.contains("mu")) fam.mu = elem_from_json(f, j.at("mu"));
    return fam;
}

} // namespace hypertorsion::io
