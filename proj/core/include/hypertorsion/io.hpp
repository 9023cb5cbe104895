#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "hypertorsion/families.hpp"
#include "hypertorsion/jacobian.hpp"
#include "hypertorsion/numtheory.hpp"
#include "hypertorsion/torsion.hpp"

namespace hypertorsion::io {

using json = nlohmann::json;

/// Raised for malformed JSON documents (wrong shape, bad element encoding).
class FormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// {"kind":"Q"} | {"kind":"GF","p":11} | {"kind":"GF","p":3,"m":4,"modulus":[...]}
json to_json(const Field& f);
Field field_from_json(const json& j);
/// "Q", "GF:11", "GF:3,4" (extension modulus drawn with the given seed).
Field field_from_spec(std::string_view spec, std::uint64_t seed = 0);

/// Q: "num/den" string (or integer string); GF(p): integer; GF(p^m):
/// ascending coefficient array.
json to_json(const Elem& e);
Elem elem_from_json(const Field& f, const json& j);

/// Ascending coefficient array.
json to_json(const Poly& p);
/// Accepts a coefficient array or an expression string.
Poly poly_from_json(const Field& f, const json& j);

json to_json(const AffinePoint& p);
AffinePoint point_from_json(const Field& f, const json& j);
/// "(x,y)" with integer or rational coordinates.
AffinePoint point_from_string(const Field& f, std::string_view s);

/// {"field":..., "g":..., "f":[...]}
json to_json(const Curve& c);
Curve curve_from_json(const json& j);

json to_json(const Mumford& d);
Mumford mumford_from_json(const Field& f, const json& j);

json to_json(const SingleCert& c);
SingleCert single_cert_from_json(const Field& f, const json& j);
json to_json(const PairCert& c);
PairCert pair_cert_from_json(const Field& f, const json& j);

json to_json(const TotientPartition& t);
TotientPartition partition_from_json(const json& j);

json to_json(const AdmissibleFn& u);

/// {"regime":"coprime","I":[...],"mu":...} or
/// {"regime":"char","upsilon":[...],"mu":...}; mu omitted when unset.
json to_json(const FamilyIndex& fam);
/// g and the field fix p, k, l for the char regime.
FamilyIndex family_from_json(const Field& f, unsigned g, const json& j);

} // namespace hypertorsion::io
