#include "hypertorsion/embedding.hpp"

namespace hypertorsion {

Embedding::Embedding(Field from, Field to) : from_(std::move(from)), to_(std::move(to)) {
    if (from_ == to_) return;
    if (!from_.is_finite() || !to_.is_finite()) throw FieldError("Embedding: only finite fields embed");
    if (from_.characteristic() != to_.characteristic()) throw FieldError("Embedding: characteristics differ");
    if (to_.degree() % from_.degree() != 0)
        throw FieldError("Embedding: " + from_.name() + " is not a subfield of " + to_.name());
    if (from_.kind() == FieldKind::prime) return;
    std::vector<Elem> mc;
    for (std::uint64_t c : from_.modulus()) mc.push_back(to_.from_int(static_cast<std::int64_t>(c)));
    const auto r = roots(Poly(to_, std::move(mc)));
    if (r.empty()) throw std::logic_error("Embedding: modulus has no root in the target");
    gen_ = r.front();
}

Elem Embedding::operator()(const Elem& a) const {
    if (!(a.field() == from_)) throw FieldError("Embedding: element not in " + from_.name());
    if (from_ == to_) return a;
    if (!gen_) return to_.from_int(static_cast<std::int64_t>(a.index()));
    Elem r = to_.zero();
    const auto c = a.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) r = r * *gen_ + to_.from_int(static_cast<std::int64_t>(c[i]));
    return r;
}

Poly Embedding::operator()(const Poly& a) const {
    return map_coeffs(a, to_, [&](const Elem& e) { return (*this)(e); });
}

bool Embedding::in_image(const Elem& b) const {
    if (!(b.field() == to_)) throw FieldError("Embedding: element not in " + to_.name());
    if (from_ == to_) return true;
    return b.pow(from_.order()) == b;
}

Field extend(const Field& base, unsigned relative_degree, std::uint64_t seed) {
    if (!base.is_finite()) throw FieldError("extend: finite field required");
    if (relative_degree == 0) throw FieldError("extend: degree must be >= 1");
    if (relative_degree == 1) return base;
    return Field::extension(base.characteristic(), base.degree() * relative_degree, std::nullopt, seed);
}

} // namespace hypertorsion
