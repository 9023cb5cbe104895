#pragma once

#include <optional>

#include "hypertorsion/field.hpp"
#include "hypertorsion/poly.hpp"

namespace hypertorsion {

/// Field homomorphism GF(p^a) -> GF(p^b) for a | b (or the identity).
class Embedding {
public:
    Embedding(Field from, Field to);

    const Field& source() const noexcept { return from_; }
    const Field& target() const noexcept { return to_; }

    Elem operator()(const Elem& a) const;
    Poly operator()(const Poly& a) const;
    /// True when b lies in the image of the source field.
    bool in_image(const Elem& b) const;

private:
    Field from_;
    Field to_;
    std::optional<Elem> gen_;  // image of the residue generator
};

/// GF(p^(m d)) for a finite base GF(p^m); modulus chosen by seeded search.
Field extend(const Field& base, unsigned relative_degree, std::uint64_t seed = 0);

} // namespace hypertorsion
