#pragma once

#include <span>
#include <vector>

#include "hypertorsion/embedding.hpp"
#include "hypertorsion/torsion.hpp"

namespace hypertorsion {

/// A normalized curve y^2 = x^(2g+1) + v1^2 = (x+1)^(2g+1) + v2^2 with
/// P = (0, v1(0)) and Q = (-1, v2(-1)).
struct PairingCurve {
    Curve curve;
    Poly v1;
    Poly v2;
    AffinePoint P;
    AffinePoint Q;
};

/// v1 = (u1 + u2)/2, v2 = (u1 - u2)/2 for a normalized certificate.
PairingCurve pairing_curve(const EnhancedCurve& e, const PairCert& cert);

/// Throws std::invalid_argument naming the first violated relation.
void validate(const PairingCurve& pc);

/// e_{2g+1}(P, Q) from g_P(D_Q) / g_Q(D) with the Weierstrass point
/// W = (w, 0), raised to the power g+1. Requires f(w) = 0.
Elem weil_explicit(const PairingCurve& pc, const Elem& w);

/// The same quotient evaluated in K[x]/(f), i.e. at every Weierstrass
/// point simultaneously. Throws std::logic_error if the value depends on W.
Elem weil_explicit_generic(const PairingCurve& pc);

/// prod of eps over the complement of I (indices into nth_roots_of_unity).
Elem weil_closed(const Field& f, unsigned g, std::span<const std::size_t> I);

struct PairingSetup {
    Field field;                     // splitting field of f
    Embedding embedding;             // base field -> field
    PairingCurve curve;              // base-changed
    std::vector<Elem> weierstrass;   // all roots of f
};

/// Base change to the splitting field of f. Throws FieldError when that
/// field is beyond the supported size and InsufficientField over Q.
PairingSetup pairing_setup(const PairingCurve& pc, std::uint64_t seed = 0);

} // namespace hypertorsion
