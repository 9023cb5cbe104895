#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hypertorsion/jacobian.hpp"

namespace hypertorsion {

/// Raised when a certificate or a construction violates one of its
/// invariants; kind() names the violated one.
class CertError : public std::invalid_argument {
public:
    enum class Kind {
        equal_abscissas,
        product_identity,
        degree_bound,
        p_side_degenerate,  // u1(a1) + u2(a1) = 0
        q_side_degenerate,  // u1(a2) - u2(a2) = 0
        zero_derivative,
        v_vanishes_at_a,
        multiple_roots,
        not_order_2g1,
        not_normalized,
    };
    CertError(Kind k, const std::string& what) : std::invalid_argument(what), kind_(k) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

const char* cert_error_name(CertError::Kind k);

/// f = (x - a)^(2g+1) + v^2, deg v <= g, v(a) != 0.
struct SingleCert {
    Elem a;
    Poly v;
};

/// u1 u2 = (x - a2)^(2g+1) - (x - a1)^(2g+1).
struct PairCert {
    Elem a1;
    Elem a2;
    Poly u1;
    Poly u2;
    friend bool operator==(const PairCert&, const PairCert&) = default;
};

struct EnhancedCurve {
    Curve curve;
    AffinePoint P;
    AffinePoint Q;
};

/// x -> (x - r) / lambda^2, y -> y / lambda^(2g+1).
struct IsoMap {
    Elem lambda;
    Elem r;
};

AffinePoint apply(const IsoMap& m, unsigned g, const AffinePoint& p);
/// lambda^(-2(2g+1)) f(lambda^2 x + r)
Poly apply(const IsoMap& m, unsigned g, const Poly& f);

struct SingleCurve {
    Curve curve;
    AffinePoint P;
    SingleCert cert;
};

/// Curve y^2 = (x - a)^(2g+1) + v^2 with its point P = (a, v(a)).
SingleCurve make_single(const Field& f, unsigned g, const Elem& a, const Poly& v);

/// The unique v with f = (x - x(P))^(2g+1) + v^2, deg v <= g and
/// v(x(P)) = y(P); nullopt when P does not have order 2g+1.
std::optional<SingleCert> verify_single(const Curve& c, const AffinePoint& p);

/// Checks the pair-certificate invariants for genus g. The derivative
/// condition is only checked when check_derivatives is set.
void validate_pair_cert(unsigned g, const PairCert& cert, bool check_derivatives = true);

/// u1(a_i) u2(a_i) = (a1 - a2)^(2g+1) for i = 1, 2.
bool evaluation_identities_hold(unsigned g, const PairCert& cert);

/// f = (x - a1)^(2g+1) + ((u1 + u2)/2)^2 with P over a1 and Q over a2.
EnhancedCurve make_pair(const Field& f, unsigned g, const PairCert& cert);

/// Inverse of make_pair: u1 = v1 + v2, u2 = v1 - v2 from the single
/// certificates at P and Q.
PairCert recover_pair(const Curve& c, const AffinePoint& P, const AffinePoint& Q);

struct Decoration {
    PairCert cert;
    AffinePoint P;
    AffinePoint Q;
    bool matches_input = false;
};

/// The four sign/swap variants of the certificate of a normalized pair.
std::vector<Decoration> decorations_of(const Curve& c, const AffinePoint& P, const AffinePoint& Q);

struct Normalized {
    EnhancedCurve enhanced;
    IsoMap map;
};

/// Moves P to abscissa 0 and Q to -1. Throws InsufficientField when
/// x(P) - x(Q) has no square root in the field.
Normalized normalize_enhanced(const Curve& c, const AffinePoint& P, const AffinePoint& Q);

struct CensusEntry {
    AffinePoint point;
    std::uint64_t order;
};

/// Every affine point of exact order n, by exhaustive enumeration and the
/// Cantor oracle. Finite fields only; sorted by (x, y) canonical index.
std::vector<CensusEntry> torsion_census(const Curve& c, std::uint64_t n, unsigned threads = 1);

} // namespace hypertorsion
