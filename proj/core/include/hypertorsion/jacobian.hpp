#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "hypertorsion/embedding.hpp"
#include "hypertorsion/field.hpp"
#include "hypertorsion/poly.hpp"

namespace hypertorsion {

class CurveError : public std::invalid_argument {
public:
    enum class Reason { wrong_degree, not_monic, not_squarefree, bad_genus };
    CurveError(Reason r, const std::string& what) : std::invalid_argument(what), reason_(r) {}
    Reason reason() const noexcept { return reason_; }

private:
    Reason reason_;
};

struct AffinePoint {
    Elem x;
    Elem y;
    friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

/// (x, -y)
inline AffinePoint involution(const AffinePoint& p) { return {p.x, -p.y}; }

/// y^2 = f(x) with f monic, squarefree, of degree 2g+1.
class Curve {
public:
    /// Validates degree, monicity and squarefreeness, in that order.
    static Curve make(unsigned g, Poly f);

    const Field& field() const noexcept { return f_.field(); }
    unsigned genus() const noexcept { return g_; }
    const Poly& f() const noexcept { return f_; }
    bool contains(const AffinePoint& p) const;

private:
    Curve(unsigned g, Poly f) : g_(g), f_(std::move(f)) {}
    unsigned g_;
    Poly f_;
};

/// The same curve over a larger finite field.
Curve base_change(const Curve& c, const Embedding& e);

/// Reduced divisor class in Mumford form: u monic, deg v < deg u <= g,
/// u | v^2 - f. The identity is (1, 0).
struct Mumford {
    Poly u;
    Poly v;
    friend bool operator==(const Mumford&, const Mumford&) = default;
};

Mumford identity(const Curve& c);
bool is_identity(const Mumford& d);
/// Checks every Mumford invariant on c.
bool is_reduced_divisor(const Curve& c, const Mumford& d);

/// Points of c with abscissa x0: none, one Weierstrass point, or the pair
/// with y in canonical order.
std::vector<AffinePoint> points_with_x(const Curve& c, const Elem& x0);

/// Class of (P) - (infinity).
Mumford embed(const Curve& c, const AffinePoint& p);
Mumford negate(const Curve& c, const Mumford& d);
/// Cantor composition followed by reduction.
Mumford cantor_add(const Curve& c, const Mumford& a, const Mumford& b);
Mumford scalar_mul(const Curve& c, const mpz_class& n, const Mumford& d);
inline Mumford scalar_mul(const Curve& c, std::uint64_t n, const Mumford& d) {
    return scalar_mul(c, mpz_class(static_cast<unsigned long>(n)), d);
}

/// Exact order of d when it divides n, otherwise nullopt.
std::optional<std::uint64_t> exact_order(const Curve& c, const Mumford& d, std::uint64_t n);

} // namespace hypertorsion
