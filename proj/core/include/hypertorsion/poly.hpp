#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hypertorsion/field.hpp"

namespace hypertorsion {

/// Dense univariate polynomial over a Field, coefficients in ascending
/// degree order with no trailing zeros. The zero polynomial has no
/// coefficients and no degree.
class Poly {
public:
    explicit Poly(Field f) : field_(std::move(f)) {}
    Poly(Field f, std::vector<Elem> coeffs);

    static Poly constant(const Elem& c);
    static Poly x(const Field& f);
    /// c * x^k
    static Poly monomial(const Elem& c, std::size_t k);
    /// Integer coefficients, ascending.
    static Poly from_ints(const Field& f, std::span<const std::int64_t> c);
    static Poly from_ints(const Field& f, std::initializer_list<std::int64_t> c) {
        return from_ints(f, std::span<const std::int64_t>(c.begin(), c.size()));
    }
    /// (x - a)
    static Poly linear(const Elem& a);

    const Field& field() const noexcept { return field_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// Throws std::domain_error for the zero polynomial.
    std::size_t degree() const;
    /// degree() for nonzero polynomials, -1 for zero. Comparison helper only.
    long deg_or_neg() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    /// Coefficient of x^i (zero beyond the degree).
    Elem coeff(std::size_t i) const;
    /// Throws std::domain_error for zero.
    const Elem& leading() const;
    bool is_monic() const { return !is_zero() && leading().is_one(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Elem& s);
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Elem& s) { a *= s; return a; }
    friend Poly operator*(const Elem& s, Poly a) { a *= s; return a; }

    /// Divides through by the leading coefficient.
    Poly monic() const;
    Elem operator()(const Elem& x0) const;

    friend bool operator==(const Poly& a, const Poly& b);

    /// Human-readable form, highest degree first, e.g. "x^5 + 2*x + 1".
    std::string to_string(char var = 'x') const;

private:
    void trim();
    Field field_;
    std::vector<Elem> c_;
};

struct DivRem {
    Poly q;
    Poly r;
};

/// a = q*b + r with deg r < deg b. Throws std::domain_error when b = 0.
DivRem divrem(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Exact quotient; throws std::domain_error when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) = 0. Over Q the computation runs on primitive
/// integer polynomials.
Poly gcd(const Poly& a, const Poly& b);

struct XGcd {
    Poly g;  // monic gcd (zero only if both inputs are zero)
    Poly s;
    Poly t;  // s*a + t*b = g
};
XGcd xgcd(const Poly& a, const Poly& b);

Poly derivative(const Poly& a);
inline Elem eval(const Poly& a, const Elem& x0) { return a(x0); }
/// a(x + c)
Poly shift(const Poly& a, const Elem& c);
/// a(s*x), s != 0
Poly scale_arg(const Poly& a, const Elem& s);
Poly pow(const Poly& a, unsigned e);
/// base^e mod m
Poly powmod(Poly base, const mpz_class& e, const Poly& m);
/// Composition a(b(x)).
Poly compose(const Poly& a, const Poly& b);

/// gcd(f, f') = 1. A nonconstant f with f' = 0 is not squarefree.
bool is_squarefree(const Poly& f);

/// A square root t with t^2 = h, leading coefficient in canonical sign, or
/// nullopt when h is not a square in K[x].
std::optional<Poly> poly_sqrt(const Poly& h);

/// The polynomial wt of the same degree g with wt(a/x) = w(x)/x^g:
/// coefficient i of w becomes coefficient g-i of wt, divided by a^(g-i).
/// Applying it twice returns w / a^g.
Poly reverse_scale(const Poly& w, const Elem& a);

/// n-th cyclotomic polynomial over Q.
Poly cyclotomic(unsigned n);
/// Its image over f (coefficients are integers).
Poly cyclotomic(const Field& f, unsigned n);

/// (x - a2)^n - (x - a1)^n; a1 != a2.
Poly diff_power(const Elem& a1, const Elem& a2, unsigned n);

/// Maps every coefficient to another field of the same characteristic
/// through an element map (used for base change).
template <class Map>
Poly map_coeffs(const Poly& a, const Field& to, Map&& m) {
    std::vector<Elem> c;
    c.reserve(a.coeffs().size());
    for (const Elem& e : a.coeffs()) c.push_back(m(e));
    return Poly(to, std::move(c));
}

// Finite fields -------------------------------------------------------------

/// Rabin's irreducibility test over a finite field.
bool is_irreducible(const Poly& f);

/// Distinct roots in the coefficient field, in canonical order.
std::vector<Elem> roots(const Poly& f);

/// Degrees of the irreducible factors of a squarefree f, sorted ascending
/// with multiplicity.
std::vector<unsigned> factor_degrees(const Poly& f);

/// Degree over the coefficient field of the splitting field of a squarefree f.
unsigned splitting_degree(const Poly& f);

// Parsing -------------------------------------------------------------------

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t pos) : std::invalid_argument(what), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

/// Parses expressions like "x^5+(x+1)^2", "3*x^2 - x/2 + 7", "2x^3".
/// Supports + - * ^ (nonnegative integer exponents), parentheses, implicit
/// multiplication and division by nonzero constants.
Poly parse_poly(std::string_view text, const Field& f);

} // namespace hypertorsion
