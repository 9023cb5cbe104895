#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace hypertorsion {

/// Raised for malformed field descriptions and mixed-field arithmetic.
class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an operation needs elements (roots of unity, square roots,
/// roots of a polynomial) that the current field does not contain.
///
/// required_degree() is the absolute degree over the prime field of the
/// smallest field GF(p^d) that would contain them; 0 means no finite
/// extension is available from this artifact (the rational field).
class InsufficientField : public FieldError {
public:
    InsufficientField(const std::string& what, unsigned required_degree)
        : FieldError(what), required_degree_(required_degree) {}
    unsigned required_degree() const noexcept { return required_degree_; }

private:
    unsigned required_degree_;
};

enum class FieldKind { rationals, prime, extension };

class Elem;

namespace detail {
struct FieldData;
}

/// An exact field: Q, GF(p) or GF(p^m) with p an odd prime.
///
/// Field is a cheap shared handle; the underlying description is immutable
/// and may be shared across threads. Elements of a finite field are encoded
/// by their canonical index sum c_i p^i (c_i the residue-polynomial
/// coefficients), which is also the order used for enumeration and for
/// choosing canonical representatives.
class Field {
public:
    static Field rationals();
    static Field prime(std::uint64_t p);
    /// GF(p^m). Without a modulus, a monic irreducible one is drawn by a
    /// seeded random search; a supplied modulus (ascending coefficients,
    /// length m+1, monic) is checked for irreducibility.
    static Field extension(std::uint64_t p, unsigned m,
                           std::optional<std::vector<std::uint64_t>> modulus = std::nullopt,
                           std::uint64_t seed = 0);

    FieldKind kind() const noexcept;
    bool is_finite() const noexcept { return kind() != FieldKind::rationals; }
    std::uint64_t characteristic() const noexcept;
    /// Degree over the prime field (1 for GF(p) and for Q).
    unsigned degree() const noexcept;
    /// Number of elements; 0 for Q.
    std::uint64_t order() const noexcept;
    /// Defining modulus of GF(p^m) (ascending, monic); {0,1} for GF(p).
    const std::vector<std::uint64_t>& modulus() const noexcept;
    std::string name() const;

    Elem zero() const;
    Elem one() const;
    Elem from_int(std::int64_t v) const;
    Elem from_mpz(const mpz_class& v) const;
    Elem from_rational(const mpq_class& v) const;
    /// Finite fields only: the element with the given canonical index.
    Elem from_index(std::uint64_t index) const;
    /// Finite fields only: the element with residue coefficients c (ascending).
    Elem from_coeffs(std::span<const std::uint64_t> c) const;
    /// Finite fields only: every element in canonical index order.
    std::vector<Elem> elements() const;

    /// Same field (same characteristic, degree and modulus).
    bool operator==(const Field& other) const noexcept;

    const detail::FieldData& data() const noexcept { return *data_; }

private:
    explicit Field(std::shared_ptr<const detail::FieldData> d) : data_(std::move(d)) {}
    std::shared_ptr<const detail::FieldData> data_;
    friend class Elem;
};

/// An element of a Field in canonical form; equality is representation
/// equality.
class Elem {
public:
    const Field& field() const noexcept { return field_; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    Elem operator-() const;
    Elem& operator+=(const Elem& o);
    Elem& operator-=(const Elem& o);
    Elem& operator*=(const Elem& o);
    Elem& operator/=(const Elem& o);
    friend Elem operator+(Elem a, const Elem& b) { a += b; return a; }
    friend Elem operator-(Elem a, const Elem& b) { a -= b; return a; }
    friend Elem operator*(Elem a, const Elem& b) { a *= b; return a; }
    friend Elem operator/(Elem a, const Elem& b) { a /= b; return a; }

    /// Throws std::domain_error on zero.
    Elem inverse() const;
    Elem pow(std::uint64_t e) const;
    Elem pow(const mpz_class& e) const;
    /// Signed exponent; negative powers invert first.
    Elem pow_signed(std::int64_t e) const;

    /// A square root when one exists in the field. The returned root is the
    /// canonical one of {s, -s}: least index for finite fields, the
    /// nonnegative one for Q.
    std::optional<Elem> sqrt() const;
    /// True when this element is the canonical member of {x, -x}.
    bool is_canonical_sign() const;

    /// Finite fields: canonical index. Throws for Q.
    std::uint64_t index() const;
    /// Residue coefficients (length = field degree). Finite fields only.
    std::vector<std::uint64_t> coeffs() const;
    /// Q only.
    const mpq_class& rational() const;

    std::string to_string() const;

    friend bool operator==(const Elem& a, const Elem& b);
    /// Total order on canonical encodings (index for finite fields, numeric
    /// order for Q). Only meaningful within one field.
    friend std::strong_ordering canonical_compare(const Elem& a, const Elem& b);

private:
    Elem(Field f, std::uint64_t v) : field_(std::move(f)), value_(v) {}
    Elem(Field f, mpq_class q) : field_(std::move(f)), value_(std::move(q)) {}
    void require_same_field(const Elem& o) const;
    std::uint64_t raw() const { return std::get<std::uint64_t>(value_); }

    Field field_;
    std::variant<std::uint64_t, mpq_class> value_;

    friend class Field;
};

inline bool canonical_less(const Elem& a, const Elem& b) {
    return canonical_compare(a, b) == std::strong_ordering::less;
}

/// All n-th roots of unity other than 1, ordered zeta, zeta^2, ...,
/// zeta^(n-1) for the least (by canonical index) primitive n-th root zeta.
/// Throws InsufficientField naming the smallest extension containing them.
std::vector<Elem> nth_roots_of_unity(const Field& f, std::uint64_t n);

} // namespace hypertorsion
