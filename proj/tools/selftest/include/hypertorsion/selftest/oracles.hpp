#pragma once

// Brute-force reference computations. Nothing here calls into the code
// paths it is used to check: modular arithmetic is done on raw integers,
// subset sums by dynamic programming, orders by repeated addition.

#include <cstdint>
#include <optional>
#include <vector>

#include <hypertorsion/jacobian.hpp>

namespace hypertorsion::oracle {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);

/// Least r in [0, p) with r^2 = a mod p, by scanning.
std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p);
/// Multiplicative order of a mod p by repeated multiplication; a != 0.
std::uint64_t order_mod(std::uint64_t a, std::uint64_t p);

/// phi(n) by counting residues coprime to n.
std::uint64_t phi_by_count(std::uint64_t n);
std::vector<std::uint64_t> divisors_by_scan(std::uint64_t n);
/// Whether some subset of values sums to target (bitset dynamic programming).
bool subset_sum_exists(const std::vector<std::uint64_t>& values, std::uint64_t target);
/// Odd n is hyperelliptic iff the totients of its divisors > 1 reach (n-1)/2.
bool is_hyperelliptic_dp(std::uint64_t n);

/// Order of d found by adding d to itself one step at a time; nullopt
/// when it exceeds limit.
std::optional<std::uint64_t> order_by_repeated_addition(const Curve& c, const Mumford& d, std::uint64_t limit);

/// Polynomials mod p as ascending coefficient vectors, no trailing zeros.
using RawPoly = std::vector<std::uint64_t>;

std::uint64_t eval_mod(const RawPoly& f, std::uint64_t x, std::uint64_t p);
/// Every r in [0, p) with f(r) = 0.
std::vector<std::uint64_t> roots_by_scan(const RawPoly& f, std::uint64_t p);
/// Trial division by every monic polynomial of degree <= deg f / 2.
bool is_irreducible_by_trial(const RawPoly& f, std::uint64_t p);

/// Affine point or infinity on y^2 = x^3 + a2 x^2 + a4 x + a6 over GF(p).
struct EcPoint {
    bool infinity = true;
    std::uint64_t x = 0;
    std::uint64_t y = 0;
    friend bool operator==(const EcPoint&, const EcPoint&) = default;
};

struct EcCurve {
    std::uint64_t p;
    std::uint64_t a2, a4, a6;
};

/// Chord-and-tangent addition.
EcPoint ec_add(const EcCurve& e, const EcPoint& P, const EcPoint& Q);

} // namespace hypertorsion::oracle
