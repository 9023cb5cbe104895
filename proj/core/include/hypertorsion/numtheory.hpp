#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace hypertorsion {

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
using Factorization = std::vector<std::pair<std::uint64_t, unsigned>>;

bool is_prime(std::uint64_t n);
/// Trial division; n >= 1.
Factorization factor(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
/// All positive divisors in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);
/// Smallest d >= 1 with n | q^d - 1; requires gcd(q, n) = 1.
unsigned multiplicative_order_mod(std::uint64_t q, std::uint64_t n);
std::uint64_t binomial(unsigned n, unsigned k);

/// Split of the divisors > 1 of an odd n into two sets with equal totient
/// sums (n-1)/2. s1 is the part containing n itself.
struct TotientPartition {
    std::uint64_t n = 0;
    std::vector<std::uint64_t> s1;  // descending
    std::vector<std::uint64_t> s2;  // ascending
};

/// Searches for a totient partition of n (odd, n >= 3). Exhaustive for up to
/// 20 candidate divisors, meet-in-the-middle above that.
std::optional<TotientPartition> hyperelliptic_cert(std::uint64_t n);

/// Checks the TotientPartition invariants exactly.
bool is_valid_partition(const TotientPartition& t);

/// Structural obstructions that force phi(n) > (n-1)/2.
enum class FilterVerdict {
    unknown,
    prime_power,          // n = l^k
    two_primes,           // n = l1^k1 l2^k2
    three_primes_no_3,    // n = l1^k1 l2^k2 l3^k3, 3 does not divide n
};

FilterVerdict overq_filter(std::uint64_t n);
std::string_view verdict_name(FilterVerdict v);

/// All hyperelliptic n in [3, max]. Throws std::logic_error if the filter
/// flags a number for which a certificate exists.
std::vector<std::uint64_t> hyperelliptic_scan(std::uint64_t max, unsigned threads = 1);

} // namespace hypertorsion
