#include "hypertorsion/selftest/oracles.hpp"

#include <numeric>
#include <stdexcept>

namespace hypertorsion::oracle {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    for (; e; e >>= 1) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
    }
    return r;
}

std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    for (std::uint64_t r = 0; r < p; ++r)
        if (mulmod(r, r, p) == a) return r;
    return std::nullopt;
}

std::uint64_t order_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw std::invalid_argument("order_mod: zero");
    std::uint64_t x = a, k = 1;
    while (x != 1) {
        x = mulmod(x, a, p);
        ++k;
    }
    return k;
}

std::uint64_t phi_by_count(std::uint64_t n) {
    std::uint64_t c = 0;
    for (std::uint64_t k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++c;
    return c;
}

std::vector<std::uint64_t> divisors_by_scan(std::uint64_t n) {
    std::vector<std::uint64_t> d;
    for (std::uint64_t k = 1; k <= n; ++k)
        if (n % k == 0) d.push_back(k);
    return d;
}

bool subset_sum_exists(const std::vector<std::uint64_t>& values, std::uint64_t target) {
    std::vector<char> reach(target + 1, 0);
    reach[0] = 1;
    for (std::uint64_t v : values) {
        if (v > target) continue;
        for (std::uint64_t s = target; s >= v; --s) {
            if (reach[s - v]) reach[s] = 1;
            if (s == v) break;
        }
    }
    return reach[target] != 0;
}

bool is_hyperelliptic_dp(std::uint64_t n) {
    std::vector<std::uint64_t> phis;
    for (std::uint64_t d : divisors_by_scan(n))
        if (d > 1) phis.push_back(phi_by_count(d));
    return subset_sum_exists(phis, (n - 1) / 2);
}

std::optional<std::uint64_t> order_by_repeated_addition(const Curve& c, const Mumford& d, std::uint64_t limit) {
    Mumford acc = d;
    for (std::uint64_t k = 1; k <= limit; ++k) {
        if (is_identity(acc)) return k;
        acc = cantor_add(c, acc, d);
    }
    return std::nullopt;
}

std::uint64_t eval_mod(const RawPoly& f, std::uint64_t x, std::uint64_t p) {
    std::uint64_t r = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) r = (mulmod(r, x, p) + *it) % p;
    return r;
}

std::vector<std::uint64_t> roots_by_scan(const RawPoly& f, std::uint64_t p) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t r = 0; r < p; ++r)
        if (eval_mod(f, r, p) == 0) out.push_back(r);
    return out;
}

namespace {

// Remainder of a by a monic b, mod p.
RawPoly rem_monic(RawPoly a, const RawPoly& b, std::uint64_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint64_t c = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + p - mulmod(c, b[i], p)) % p;
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

} // namespace

bool is_irreducible_by_trial(const RawPoly& f, std::uint64_t p) {
    if (f.size() < 2) return false;
    const std::size_t n = f.size() - 1;
    for (std::size_t d = 1; 2 * d <= n; ++d) {
        // every monic polynomial of degree d
        RawPoly b(d + 1, 0);
        b[d] = 1;
        for (;;) {
            if (rem_monic(f, b, p).empty()) return false;
            std::size_t i = 0;
            while (i < d && b[i] == p - 1) b[i++] = 0;
            if (i == d) break;
            ++b[i];
        }
    }
    return true;
}

EcPoint ec_add(const EcCurve& e, const EcPoint& P, const EcPoint& Q) {
    const std::uint64_t p = e.p;
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    auto inv = [&](std::uint64_t a) { return powmod(a, p - 2, p); };
    std::uint64_t lambda;
    if (P.x == Q.x) {
        if ((P.y + Q.y) % p == 0) return {};
        // (3x^2 + 2 a2 x + a4) / 2y
        const std::uint64_t num = (3 * mulmod(P.x, P.x, p) + 2 * mulmod(e.a2, P.x, p) + e.a4) % p;
        lambda = mulmod(num, inv(2 * P.y % p), p);
    } else {
        lambda = mulmod((Q.y + p - P.y) % p, inv((Q.x + p - P.x) % p), p);
    }
    const std::uint64_t x3 = ((mulmod(lambda, lambda, p) + 3 * p - e.a2 - P.x - Q.x) % p);
    const std::uint64_t y3 = (mulmod(lambda, (P.x + p - x3) % p, p) + p - P.y) % p;
    return {false, x3, y3};
}

} // namespace hypertorsion::oracle
