#include "hypertorsion/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace hypertorsion {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % sp == 0) return n == sp;
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Factorization factor(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factor: n must be positive");
    Factorization out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d) continue;
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (auto [p, e] : factor(n)) r = r / p * (p - 1);
    return r;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out{1};
    for (auto [p, e] : factor(n)) {
        const std::size_t base = out.size();
        std::uint64_t pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

unsigned multiplicative_order_mod(std::uint64_t q, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("multiplicative_order_mod: n = 0");
    if (n == 1) return 1;
    if (std::gcd(q % n, n) != 1) throw std::invalid_argument("multiplicative_order_mod: gcd(q, n) != 1");
    std::uint64_t x = q % n;
    unsigned d = 1;
    while (x != 1) {
        x = mulmod(x, q, n);
        ++d;
    }
    return d;
}

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace {

// Subset of `items` (by position) whose weights sum to target, or nullopt.
// Deterministic: the first subset in increasing bitmask order is returned.
std::optional<std::vector<std::size_t>> exhaustive_subset(const std::vector<std::uint64_t>& w, std::uint64_t target) {
    const std::size_t k = w.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1) s += w[i];
        if (s == target) {
            std::vector<std::size_t> pick;
            for (std::size_t i = 0; i < k; ++i)
                if (mask >> i & 1) pick.push_back(i);
            return pick;
        }
    }
    return std::nullopt;
}

std::optional<std::vector<std::size_t>> mitm_subset(const std::vector<std::uint64_t>& w, std::uint64_t target) {
    const std::size_t k = w.size();
    const std::size_t h = k / 2;
    // Left half: first mask reaching each sum.
    std::unordered_map<std::uint64_t, std::uint64_t> left;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << h); ++mask) {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < h; ++i)
            if (mask >> i & 1) s += w[i];
        left.try_emplace(s, mask);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - h)); ++mask) {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < k - h; ++i)
            if (mask >> i & 1) s += w[h + i];
        if (s > target) continue;
        auto it = left.find(target - s);
        if (it == left.end()) continue;
        std::vector<std::size_t> pick;
        for (std::size_t i = 0; i < h; ++i)
            if (it->second >> i & 1) pick.push_back(i);
        for (std::size_t i = 0; i < k - h; ++i)
            if (mask >> i & 1) pick.push_back(h + i);
        return pick;
    }
    return std::nullopt;
}

} // namespace

std::optional<TotientPartition> hyperelliptic_cert(std::uint64_t n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("hyperelliptic_cert: n must be odd and >= 3");
    const std::uint64_t g = (n - 1) / 2;
    const std::uint64_t phin = euler_phi(n);
    if (phin > g) return std::nullopt;

    // n itself sits in one part; call it s1 and search the rest.
    std::vector<std::uint64_t> rest;
    for (std::uint64_t d : divisors(n))
        if (d != 1 && d != n) rest.push_back(d);
    std::vector<std::uint64_t> weights;
    weights.reserve(rest.size());
    for (std::uint64_t d : rest) weights.push_back(euler_phi(d));

    const std::uint64_t target = g - phin;
    auto pick = rest.size() <= 20 ? exhaustive_subset(weights, target) : mitm_subset(weights, target);
    if (!pick) return std::nullopt;

    TotientPartition t;
    t.n = n;
    t.s1.push_back(n);
    std::vector<bool> in_s1(rest.size(), false);
    for (std::size_t i : *pick) in_s1[i] = true;
    for (std::size_t i = 0; i < rest.size(); ++i) (in_s1[i] ? t.s1 : t.s2).push_back(rest[i]);
    std::sort(t.s1.rbegin(), t.s1.rend());
    std::sort(t.s2.begin(), t.s2.end());
    return t;
}

bool is_valid_partition(const TotientPartition& t) {
    if (t.n < 3 || t.n % 2 == 0) return false;
    if (t.s1.empty() || t.s1.front() != t.n) return false;
    if (!std::is_sorted(t.s1.rbegin(), t.s1.rend()) || !std::is_sorted(t.s2.begin(), t.s2.end())) return false;
    std::vector<std::uint64_t> all(t.s1);
    all.insert(all.end(), t.s2.begin(), t.s2.end());
    std::sort(all.begin(), all.end());
    std::vector<std::uint64_t> expect;
    for (std::uint64_t d : divisors(t.n))
        if (d != 1) expect.push_back(d);
    if (all != expect) return false;
    const std::uint64_t g = (t.n - 1) / 2;
    std::uint64_t a = 0, b = 0;
    for (std::uint64_t d : t.s1) a += euler_phi(d);
    for (std::uint64_t d : t.s2) b += euler_phi(d);
    return a == g && b == g;
}

FilterVerdict overq_filter(std::uint64_t n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("overq_filter: n must be odd and >= 3");
    const Factorization fz = factor(n);
    FilterVerdict v = FilterVerdict::unknown;
    if (fz.size() == 1) {
        v = FilterVerdict::prime_power;
    } else if (fz.size() == 2) {
        v = FilterVerdict::two_primes;
    } else if (fz.size() == 3 && fz.front().first != 3) {
        v = FilterVerdict::three_primes_no_3;
    }
    // Every flagged case rests on phi(n) > (n-1)/2.
    if (v != FilterVerdict::unknown && euler_phi(n) <= (n - 1) / 2)
        throw std::logic_error("overq_filter: totient bound violated for " + std::to_string(n));
    return v;
}

std::string_view verdict_name(FilterVerdict v) {
    switch (v) {
    case FilterVerdict::unknown: return "unknown";
    case FilterVerdict::prime_power: return "i";
    case FilterVerdict::two_primes: return "ii";
    case FilterVerdict::three_primes_no_3: return "iii";
    }
    return "unknown";
}

std::vector<std::uint64_t> hyperelliptic_scan(std::uint64_t max, unsigned threads) {
    if (max < 3) throw std::invalid_argument("hyperelliptic_scan: max must be >= 3");
    std::vector<std::uint64_t> odds;
    for (std::uint64_t n = 3; n <= max; n += 2) odds.push_back(n);
    std::vector<char> hit(odds.size(), 0);

    auto work = [&](std::size_t begin, std::size_t step) {
        for (std::size_t i = begin; i < odds.size(); i += step) {
            const std::uint64_t n = odds[i];
            const bool flagged = overq_filter(n) != FilterVerdict::unknown;
            const bool has_cert = hyperelliptic_cert(n).has_value();
            if (flagged && has_cert)
                throw std::logic_error("hyperelliptic_scan: filter flagged " + std::to_string(n) + " but a certificate exists");
            hit[i] = has_cert;
        }
    };
    threads = std::max(1u, threads);
    if (threads == 1) {
        work(0, 1);
    } else {
        std::vector<std::exception_ptr> errs(threads);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                try {
                    work(t, threads);
                } catch (...) {
                    errs[t] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (auto& e : errs)
            if (e) std::rethrow_exception(e);
    }
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < odds.size(); ++i)
        if (hit[i]) out.push_back(odds[i]);
    return out;
}

} // namespace hypertorsion
