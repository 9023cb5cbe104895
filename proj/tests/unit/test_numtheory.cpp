#include "common.hpp"

using namespace hypertorsion;

TEST_CASE("elementary functions against scans") {
    for (std::uint64_t n = 1; n <= 1000; ++n) {
        CHECK(euler_phi(n) == oracle::phi_by_count(n));
        CHECK(divisors(n) == oracle::divisors_by_scan(n));
        std::uint64_t sum = 0;
        for (auto d : divisors(n)) sum += euler_phi(d);
        CHECK(sum == n);
        std::uint64_t back = 1;
        for (auto [q, e] : factor(n)) {
            CHECK(is_prime(q));
            for (unsigned i = 0; i < e; ++i) back *= q;
        }
        CHECK(back == n);
        CHECK(is_prime(n) == (n > 1 && oracle::divisors_by_scan(n).size() == 2));
    }
    for (std::uint64_t p : {7u, 11u, 29u, 101u})
        for (std::uint64_t q = 2; q < p; ++q) CHECK(multiplicative_order_mod(q, p) == oracle::order_mod(q, p));
    CHECK(multiplicative_order_mod(3, 5) == 4);
    CHECK(multiplicative_order_mod(11, 7) == 3);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(10, 0) == 1);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("totient partitions") {
    const auto c105 = hyperelliptic_cert(105);
    REQUIRE(c105.has_value());
    CHECK(is_valid_partition(*c105));
    CHECK(c105->s1.front() == 105);
    std::uint64_t s = 0;
    for (auto d : c105->s1) s += euler_phi(d);
    CHECK(s == 52);

    const auto c165 = hyperelliptic_cert(165);
    REQUIRE(c165.has_value());
    CHECK(is_valid_partition(*c165));
    CHECK(is_valid_partition(TotientPartition{165, {165, 3}, {5, 11, 15, 33, 55}}));

    CHECK_FALSE(oracle::is_hyperelliptic_dp(9));
    CHECK_FALSE(hyperelliptic_cert(9).has_value());

    CHECK_FALSE(is_valid_partition(TotientPartition{105, {105}, {3, 5, 7, 15, 21, 35}}));
    CHECK_FALSE(is_valid_partition(TotientPartition{105, {5, 105}, {3, 7, 15, 21, 35}}));  // s1 not descending
    CHECK_FALSE(is_valid_partition(TotientPartition{105, {105, 5}, {3, 7, 15, 21}}));
}

TEST_CASE("structural filter") {
    CHECK(overq_filter(9) == FilterVerdict::prime_power);
    CHECK(overq_filter(117) == FilterVerdict::two_primes);
    CHECK(overq_filter(385) == FilterVerdict::three_primes_no_3);
    CHECK(overq_filter(105) == FilterVerdict::unknown);
    CHECK(verdict_name(FilterVerdict::unknown).size() > 0);

    SUBCASE("sound for odd n up to 2000") {
        for (std::uint64_t n = 3; n <= 2000; n += 2) {
            const bool hyper = oracle::is_hyperelliptic_dp(n);
            if (overq_filter(n) != FilterVerdict::unknown) CHECK_FALSE(hyper);
            CHECK(hyperelliptic_cert(n).has_value() == hyper);
        }
    }
}

TEST_CASE("hyperelliptic scans") {
    std::vector<std::uint64_t> expect;
    for (std::uint64_t n = 3; n <= 201; n += 2)
        if (oracle::is_hyperelliptic_dp(n)) expect.push_back(n);
    CHECK(hyperelliptic_scan(201) == expect);
    CHECK(hyperelliptic_scan(201, 4) == expect);
    CHECK(expect.front() == 105);
    CHECK(hyperelliptic_scan(100).empty());
}
