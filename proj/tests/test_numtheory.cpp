#include <doctest.h>

#include "oracle.hpp"
#include "pgspectra/numtheory.hpp"

using namespace pgspectra;

TEST_CASE("euler_phi basic values") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(7) == 6);
    CHECK(euler_phi(12) == oracle::phi(12)); // 4
    CHECK(euler_phi(12) == 4);
    CHECK_THROWS_AS(euler_phi(0), std::invalid_argument);
}

TEST_CASE("euler_phi matches counting for n <= 300") {
    for (u64 n = 1; n <= 300; ++n) CHECK(euler_phi(n) == oracle::phi(n));
}

TEST_CASE("divisors") {
    CHECK(divisors(1) == std::vector<u64>{1});
    CHECK(divisors(6) == std::vector<u64>{1, 2, 3, 6});
    CHECK(divisors(6) == oracle::divisors_trial(6));
    for (u64 p : {2, 13, 97}) CHECK(divisors(p) == std::vector<u64>{1, p});
    for (u64 n = 1; n <= 200; ++n) CHECK(divisors(n) == oracle::divisors_trial(n));
    CHECK_THROWS_AS(divisors(0), std::invalid_argument);
}

TEST_CASE("factorize") {
    CHECK(factorize(1).prime_powers.empty());
    const Factorization f12 = factorize(12);
    REQUIRE(f12.prime_powers.size() == 2);
    CHECK(f12.prime_powers[0] == std::pair<u64, unsigned>{2, 2});
    CHECK(f12.prime_powers[1] == std::pair<u64, unsigned>{3, 1});
    const Factorization f97 = factorize(97);
    REQUIRE(f97.prime_powers.size() == 1);
    CHECK(f97.prime_powers[0] == std::pair<u64, unsigned>{97, 1});
    for (u64 n = 1; n <= 2000; ++n) {
        const Factorization f = factorize(n);
        CHECK(f.value() == n);
        for (std::size_t i = 1; i < f.prime_powers.size(); ++i)
            CHECK(f.prime_powers[i - 1].first < f.prime_powers[i].first);
    }
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("gcd_lcm") {
    CHECK(gcd_lcm(1, 9) == std::pair<u64, u64>{1, 9});
    CHECK(gcd_lcm(4, 6) == std::pair<u64, u64>{2, 12});
    CHECK(gcd_lcm(7, 7) == std::pair<u64, u64>{7, 7});
    for (u64 a = 1; a <= 40; ++a)
        for (u64 b = 1; b <= 40; ++b) {
            const auto [g, l] = gcd_lcm(a, b);
            CHECK(g * l == a * b);
            CHECK(a % g == 0);
            CHECK(b % g == 0);
        }
}

TEST_CASE("totient multiplicativity on coprime pairs up to 1000") {
    for (u64 a = 1; a <= 1000; ++a)
        for (u64 b = a; a * b <= 1000; ++b)
            if (std::gcd(a, b) == 1) CHECK(euler_phi(a * b) == euler_phi(a) * euler_phi(b));
}

TEST_CASE("divisor totient sum identity up to 1000") {
    for (u64 n = 1; n <= 1000; ++n) {
        u64 s = 0;
        for (u64 d : divisors(n)) s += euler_phi(d);
        CHECK(s == n);
    }
}

TEST_CASE("divisor count from factorization") {
    for (u64 n = 1; n <= 1000; ++n)
        CHECK(factorize(n).divisor_count() == divisors(n).size());
}

TEST_CASE("is_prime") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(91));
}
