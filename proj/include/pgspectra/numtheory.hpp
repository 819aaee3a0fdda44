#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace pgspectra {

using u64 = std::uint64_t;

/// Prime factorization, primes strictly increasing, exponents >= 1.
/// An empty list represents 1.
struct Factorization {
    std::vector<std::pair<u64, unsigned>> prime_powers;

    u64 value() const;
    u64 divisor_count() const;
};

/// Trial-division factorization. Throws std::invalid_argument for n == 0.
Factorization factorize(u64 n);

/// Euler's totient. Throws std::invalid_argument for n == 0.
u64 euler_phi(u64 n);

/// All divisors of n in ascending order. Throws std::invalid_argument for n == 0.
std::vector<u64> divisors(u64 n);

/// (gcd, lcm). Requires a, b >= 1.
std::pair<u64, u64> gcd_lcm(u64 a, u64 b);

bool is_prime(u64 n);

u64 ipow(u64 base, unsigned exp);

} // namespace pgspectra
