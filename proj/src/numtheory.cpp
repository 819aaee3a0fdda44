#include "pgspectra/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pgspectra {

u64 Factorization::value() const {
    u64 v = 1;
    for (const auto& [p, e] : prime_powers)
        v *= ipow(p, e);
    return v;
}

u64 Factorization::divisor_count() const {
    u64 c = 1;
    for (const auto& [p, e] : prime_powers)
        c *= e + 1;
    return c;
}

u64 ipow(u64 base, unsigned exp) {
    u64 r = 1;
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

Factorization factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        f.prime_powers.emplace_back(p, e);
    }
    if (n > 1) f.prime_powers.emplace_back(n, 1);
    return f;
}

u64 euler_phi(u64 n) {
    if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
    u64 phi = 1;
    for (const auto& [p, e] : factorize(n).prime_powers)
        phi *= ipow(p, e - 1) * (p - 1);
    return phi;
}

std::vector<u64> divisors(u64 n) {
    if (n == 0) throw std::invalid_argument("divisors: n must be positive");
    std::vector<u64> ds{1};
    for (const auto& [p, e] : factorize(n).prime_powers) {
        const std::size_t base = ds.size();
        u64 pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::pair<u64, u64> gcd_lcm(u64 a, u64 b) {
    const u64 g = std::gcd(a, b);
    return {g, a / g * b};
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
        if (n % p == 0) return false;
    return true;
}

} // namespace pgspectra
