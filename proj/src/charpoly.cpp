#include "pgspectra/charpoly.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <stdexcept>

namespace pgspectra {

IMat to_matrix(const AdjacencyMatrix& adj) {
    IMat m = IMat::zero(adj.size());
    for (std::size_t i = 0; i < adj.size(); ++i)
        for (std::size_t j = 0; j < adj.size(); ++j)
            m.at(i, j) = adj.adj.get(i, j) ? 1 : 0;
    return m;
}

IMat to_matrix(const QuotientMatrix& q) {
    IMat m = IMat::zero(q.size);
    for (std::size_t i = 0; i < q.size; ++i)
        for (std::size_t j = 0; j < q.size; ++j)
            m.at(i, j) = q.at(i, j);
    return m;
}

IntPoly charpoly_bareiss(const IMat& m) {
    const std::size_t n = m.n;
    if (n == 0) return IntPoly(1);
    std::vector<IntPoly> p(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            p[i * n + j] = (i == j) ? IntPoly::linear(-m.at(i, j), 1)
                                    : IntPoly(mpz_class(-m.at(i, j)));
    int sign = 1;
    IntPoly prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (p[k * n + k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && p[r * n + k].is_zero()) ++r;
            if (r == n) return IntPoly(); // entire column zero: det(xI-M) = 0, unreachable here
            for (std::size_t j = 0; j < n; ++j) std::swap(p[k * n + j], p[r * n + j]);
            sign = -sign;
        }
        const IntPoly& pivot = p[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                p[i * n + j] = (pivot * p[i * n + j] - p[i * n + k] * p[k * n + j]).divexact(prev);
        prev = pivot;
    }
    IntPoly out = p[n * n - 1];
    if (sign < 0) out = -out;
    if (!out.is_monic()) throw std::logic_error("charpoly_bareiss: non-monic result");
    return out;
}

mpz_class determinant(const std::vector<mpz_class>& m, std::size_t n) {
    if (n == 0) return 1;
    std::vector<mpz_class> a = m;
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r * n + k] == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[r * n + j]);
            sign = -sign;
        }
        const mpz_class& pivot = a[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i * n + j] = a[i * n + j] * pivot - a[i * n + k] * a[k * n + j];
                mpz_divexact(a[i * n + j].get_mpz_t(), a[i * n + j].get_mpz_t(),
                             prev.get_mpz_t());
            }
            a[i * n + k] = 0;
        }
        prev = pivot;
    }
    return sign > 0 ? a[n * n - 1] : -a[n * n - 1];
}

namespace {

IntPoly charpoly_interp_impl(const IMat& m, bool parallel) {
    const std::size_t n = m.n;
    if (n == 0) return IntPoly(1);
    // points 0, -1, 1, -2, 2, ...
    std::vector<long> pts(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        pts[k] = (k % 2 == 0) ? (long)(k / 2) : -(long)(k / 2 + 1);
    std::vector<mpz_class> vals(n + 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel && n >= 16)
#endif
    for (long k = 0; k <= (long)n; ++k) {
        std::vector<mpz_class> a(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a[i * n + j] = (i == j) ? mpz_class(pts[k] - m.at(i, j))
                                        : mpz_class(-m.at(i, j));
        vals[k] = determinant(a, n);
    }
    // Newton divided differences
    std::vector<mpq_class> dd(n + 1);
    for (std::size_t i = 0; i <= n; ++i) dd[i] = mpq_class(vals[i]);
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = n; i >= j; --i)
            dd[i] = (dd[i] - dd[i - 1]) / mpq_class(pts[i] - pts[i - j]);
    QPoly poly;
    for (std::size_t i = n + 1; i-- > 0;) {
        poly = poly * QPoly(std::vector<mpq_class>{mpq_class(-pts[i]), 1}) + QPoly(dd[i]);
    }
    IntPoly out = poly.to_intpoly();
    if (!out.is_monic()) throw std::logic_error("charpoly_interpolation: non-monic result");
    return out;
}

// ---- modular route ----------------------------------------------------

using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return (u128)a * b % p; }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool miller_rabin(u64 n) {
    if (n < 2) return false;
    for (u64 sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % sp == 0) return n == sp;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < r - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<u64> prime_pool(std::size_t count) {
    static std::vector<u64> pool;
    static u64 next_candidate = (u64(1) << 62) - 1;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (pool.size() < count) {
        while (!miller_rabin(next_candidate)) next_candidate -= 2;
        pool.push_back(next_candidate);
        next_candidate -= 2;
    }
    return std::vector<u64>(pool.begin(), pool.begin() + count);
}

u64 modinv(u64 a, u64 p) { return powmod(a, p - 2, p); }

// Characteristic polynomial mod p: Hessenberg reduction, then the
// column-expansion recurrence on the Hessenberg form.
std::vector<u64> charpoly_mod(const IMat& m, u64 p) {
    const std::size_t n = m.n;
    std::vector<u64> h(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long v = m.at(i, j) % (long)p;
            if (v < 0) v += (long)p;
            h[i * n + j] = (u64)v;
        }
    for (std::size_t k = 0; k + 2 < n; ++k) {
        std::size_t piv = k + 1;
        while (piv < n && h[piv * n + k] == 0) ++piv;
        if (piv == n) continue;
        if (piv != k + 1) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h[piv * n + j], h[(k + 1) * n + j]);
            for (std::size_t i = 0; i < n; ++i) std::swap(h[i * n + piv], h[i * n + (k + 1)]);
        }
        const u64 inv = modinv(h[(k + 1) * n + k], p);
        for (std::size_t i = k + 2; i < n; ++i) {
            const u64 t = h[i * n + k];
            if (!t) continue;
            const u64 f = mulmod(t, inv, p);
            // row_i -= f * row_{k+1}; col_{k+1} += f * col_i
            for (std::size_t j = k; j < n; ++j) {
                u64 sub = mulmod(f, h[(k + 1) * n + j], p);
                h[i * n + j] = (h[i * n + j] + p - sub) % p;
            }
            for (std::size_t r = 0; r < n; ++r) {
                u64 add = mulmod(f, h[r * n + i], p);
                h[r * n + (k + 1)] = (h[r * n + (k + 1)] + add) % p;
            }
        }
    }
    // chi_m(x) = (x - h_mm) chi_{m-1}(x) - sum_i h_im (prod subdiag) chi_{i-1}(x)
    std::vector<std::vector<u64>> chi(n + 1);
    chi[0] = {1};
    for (std::size_t mm = 1; mm <= n; ++mm) {
        std::vector<u64> c(mm + 1, 0);
        const u64 diag = h[(mm - 1) * n + (mm - 1)];
        for (std::size_t t = 0; t < mm; ++t) {
            c[t + 1] = (c[t + 1] + chi[mm - 1][t]) % p;
            u64 sub = mulmod(diag, chi[mm - 1][t], p);
            c[t] = (c[t] + p - sub) % p;
        }
        u64 prod = 1;
        for (std::size_t i = mm - 1; i >= 1; --i) {
            prod = mulmod(prod, h[i * n + (i - 1)], p);
            const u64 coef = mulmod(h[(i - 1) * n + (mm - 1)], prod, p);
            if (!coef) continue;
            for (std::size_t t = 0; t < i; ++t) {
                u64 sub = mulmod(coef, chi[i - 1][t], p);
                c[t] = (c[t] + p - sub) % p;
            }
        }
        chi[mm] = std::move(c);
    }
    return chi[n];
}

mpz_class coefficient_bound(const IMat& m) {
    const std::size_t n = m.n;
    long amax = 1;
    for (long v : m.a) amax = std::max(amax, std::labs(v));
    // |coeff of x^(n-k)| <= binom(n,k) * (sqrt(k) * amax)^k <= binom(n,k) * (k*amax^2)^ceil(k/2)
    mpz_class best = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), n, k);
        mpz_class base = mpz_class(k) * amax * amax;
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), (k + 1) / 2);
        mpz_class cand = binom * pw;
        if (cand > best) best = cand;
    }
    return best;
}

IntPoly charpoly_modular_impl(const IMat& m, bool parallel) {
    const std::size_t n = m.n;
    if (n == 0) return IntPoly(1);
    const mpz_class bound = 2 * coefficient_bound(m) + 1;
    mpz_class prod = 1;
    std::size_t nprimes = 0;
    while (prod < bound) {
        prod *= mpz_class(prime_pool(nprimes + 1)[nprimes]);
        ++nprimes;
    }
    const std::vector<u64> primes = prime_pool(nprimes);
    std::vector<std::vector<u64>> residues(nprimes);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel && nprimes > 1)
#endif
    for (long i = 0; i < (long)nprimes; ++i)
        residues[i] = charpoly_mod(m, primes[i]);

    // incremental CRT per coefficient
    std::vector<mpz_class> coeffs(n + 1);
    for (std::size_t t = 0; t <= n; ++t) {
        mpz_class x = residues[0][t];
        mpz_class mod = primes[0];
        for (std::size_t i = 1; i < nprimes; ++i) {
            const u64 p = primes[i];
            const u64 mr = mpz_fdiv_ui(mod.get_mpz_t(), p);
            const u64 xr = mpz_fdiv_ui(x.get_mpz_t(), p);
            u64 delta = (residues[i][t] + p - xr) % p;
            delta = mulmod(delta, modinv(mr, p), p);
            x += mod * mpz_class(delta);
            mod *= mpz_class(p);
        }
        // symmetric lift
        if (x * 2 > mod) x -= mod;
        coeffs[t] = x;
    }
    IntPoly out(std::move(coeffs));
    if (!out.is_monic()) throw std::logic_error("charpoly_modular: non-monic result");
    return out;
}

} // namespace

IntPoly charpoly_interpolation(const IMat& m) { return charpoly_interp_impl(m, true); }
IntPoly charpoly_interpolation_serial(const IMat& m) { return charpoly_interp_impl(m, false); }

IntPoly charpoly_modular(const IMat& m) { return charpoly_modular_impl(m, true); }
IntPoly charpoly_modular_serial(const IMat& m) { return charpoly_modular_impl(m, false); }

std::size_t charpoly_bareiss_limit() { return 32; }

IntPoly charpoly_dense(const IMat& m) {
    return m.n <= charpoly_bareiss_limit() ? charpoly_bareiss(m) : charpoly_modular(m);
}

QuotientCharpoly charpoly_via_quotient(const GraphBundle& bundle) {
    QuotientCharpoly out;
    out.quotient = quotient_matrix(bundle.partition, bundle.adjacency);
    out.alpha = bundle.adjacency.size() - bundle.partition.size();
    out.quotient_part = charpoly_dense(to_matrix(out.quotient));
    out.full = IntPoly::binomial_power(1, unsigned(out.alpha)) * out.quotient_part;
    return out;
}

QuotientCharpoly charpoly_via_quotient(const GroupSpec& spec) {
    return charpoly_via_quotient(build_graph_bundle(spec));
}

} // namespace pgspectra
