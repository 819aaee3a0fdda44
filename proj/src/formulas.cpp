#include "pgspectra/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pgspectra {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

GroupElement make_elem(u64 a, u64 b, const GroupSpec& spec) {
    return GroupElement{std::uint32_t(a % spec.m), std::uint32_t(b % spec.n)};
}

} // namespace

FamilyEnumeration enumerate_prime_family(u64 p, u64 n) {
    require(is_prime(p), "enumerate_prime_family: p must be prime");
    require(n % p == 0, "enumerate_prime_family: p must divide n (otherwise the group is cyclic of order p*n)");
    FamilyEnumeration out;
    out.group = GroupSpec{std::uint32_t(p), std::uint32_t(n)};
    std::vector<u64> ds = divisors(n);
    std::vector<u64> cls_r, cls_t, cls_cop;
    for (u64 d : ds) {
        if (d % (p * p) == 0)
            cls_r.push_back(d);
        else if (d % p == 0)
            cls_t.push_back(d);
        else
            cls_cop.push_back(d);
    }
    out.profile.case_id = "m=p";
    out.profile.counters = {{"r", cls_r.size()}, {"t", cls_t.size()}, {"coprime", cls_cop.size()}};
    out.profile.divisor_classes = {cls_r, cls_t, cls_cop};
    for (u64 d : cls_r)
        for (u64 j = 0; j < p; ++j)
            out.subgroups.push_back({make_elem(j, n / d, out.group), d, 0});
    for (u64 d : cls_t) {
        for (u64 j = 0; j < p; ++j)
            out.subgroups.push_back({make_elem(j, n / d, out.group), d, 1});
        out.subgroups.push_back({make_elem(1, n / d * p, out.group), d, 1});
    }
    for (u64 d : cls_cop)
        out.subgroups.push_back({make_elem(0, n / d, out.group), d, 2});
    return out;
}

FamilyEnumeration enumerate_prime_pair_family(u64 p, u64 q, u64 n) {
    require(is_prime(p) && is_prime(q) && p != q,
            "enumerate_prime_pair_family: p, q must be distinct primes");
    require(n % (p * q) == 0, "enumerate_prime_pair_family: pq must divide n");
    FamilyEnumeration out;
    out.group = GroupSpec{std::uint32_t(p * q), std::uint32_t(n)};
    std::vector<u64> ds = divisors(n);
    // divisor classes by gcd structure with p and q
    std::vector<std::vector<u64>> cls(9);
    for (u64 d : ds) {
        const bool dp = d % p == 0, dp2 = d % (p * p) == 0;
        const bool dq = d % q == 0, dq2 = d % (q * q) == 0;
        std::size_t idx;
        if (!dp && !dq) idx = 0;
        else if (dp && !dp2 && !dq) idx = 1;
        else if (dp2 && !dq) idx = 2;
        else if (dq && !dq2 && !dp) idx = 3;
        else if (dq2 && !dp) idx = 4;
        else if (dp && dq && !dp2 && !dq2) idx = 5;
        else if (dp2 && dq && !dq2) idx = 6;
        else if (dq2 && dp && !dp2) idx = 7;
        else idx = 8; // p^2 q^2 | d
        cls[idx].push_back(d);
    }
    out.profile.case_id = "m=pq";
    static const char* names[9] = {"r1", "r2", "r3", "r4", "r5", "r6", "r7", "r8", "rest"};
    for (int i = 0; i < 9; ++i)
        out.profile.counters.emplace_back(names[i], cls[i].size());
    out.profile.divisor_classes = cls;

    const GroupSpec& g = out.group;
    auto all_first_coords = [&](u64 d, unsigned c) {
        for (u64 j = 0; j < p * q; ++j)
            out.subgroups.push_back({make_elem(j, n / d, g), d, c});
    };
    for (u64 d : cls[0])
        out.subgroups.push_back({make_elem(0, n / d, g), d, 0});
    for (u64 d : cls[1]) {
        for (u64 j = 0; j < p; ++j)
            out.subgroups.push_back({make_elem(j * q, n / d, g), d, 1});
        out.subgroups.push_back({make_elem(q, n / d * p, g), d, 1});
    }
    for (u64 d : cls[2])
        for (u64 j = 0; j < p; ++j)
            out.subgroups.push_back({make_elem(j * q, n / d, g), d, 2});
    for (u64 d : cls[3]) {
        for (u64 j = 0; j < q; ++j)
            out.subgroups.push_back({make_elem(j * p, n / d, g), d, 3});
        out.subgroups.push_back({make_elem(p, n / d * q, g), d, 3});
    }
    for (u64 d : cls[4])
        for (u64 j = 0; j < q; ++j)
            out.subgroups.push_back({make_elem(j * p, n / d, g), d, 4});
    for (u64 d : cls[5]) {
        all_first_coords(d, 5);
        for (u64 j = 1; j < q; ++j)
            out.subgroups.push_back({make_elem(1, n / d * j * p, g), d, 5});
        out.subgroups.push_back({make_elem(q, n / d * p, g), d, 5});
        for (u64 j = 1; j < p; ++j)
            out.subgroups.push_back({make_elem(1, n / d * j * q, g), d, 5});
        out.subgroups.push_back({make_elem(p, n / d * q, g), d, 5});
        out.subgroups.push_back({make_elem(1, n / d * p * q, g), d, 5});
    }
    for (u64 d : cls[6]) {
        all_first_coords(d, 6);
        out.subgroups.push_back({make_elem(p, n / d * q, g), d, 6});
        for (u64 j = 1; j < p; ++j)
            out.subgroups.push_back({make_elem(j, n / d * q, g), d, 6});
    }
    for (u64 d : cls[7]) {
        all_first_coords(d, 7);
        for (u64 j = 1; j < q; ++j)
            out.subgroups.push_back({make_elem(1, n / d * j * p, g), d, 7});
        out.subgroups.push_back({make_elem(q, n / d * p, g), d, 7});
    }
    for (u64 d : cls[8])
        all_first_coords(d, 8);
    return out;
}

FamilyEnumeration enumerate_prime_square_family(u64 p, u64 n) {
    require(is_prime(p), "enumerate_prime_square_family: p must be prime");
    require(n % (p * p) == 0, "enumerate_prime_square_family: p^2 must divide n");
    FamilyEnumeration out;
    out.group = GroupSpec{std::uint32_t(p * p), std::uint32_t(n)};
    std::vector<u64> ds = divisors(n);
    std::vector<u64> c1, c2, c3, cop;
    for (u64 d : ds) {
        if (d % (p * p * p) == 0) c1.push_back(d);
        else if (d % (p * p) == 0) c2.push_back(d);
        else if (d % p == 0) c3.push_back(d);
        else cop.push_back(d);
    }
    out.profile.case_id = "m=p^2";
    out.profile.counters = {{"r1", c1.size()}, {"r2", c2.size()}, {"r3", c3.size()}, {"coprime", cop.size()}};
    out.profile.divisor_classes = {c1, c2, c3, cop};
    const GroupSpec& g = out.group;
    for (u64 d : c1)
        for (u64 j = 0; j < p * p; ++j)
            out.subgroups.push_back({make_elem(j, n / d, g), d, 0});
    for (u64 d : c2) {
        for (u64 j = 0; j < p * p; ++j)
            out.subgroups.push_back({make_elem(j, n / d, g), d, 1});
        for (u64 j = 1; j < p; ++j)
            out.subgroups.push_back({make_elem(j, n / d * p, g), d, 1});
        out.subgroups.push_back({make_elem(1, n / d * p * p, g), d, 1});
    }
    for (u64 d : c3) {
        for (u64 j = 0; j < p; ++j)
            out.subgroups.push_back({make_elem(j * p, n / d, g), d, 2});
        out.subgroups.push_back({make_elem(p, n / d * p, g), d, 2});
    }
    for (u64 d : cop)
        out.subgroups.push_back({make_elem(0, n / d, g), d, 3});
    return out;
}

FamilyEnumeration enumerate_prime_square_partial_family(u64 p, u64 n) {
    require(is_prime(p), "enumerate_prime_square_partial_family: p must be prime");
    require(n % p == 0, "enumerate_prime_square_partial_family: p must divide n");
    require(n % (p * p) != 0, "enumerate_prime_square_partial_family: p^2 must not divide n");
    FamilyEnumeration out;
    out.group = GroupSpec{std::uint32_t(p * p), std::uint32_t(n)};
    std::vector<u64> ds = divisors(n);
    std::vector<u64> cop, pdiv;
    for (u64 d : ds)
        (d % p == 0 ? pdiv : cop).push_back(d);
    out.profile.case_id = "m=p^2,p||n";
    out.profile.counters = {{"c", cop.size()}, {"p_divisible", pdiv.size()}};
    out.profile.divisor_classes = {cop, pdiv, cop};
    const GroupSpec& g = out.group;
    for (u64 d : cop)
        out.subgroups.push_back({make_elem(0, n / d, g), d, 0});
    for (u64 d : pdiv) {
        for (u64 j = 0; j < p; ++j)
            out.subgroups.push_back({make_elem(j * p, n / d, g), d, 1});
        out.subgroups.push_back({make_elem(p, n / d * p, g), d, 1});
    }
    for (u64 d : cop) {
        out.subgroups.push_back({make_elem(1, n / d, g), d * p * p, 2});
        for (u64 j = 1; j < p; ++j)
            out.subgroups.push_back({make_elem(j, n / (d * p), g), d * p * p, 2});
    }
    return out;
}

CyclicSubgroup materialize(const SubgroupRecipe& r, const GroupSpec& spec) {
    return cyclic_subgroup(r.generator, spec);
}

namespace {

u64 phi_minus_one_sum(const std::vector<u64>& ds) {
    u64 s = 0;
    for (u64 d : ds) s += euler_phi(d) - 1;
    return s;
}

} // namespace

AlphaBreakdown alpha_exponent(const GroupSpec& spec) {
    const u64 m = spec.m, n = spec.n;
    AlphaBreakdown out;
    const Factorization mf = factorize(m);
    const bool m_prime = mf.prime_powers.size() == 1 && mf.prime_powers[0].second == 1 && m > 1;
    const bool m_pq = mf.prime_powers.size() == 2 && mf.prime_powers[0].second == 1 &&
                      mf.prime_powers[1].second == 1;
    const bool m_p2 = mf.prime_powers.size() == 1 && mf.prime_powers[0].second == 2;

    if (m_prime && n % m == 0) {
        const u64 p = m;
        const auto fam = enumerate_prime_family(p, n);
        const auto& cls = fam.profile.divisor_classes;
        out.alpha = p * phi_minus_one_sum(cls[0]) + (p + 1) * phi_minus_one_sum(cls[1]) +
                    phi_minus_one_sum(cls[2]);
        out.formula = "family:p*n";
        return out;
    }
    if (m_pq && n % m == 0) {
        const u64 p = mf.prime_powers[0].first, q = mf.prime_powers[1].first;
        const auto fam = enumerate_prime_pair_family(p, q, n);
        const auto& cls = fam.profile.divisor_classes;
        const u64 w[9] = {1,         p + 1,      p,      q + 1, q,
                          p * q + p + q + 1, p * q + p, p * q + q, p * q};
        u64 a = 0;
        for (int i = 0; i < 9; ++i) a += w[i] * phi_minus_one_sum(cls[i]);
        out.alpha = a;
        out.formula = "family:pq*n";
        return out;
    }
    if (m_p2 && n % m == 0) {
        const u64 p = mf.prime_powers[0].first;
        const auto fam = enumerate_prime_square_family(p, n);
        const auto& cls = fam.profile.divisor_classes;
        // class counts {p^2, p^2+p, p+1, 1}
        out.alpha = p * p * phi_minus_one_sum(cls[0]) + (p * p + p) * phi_minus_one_sum(cls[1]) +
                    (p + 1) * phi_minus_one_sum(cls[2]) + phi_minus_one_sum(cls[3]);
        // alternative weight ordering {p, p+1, p^2, p^2+p}, kept for comparison
        out.variant_value = (long)(p * phi_minus_one_sum(cls[0]) +
                                        (p + 1) * phi_minus_one_sum(cls[1]) +
                                        p * p * phi_minus_one_sum(cls[2]) +
                                        (p * p + p) * phi_minus_one_sum(cls[3]));
        out.formula = "family:p2*n";
        return out;
    }
    if (m_p2 && n % mf.prime_powers[0].first == 0) {
        const u64 p = mf.prime_powers[0].first;
        const auto fam = enumerate_prime_square_partial_family(p, n);
        const auto& cls = fam.profile.divisor_classes;
        u64 a = phi_minus_one_sum(cls[0]) + (p + 1) * phi_minus_one_sum(cls[1]);
        for (u64 d : cls[2]) a += p * (euler_phi(d * p * p) - 1);
        out.alpha = a;
        out.formula = "family:p2*n-partial";
        return out;
    }
    out.alpha = spec.vertices() - all_cyclic_subgroups(spec).size();
    out.formula = "generic";
    return out;
}

double EigenvalueExpr::approx() const {
    long double v = (long double)a0;
    if (a1) v += (long double)a1 * sqrtl((long double)disc);
    return double(v / (long double)den);
}

std::string EigenvalueExpr::str() const {
    std::ostringstream os;
    if (a1 == 0) {
        if (a0 % den == 0) {
            os << a0 / den;
        } else {
            os << a0 << "/" << den;
        }
        return os.str();
    }
    os << "(" << a0;
    if (a1 == 1)
        os << "+";
    else if (a1 == -1)
        os << "-";
    else if (a1 > 0)
        os << "+" << a1 << "*";
    else
        os << "-" << -a1 << "*";
    os << "sqrt(" << disc << ")";
    os << ")";
    if (den != 1) os << "/" << den;
    return os.str();
}

ClosedFormSpectrum spectrum_p_pq(u64 p, u64 q) {
    require(is_prime(p) && is_prime(q) && p != q, "spectrum_p_pq: p, q must be distinct primes");
    ClosedFormSpectrum cf;
    cf.family = "p*pq";
    cf.group = GroupSpec{std::uint32_t(p), std::uint32_t(p * q)};
    cf.p = p;
    cf.q = q;
    cf.total = p * p * q;
    const long P = (long)p, Q = (long)q;
    cf.fixed.push_back({{-1, 0, 0, 1}, p * p * q - p - 4});
    cf.fixed.push_back({{(P - 1) * Q - 1, 0, 0, 1}, p});
    // monic residual quartic
    mpz_class mp(P), mq(Q);
    mpz_class c3 = -(mp * mq - 4);
    mpz_class c2 = -(mp * mp * mq * mq - mp * mp * mq - mp * mq * mq + 3 * mp * mq + mp * mp + mq - 7);
    mpz_class c1 = -(-mp * mp * mp * (mq - 1) * (mq - 1) + 3 * mp * mp * mq * mq - 5 * mp * mp * mq -
                     mp * mq * mq + 4 * mp * mp - mq * mq + mp * mq + mp + 5 * mq - 8);
    mpz_class c0 = -(-mp * mp * mp * mp * (mq - 1) * (mq - 1) + 3 * mp * mp * mq * mq -
                     6 * mp * mp * mq - mp * mq * mq + mp * mq + 4 * mp * mp - mq * mq + 4 * mq - 4);
    cf.residual_formula = IntPoly(std::vector<mpz_class>{c0, c1, c2, c3, 1});
    const long pair_val = (long)(euler_phi(p * q) + euler_phi(p)) - 1;
    cf.block_factors.push_back({{-1, 0, 0, 1}, p});
    cf.block_factors.push_back({{pair_val, 0, 0, 1}, p});
    return cf;
}

ClosedFormSpectrum spectrum_p2_p2(u64 p) {
    require(is_prime(p), "spectrum_p2_p2: p must be prime");
    ClosedFormSpectrum cf;
    cf.family = "p2*p2";
    cf.group = GroupSpec{std::uint32_t(p * p), std::uint32_t(p * p)};
    cf.p = p;
    cf.total = p * p * p * p;
    const long P = (long)p;
    cf.fixed.push_back({{-1, 0, 0, 1}, p * p * p * p - p * p - 2 * p - 2});
    cf.fixed.push_back({{P * P - P - 1, 0, 0, 1}, p * p - 1});
    const u64 disc = 5 * p * p - 2 * p + 1;
    cf.fixed.push_back({{P * P - 3, P - 1, disc, 2}, p});
    cf.fixed.push_back({{P * P - 3, -(P - 1), disc, 2}, p});
    mpz_class mp(P);
    mpz_class d2 = 3 - mp * mp;
    mpz_class d1 = -2 * mp * mp * mp * mp + 3 * mp * mp * mp - 4 * mp * mp + mp + 3;
    mpz_class d0 = -mp * mp * mp * mp * mp + mp * mp * mp * mp - 2 * mp * mp + mp + 1;
    cf.residual_formula = IntPoly(std::vector<mpz_class>{d0, d1, d2, 1});
    return cf;
}

namespace {

QPoly det_qpoly(const std::vector<QPoly>& m, std::size_t n) {
    if (n == 1) return m[0];
    QPoly det;
    std::vector<QPoly> minor((n - 1) * (n - 1));
    for (std::size_t r = 0; r < n; ++r) {
        if (m[r * n].is_zero()) continue;
        std::size_t mi = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            for (std::size_t j = 1; j < n; ++j) minor[mi++] = m[i * n + j];
        }
        QPoly term = m[r * n] * det_qpoly(minor, n - 1);
        det = (r % 2 == 0) ? det + term : det - term;
    }
    return det;
}

mpq_class mq(long num, long den) {
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

// (k - 1 - x) / k
QPoly ratio_entry(u64 k) {
    return QPoly(std::vector<mpq_class>{mq((long)k - 1, (long)k), mq(-1, (long)k)});
}

} // namespace

ClosedFormSpectrum spectrum_p2_pq(u64 p, u64 q) {
    require(is_prime(p) && is_prime(q) && p != q, "spectrum_p2_pq: p, q must be distinct primes");
    ClosedFormSpectrum cf;
    cf.family = "p2*pq";
    cf.group = GroupSpec{std::uint32_t(p * p), std::uint32_t(p * q)};
    cf.p = p;
    cf.q = q;
    cf.total = p * p * p * q;
    const long P = (long)p, Q = (long)q;
    cf.fixed.push_back({{-1, 0, 0, 1}, p * p * p * q - 2 * p - 6});
    cf.fixed.push_back({{P * P * Q - P * Q - 1, 0, 0, 1}, p - 1});
    cf.fixed.push_back({{P * Q - Q - 1, 0, 0, 1}, p - 1});
    cf.block_factors.push_back({{-1, 0, 0, 1}, p - 1});
    cf.block_factors.push_back({{P * P * Q - P * Q - 1, 0, 0, 1}, p - 1});
    cf.block_factors.push_back({{-1, 0, 0, 1}, p - 1});
    cf.block_factors.push_back({{P * Q - Q - 1, 0, 0, 1}, p - 1});

    // 6x6 determinant with entries rational in x, cleared by the totient product
    const u64 A = euler_phi(p * p * q), B = euler_phi(p * p), C = euler_phi(p * q),
              D = euler_phi(p), E = euler_phi(q);
    const QPoly a = ratio_entry(A), b = ratio_entry(B), c = ratio_entry(C), d = ratio_entry(D),
                e = ratio_entry(E);
    const QPoly f = QPoly(std::vector<mpq_class>{0, -1});
    const QPoly one(1), zero;
    const QPoly pq_(mpq_class((long)p));
    auto cnst = [](long v) { return QPoly(std::vector<mpq_class>{mpq_class(v)}); };
    std::vector<QPoly> M = {
        one - a * b, zero,        -b,            one - b,        -b,                 one - b,
        one,         zero,        c,             one,            one,                one,
        zero,        one - c * d, zero,          zero,           -d,                 one - d,
        one - a,     zero,        one - cnst(P), d - cnst(P),    -cnst(P),           one - cnst(P),
        one,         one,         one,           zero,           e,                  one,
        one - a,     one - c,     one - cnst(P), one - cnst(P),  one - cnst(2 * P),  f - cnst(2 * P)};
    QPoly det = det_qpoly(M, 6);
    mpz_class w = mpz_class((unsigned long)A) * (unsigned long)B;
    w *= mpz_class((unsigned long)C) * (unsigned long)C;
    w *= mpz_class((unsigned long)D) * (unsigned long)D;
    w *= (unsigned long)E;
    QPoly scaled = det * mpq_class(w);
    IntPoly res = scaled.to_intpoly();
    if (res.is_zero() || res.degree() != 8)
        throw std::logic_error("spectrum_p2_pq: residual determinant is not of degree 8");
    if (sgn(res.leading()) < 0) res = -res;
    cf.residual_formula = res;
    return cf;
}

ClosedFormValidation validate_closed_form(const ClosedFormSpectrum& cf, const IntPoly& oracle) {
    ClosedFormValidation val;
    val.fixed_ok = true;
    if (!oracle.is_monic() || (u64)oracle.degree() != cf.total) {
        val.fixed_ok = false;
        val.notes.push_back("oracle polynomial does not match the group order");
        return val;
    }
    IntPoly work = oracle;
    std::vector<char> done(cf.fixed.size(), 0);
    for (std::size_t i = 0; i < cf.fixed.size(); ++i) {
        if (done[i]) continue;
        const auto& fe = cf.fixed[i];
        if (fe.value.a1 == 0) {
            mpz_class lambda(fe.value.a0);
            if (fe.value.den != 1) {
                val.fixed_ok = false;
                val.notes.push_back("non-integer fixed eigenvalue " + fe.value.str());
                continue;
            }
            const unsigned mult = root_multiplicity(oracle, lambda);
            if (mult != fe.multiplicity) {
                val.fixed_ok = false;
                std::ostringstream os;
                os << "eigenvalue " << fe.value.str() << ": multiplicity " << mult
                   << " differs from claimed " << fe.multiplicity;
                val.notes.push_back(os.str());
            }
            IntPoly lin = IntPoly::linear(-lambda, 1);
            for (u64 k = 0; k < std::min<u64>(fe.multiplicity, mult); ++k)
                work = work.divexact(lin);
            done[i] = 1;
        } else {
            // conjugate pair: monic quadratic x^2 - (2 a0/den) x + (a0^2 - a1^2 disc)/den^2
            std::size_t j = i + 1;
            while (j < cf.fixed.size() &&
                   !(cf.fixed[j].value.a1 == -fe.value.a1 && cf.fixed[j].value.a0 == fe.value.a0 &&
                     cf.fixed[j].value.disc == fe.value.disc && cf.fixed[j].value.den == fe.value.den))
                ++j;
            if (j == cf.fixed.size() || cf.fixed[j].multiplicity != fe.multiplicity) {
                val.fixed_ok = false;
                val.notes.push_back("unpaired irrational eigenvalue " + fe.value.str());
                done[i] = 1;
                continue;
            }
            const long a0 = fe.value.a0, a1 = fe.value.a1, den = fe.value.den;
            mpz_class tr = 2 * mpz_class(a0);
            mpz_class nrm = mpz_class(a0) * a0 - mpz_class(a1) * a1 * mpz_class((long)fe.value.disc);
            if (tr % den != 0 || nrm % (mpz_class(den) * den) != 0) {
                val.fixed_ok = false;
                val.notes.push_back("quadratic pair for " + fe.value.str() + " is not an algebraic integer");
                done[i] = done[j] = 1;
                continue;
            }
            IntPoly quad(std::vector<mpz_class>{nrm / (mpz_class(den) * den), -(tr / den), 1});
            const unsigned mult = factor_multiplicity(oracle, quad);
            if (mult != fe.multiplicity) {
                val.fixed_ok = false;
                std::ostringstream os;
                os << "eigenvalue pair " << fe.value.str() << ": multiplicity " << mult
                   << " differs from claimed " << fe.multiplicity;
                val.notes.push_back(os.str());
            }
            for (u64 k = 0; k < std::min<u64>(fe.multiplicity, mult); ++k)
                work = work.divexact(quad);
            done[i] = done[j] = 1;
        }
    }
    val.residual_derived = work;
    IntPoly formula = cf.residual_formula;
    if (!formula.is_zero() && sgn(formula.leading()) < 0) formula = -formula;
    val.residual_matches = (formula == work);
    if (!val.residual_matches) {
        const int dmax = std::max(formula.degree(), work.degree());
        for (int k = 0; k <= dmax; ++k)
            if (formula.coeff(k) != work.coeff(k)) val.mismatched_coefficients.push_back(k);
    }
    return val;
}

DispatchResult dispatch(const GroupSpec& spec, Method method) {
    require(spec.m >= 1 && spec.n >= 1, "dispatch: m, n must be positive");
    DispatchResult res;
    res.given = spec;
    const auto [g, l] = gcd_lcm(spec.m, spec.n);
    res.normalized = GroupSpec{std::uint32_t(g), std::uint32_t(l)};

    if (method == Method::Direct) {
        res.charpoly = charpoly_dense(to_matrix(build_adjacency(spec)));
        res.alpha = spec.vertices() - all_cyclic_subgroups(spec).size();
        res.method = "direct";
        return res;
    }

    const QuotientCharpoly qc = charpoly_via_quotient(spec);
    res.charpoly = qc.full;
    res.alpha = qc.alpha;

    // closed-form family detection on the invariant-factor form (g, l)
    std::optional<ClosedFormSpectrum> cf;
    if (method != Method::Quotient && g > 1 && is_prime(g)) {
        const u64 p = g;
        if (l / p != p && is_prime(l / p)) {
            cf = spectrum_p_pq(p, l / p);
        } else if (l % (p * p) == 0) {
            const u64 rest = l / (p * p);
            if (rest != p && is_prime(rest))
                cf = spectrum_p2_pq(p, rest);
        }
    }
    if (!cf && method != Method::Quotient && g == l && g > 1) {
        const Factorization f = factorize(g);
        if (f.prime_powers.size() == 1 && f.prime_powers[0].second == 2)
            cf = spectrum_p2_p2(f.prime_powers[0].first);
    }

    if (method == Method::Formula && !cf)
        throw std::invalid_argument("dispatch: no closed form applies to this group");

    if (cf) {
        res.validation = validate_closed_form(*cf, qc.full);
        res.closed_form = std::move(cf);
        res.method = "formula:" + res.closed_form->family;
    } else {
        res.method = (g == 1) ? "quotient:cyclic" : "quotient";
    }
    return res;
}

} // namespace pgspectra
