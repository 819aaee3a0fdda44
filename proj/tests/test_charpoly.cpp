#include <doctest.h>

#include "oracle.hpp"
#include "pgspectra/charpoly.hpp"

using namespace pgspectra;

namespace {

IntPoly P(std::vector<long> coeffs) {
    std::vector<mpz_class> c(coeffs.begin(), coeffs.end());
    return IntPoly(std::move(c));
}

// deterministic LCG for reproducible random matrices
struct Lcg {
    u64 state;
    explicit Lcg(u64 seed) : state(seed) {}
    u64 next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 33;
    }
    long entry(long lo, long hi) { return lo + long(next() % u64(hi - lo + 1)); }
};

IMat random_matrix(std::size_t n, Lcg& rng, long lo = -5, long hi = 5) {
    IMat m = IMat::zero(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rng.entry(lo, hi);
    return m;
}

IntPoly kn_charpoly(long n) {
    // (x - (n-1)) (x+1)^(n-1)
    return IntPoly::linear(1 - n, 1) * IntPoly::binomial_power(1, unsigned(n - 1));
}

} // namespace

TEST_CASE("charpoly of tiny matrices") {
    IMat z1 = IMat::zero(1);
    CHECK(charpoly_bareiss(z1) == IntPoly::x());
    IMat swap2 = IMat::zero(2);
    swap2.at(0, 1) = swap2.at(1, 0) = 1;
    CHECK(charpoly_bareiss(swap2) == P({-1, 0, 1}));
    CHECK(charpoly_bareiss(IMat::zero(0)) == IntPoly(1));
}

TEST_CASE("complete graphs") {
    for (std::uint32_t p : {3, 5, 7, 11}) {
        const IMat adj = to_matrix(build_adjacency({1, p}));
        const IntPoly expected = kn_charpoly(p);
        CHECK(charpoly_bareiss(adj) == expected);
        CHECK(charpoly_interpolation(adj) == expected);
        CHECK(charpoly_modular(adj) == expected);
    }
}

TEST_CASE("four routes agree on random matrices") {
    Lcg rng(20240901);
    for (int iter = 0; iter < 24; ++iter) {
        const std::size_t n = 1 + iter % 6;
        const IMat m = random_matrix(n, rng);
        const IntPoly reference = oracle::leibniz_charpoly(m);
        CHECK(charpoly_bareiss(m) == reference);
        CHECK(charpoly_interpolation(m) == reference);
        CHECK(charpoly_modular(m) == reference);
    }
}

TEST_CASE("elimination, interpolation and modular routes agree on larger random matrices") {
    Lcg rng(7);
    for (std::size_t n : {12, 20, 33, 40}) {
        const IMat m = random_matrix(n, rng, -9, 9);
        const IntPoly a = charpoly_bareiss(m);
        CHECK(a == charpoly_interpolation(m));
        CHECK(a == charpoly_modular(m));
        CHECK(a == charpoly_dense(m));
    }
}

TEST_CASE("quotient factorization examples") {
    // Z3 x Z6: (x+1)^11 (x-3)^3 (x+3) (x-1) (x^2-4x-17)
    const QuotientCharpoly qc = charpoly_via_quotient(GroupSpec{3, 6});
    CHECK(qc.alpha == 8);
    const IntPoly expected = IntPoly::binomial_power(1, 11) * IntPoly::linear(-3, 1).pow(3) *
                             P({3, 1}) * P({-1, 1}) * P({-17, -4, 1});
    CHECK(qc.full == expected);
    CHECK(qc.full == charpoly_dense(to_matrix(build_adjacency({3, 6}))));

    // Z1 x Zp reduces to the complete graph
    for (std::uint32_t p : {3, 5, 11})
        CHECK(charpoly_via_quotient(GroupSpec{1, p}).full == kn_charpoly(p));

    // Z2 x Z2 star: alpha = 0, psi = x^4 - 3x^2
    const QuotientCharpoly star = charpoly_via_quotient(GroupSpec{2, 2});
    CHECK(star.alpha == 0);
    CHECK(star.full == P({0, 0, -3, 0, 1}));
}

TEST_CASE("quotient route equals dense route, m*n <= 80") {
    for (std::uint32_t m = 1; m <= 9; ++m)
        for (std::uint32_t n = 1; m * n <= 80; ++n) {
            const GraphBundle b = build_graph_bundle({m, n});
            const QuotientCharpoly qc = charpoly_via_quotient(b);
            const IntPoly dense = charpoly_dense(to_matrix(b.adjacency));
            CHECK(qc.full == dense);
            CHECK(qc.alpha == b.adjacency.size() - b.partition.size());
            // extracted factor divides with at least that multiplicity
            if (b.adjacency.size() > 1)
                CHECK(root_multiplicity(dense, -1) >= qc.alpha);
            // coefficient of x^(V-1) vanishes (zero diagonal)
            if (b.adjacency.size() > 1) CHECK(dense.coeff(b.adjacency.size() - 1) == 0);
        }
}

TEST_CASE("determinant") {
    std::vector<mpz_class> m = {mpz_class(2), mpz_class(0), mpz_class(1),
                                mpz_class(-1), mpz_class(3), mpz_class(2),
                                mpz_class(0), mpz_class(5), mpz_class(-2)};
    CHECK(determinant(m, 3) == -37);
    std::vector<mpz_class> sing = {mpz_class(1), mpz_class(2), mpz_class(2), mpz_class(4)};
    CHECK(determinant(sing, 2) == 0);
    CHECK(determinant({}, 0) == 1);
}
