#include <doctest.h>

#include <cmath>
#include <set>

#include "oracle.hpp"
#include "pgspectra/formulas.hpp"

using namespace pgspectra;

namespace {

IntPoly P(std::vector<long> coeffs) {
    std::vector<mpz_class> c(coeffs.begin(), coeffs.end());
    return IntPoly(std::move(c));
}

std::set<oracle::ElemSet> recipe_sets(const FamilyEnumeration& fam) {
    std::set<oracle::ElemSet> sets;
    for (const auto& r : fam.subgroups) {
        const CyclicSubgroup s = materialize(r, fam.group);
        CHECK(s.order == r.order);
        oracle::ElemSet es;
        for (const GroupElement& g : s.elements) es.insert({g.a, g.b});
        sets.insert(std::move(es));
    }
    return sets;
}

void check_family(const FamilyEnumeration& fam) {
    const auto sets = recipe_sets(fam);
    CHECK(sets.size() == fam.subgroups.size()); // recipes pairwise distinct
    CHECK(sets == oracle::all_subgroup_sets(fam.group));
}

} // namespace

TEST_CASE("prime family enumeration") {
    // counts per divisor class: p for p^2|d, p+1 for p||d, 1 otherwise
    const FamilyEnumeration f36 = enumerate_prime_family(3, 6);
    CHECK(f36.subgroups.size() == 10);
    check_family(f36);
    CHECK(enumerate_prime_family(2, 2).subgroups.size() == 4);
    CHECK(enumerate_prime_family(2, 4).subgroups.size() == 6);
    for (u64 p : {2, 3, 5})
        for (u64 n = p; p * n <= 300; n += p) {
            const FamilyEnumeration fam = enumerate_prime_family(p, n);
            check_family(fam);
            // divisor classes partition the divisors; the p||d class is nonempty
            u64 counted = 0;
            for (const auto& [name, c] : fam.profile.counters) counted += c;
            CHECK(counted == divisors(n).size());
            CHECK(fam.profile.counters[1].second >= 1);
        }
    CHECK_THROWS_AS(enumerate_prime_family(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_prime_family(4, 8), std::invalid_argument);
}

TEST_CASE("prime pair family enumeration") {
    CHECK(enumerate_prime_pair_family(2, 3, 6).subgroups.size() == 20);
    CHECK(enumerate_prime_pair_family(2, 3, 12).subgroups.size() == 30);
    // order-12 divisor class contributes pq + p subgroups
    {
        const auto fam = enumerate_prime_pair_family(2, 3, 12);
        std::size_t of_order_12 = 0;
        for (const auto& r : fam.subgroups)
            if (r.order == 12) ++of_order_12;
        CHECK(of_order_12 == 8);
    }
    for (u64 n : {6, 12, 18, 24, 30, 36, 48, 54, 60})
        check_family(enumerate_prime_pair_family(2, 3, n));
    check_family(enumerate_prime_pair_family(3, 2, 6));
    check_family(enumerate_prime_pair_family(2, 5, 10));
    check_family(enumerate_prime_pair_family(5, 2, 20));
    CHECK_THROWS_AS(enumerate_prime_pair_family(2, 3, 8), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_prime_pair_family(2, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_prime_pair_family(2, 9, 18), std::invalid_argument);
}

TEST_CASE("prime square family enumeration") {
    CHECK(enumerate_prime_square_family(2, 4).subgroups.size() == 10);
    CHECK(enumerate_prime_square_family(2, 8).subgroups.size() == 14);
    // p + 1 subgroups of order p for any valid n
    for (u64 n : {4, 8, 12, 16, 20, 24, 36}) {
        const auto fam = enumerate_prime_square_family(2, n);
        std::size_t of_order_p = 0;
        for (const auto& r : fam.subgroups)
            if (r.order == 2) ++of_order_p;
        CHECK(of_order_p == 3);
        // the p^2||d and p||d divisor classes are nonempty whenever p^2 | n
        CHECK(fam.profile.counters[1].second >= 1);
        CHECK(fam.profile.counters[2].second >= 1);
        check_family(fam);
    }
    check_family(enumerate_prime_square_family(3, 9));
    check_family(enumerate_prime_square_family(3, 18));
    CHECK_THROWS_AS(enumerate_prime_square_family(2, 6), std::invalid_argument);
}

TEST_CASE("prime square partial family enumeration") {
    CHECK(enumerate_prime_square_partial_family(2, 6).subgroups.size() == 12);
    CHECK(enumerate_prime_square_partial_family(2, 2).subgroups.size() == 6);
    for (u64 n : {2, 6, 10, 14, 18, 22})
        check_family(enumerate_prime_square_partial_family(2, n));
    for (u64 n : {3, 6, 12, 15})
        check_family(enumerate_prime_square_partial_family(3, n));
    CHECK_THROWS_AS(enumerate_prime_square_partial_family(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_prime_square_partial_family(2, 3), std::invalid_argument);
}

TEST_CASE("alpha exponent") {
    CHECK(alpha_exponent({3, 6}).alpha == 8);
    CHECK(alpha_exponent({1, 1}).alpha == 0);
    CHECK(alpha_exponent({1, 1}).formula == "generic");

    const AlphaBreakdown a44 = alpha_exponent({4, 4});
    CHECK(a44.alpha == 6);
    CHECK(a44.formula == "family:p2*n");
    REQUIRE(a44.variant_value.has_value());
    CHECK(*a44.variant_value == 3); // alternative weight ordering disagrees here

    // closed forms agree with vertices - classes everywhere they apply
    for (std::uint32_t m : {2, 3, 4, 5, 6, 9})
        for (std::uint32_t n = 1; m * n <= 150; ++n) {
            const GroupSpec spec{m, n};
            const AlphaBreakdown ab = alpha_exponent(spec);
            CHECK(ab.alpha == spec.vertices() - all_cyclic_subgroups(spec).size());
        }
}

TEST_CASE("closed form spectrum for Z_p x Z_pq") {
    const ClosedFormSpectrum cf = spectrum_p_pq(3, 2);
    CHECK(cf.total == 18);
    REQUIRE(cf.fixed.size() == 2);
    CHECK(cf.fixed[0].value.str() == "-1");
    CHECK(cf.fixed[0].multiplicity == 11);
    CHECK(cf.fixed[1].value.str() == "3");
    CHECK(cf.fixed[1].multiplicity == 3);
    CHECK(cf.residual_formula == P({51, -22, -28, -2, 1}));
    // intermediate block pair (-1, phi(pq)+phi(p)-1), each multiplicity p
    REQUIRE(cf.block_factors.size() == 2);
    CHECK(cf.block_factors[0].value.str() == "-1");
    CHECK(cf.block_factors[1].value.str() == "3");
    CHECK(cf.block_factors[1].multiplicity == 3);

    for (auto [p, q] : std::vector<std::pair<u64, u64>>{{2, 3}, {3, 2}, {2, 5}, {5, 2}}) {
        const ClosedFormSpectrum c = spectrum_p_pq(p, q);
        const IntPoly oraclepoly =
            charpoly_dense(to_matrix(build_adjacency({std::uint32_t(p), std::uint32_t(p * q)})));
        const ClosedFormValidation val = validate_closed_form(c, oraclepoly);
        CHECK(val.fixed_ok);
        CHECK(val.residual_matches);
        CHECK(val.mismatched_coefficients.empty());
        u64 fixed_mult = 0;
        for (const auto& fe : c.fixed) fixed_mult += fe.multiplicity;
        CHECK(fixed_mult + val.residual_derived.degree() == c.total);
    }
    CHECK_THROWS_AS(spectrum_p_pq(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(spectrum_p_pq(2, 9), std::invalid_argument);
}

TEST_CASE("closed form spectrum for Z_p2 x Z_p2") {
    const ClosedFormSpectrum cf = spectrum_p2_p2(2);
    CHECK(cf.total == 16);
    REQUIRE(cf.fixed.size() == 4);
    CHECK(cf.fixed[0].multiplicity == 6);  // -1
    CHECK(cf.fixed[1].value.str() == "1"); // p^2-p-1
    CHECK(cf.fixed[1].multiplicity == 3);
    CHECK(cf.fixed[2].value.str() == "(1+sqrt(17))/2");
    CHECK(cf.fixed[2].multiplicity == 2);
    CHECK(std::abs(cf.fixed[2].value.approx() - (1 + std::sqrt(17.0)) / 2) < 1e-12);
    CHECK(cf.residual_formula == P({-21, -19, -1, 1}));

    const IntPoly oraclepoly = charpoly_dense(to_matrix(build_adjacency({4, 4})));
    const ClosedFormValidation val = validate_closed_form(cf, oraclepoly);
    CHECK(val.fixed_ok);
    CHECK(val.residual_matches);
}

TEST_CASE("closed form spectrum for Z_p2 x Z_pq flags the residual mismatch") {
    const ClosedFormSpectrum cf = spectrum_p2_pq(2, 3);
    CHECK(cf.total == 24);
    REQUIRE(cf.fixed.size() == 3);
    CHECK(cf.fixed[0].multiplicity == 14); // -1
    CHECK(cf.fixed[1].value.str() == "5"); // p^2 q - pq - 1
    CHECK(cf.fixed[1].multiplicity == 1);
    CHECK(cf.fixed[2].value.str() == "2"); // pq - q - 1
    CHECK(cf.fixed[2].multiplicity == 1);
    // exact expansion of the printed 6x6 determinant
    CHECK(cf.residual_formula == P({-287, -1568, -1192, 404, 502, 16, -48, -4, 1}));

    const IntPoly oraclepoly = charpoly_dense(to_matrix(build_adjacency({4, 6})));
    const ClosedFormValidation val = validate_closed_form(cf, oraclepoly);
    CHECK(val.fixed_ok); // the fixed eigenvalues and multiplicities are right
    CHECK(val.residual_derived == P({-446, -4147, -3471, 651, 1077, 79, -73, -7, 1}));
    CHECK_FALSE(val.residual_matches); // the printed determinant does not reproduce them
    CHECK_FALSE(val.mismatched_coefficients.empty());
    // flag list is precisely the set of differing degrees
    for (int k = 0; k <= 8; ++k) {
        const bool differs = cf.residual_formula.coeff(k) != val.residual_derived.coeff(k);
        const bool flagged = std::find(val.mismatched_coefficients.begin(),
                                       val.mismatched_coefficients.end(),
                                       k) != val.mismatched_coefficients.end();
        CHECK(differs == flagged);
    }
}

TEST_CASE("dispatch method selection") {
    CHECK(dispatch({3, 6}).method == "formula:p*pq");
    CHECK(dispatch({6, 3}).method == "formula:p*pq");
    CHECK(dispatch({2, 3}).method == "quotient:cyclic");
    CHECK(dispatch({4, 6}).method == "formula:p2*pq");
    CHECK(dispatch({4, 4}).method == "formula:p2*p2");
    CHECK(dispatch({2, 4}).method == "quotient");
    CHECK(dispatch({2, 4}, Method::Direct).method == "direct");
    CHECK_FALSE(dispatch({2, 4}, Method::Quotient).closed_form.has_value());
    CHECK_THROWS_AS(dispatch({2, 4}, Method::Formula), std::invalid_argument);

    const DispatchResult r = dispatch({4, 6});
    CHECK(r.normalized == GroupSpec{2, 12});
    CHECK(r.given == GroupSpec{4, 6});
}

TEST_CASE("dispatch result equals the dense characteristic polynomial, m*n <= 60") {
    for (std::uint32_t m = 1; m <= 9; ++m)
        for (std::uint32_t n = 1; m * n <= 60; ++n) {
            const DispatchResult r = dispatch({m, n});
            CHECK(r.charpoly == charpoly_dense(to_matrix(build_adjacency({m, n}))));
        }
}
