#include <doctest.h>

#include "pgspectra/intpoly.hpp"

using namespace pgspectra;

namespace {

IntPoly P(std::vector<long> coeffs) {
    std::vector<mpz_class> c(coeffs.begin(), coeffs.end());
    return IntPoly(std::move(c));
}

} // namespace

TEST_CASE("multiplication") {
    CHECK(P({1, 1}) * P({-1, 1}) == P({-1, 0, 1}));
    const IntPoly p = P({-17, -4, 1});
    CHECK(p * IntPoly(1) == p);
    CHECK(p * P({-1, 1}) == P({17, -13, -5, 1}));
    CHECK(p * IntPoly() == IntPoly());
}

TEST_CASE("binomial_power and pow") {
    CHECK(IntPoly::binomial_power(1, 5) == P({1, 5, 10, 10, 5, 1}));
    CHECK(IntPoly::binomial_power(1, 0) == IntPoly(1));
    CHECK(IntPoly::binomial_power(-2, 3) == P({-8, 12, -6, 1}));
    CHECK(P({1, 1}).pow(5) == IntPoly::binomial_power(1, 5));
    CHECK(P({3, 2}).pow(0) == IntPoly(1));
}

TEST_CASE("division") {
    const IntPoly prod = P({17, -13, -5, 1});
    CHECK(prod.divexact(P({-1, 1})) == P({-17, -4, 1}));
    CHECK(prod.divexact(P({-17, -4, 1})) == P({-1, 1}));
    CHECK_THROWS_AS(prod.divexact(P({1, 1})), std::domain_error);
    CHECK_FALSE(prod.try_divexact(P({1, 1})).has_value());
    CHECK(IntPoly().divexact(P({1, 1})) == IntPoly());
    CHECK_THROWS_AS(prod.divexact(IntPoly()), std::domain_error);
    // non-monic exact divisor
    CHECK((P({2, 4}) * P({3, 5})).divexact(P({2, 4})) == P({3, 5}));
}

TEST_CASE("derivative, content, primitive part") {
    CHECK(P({5, 3, 0, 2}).derivative() == P({3, 0, 6}));
    CHECK(IntPoly(7).derivative() == IntPoly());
    CHECK(P({6, -9, 12}).content() == 3);
    CHECK(P({6, -9, 12}).primitive_part() == P({2, -3, 4}));
    CHECK(P({-6, -9}).primitive_part() == P({-2, -3}));
}

TEST_CASE("gcd") {
    const IntPoly a = P({1, 1}).pow(2) * P({-2, 1});
    const IntPoly b = P({1, 1}) * P({-3, 1});
    CHECK(poly_gcd(a, b) == P({1, 1}));
    CHECK(poly_gcd(P({-1, 0, 1}), P({2, 1})) == IntPoly(1));
    CHECK(poly_gcd(IntPoly(), b) == b);
    // content is preserved only up to sign conventions; result is primitive
    CHECK(poly_gcd(P({2, 2}) * P({3, 3}), P({1, 2, 1}) * IntPoly(6)) == P({1, 2, 1}));
}

TEST_CASE("squarefree decomposition") {
    const IntPoly f = P({1, 1}).pow(3) * P({-2, 1}).pow(2) * P({7, 0, 1});
    const SquarefreeDecomposition sf = squarefree_decomposition(f);
    CHECK(sf.constant == 1);
    IntPoly rebuilt(sf.constant);
    for (const auto& [g, e] : sf.factors) {
        rebuilt *= g.pow(e);
        CHECK(poly_gcd(g, g.derivative()).degree() == 0); // square-free
    }
    CHECK(rebuilt == f);
    // multiplicities strictly increasing
    for (std::size_t i = 1; i < sf.factors.size(); ++i)
        CHECK(sf.factors[i - 1].second < sf.factors[i].second);

    const SquarefreeDecomposition sf2 = squarefree_decomposition(P({2, 4, 2}));
    CHECK(sf2.constant == 2);
    REQUIRE(sf2.factors.size() == 1);
    CHECK(sf2.factors[0].first == P({1, 1}));
    CHECK(sf2.factors[0].second == 2);

    CHECK_THROWS_AS(squarefree_decomposition(IntPoly()), std::invalid_argument);
}

TEST_CASE("evaluation and sign") {
    const IntPoly f = P({-2, 0, 1}); // x^2 - 2
    CHECK(f.eval(3) == 7);
    CHECK(f.sign_at(mpq_class(1)) == -1);
    CHECK(f.sign_at(mpq_class(2)) == 1);
    CHECK(f.sign_at(mpq_class(0)) == -1);
    CHECK(P({-4, 0, 1}).sign_at(mpq_class(2)) == 0);
    CHECK(f.sign_at(mpq_class(3, 2)) == 1);
}

TEST_CASE("root and factor multiplicity") {
    const IntPoly f = P({1, 1}).pow(3) * P({-1, 1});
    CHECK(root_multiplicity(f, -1) == 3);
    CHECK(root_multiplicity(f, 1) == 1);
    CHECK(root_multiplicity(f, 2) == 0);
    CHECK(factor_multiplicity(f, P({1, 1})) == 3);
    CHECK(factor_multiplicity(f, P({1, 2, 1})) == 1);
}

TEST_CASE("printing") {
    CHECK(P({-17, -4, 1}).str() == "x^2 - 4*x - 17");
    CHECK(P({0, 1}).str() == "x");
    CHECK(IntPoly().str() == "0");
    CHECK(P({1, 0, -2, 3}).str() == "3*x^3 - 2*x^2 + 1");
}

TEST_CASE("rational polynomial helpers") {
    QPoly q(std::vector<mpq_class>{mpq_class(1, 2), mpq_class(1, 3)});
    const auto [ip, scale] = q.clear_denominators();
    CHECK(scale == 6);
    CHECK(ip == P({3, 2}));
    CHECK_THROWS_AS(q.to_intpoly(), std::domain_error);
    CHECK((q * mpq_class(6)).to_intpoly() == P({3, 2}));
    CHECK(QPoly(P({1, 2})).to_intpoly() == P({1, 2}));
}
