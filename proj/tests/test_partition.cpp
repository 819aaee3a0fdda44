#include <doctest.h>

#include "pgspectra/charpoly.hpp"
#include "pgspectra/partition.hpp"

using namespace pgspectra;

namespace {

AdjacencyMatrix path3() {
    AdjacencyMatrix adj{{1, 3}, BitMatrix(3)};
    adj.adj.set(0, 1);
    adj.adj.set(1, 0);
    adj.adj.set(1, 2);
    adj.adj.set(2, 1);
    return adj;
}

} // namespace

TEST_CASE("whole complete graph as one class") {
    const AdjacencyMatrix kp = build_adjacency({1, 5});
    const QuotientMatrix q = quotient_matrix({{0, 1, 2, 3, 4}}, kp);
    REQUIRE(q.size == 1);
    CHECK(q.at(0, 0) == 4);
}

TEST_CASE("Z2 x Z2 quotient rows") {
    const GraphBundle b = build_graph_bundle({2, 2});
    const QuotientMatrix q = quotient_matrix(b.partition, b.adjacency);
    REQUIRE(q.size == 4);
    // identity class first: row [0,1,1,1]; order-2 rows [1,0,0,0]
    CHECK(q.at(0, 0) == 0);
    for (std::size_t j = 1; j < 4; ++j) CHECK(q.at(0, j) == 1);
    for (std::size_t i = 1; i < 4; ++i) {
        CHECK(q.at(i, 0) == 1);
        for (std::size_t j = 1; j < 4; ++j) CHECK(q.at(i, j) == 0);
    }
}

TEST_CASE("Z3 x Z6 quotient structure") {
    const GraphBundle b = build_graph_bundle({3, 6});
    const QuotientMatrix q = quotient_matrix(b.partition, b.adjacency);
    REQUIRE(q.size == 10);
    // diagonal is class size - 1: multiset {0, 0, 1 x8}
    std::size_t zeros = 0, ones = 0;
    for (std::size_t i = 0; i < 10; ++i) {
        if (q.at(i, i) == 0) ++zeros;
        if (q.at(i, i) == 1) ++ones;
    }
    CHECK(zeros == 2);
    CHECK(ones == 8);
    // identity class column is all ones away from the diagonal
    for (std::size_t i = 1; i < 10; ++i) CHECK(q.at(i, 0) == 1);
    // block between order-6 rows and order-3 columns is 2 x permutation
    std::vector<std::size_t> six, three;
    for (std::size_t i = 0; i < 10; ++i) {
        if (q.orders[i] == 6) six.push_back(i);
        if (q.orders[i] == 3) three.push_back(i);
    }
    REQUIRE(six.size() == 4);
    REQUIRE(three.size() == 4);
    for (std::size_t i : six) {
        std::size_t twos = 0;
        for (std::size_t j : three) {
            CHECK((q.at(i, j) == 0 || q.at(i, j) == 2));
            if (q.at(i, j) == 2) ++twos;
        }
        CHECK(twos == 1);
    }
    for (std::size_t j : three) {
        std::size_t twos = 0;
        for (std::size_t i : six)
            if (q.at(i, j) == 2) ++twos;
        CHECK(twos == 1);
    }
}

TEST_CASE("verify_equitable on generator-class partitions, m*n <= 100") {
    for (std::uint32_t m = 1; m <= 10; ++m)
        for (std::uint32_t n = 1; m * n <= 100; ++n) {
            const GraphBundle b = build_graph_bundle({m, n});
            CHECK(verify_equitable(b.partition.classes, b.adjacency));
        }
}

TEST_CASE("verify_equitable on a path") {
    const AdjacencyMatrix adj = path3();
    CHECK(verify_equitable({{0, 2}, {1}}, adj));
    CHECK_FALSE(verify_equitable({{0, 1}, {2}}, adj));
}

TEST_CASE("rejects non-partitions") {
    const AdjacencyMatrix adj = path3();
    CHECK_THROWS_AS(verify_equitable({{0, 1}, {1, 2}}, adj), std::invalid_argument);
    CHECK_THROWS_AS(verify_equitable({{0}, {2}}, adj), std::invalid_argument);
    CHECK_THROWS_AS(verify_equitable({{0}, {}, {1, 2}}, adj), std::invalid_argument);
    CHECK_THROWS_AS(verify_equitable({{0, 1, 2, 3}}, adj), std::invalid_argument);
}

TEST_CASE("quotient_matrix raises on non-equitable classes") {
    const std::vector<std::vector<std::uint32_t>> classes = {{0, 1}, {2}};
    CHECK_THROWS_AS(quotient_matrix(classes, path3()), not_equitable_error);
}

TEST_CASE("quotient rows sum to vertex degrees, m*n <= 100") {
    for (std::uint32_t m = 1; m <= 10; ++m)
        for (std::uint32_t n = 1; m * n <= 100; ++n) {
            const GraphBundle b = build_graph_bundle({m, n});
            const QuotientMatrix q = quotient_matrix(b.partition, b.adjacency);
            for (std::size_t i = 0; i < q.size; ++i) {
                long sum = 0;
                for (std::size_t j = 0; j < q.size; ++j) sum += q.at(i, j);
                CHECK(sum == (long)b.adjacency.degree(b.partition.classes[i][0]));
                CHECK(q.at(i, i) == (long)b.partition.classes[i].size() - 1);
            }
        }
}

TEST_CASE("quotient characteristic polynomial divides the full one, m*n <= 100") {
    for (std::uint32_t m = 1; m <= 10; ++m)
        for (std::uint32_t n = 1; m * n <= 100; ++n) {
            const GraphBundle b = build_graph_bundle({m, n});
            const QuotientMatrix q = quotient_matrix(b.partition, b.adjacency);
            const IntPoly psi_q = charpoly_dense(to_matrix(q));
            const IntPoly psi_a = charpoly_dense(to_matrix(b.adjacency));
            CHECK(psi_a.try_divexact(psi_q).has_value());
        }
}
