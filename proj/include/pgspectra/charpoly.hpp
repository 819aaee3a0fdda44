#pragma once

#include <cstdint>
#include <vector>

#include "pgspectra/intpoly.hpp"
#include "pgspectra/partition.hpp"

namespace pgspectra {

/// Dense square integer matrix, row-major.
struct IMat {
    std::size_t n = 0;
    std::vector<long> a;

    static IMat zero(std::size_t n) { return IMat{n, std::vector<long>(n * n, 0)}; }
    long& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    long at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

IMat to_matrix(const AdjacencyMatrix& adj);
IMat to_matrix(const QuotientMatrix& q);

/// Monic det(xI - M) by fraction-free elimination over the integer
/// polynomial ring.
IntPoly charpoly_bareiss(const IMat& m);

/// Monic det(xI - M) by exact evaluation at deg+1 integer points followed by
/// Newton interpolation over the rationals. Independent cross-check route.
IntPoly charpoly_interpolation(const IMat& m);
IntPoly charpoly_interpolation_serial(const IMat& m);

/// Monic det(xI - M) from Hessenberg reductions modulo 62-bit primes,
/// recombined by CRT under a Hadamard-style coefficient bound.
IntPoly charpoly_modular(const IMat& m);
IntPoly charpoly_modular_serial(const IMat& m);

/// Default route: elimination over Z[x] up to charpoly_bareiss_limit(),
/// modular beyond.
IntPoly charpoly_dense(const IMat& m);
std::size_t charpoly_bareiss_limit();

/// Exact determinant (fraction-free elimination).
mpz_class determinant(const std::vector<mpz_class>& m, std::size_t n);

/// psi(A) = (1+x)^alpha * psi(Q) with alpha = vertices - classes.
struct QuotientCharpoly {
    IntPoly full;
    IntPoly quotient_part;
    u64 alpha = 0;
    QuotientMatrix quotient;
};

QuotientCharpoly charpoly_via_quotient(const GraphBundle& bundle);
QuotientCharpoly charpoly_via_quotient(const GroupSpec& spec);

} // namespace pgspectra
