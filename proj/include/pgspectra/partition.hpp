#pragma once

#include <stdexcept>
#include <vector>

#include "pgspectra/powergraph.hpp"

namespace pgspectra {

struct not_equitable_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Neighbour-count matrix of an equitable partition. For generator-class
/// partitions: diagonal = class size - 1, off-diagonal entries are 0 or the
/// neighbouring class size, row sums equal vertex degrees.
struct QuotientMatrix {
    std::size_t size = 0;
    std::vector<long> entries;      // row-major
    std::vector<u64> orders;             // subgroup order per class (empty for ad-hoc partitions)
    std::vector<std::size_t> class_sizes;

    long at(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
};

/// True iff every vertex of class i has the same number of neighbours in
/// class j, for all ordered (i, j). Throws std::invalid_argument when
/// `classes` does not partition the vertex set.
bool verify_equitable(const std::vector<std::vector<std::uint32_t>>& classes,
                      const AdjacencyMatrix& adj);

/// Builds the neighbour-count matrix, checking every representative of every
/// class; throws not_equitable_error on the first disagreement.
QuotientMatrix quotient_matrix(const std::vector<std::vector<std::uint32_t>>& classes,
                               const AdjacencyMatrix& adj);
QuotientMatrix quotient_matrix(const RhoPartition& partition, const AdjacencyMatrix& adj);

} // namespace pgspectra
