#include "pgspectra/partition.hpp"

#include <bit>
#include <string>

namespace pgspectra {

namespace {

void check_partition(const std::vector<std::vector<std::uint32_t>>& classes, std::size_t V) {
    std::vector<char> seen(V, 0);
    std::size_t covered = 0;
    for (const auto& cls : classes) {
        if (cls.empty())
            throw std::invalid_argument("partition: empty class");
        for (std::uint32_t v : cls) {
            if (v >= V)
                throw std::invalid_argument("partition: vertex out of range");
            if (seen[v])
                throw std::invalid_argument("partition: vertex " + std::to_string(v) +
                                            " appears in two classes");
            seen[v] = 1;
            ++covered;
        }
    }
    if (covered != V)
        throw std::invalid_argument("partition: does not cover the vertex set");
}

// Per-class bit masks over vertex indices.
std::vector<std::vector<std::uint64_t>> class_masks(
    const std::vector<std::vector<std::uint32_t>>& classes, std::size_t words) {
    std::vector<std::vector<std::uint64_t>> masks(classes.size(),
                                                  std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::uint32_t v : classes[i])
            masks[i][v >> 6] |= std::uint64_t(1) << (v & 63);
    return masks;
}

long count_in_class(const AdjacencyMatrix& adj, std::uint32_t v,
                         const std::vector<std::uint64_t>& mask) {
    const std::uint64_t* r = adj.adj.row(v);
    long c = 0;
    for (std::size_t w = 0; w < mask.size(); ++w)
        c += std::popcount(r[w] & mask[w]);
    return c;
}

} // namespace

bool verify_equitable(const std::vector<std::vector<std::uint32_t>>& classes,
                      const AdjacencyMatrix& adj) {
    check_partition(classes, adj.size());
    const auto masks = class_masks(classes, adj.adj.words_per_row());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (std::size_t j = 0; j < classes.size(); ++j) {
            const long expected = count_in_class(adj, classes[i][0], masks[j]);
            for (std::size_t k = 1; k < classes[i].size(); ++k)
                if (count_in_class(adj, classes[i][k], masks[j]) != expected)
                    return false;
        }
    }
    return true;
}

QuotientMatrix quotient_matrix(const std::vector<std::vector<std::uint32_t>>& classes,
                               const AdjacencyMatrix& adj) {
    check_partition(classes, adj.size());
    const std::size_t l = classes.size();
    const auto masks = class_masks(classes, adj.adj.words_per_row());
    QuotientMatrix q;
    q.size = l;
    q.entries.assign(l * l, 0);
    q.class_sizes.reserve(l);
    for (const auto& cls : classes) q.class_sizes.push_back(cls.size());
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < l; ++j) {
            const long expected = count_in_class(adj, classes[i][0], masks[j]);
            for (std::size_t k = 1; k < classes[i].size(); ++k)
                if (count_in_class(adj, classes[i][k], masks[j]) != expected)
                    throw not_equitable_error(
                        "quotient_matrix: classes " + std::to_string(i) + "," + std::to_string(j) +
                        " disagree at vertex " + std::to_string(classes[i][k]));
            q.entries[i * l + j] = expected;
        }
    }
    return q;
}

QuotientMatrix quotient_matrix(const RhoPartition& partition, const AdjacencyMatrix& adj) {
    QuotientMatrix q = quotient_matrix(partition.classes, adj);
    q.orders = partition.class_orders;
    return q;
}

} // namespace pgspectra
