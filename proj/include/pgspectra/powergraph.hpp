#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pgspectra/group.hpp"

namespace pgspectra {

/// Square bit matrix with 64-bit packed rows.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n)
        : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

    std::size_t size() const { return n_; }
    std::size_t words_per_row() const { return words_; }

    bool get(std::size_t i, std::size_t j) const {
        return (bits_[i * words_ + (j >> 6)] >> (j & 63)) & 1u;
    }
    void set(std::size_t i, std::size_t j, bool v = true) {
        std::uint64_t& w = bits_[i * words_ + (j >> 6)];
        const std::uint64_t mask = std::uint64_t(1) << (j & 63);
        w = v ? (w | mask) : (w & ~mask);
    }
    const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Symmetric 0/1 adjacency with zero diagonal, vertices numbered row-major a*n + b.
struct AdjacencyMatrix {
    GroupSpec spec;
    BitMatrix adj;

    std::size_t size() const { return adj.size(); }
    std::size_t degree(std::size_t v) const;
    std::size_t edge_count() const;
    bool operator==(const AdjacencyMatrix&) const = default;
};

/// Vertex partition into generator classes, one class per cyclic subgroup,
/// in all_cyclic_subgroups order. Class i has size phi(class_orders[i]).
struct RhoPartition {
    GroupSpec spec;
    std::vector<std::vector<std::uint32_t>> classes;
    std::vector<u64> class_orders;
    std::vector<std::uint32_t> class_of; // vertex -> class index

    std::size_t size() const { return classes.size(); }
};

/// Graph on class indices: i ~ j iff one subgroup strictly contains the other.
struct InclusionGraph {
    std::size_t size = 0;
    BitMatrix adj;
};

/// Adjacency, generator-class partition and class inclusion graph computed
/// from a single subgroup enumeration.
struct GraphBundle {
    AdjacencyMatrix adjacency;
    RhoPartition partition;
    InclusionGraph inclusion;
};

GraphBundle build_graph_bundle(const GroupSpec& spec);

/// Distinct u, v adjacent iff <u> contains <v> or <v> contains <u>.
AdjacencyMatrix build_adjacency(const GroupSpec& spec);
/// Single-threaded reference for build_adjacency.
AdjacencyMatrix build_adjacency_serial(const GroupSpec& spec);
/// Independent route: u ~ v iff u is a multiple of v or v a multiple of u.
/// Intended for cross-checks at small sizes.
AdjacencyMatrix build_adjacency_power_def(const GroupSpec& spec);

RhoPartition rho_classes(const GroupSpec& spec);
InclusionGraph inclusion_graph(const GroupSpec& spec);

/// Replace class i by a complete graph and join classes across inclusion edges.
AdjacencyMatrix generalized_join(const InclusionGraph& incl, const RhoPartition& rho);

/// One "u v" pair per line, u < v, ascending.
std::string edge_list_text(const AdjacencyMatrix& adj);

} // namespace pgspectra
