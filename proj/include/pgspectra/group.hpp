#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "pgspectra/numtheory.hpp"

namespace pgspectra {

/// The direct product Z_m x Z_n, written additively.
struct GroupSpec {
    std::uint32_t m = 1;
    std::uint32_t n = 1;

    u64 vertices() const { return u64(m) * n; }
    bool operator==(const GroupSpec&) const = default;
};

/// Element (a, b) with 0 <= a < m, 0 <= b < n.
struct GroupElement {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    auto operator<=>(const GroupElement&) const = default;
};

/// A cyclic subgroup together with its generator set.
/// `elements` and `generators` are sorted; |generators| = phi(order);
/// `canonical_generator` is the least generator.
struct CyclicSubgroup {
    std::vector<GroupElement> elements;
    std::vector<GroupElement> generators;
    u64 order = 1;
    GroupElement canonical_generator;
};

/// Row-major vertex numbering a*n + b.
std::size_t vertex_index(GroupElement g, const GroupSpec& spec);
GroupElement element_at(std::size_t idx, const GroupSpec& spec);

GroupElement scalar_multiple(u64 k, GroupElement g, const GroupSpec& spec);

/// lcm(m/gcd(a,m), n/gcd(b,n)); the least t >= 1 with t*g = (0,0).
u64 element_order(GroupElement g, const GroupSpec& spec);

CyclicSubgroup cyclic_subgroup(GroupElement g, const GroupSpec& spec);

/// Every distinct cyclic subgroup, ascending by (order, canonical generator).
/// The generator sets partition the element set.
std::vector<CyclicSubgroup> all_cyclic_subgroups(const GroupSpec& spec);

/// True iff s2 is contained in s1 (not necessarily strictly).
bool subgroup_contains(const CyclicSubgroup& s1, const CyclicSubgroup& s2);

} // namespace pgspectra
