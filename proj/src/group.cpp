#include "pgspectra/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pgspectra {

std::size_t vertex_index(GroupElement g, const GroupSpec& spec) {
    return std::size_t(g.a) * spec.n + g.b;
}

GroupElement element_at(std::size_t idx, const GroupSpec& spec) {
    return GroupElement{std::uint32_t(idx / spec.n), std::uint32_t(idx % spec.n)};
}

GroupElement scalar_multiple(u64 k, GroupElement g, const GroupSpec& spec) {
    return GroupElement{std::uint32_t(k * g.a % spec.m), std::uint32_t(k * g.b % spec.n)};
}

u64 element_order(GroupElement g, const GroupSpec& spec) {
    const u64 oa = spec.m / std::gcd<u64>(g.a, spec.m);
    const u64 ob = spec.n / std::gcd<u64>(g.b, spec.n);
    return std::lcm(oa, ob);
}

CyclicSubgroup cyclic_subgroup(GroupElement g, const GroupSpec& spec) {
    CyclicSubgroup s;
    s.order = element_order(g, spec);
    s.elements.reserve(s.order);
    GroupElement cur{0, 0};
    for (u64 k = 0; k < s.order; ++k) {
        s.elements.push_back(cur);
        if (std::gcd(k, s.order) == 1)
            s.generators.push_back(cur);
        cur = GroupElement{std::uint32_t((cur.a + g.a) % spec.m),
                           std::uint32_t((cur.b + g.b) % spec.n)};
    }
    std::sort(s.elements.begin(), s.elements.end());
    std::sort(s.generators.begin(), s.generators.end());
    s.canonical_generator = s.generators.front();
    return s;
}

std::vector<CyclicSubgroup> all_cyclic_subgroups(const GroupSpec& spec) {
    if (spec.m == 0 || spec.n == 0)
        throw std::invalid_argument("all_cyclic_subgroups: m, n must be positive");
    const u64 V = spec.vertices();
    std::vector<char> seen(V, 0);
    std::vector<CyclicSubgroup> subs;
    for (u64 idx = 0; idx < V; ++idx) {
        if (seen[idx]) continue;
        CyclicSubgroup s = cyclic_subgroup(element_at(idx, spec), spec);
        for (const GroupElement& t : s.generators)
            seen[vertex_index(t, spec)] = 1;
        subs.push_back(std::move(s));
    }
    std::sort(subs.begin(), subs.end(), [](const CyclicSubgroup& x, const CyclicSubgroup& y) {
        if (x.order != y.order) return x.order < y.order;
        return x.canonical_generator < y.canonical_generator;
    });
    return subs;
}

bool subgroup_contains(const CyclicSubgroup& s1, const CyclicSubgroup& s2) {
    if (s2.order > s1.order || s1.order % s2.order != 0) return false;
    // <g> lies in S iff g lies in S.
    return std::binary_search(s1.elements.begin(), s1.elements.end(), s2.canonical_generator);
}

} // namespace pgspectra
