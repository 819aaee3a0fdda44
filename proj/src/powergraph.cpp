#include "pgspectra/powergraph.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace pgspectra {

std::size_t AdjacencyMatrix::degree(std::size_t v) const {
    std::size_t d = 0;
    const std::uint64_t* r = adj.row(v);
    for (std::size_t w = 0; w < adj.words_per_row(); ++w)
        d += std::popcount(r[w]);
    return d;
}

std::size_t AdjacencyMatrix::edge_count() const {
    std::size_t total = 0;
    for (std::size_t v = 0; v < size(); ++v)
        total += degree(v);
    return total / 2;
}

namespace {

struct ClassView {
    std::vector<CyclicSubgroup> subgroups;
    std::vector<std::uint32_t> class_of;  // vertex -> subgroup index
    BitMatrix comparable;                 // strict containment either way
};

ClassView make_class_view(const GroupSpec& spec) {
    ClassView cv;
    cv.subgroups = all_cyclic_subgroups(spec);
    const std::size_t l = cv.subgroups.size();
    cv.class_of.assign(spec.vertices(), 0);
    for (std::size_t i = 0; i < l; ++i)
        for (const GroupElement& g : cv.subgroups[i].generators)
            cv.class_of[vertex_index(g, spec)] = std::uint32_t(i);
    cv.comparable = BitMatrix(l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = i + 1; j < l; ++j) {
            const bool c = subgroup_contains(cv.subgroups[i], cv.subgroups[j]) ||
                           subgroup_contains(cv.subgroups[j], cv.subgroups[i]);
            if (c) {
                cv.comparable.set(i, j);
                cv.comparable.set(j, i);
            }
        }
    return cv;
}

AdjacencyMatrix fill_adjacency(const GroupSpec& spec, const ClassView& cv, bool parallel) {
    const std::size_t V = spec.vertices();
    AdjacencyMatrix out{spec, BitMatrix(V)};
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel && V > 256)
#endif
    for (long long u = 0; u < (long long)V; ++u) {
        const std::uint32_t cu = cv.class_of[u];
        for (std::size_t v = 0; v < V; ++v) {
            if (std::size_t(u) == v) continue;
            const std::uint32_t cvv = cv.class_of[v];
            if (cu == cvv || cv.comparable.get(cu, cvv))
                out.adj.set(u, v);
        }
    }
    return out;
}

RhoPartition make_partition(const GroupSpec& spec, const ClassView& cv) {
    RhoPartition rho;
    rho.spec = spec;
    rho.classes.resize(cv.subgroups.size());
    rho.class_orders.reserve(cv.subgroups.size());
    for (std::size_t i = 0; i < cv.subgroups.size(); ++i) {
        auto& cls = rho.classes[i];
        cls.reserve(cv.subgroups[i].generators.size());
        for (const GroupElement& g : cv.subgroups[i].generators)
            cls.push_back(std::uint32_t(vertex_index(g, spec)));
        rho.class_orders.push_back(cv.subgroups[i].order);
    }
    rho.class_of = cv.class_of;
    return rho;
}

InclusionGraph make_inclusion(const ClassView& cv) {
    InclusionGraph ig;
    ig.size = cv.subgroups.size();
    ig.adj = cv.comparable;
    return ig;
}

} // namespace

GraphBundle build_graph_bundle(const GroupSpec& spec) {
    const ClassView cv = make_class_view(spec);
    return GraphBundle{fill_adjacency(spec, cv, true), make_partition(spec, cv), make_inclusion(cv)};
}

AdjacencyMatrix build_adjacency(const GroupSpec& spec) {
    return fill_adjacency(spec, make_class_view(spec), true);
}

AdjacencyMatrix build_adjacency_serial(const GroupSpec& spec) {
    return fill_adjacency(spec, make_class_view(spec), false);
}

AdjacencyMatrix build_adjacency_power_def(const GroupSpec& spec) {
    const std::size_t V = spec.vertices();
    AdjacencyMatrix out{spec, BitMatrix(V)};
    // membership[v] marks every multiple of v
    BitMatrix membership(V);
    for (std::size_t v = 0; v < V; ++v) {
        const GroupElement g = element_at(v, spec);
        const u64 ord = element_order(g, spec);
        GroupElement cur{0, 0};
        for (u64 k = 0; k < ord; ++k) {
            membership.set(v, vertex_index(cur, spec));
            cur = GroupElement{std::uint32_t((cur.a + g.a) % spec.m),
                               std::uint32_t((cur.b + g.b) % spec.n)};
        }
    }
    for (std::size_t u = 0; u < V; ++u)
        for (std::size_t v = u + 1; v < V; ++v)
            if (membership.get(u, v) || membership.get(v, u)) {
                out.adj.set(u, v);
                out.adj.set(v, u);
            }
    return out;
}

RhoPartition rho_classes(const GroupSpec& spec) {
    return make_partition(spec, make_class_view(spec));
}

InclusionGraph inclusion_graph(const GroupSpec& spec) {
    return make_inclusion(make_class_view(spec));
}

AdjacencyMatrix generalized_join(const InclusionGraph& incl, const RhoPartition& rho) {
    if (incl.size != rho.size())
        throw std::invalid_argument("generalized_join: size mismatch");
    std::size_t V = 0;
    for (const auto& cls : rho.classes) V += cls.size();
    AdjacencyMatrix out{rho.spec, BitMatrix(V)};
    for (std::size_t i = 0; i < incl.size; ++i) {
        const auto& ci = rho.classes[i];
        for (std::size_t x = 0; x < ci.size(); ++x)
            for (std::size_t y = x + 1; y < ci.size(); ++y) {
                out.adj.set(ci[x], ci[y]);
                out.adj.set(ci[y], ci[x]);
            }
        for (std::size_t j = i + 1; j < incl.size; ++j) {
            if (!incl.adj.get(i, j)) continue;
            for (std::uint32_t u : ci)
                for (std::uint32_t v : rho.classes[j]) {
                    out.adj.set(u, v);
                    out.adj.set(v, u);
                }
        }
    }
    return out;
}

std::string edge_list_text(const AdjacencyMatrix& adj) {
    std::ostringstream os;
    for (std::size_t u = 0; u < adj.size(); ++u)
        for (std::size_t v = u + 1; v < adj.size(); ++v)
            if (adj.adj.get(u, v))
                os << u << ' ' << v << '\n';
    return os.str();
}

} // namespace pgspectra
