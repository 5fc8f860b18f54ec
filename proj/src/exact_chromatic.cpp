#include "excol/exact_chromatic.hpp"

#include <vector>

#include "excol/structure.hpp"

namespace excol {

SubsetTable independent_set_table(const Graph& g, int table_cap) {
    GroundMap ground(g, g.vertices(), table_cap);
    const int m = ground.size();
    SubsetTable t(m);
    t.values[0] = 1;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        int v = std::countr_zero(mask);  // lowest-index member is the pivot
        std::uint64_t without = mask & ~(std::uint64_t{1} << v);
        std::uint64_t without_closed = mask & ~(ground.adjacency(v) | (std::uint64_t{1} << v));
        t.values[mask] = t.values[without] + t.values[without_closed];
    }
    return t;
}

CoverCount cover_count_from_table(const SubsetTable& table, int k) {
    if (k < 0) throw ContractError("cover_count: negative k");
    const int n = table.ground_size;
    BigInt sum = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        BigInt term = 1;
        const BigInt& base = table.values[mask];
        for (int i = 0; i < k; ++i) term *= base;
        if ((n - std::popcount(mask)) & 1)
            sum -= term;
        else
            sum += term;
    }
    if (sum < 0) throw InternalError("cover count came out negative");
    return CoverCount{sum};
}

CoverCount cover_count(const Graph& g, int k, int table_cap) {
    return cover_count_from_table(independent_set_table(g, table_cap), k);
}

bool decide_k_colorable(const Graph& g, int k, int table_cap) {
    return cover_count(g, k, table_cap).value > 0;
}

int chromatic_number(const Graph& g, int table_cap) {
    if (g.vertex_count() == 0) return 0;
    SubsetTable table = independent_set_table(g, table_cap);
    for (int k = std::max(1, greedy_clique_bound(g));; ++k)
        if (cover_count_from_table(table, k).value > 0) return k;
}

std::optional<PartialColoring> find_coloring(
    const Graph& g, int k, const std::function<bool(const Graph&, int)>& decider) {
    const int n = g.vertex_count();
    if (!decider(g, k)) return std::nullopt;
    Graph h = g;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (h.has_edge(u, v)) continue;
            Graph candidate = h.with_edge(u, v);
            if (decider(candidate, k)) h = std::move(candidate);
        }

    // The saturated graph is complete multipartite; its color classes are
    // the components of the complement.
    PartialColoring coloring(n);
    std::vector<int> cls(static_cast<std::size_t>(n), -1);
    int classes = 0;
    for (int v = 0; v < n; ++v) {
        if (cls[static_cast<std::size_t>(v)] >= 0) continue;
        int id = classes++;
        cls[static_cast<std::size_t>(v)] = id;
        for (int u = 0; u < n; ++u) {
            if (u == v || h.has_edge(u, v)) continue;
            int& c = cls[static_cast<std::size_t>(u)];
            if (c >= 0 && c != id)
                throw InternalError("decider self-contradiction during the search reduction");
            c = id;
        }
    }
    if (classes > k)
        throw InternalError("decider self-contradiction: saturation has more than k classes");
    for (int v = 0; v < n; ++v) coloring.set(v, cls[static_cast<std::size_t>(v)]);
    if (!coloring.proper_total(g))
        throw InternalError("self-reduction produced an improper coloring");
    return coloring;
}

}  // namespace excol
