#include "excol/structure.hpp"

namespace excol {

VertexSet greedy_distance3_set(const Graph& g, int max_degree) {
    if (max_degree < 0) throw ContractError("greedy_distance3_set: negative degree bound");
    VertexSet out;
    VertexSet alive;  // still eligible
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) <= max_degree) alive.insert(v);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!alive.test(v)) continue;
        out.insert(v);
        // delete v's 2-neighborhood
        VertexSet kill = g.closed_neighborhood(v);
        for (int u : g.neighbors(v).elements()) kill |= g.neighbors(u);
        alive -= kill;
    }
    return out;
}

VertexSet greedy_independent_low_degree(const Graph& g, int max_degree) {
    if (max_degree < 0) throw ContractError("greedy_independent_low_degree: negative degree bound");
    VertexSet out;
    VertexSet alive;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) <= max_degree) alive.insert(v);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!alive.test(v)) continue;
        out.insert(v);
        alive -= g.closed_neighborhood(v);
    }
    return out;
}

bool low_degree_count_at_least(const Graph& g, const Rational& alpha, int delta) {
    long long count = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) <= delta) ++count;
    return Rational(count) >= alpha * g.vertex_count();
}

bool is_alpha_delta_bounded(const Graph& g, const Rational& alpha, int delta) {
    if (alpha < 0 || alpha > 1) throw ContractError("is_alpha_delta_bounded: alpha outside [0,1]");
    return low_degree_count_at_least(g, alpha, delta);
}

int greedy_clique_bound(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    int best = 1;
    for (int start = 0; start < g.vertex_count(); ++start) {
        VertexSet clique = VertexSet::single(start);
        VertexSet candidates = g.neighbors(start);
        while (!candidates.empty()) {
            int v = candidates.lowest();
            clique.insert(v);
            candidates &= g.neighbors(v);
        }
        best = std::max(best, clique.count());
    }
    return best;
}

}  // namespace excol
