#include "excol/gen.hpp"

#include <algorithm>
#include <cmath>

#include "excol/rng.hpp"
#include "excol/structure.hpp"

namespace excol {

namespace {

// p as a 53-bit threshold so the draw is exactly reproducible from the seed
bool flip(CounterRng& rng, double p) {
    if (p <= 0) return false;
    if (p >= 1) return true;
    auto threshold = static_cast<std::uint64_t>(std::llround(p * 9007199254740992.0));  // 2^53
    return (rng.next_u64() >> 11) < threshold;
}

}  // namespace

Graph gen_gnp(int n, double p, std::uint64_t seed) {
    CounterRng rng(seed);
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (flip(rng, p)) b.add_edge(u, v);
    return b.build();
}

Graph gen_bounded(int n, int delta, double alpha, std::uint64_t seed) {
    if (n < 0 || delta < 0 || alpha < 0 || alpha > 1)
        throw ContractError("gen_bounded: bad parameters");
    CounterRng rng(seed);
    int n_low = static_cast<int>(std::ceil(alpha * n - 1e-12));
    n_low = std::min(n_low, n);
    int core = n - n_low;  // vertices n_low..n-1 form a clique
    GraphBuilder b(n);
    for (int u = n_low; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    // fringe path keeps the low-degree fraction connected-ish
    if (delta >= 2)
        for (int v = 0; v + 1 < n_low; ++v) b.add_edge(v, v + 1);
    for (int v = 0; v < n_low; ++v) {
        int room = delta - b.degree(v);
        int attach = core == 0 ? 0 : static_cast<int>(rng.next_below(
                                          static_cast<std::uint64_t>(std::min(room, core)) + 1));
        for (int i = 0; i < attach; ++i) {
            int target = n_low + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(core)));
            if (!b.has_edge(v, target) && b.degree(v) < delta) b.add_edge(v, target);
        }
    }
    Graph g = b.build();
    if (!is_alpha_delta_bounded(g, Rational(static_cast<long long>(std::llround(alpha * 1000000)),
                                            1000000),
                                delta))
        throw InternalError("gen_bounded: composite misses its own bound");
    return g;
}

Graph gen_min_degree(int n, double p, int min_degree, std::uint64_t seed) {
    if (min_degree >= n) throw ContractError("gen_min_degree: min degree must be below n");
    CounterRng rng(seed);
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (flip(rng, p)) b.add_edge(u, v);
    for (;;) {
        int low = -1;
        for (int v = 0; v < n; ++v)
            if (b.degree(v) < min_degree) {
                low = v;
                break;
            }
        if (low < 0) break;
        std::vector<int> candidates;
        for (int u = 0; u < n; ++u)
            if (u != low && !b.has_edge(low, u)) candidates.push_back(u);
        if (candidates.empty()) throw InternalError("gen_min_degree: vertex already complete");
        int pick = candidates[rng.next_below(candidates.size())];
        b.add_edge(low, pick);
    }
    return b.build();
}

Graph comb_graph(int teeth) {
    if (teeth < 1) throw ContractError("comb_graph: need at least one tooth");
    GraphBuilder b(2 * teeth);
    for (int i = 0; i < teeth; ++i) {
        b.add_edge(i, teeth + i);
        if (i + 1 < teeth) b.add_edge(teeth + i, teeth + i + 1);
    }
    return b.build();
}

Graph petersen() {
    GraphBuilder b(10);
    for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return b.build();
}

SetFamily gen_family(int universe_size, int count, int delta, std::uint64_t seed) {
    if (universe_size < 1 || count < 0 || delta < 1)
        throw ContractError("gen_family: bad parameters");
    CounterRng rng(seed);
    SetFamily f;
    f.universe_size = universe_size;
    f.delta = delta;
    for (int i = 0; i < count; ++i) {
        int size = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(
                           std::min(delta, universe_size))));
        std::vector<int> m;
        while (static_cast<int>(m.size()) < size) {
            int e = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(universe_size)));
            if (std::find(m.begin(), m.end(), e) == m.end()) m.push_back(e);
        }
        f.members.push_back(std::move(m));
    }
    f.normalize();
    f.validate();
    return f;
}

}  // namespace excol
