#include "excol/oracle.hpp"

#include <deque>

namespace excol {

namespace {

// k^n if it stays below the cap, otherwise -1.
long long pow_within(long long base, int exp, long long cap) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base) return -1;
        r *= base;
    }
    return r;
}

}  // namespace

bool brute_k_colorable(const Graph& g, int k, const OracleBudget& budget) {
    if (k < 0) throw ContractError("oracle: negative k");
    const int n = g.vertex_count();
    if (n > budget.max_vertices) throw ResourceError("oracle: graph above the vertex budget");
    long long total = pow_within(k, n, budget.max_assignments);
    if (total < 0) throw ResourceError("oracle: assignment count above the budget");
    if (n == 0) return true;
    if (k == 0) return false;
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    for (long long step = 0; step < total; ++step) {
        bool proper = true;
        for (int v = 0; v < n && proper; ++v)
            for (int u : g.neighbors(v).elements())
                if (u > v && color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
                    proper = false;
                    break;
                }
        if (proper) return true;
        // ascending radix-k, lowest vertex least significant
        for (int v = 0; v < n; ++v) {
            if (++color[static_cast<std::size_t>(v)] < k) break;
            color[static_cast<std::size_t>(v)] = 0;
        }
    }
    return false;
}

BigInt brute_cover_count(const Graph& g, int k, const std::vector<VertexSet>& required_hits,
                         const VertexSet& ground, const OracleBudget& budget) {
    if (k < 0) throw ContractError("oracle: negative k");
    std::vector<int> verts = ground.elements();
    const int m = static_cast<int>(verts.size());
    if (m > budget.max_vertices) throw ResourceError("oracle: ground set above the vertex budget");
    if (!verts.empty() && verts.back() >= g.vertex_count())
        throw ContractError("oracle: ground set outside the graph");

    // dense adjacency and hit masks within the ground set
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(m), 0);
    std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int i = 0; i < m; ++i) pos[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])] = i;
    for (int i = 0; i < m; ++i)
        for (int u : (g.neighbors(verts[static_cast<std::size_t>(i)]) & ground).elements())
            adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << pos[static_cast<std::size_t>(u)];
    std::vector<std::uint64_t> hits;
    for (const VertexSet& h : required_hits) {
        std::uint64_t mask = 0;
        for (int u : (h & ground).elements()) mask |= std::uint64_t{1} << pos[static_cast<std::size_t>(u)];
        hits.push_back(mask);  // empty mask means nothing can qualify
    }

    // qualifying independent sets
    std::vector<std::uint64_t> usable;
    const std::uint64_t full = m == 0 ? 0 : (~std::uint64_t{0} >> (64 - m));
    for (std::uint64_t s = 0;; ++s) {
        bool independent = true;
        for (std::uint64_t rest = s; rest != 0 && independent; rest &= rest - 1)
            if (adj[static_cast<std::size_t>(std::countr_zero(rest))] & s) independent = false;
        if (independent) {
            bool ok = true;
            for (std::uint64_t hm : hits)
                if ((s & hm) == 0) {
                    ok = false;
                    break;
                }
            if (ok) usable.push_back(s);
        }
        if (s == full) break;
    }

    long long work = static_cast<long long>(usable.size()) * (std::int64_t{1} << m) *
                     std::max(1, k);
    if (work > budget.max_tuples || static_cast<long long>(usable.size()) > budget.max_tuples)
        throw ResourceError("oracle: tuple enumeration above the budget");

    // slot-by-slot direct count over exact covered subsets
    std::vector<BigInt> cur(std::size_t{1} << m), next(std::size_t{1} << m);
    cur[0] = 1;
    for (int slot = 0; slot < k; ++slot) {
        for (auto& x : next) x = 0;
        for (std::uint64_t covered = 0; covered <= full; ++covered) {
            if (cur[covered] == 0) {
                if (covered == full) break;
                continue;
            }
            for (std::uint64_t s : usable) next[covered | s] += cur[covered];
            if (covered == full) break;
        }
        std::swap(cur, next);
    }
    return cur[full];
}

bool brute_list_colorable(const ListInstance& inst, const OracleBudget& budget) {
    inst.validate();
    const int n = inst.g.vertex_count();
    if (n == 0) return true;
    long long total = 1;
    for (const auto& l : inst.lists.lists) {
        if (l.empty()) return false;
        if (total > budget.max_tuples / static_cast<long long>(l.size()))
            throw ResourceError("oracle: list product above the budget");
        total *= static_cast<long long>(l.size());
    }
    std::vector<std::size_t> at(static_cast<std::size_t>(n), 0);
    for (long long step = 0; step < total; ++step) {
        bool proper = true;
        for (int v = 0; v < n && proper; ++v) {
            int cv = inst.lists.lists[static_cast<std::size_t>(v)][at[static_cast<std::size_t>(v)]];
            for (int u : inst.g.neighbors(v).elements()) {
                if (u > v &&
                    inst.lists.lists[static_cast<std::size_t>(u)][at[static_cast<std::size_t>(u)]] == cv) {
                    proper = false;
                    break;
                }
            }
        }
        if (proper) return true;
        for (int v = 0; v < n; ++v) {
            if (++at[static_cast<std::size_t>(v)] < inst.lists.lists[static_cast<std::size_t>(v)].size())
                break;
            at[static_cast<std::size_t>(v)] = 0;
        }
    }
    return false;
}

Rational brute_removal_best(const SetFamily& f, const Rational& c, const OracleBudget& budget) {
    f.validate();
    const int fs = static_cast<int>(f.members.size());
    if (fs > budget.max_vertices || f.universe_size > budget.max_vertices)
        throw ResourceError("oracle: removal instance above the budget");

    std::vector<std::uint32_t> member_mask(static_cast<std::size_t>(fs), 0);
    for (int i = 0; i < fs; ++i)
        for (int u : f.members[static_cast<std::size_t>(i)])
            member_mask[static_cast<std::size_t>(i)] |= std::uint32_t{1} << u;

    bool have = false;
    Rational best = 0;
    const std::uint32_t ufull =
        f.universe_size == 0 ? 0 : (~std::uint32_t{0} >> (32 - f.universe_size));
    for (std::uint32_t uprime = 0;; ++uprime) {
        // conflict masks among kept candidates once uprime is deleted
        std::vector<std::uint32_t> conflict(static_cast<std::size_t>(fs), 0);
        for (int i = 0; i < fs; ++i)
            for (int j = i + 1; j < fs; ++j)
                if ((member_mask[static_cast<std::size_t>(i)] & member_mask[static_cast<std::size_t>(j)] &
                     ~uprime) != 0) {
                    conflict[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;
                    conflict[static_cast<std::size_t>(j)] |= std::uint32_t{1} << i;
                }
        // largest conflict-free sub-family by subset DP
        int best_size = 0;
        std::vector<bool> ok(std::size_t{1} << fs, false);
        ok[0] = true;
        for (std::uint32_t sel = 1; sel < (std::uint32_t{1} << fs); ++sel) {
            int low = std::countr_zero(sel);
            std::uint32_t rest = sel & (sel - 1);
            ok[sel] = ok[rest] && (conflict[static_cast<std::size_t>(low)] & rest) == 0;
            if (ok[sel]) best_size = std::max(best_size, std::popcount(sel));
        }
        Rational score = Rational(best_size) - c * std::popcount(uprime);
        if (!have || score > best) {
            best = score;
            have = true;
        }
        if (uprime == ufull) break;
    }
    return best;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::deque<int> queue;
    dist[static_cast<std::size_t>(src)] = 0;
    queue.push_back(src);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : g.neighbors(v).elements())
            if (dist[static_cast<std::size_t>(u)] < 0) {
                dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(u);
            }
    }
    return dist;
}

}  // namespace excol
