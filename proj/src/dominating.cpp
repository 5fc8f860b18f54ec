#include "excol/dominating.hpp"

#include <algorithm>
#include <cmath>

#include "excol/certified.hpp"
#include "excol/structure.hpp"
#include "excol/trimmed.hpp"

namespace excol {

namespace {

enum class Decision : unsigned char { kUndecided, kIn, kOut };

// Per-vertex contribution to E[|R|] given the current decisions. `open` is
// |N(v) minus decided-out| and only matters when no neighbor is decided-in.
Rational contribution(Decision d, bool has_in_neighbor, int open, const Rational& p,
                      std::vector<Rational>& q_pow) {
    auto qp = [&q_pow, &p](int i) -> const Rational& {
        while (static_cast<int>(q_pow.size()) <= i) q_pow.push_back(q_pow.back() * (1 - p));
        return q_pow[static_cast<std::size_t>(i)];
    };
    switch (d) {
        case Decision::kIn:
            return Rational(1);
        case Decision::kOut:
            return has_in_neighbor ? Rational(0) : qp(open);
        case Decision::kUndecided:
        default:
            return has_in_neighbor ? p : p + qp(1 + open);
    }
}

}  // namespace

Rational conditional_expectation(const Graph& g, const VertexSet& decided_in,
                                 const VertexSet& decided_out, const Rational& p) {
    if (decided_in.intersects(decided_out))
        throw ContractError("conditional_expectation: a vertex is decided both ways");
    if (p < 0 || p > 1) throw ContractError("conditional_expectation: p outside [0,1]");
    std::vector<Rational> q_pow{Rational(1)};
    Rational total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        Decision d = decided_in.test(v)    ? Decision::kIn
                     : decided_out.test(v) ? Decision::kOut
                                           : Decision::kUndecided;
        bool has_in = g.neighbors(v).intersects(decided_in);
        int open = (g.neighbors(v) - decided_out).count();
        total += contribution(d, has_in, open, p, q_pow);
    }
    return total;
}

DominatingCertificate dominating_set(const Graph& g, int delta) {
    if (delta < 2) throw ContractError("dominating_set: delta must be at least 2");
    const int n = g.vertex_count();
    if (n < 1) throw ContractError("dominating_set: empty graph");

    // p just below ln(delta)/delta keeps the sampling bound intact while
    // the arithmetic stays exact
    Rational p = round_down_dyadic(ln_enclosure(Rational(delta), 60).lo / delta, 48);
    std::vector<Rational> q_pow{Rational(1)};

    std::vector<Decision> decision(static_cast<std::size_t>(n), Decision::kUndecided);
    std::vector<bool> has_in(static_cast<std::size_t>(n), false);
    std::vector<int> open(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) open[static_cast<std::size_t>(v)] = g.degree(v);

    auto contrib = [&](int v) {
        return contribution(decision[static_cast<std::size_t>(v)], has_in[static_cast<std::size_t>(v)],
                            open[static_cast<std::size_t>(v)], p, q_pow);
    };

    Rational expect = 0;
    for (int v = 0; v < n; ++v) expect += contrib(v);
    const Rational bound = expect;

    for (int v = 0; v < n; ++v) {
        // trial deltas for deciding v in or out; neighbors' contributions
        // shift, nothing else does
        Rational delta_in = -contrib(v);
        Rational delta_out = delta_in;
        {
            decision[static_cast<std::size_t>(v)] = Decision::kIn;
            delta_in += contrib(v);
            decision[static_cast<std::size_t>(v)] = Decision::kOut;
            delta_out += contrib(v);
            decision[static_cast<std::size_t>(v)] = Decision::kUndecided;
        }
        for (int u : g.neighbors(v).elements()) {
            Rational before = contrib(u);
            if (!has_in[static_cast<std::size_t>(u)]) {
                has_in[static_cast<std::size_t>(u)] = true;
                delta_in += contrib(u) - before;
                has_in[static_cast<std::size_t>(u)] = false;
            }
            open[static_cast<std::size_t>(u)] -= 1;
            delta_out += contrib(u) - before;
            open[static_cast<std::size_t>(u)] += 1;
        }
        Rational e_in = expect + delta_in;
        Rational e_out = expect + delta_out;
        // the literal conditional-expectation identity
        if (p * e_in + (1 - p) * e_out != expect)
            throw InternalError("dominating_set: expectation identity violated");
        if (e_in < e_out) {
            decision[static_cast<std::size_t>(v)] = Decision::kIn;
            for (int u : g.neighbors(v).elements()) has_in[static_cast<std::size_t>(u)] = true;
            expect = e_in;
        } else {
            decision[static_cast<std::size_t>(v)] = Decision::kOut;
            for (int u : g.neighbors(v).elements()) open[static_cast<std::size_t>(u)] -= 1;
            expect = e_out;
        }
        if (expect > bound) throw InternalError("dominating_set: expectation increased");
    }

    VertexSet r;
    for (int v = 0; v < n; ++v)
        if (decision[static_cast<std::size_t>(v)] == Decision::kIn || !has_in[static_cast<std::size_t>(v)])
            r.insert(v);
    if (Rational(r.count()) != expect)
        throw InternalError("dominating_set: final expectation does not match |R|");
    for (int v = 0; v < n; ++v)
        if (!r.test(v) && !g.neighbors(v).intersects(r))
            throw InternalError("dominating_set: output fails to dominate");
    return DominatingCertificate{r, p, bound};
}

PeelResult peel_low_degree(const Graph& g, int k) {
    if (k < 1) throw ContractError("peel_low_degree: k must be at least 1");
    const int n = g.vertex_count();
    VertexSet alive = g.vertices();
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);

    PeelResult out;
    for (;;) {
        int pick = -1;
        for (int v : alive.elements())
            if (deg[static_cast<std::size_t>(v)] < k) {
                pick = v;
                break;
            }
        if (pick < 0) break;
        out.stack.push_back(pick);
        alive.erase(pick);
        for (int u : (g.neighbors(pick) & alive).elements()) deg[static_cast<std::size_t>(u)] -= 1;
    }
    out.core = g.induced(alive, &out.core_to_orig);
    return out;
}

PartialColoring replay_peel(const Graph& g, const PeelResult& peel,
                            const PartialColoring& core_coloring, int k) {
    PartialColoring out(g.vertex_count());
    for (std::size_t i = 0; i < peel.core_to_orig.size(); ++i) {
        int c = core_coloring.color(static_cast<int>(i));
        if (c < 0 || c >= k) throw ContractError("replay_peel: core coloring not a k-coloring");
        out.set(peel.core_to_orig[i], c);
    }
    if (!core_coloring.proper_total(peel.core))
        throw ContractError("replay_peel: core coloring improper");
    for (auto it = peel.stack.rbegin(); it != peel.stack.rend(); ++it) {
        std::vector<bool> used(static_cast<std::size_t>(k), false);
        for (int u : g.neighbors(*it).elements()) {
            int c = out.color(u);
            if (c >= 0) used[static_cast<std::size_t>(c)] = true;
        }
        int pick = -1;
        for (int c = 0; c < k; ++c)
            if (!used[static_cast<std::size_t>(c)]) {
                pick = c;
                break;
            }
        if (pick < 0) throw InternalError("replay_peel: no free color during replay");
        out.set(*it, pick);
    }
    if (!out.proper_total(g)) throw InternalError("replay_peel: improper result");
    return out;
}

std::optional<ReducedLists> reduce_to_lists(const Graph& g, const VertexSet& r,
                                            const PartialColoring& c_r, int k) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!r.test(v) && !g.neighbors(v).intersects(r))
            throw ContractError("reduce_to_lists: R is not dominating");
    if (!(c_r.domain == r)) throw ContractError("reduce_to_lists: coloring domain must be R");
    for (int v : r.elements())
        if (c_r.color(v) < 0 || c_r.color(v) >= k)
            throw ContractError("reduce_to_lists: color outside [0,k)");
    if (!c_r.proper_on(g, r)) throw ContractError("reduce_to_lists: improper coloring of R");

    VertexSet rest = g.vertices() - r;
    ReducedLists out;
    out.inst.g = g.induced(rest, &out.to_orig);
    out.inst.lists.universe_size = k;
    out.inst.lists.lists.resize(out.to_orig.size());
    for (std::size_t i = 0; i < out.to_orig.size(); ++i) {
        int v = out.to_orig[i];
        std::vector<bool> forbidden(static_cast<std::size_t>(k), false);
        for (int u : (g.neighbors(v) & r).elements())
            forbidden[static_cast<std::size_t>(c_r.color(u))] = true;
        auto& list = out.inst.lists.lists[i];
        for (int c = 0; c < k; ++c)
            if (!forbidden[static_cast<std::size_t>(c)]) list.push_back(c);
        if (static_cast<int>(list.size()) >= k)
            throw InternalError("reduce_to_lists: domination left a full list");
        if (list.empty()) return std::nullopt;
    }
    return out;
}

std::optional<PartialColoring> solve_k_via_k_minus_1(const Graph& g, int k, const Rational& alpha,
                                                     int delta, ReductionStats* stats,
                                                     int table_cap, int enum_cap) {
    if (k < 2) throw ContractError("solve_k_via_k_minus_1: k must be at least 2");
    const int n = g.vertex_count();
    if (n == 0) return PartialColoring(0);

    if (is_alpha_delta_bounded(g, alpha, delta)) {
        if (stats != nullptr) stats->used_bounded_branch = true;
        return find_coloring_trimmed(g, k, delta, nullptr, table_cap, enum_cap);
    }

    DominatingCertificate cert = dominating_set(g, delta);
    std::vector<int> rv = cert.r.elements();
    if (static_cast<double>(rv.size()) * std::log2(static_cast<double>(k)) > 44.0)
        throw ResourceError("solve_k_via_k_minus_1: dominating set too large to enumerate");
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < rv.size(); ++i) combos *= static_cast<std::uint64_t>(k);

    for (std::uint64_t counter = 0; counter < combos; ++counter) {
        PartialColoring c_r(n);
        std::uint64_t rest = counter;
        for (std::size_t i = 0; i < rv.size(); ++i) {
            c_r.set(rv[i], static_cast<int>(rest % static_cast<std::uint64_t>(k)));
            rest /= static_cast<std::uint64_t>(k);
        }
        if (!c_r.proper_on(g, cert.r)) continue;
        if (stats != nullptr) stats->colorings_tried += 1;
        std::optional<ReducedLists> reduced = reduce_to_lists(g, cert.r, c_r, k);
        if (!reduced.has_value()) continue;
        if (stats != nullptr) stats->list_calls += 1;
        std::optional<PartialColoring> sub = solve_list_backtracking(reduced->inst);
        if (!sub.has_value()) continue;
        PartialColoring full = c_r;
        for (std::size_t i = 0; i < reduced->to_orig.size(); ++i)
            full.set(reduced->to_orig[i], sub->color(static_cast<int>(i)));
        if (!full.proper_total(g))
            throw InternalError("solve_k_via_k_minus_1: assembled coloring improper");
        return full;
    }
    return std::nullopt;
}

}  // namespace excol
