#include "excol/list_solver.hpp"

#include <algorithm>

#include "excol/trimmed.hpp"

namespace excol {

namespace {

bool backtrack(const Graph& g, const std::vector<std::vector<int>>& lists,
               std::vector<int>& chosen, VertexSet& uncolored) {
    if (uncolored.empty()) return true;
    // most-constrained vertex: fewest usable colors, ties to the lowest index
    int best = -1;
    std::size_t best_options = SIZE_MAX;
    std::vector<int> best_usable;
    for (int v : uncolored.elements()) {
        std::vector<int> usable;
        for (int c : lists[static_cast<std::size_t>(v)]) {
            bool clash = false;
            for (int u : g.neighbors(v).elements())
                if (chosen[static_cast<std::size_t>(u)] == c) {
                    clash = true;
                    break;
                }
            if (!clash) usable.push_back(c);
        }
        if (usable.size() < best_options) {
            best_options = usable.size();
            best = v;
            best_usable = std::move(usable);
            if (best_options == 0) break;
        }
    }
    if (best_options == 0) return false;
    uncolored.erase(best);
    for (int c : best_usable) {
        chosen[static_cast<std::size_t>(best)] = c;
        if (backtrack(g, lists, chosen, uncolored)) return true;
    }
    chosen[static_cast<std::size_t>(best)] = -1;
    uncolored.insert(best);
    return false;
}

}  // namespace

std::optional<PartialColoring> solve_list_backtracking(const ListInstance& inst) {
    inst.validate();
    const int n = inst.g.vertex_count();
    std::vector<int> chosen(static_cast<std::size_t>(n), -1);
    VertexSet uncolored = inst.g.vertices();
    if (!backtrack(inst.g, inst.lists.lists, chosen, uncolored)) return std::nullopt;
    PartialColoring out(n);
    for (int v = 0; v < n; ++v) out.set(v, chosen[static_cast<std::size_t>(v)]);
    for (int v = 0; v < n; ++v) {
        const auto& l = inst.lists.lists[static_cast<std::size_t>(v)];
        if (std::find(l.begin(), l.end(), out.color(v)) == l.end())
            throw InternalError("list solver: color outside the vertex list");
    }
    if (!out.proper_total(inst.g)) throw InternalError("list solver: improper coloring");
    return out;
}

bool solve_list_via_augmentation(const ListInstance& inst, int delta) {
    inst.validate();
    return decide_list_bounded(inst.g, inst.lists, std::max(1, inst.lists.max_list_size()), delta);
}

}  // namespace excol
