#pragma once

#include <algorithm>
#include <vector>

#include "excol/graph.hpp"
#include "excol/vertex_set.hpp"

namespace excol {

// A coloring defined exactly on `domain`; color() is -1 elsewhere.
struct PartialColoring {
    VertexSet domain;
    std::vector<int> color_of;

    PartialColoring() = default;

    explicit PartialColoring(int n) : color_of(static_cast<std::size_t>(n), -1) {}

    int color(int v) const {
        if (v < 0 || static_cast<std::size_t>(v) >= color_of.size() || !domain.test(v)) return -1;
        return color_of[static_cast<std::size_t>(v)];
    }

    void set(int v, int c) {
        if (static_cast<std::size_t>(v) >= color_of.size())
            color_of.resize(static_cast<std::size_t>(v) + 1, -1);
        color_of[static_cast<std::size_t>(v)] = c;
        domain.insert(v);
    }

    bool total_on(const VertexSet& s) const { return s.is_subset_of(domain); }

    // No monochromatic edge inside `within` (only edges with both ends in
    // the domain and in `within` are considered).
    bool proper_on(const Graph& g, const VertexSet& within) const {
        VertexSet scope = within & domain;
        for (int v : scope.elements())
            for (int u : (g.neighbors(v) & scope).elements())
                if (u > v && color(u) == color(v)) return false;
        return true;
    }

    bool proper_total(const Graph& g) const {
        return total_on(g.vertices()) && proper_on(g, g.vertices());
    }

    int max_color_used() const {
        int m = -1;
        for (int v : domain.elements()) m = std::max(m, color(v));
        return m;
    }
};

// Per-vertex color lists over a universe [0, universe_size).
struct ListAssignment {
    int universe_size = 0;
    std::vector<std::vector<int>> lists;

    void normalize() {
        for (auto& l : lists) {
            std::sort(l.begin(), l.end());
            l.erase(std::unique(l.begin(), l.end()), l.end());
        }
    }

    void validate(int n) const {
        if (static_cast<int>(lists.size()) != n)
            throw ContractError("lists: one list per vertex required");
        for (const auto& l : lists)
            for (int c : l)
                if (c < 0 || c >= universe_size)
                    throw ContractError("lists: color id outside universe");
    }

    int max_list_size() const {
        std::size_t m = 0;
        for (const auto& l : lists) m = std::max(m, l.size());
        return static_cast<int>(m);
    }
};

// A graph together with its color lists.
struct ListInstance {
    Graph g;
    ListAssignment lists;

    void validate() const { lists.validate(g.vertex_count()); }
};

}  // namespace excol
