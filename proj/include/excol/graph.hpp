#pragma once

#include <string>
#include <utility>
#include <vector>

#include "excol/common.hpp"
#include "excol/vertex_set.hpp"

namespace excol {

// Simple undirected graph over dense 0-based vertex indices, stored as one
// adjacency bitmask row per vertex. Immutable after construction; safe to
// share across threads.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
        if (n < 0) throw ContractError("graph: negative vertex count");
    }

    Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge_internal(u, v);
        recount_edges();
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[static_cast<std::size_t>(u)].test(v);
    }

    const VertexSet& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    VertexSet closed_neighborhood(int v) const {
        VertexSet s = neighbors(v);
        s.insert(v);
        return s;
    }

    int degree(int v) const { return neighbors(v).count(); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    VertexSet vertices() const { return VertexSet::range(n_); }

    bool is_independent(const VertexSet& s) const {
        for (int v : s.elements())
            if (neighbors(v).intersects(s)) return false;
        return true;
    }

    // Copy with one extra edge; the original stays untouched.
    Graph with_edge(int u, int v) const {
        Graph g = *this;
        g.add_edge_internal(u, v);
        g.recount_edges();
        return g;
    }

    // Induced subgraph on `keep`, with vertices renumbered densely in
    // ascending order. If `dense_to_orig` is given it receives the mapping.
    Graph induced(const VertexSet& keep, std::vector<int>* dense_to_orig = nullptr) const {
        std::vector<int> verts = keep.elements();
        if (!verts.empty()) check_vertex(verts.back());
        std::vector<int> pos(static_cast<std::size_t>(n_), -1);
        for (std::size_t i = 0; i < verts.size(); ++i)
            pos[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
        Graph h(static_cast<int>(verts.size()));
        for (std::size_t i = 0; i < verts.size(); ++i) {
            for (int w : (neighbors(verts[i]) & keep).elements()) {
                int j = pos[static_cast<std::size_t>(w)];
                if (j > static_cast<int>(i)) h.add_edge_internal(static_cast<int>(i), j);
            }
        }
        h.recount_edges();
        if (dense_to_orig != nullptr) *dense_to_orig = std::move(verts);
        return h;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    // Optional vertex names carried through I/O; empty means none.
    std::vector<std::string> labels;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw ContractError("graph: vertex index out of range");
    }

    void add_edge_internal(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw ContractError("graph: self-loop rejected");
        adj_[static_cast<std::size_t>(u)].insert(v);
        adj_[static_cast<std::size_t>(v)].insert(u);
    }

    void recount_edges() {
        int twice = 0;
        for (const VertexSet& row : adj_) twice += row.count();
        m_ = twice / 2;
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;

    friend class GraphBuilder;
};

// Incremental construction helper for generators and parsers.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : g_(n) {}

    // Duplicate and reversed edges collapse; self-loops are rejected.
    void add_edge(int u, int v) { g_.add_edge_internal(u, v); }

    bool has_edge(int u, int v) const { return g_.has_edge(u, v); }
    int degree(int v) const { return g_.degree(v); }
    int vertex_count() const { return g_.vertex_count(); }

    Graph build() {
        g_.recount_edges();
        return std::move(g_);
    }

private:
    Graph g_;
};

}  // namespace excol
