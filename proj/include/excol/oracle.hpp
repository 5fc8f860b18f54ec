#pragma once

#include <vector>

#include "excol/coloring.hpp"
#include "excol/graph.hpp"
#include "excol/set_removal.hpp"
#include "excol/vertex_set.hpp"

// Independent brute-force references. Nothing here shares code with the
// algorithms under test: this header pulls in graph-core types only, and
// every count is produced by direct enumeration over assignments, tuples,
// or subsets.

namespace excol {

struct OracleBudget {
    int max_vertices = 12;
    long long max_tuples = 10'000'000;
    long long max_assignments = 10'000'000;
};

// Enumerates color assignments in ascending radix-k order until one is
// proper; refuses instances with k^n above the budget.
bool brute_k_colorable(const Graph& g, int k, const OracleBudget& budget = {});

// Number of ordered k-tuples of independent sets of g[ground] that cover
// `ground` and whose every member intersects every set in required_hits.
// With no hits and ground = V this is the cover count F(G). Counts tuples
// slot by slot over the covered-subset state space.
BigInt brute_cover_count(const Graph& g, int k, const std::vector<VertexSet>& required_hits,
                         const VertexSet& ground, const OracleBudget& budget = {});

// Walks the full product of the lists until a proper member coloring shows
// up; refuses when the product exceeds the budget.
bool brute_list_colorable(const ListInstance& inst, const OracleBudget& budget = {});

// Exhaustive max over (F', U') of |F'| - C |U'| subject to the kept sets
// being pairwise disjoint outside U'. Needs |F| <= 12 and universe <= 12.
Rational brute_removal_best(const SetFamily& f, const Rational& c, const OracleBudget& budget = {});

// BFS distances from src; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int src);

}  // namespace excol
