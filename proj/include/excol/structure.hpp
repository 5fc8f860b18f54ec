#pragma once

#include "excol/common.hpp"
#include "excol/graph.hpp"
#include "excol/vertex_set.hpp"

namespace excol {

// Greedy set of low-degree vertices at pairwise distance >= 3 (no edges
// inside the set, no shared neighbors). Scans candidates in ascending
// vertex index and deletes the 2-neighborhood of each pick. If every
// vertex has degree <= max_degree the result has >= n/(1+Delta^2) members.
VertexSet greedy_distance3_set(const Graph& g, int max_degree);

// Greedy independent set among vertices of degree <= max_degree, ascending
// index order. Size >= ceil(|candidates| / (1 + Delta)).
VertexSet greedy_independent_low_degree(const Graph& g, int max_degree);

// True iff at least alpha * n vertices have degree <= delta. Exact rational
// comparison, no floating rounding.
bool is_alpha_delta_bounded(const Graph& g, const Rational& alpha, int delta);

// Same comparison without the 0 <= alpha <= 1 precondition (an alpha above
// one can never be satisfied on a nonempty graph).
bool low_degree_count_at_least(const Graph& g, const Rational& alpha, int delta);

// Greedy clique through ascending vertex indices; a cheap chromatic lower
// bound.
int greedy_clique_bound(const Graph& g);

}  // namespace excol
