#pragma once

#include <functional>
#include <optional>

#include "excol/coloring.hpp"
#include "excol/graph.hpp"
#include "excol/subset_algebra.hpp"

namespace excol {

// Number of ordered k-tuples of independent sets whose union is V(G).
// Positive iff the graph is k-colorable.
struct CoverCount {
    BigInt value;
};

// table[V'] = number of independent sets of G[V'], empty set included, via
// the peel-lowest-vertex recurrence. table[0] = 1.
SubsetTable independent_set_table(const Graph& g, int table_cap = kDefaultTableCap);

// Signed subset sum of table^k with sign (-1)^(n - |V'|).
CoverCount cover_count_from_table(const SubsetTable& table, int k);
CoverCount cover_count(const Graph& g, int k, int table_cap = kDefaultTableCap);

bool decide_k_colorable(const Graph& g, int k, int table_cap = kDefaultTableCap);

// Least k with a proper k-coloring; 0 only for the empty graph. One
// independent-set table is built and reused across candidate k.
int chromatic_number(const Graph& g, int table_cap = kDefaultTableCap);

// Decision-to-search self-reduction: add every non-edge that keeps the
// decider happy, then read the color classes off the complement's
// components. The decider must be sound and complete for k-colorability on
// every supergraph of g over the same vertices; at most n^2 + 1 calls.
std::optional<PartialColoring> find_coloring(
    const Graph& g, int k, const std::function<bool(const Graph&, int)>& decider);

}  // namespace excol
