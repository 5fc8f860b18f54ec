#pragma once

#include <optional>
#include <vector>

#include "excol/coloring.hpp"
#include "excol/graph.hpp"
#include "excol/list_solver.hpp"

namespace excol {

// Dominating set R found by derandomizing the p-sampling argument; |R| is
// bounded by `bound`, the conditional expectation at the root.
struct DominatingCertificate {
    VertexSet r;
    Rational p;
    Rational bound;
};

// E[|R|] conditioned on decided_in being sampled and decided_out not, where
// R is the sample plus every vertex it fails to dominate. Exact rationals.
Rational conditional_expectation(const Graph& g, const VertexSet& decided_in,
                                 const VertexSet& decided_out, const Rational& p);

// Method of conditional expectations with p ~= ln(Delta)/Delta: decides
// vertices in ascending index, never letting the expectation rise; exact
// ties go to "out".
DominatingCertificate dominating_set(const Graph& g, int delta);

// Low-degree peel: repeatedly removes the lowest-index vertex of current
// degree < k, recording the order. Replaying the stack greedily extends any
// proper k-coloring of the core to the whole graph.
struct PeelResult {
    Graph core;
    std::vector<int> core_to_orig;
    std::vector<int> stack;  // removal order
};

PeelResult peel_low_degree(const Graph& g, int k);

PartialColoring replay_peel(const Graph& g, const PeelResult& peel,
                            const PartialColoring& core_coloring, int k);

// (k-1)-list instance on g[V \ R] induced by a proper coloring of the
// dominating set R; absent if some vertex has every color forbidden.
struct ReducedLists {
    ListInstance inst;
    std::vector<int> to_orig;
};

std::optional<ReducedLists> reduce_to_lists(const Graph& g, const VertexSet& r,
                                            const PartialColoring& c_r, int k);

struct ReductionStats {
    bool used_bounded_branch = false;
    std::uint64_t colorings_tried = 0;
    std::uint64_t list_calls = 0;
};

// k-coloring driver: bounded graphs take the trimmed search path; the rest
// enumerate proper colorings of a dominating set in ascending radix-k order
// and hand each residue to the (k-1)-list solver.
std::optional<PartialColoring> solve_k_via_k_minus_1(const Graph& g, int k,
                                                     const Rational& alpha, int delta,
                                                     ReductionStats* stats = nullptr,
                                                     int table_cap = kDefaultTableCap,
                                                     int enum_cap = kDefaultEnumCap);

}  // namespace excol
