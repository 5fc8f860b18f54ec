#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "excol/coloring.hpp"
#include "excol/graph.hpp"
#include "excol/subset_algebra.hpp"

namespace excol {

// One transform family: lattice entries actually materialized, against the
// closed-form ceiling 2^|ground| * (2 - 2^-Delta)^t for that family.
struct WorkRecord {
    std::uint64_t entries = 0;
    Rational bound;
};

struct WorkStats {
    std::uint64_t lattice_entries = 0;
    std::vector<WorkRecord> records;

    void record(std::uint64_t entries, Rational bound) {
        lattice_entries += entries;
        records.push_back(WorkRecord{entries, std::move(bound)});
    }
};

// k-colorability instance relative to an independent set S of low-degree
// vertices. The disjoint-neighborhood entry point additionally requires
// pairwise distance >= 3 within S.
struct TrimmedInstance {
    Graph g;
    VertexSet s;
    int k = 0;
    int max_block_degree = 0;

    void validate() const;
};

// Extension instance: c0 is a proper coloring of g[v0], S sits inside
// V = V(g) \ v0, is independent, and has pairwise disjoint neighborhoods
// within V.
struct FixedColoringInstance {
    Graph g;
    VertexSet v0;
    PartialColoring c0;
    VertexSet s;
    int k = 0;

    VertexSet uncolored() const { return g.vertices() - v0; }
    void validate() const;
};

// The alternating total H = sum over S' of (-1)^|S'| h(G,S'). Nonnegative,
// and positive exactly when the instance is colorable or extendable.
struct HCount {
    BigInt value;
};

// Number of ordered k-tuples of independent sets covering V(G) \ S whose
// every member meets N(s) for all s in s_prime. Computed over B(S') only.
// The sign exponent is (ground size - |V'|), which makes the value the
// plain nonnegative count.
BigInt h_count(const TrimmedInstance& inst, const VertexSet& s_prime, WorkStats* stats = nullptr,
               int table_cap = kDefaultTableCap);

// H accumulated over S' in ascending bitmask order.
HCount h_total(const TrimmedInstance& inst, WorkStats* stats = nullptr,
               int table_cap = kDefaultTableCap);

// H > 0, i.e. g is k-colorable.
bool decide_trimmed(const TrimmedInstance& inst, WorkStats* stats = nullptr,
                    int table_cap = kDefaultTableCap);

// True iff c0 extends to a proper k-coloring of all of g. Computes one
// beta_j table per (j, S' subseteq S \ S_j) before assembling any h.
bool decide_extension(const FixedColoringInstance& inst, WorkStats* stats = nullptr,
                      int table_cap = kDefaultTableCap);

// Full pipeline: greedy independent low-degree S, removal lemma on the
// neighborhood family, exhaustive enumeration of the k^|V_0| colorings of
// the removed vertices, extension decision per proper one. Equals
// decide_k_colorable on every input.
bool decide_bounded(const Graph& g, int k, int delta, WorkStats* stats = nullptr,
                    int table_cap = kDefaultTableCap, int enum_cap = kDefaultEnumCap);

// List-coloring via the augmented graph: one pre-colored vertex per
// universe color, edges to every vertex whose list misses that color. The
// lattice ground set excludes all pre-colored vertices.
bool decide_list_bounded(const Graph& g, const ListAssignment& lists, int k, int delta,
                         WorkStats* stats = nullptr, int table_cap = kDefaultTableCap,
                         int enum_cap = kDefaultEnumCap);

// Color every s in S with the least color missing from its neighborhood;
// absent if some s already sees all k colors.
std::optional<PartialColoring> extend_over_s(const Graph& g, const VertexSet& s,
                                             const PartialColoring& partial, int k);

// Decision-to-search confined to V(G) \ S (edge additions there keep S's
// independence and degrees intact), finished by extend_over_s.
std::optional<PartialColoring> find_coloring_trimmed(const Graph& g, int k, int delta,
                                                     WorkStats* stats = nullptr,
                                                     int table_cap = kDefaultTableCap,
                                                     int enum_cap = kDefaultEnumCap);

}  // namespace excol
