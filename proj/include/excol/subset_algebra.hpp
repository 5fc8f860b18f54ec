#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "excol/common.hpp"
#include "excol/graph.hpp"
#include "excol/vertex_set.hpp"

namespace excol {

// Dense map from every subset of an m-element ground set to an exact
// integer; index = subset bitmask over dense positions.
struct SubsetTable {
    int ground_size = 0;
    std::vector<BigInt> values;

    explicit SubsetTable(int m = 0)
        : ground_size(m), values(std::size_t{1} << m) {}
};

// Zeta (Inverse Moebius) transform by Yates' method: m in-place sweeps,
// out(X) = sum over Y subseteq X of in(Y).
SubsetTable fast_zeta(SubsetTable t);

// Maps a chosen ground set of graph vertices onto dense bit positions
// 0..m-1 in ascending vertex order, and carries the graph's adjacency
// restricted to the ground set as dense masks.
class GroundMap {
public:
    GroundMap() = default;
    GroundMap(const Graph& g, const VertexSet& ground, int table_cap = kDefaultTableCap);

    int size() const { return static_cast<int>(verts_.size()); }
    const std::vector<int>& verts() const { return verts_; }
    int position_of(int vertex) const;
    std::uint64_t adjacency(int pos) const { return adj_[static_cast<std::size_t>(pos)]; }

    std::uint64_t to_mask(const VertexSet& s) const;  // s must be inside the ground set
    VertexSet to_set(std::uint64_t mask) const;

    // No two adjacent ground vertices in `mask`.
    bool independent(std::uint64_t mask) const {
        std::uint64_t rest = mask;
        while (rest != 0) {
            int b = std::countr_zero(rest);
            rest &= rest - 1;
            if (adj_[static_cast<std::size_t>(b)] & mask) return false;
        }
        return true;
    }

private:
    std::vector<int> verts_;
    std::vector<int> pos_;
    std::vector<std::uint64_t> adj_;
};

// The restricted lattice B(S') = {V' : V' hits every block}, realized as a
// mixed-radix product: free-part bits are the lowest digits, then one digit
// per block holding its nonempty subset (ranked by bitmask value - 1),
// blocks ordered as given. Ranks cover [0, total_size) bijectively.
class ProductLattice {
public:
    ProductLattice(GroundMap ground, const std::vector<VertexSet>& blocks);

    const GroundMap& ground() const { return ground_; }
    const VertexSet& free_part() const { return free_part_; }
    const std::vector<VertexSet>& blocks() const { return blocks_; }
    const std::vector<std::uint64_t>& radices() const { return radices_; }
    std::uint64_t total_size() const { return total_; }

    // Mixed-radix rank of v if v hits every block, absent otherwise.
    std::optional<std::uint64_t> index(const VertexSet& v) const;
    VertexSet unindex(std::uint64_t rank) const;

    // Dense fast path; -1 plays the role of absent.
    std::int64_t index_mask(std::uint64_t mask) const;
    std::uint64_t unindex_mask(std::uint64_t rank) const;

    int block_count() const { return static_cast<int>(block_masks_.size()); }
    std::uint64_t free_mask() const { return free_mask_; }
    std::uint64_t block_mask(int b) const { return block_masks_[static_cast<std::size_t>(b)]; }
    std::uint64_t block_weight(int b) const { return weights_[static_cast<std::size_t>(b)]; }
    std::uint64_t free_size() const { return std::uint64_t{1} << free_bits_.size(); }

private:
    GroundMap ground_;
    VertexSet free_part_;
    std::vector<VertexSet> blocks_;
    std::vector<std::uint64_t> radices_;
    std::uint64_t total_ = 0;

    std::uint64_t free_mask_ = 0;
    std::vector<int> free_bits_;                 // ascending dense positions
    std::vector<std::uint64_t> block_masks_;
    std::vector<std::vector<int>> block_bits_;   // ascending dense positions per block
    std::vector<std::uint64_t> weights_;         // rank stride per digit unit
};

// Walks ranks 0..total-1 in order while maintaining the dense member mask
// and its popcount; used by the transform and by signed-sum assemblies.
class LatticeWalker {
public:
    explicit LatticeWalker(const ProductLattice& l);

    bool done() const { return rank_ >= l_->total_size(); }
    std::uint64_t rank() const { return rank_; }
    std::uint64_t mask() const { return mask_; }
    int popcount() const { return pop_; }
    void advance();

private:
    const ProductLattice* l_;
    std::uint64_t rank_ = 0;
    std::uint64_t mask_ = 0;
    int pop_ = 0;
    std::uint64_t free_digit_ = 0;
    std::vector<std::uint64_t> block_subs_;  // current nonempty subset per block
};

// Zeta transform of the extension-by-zero of `base` outside B(S'),
// restricted back to B(S'). Only total_size entries are ever materialized;
// updates whose source leaves the lattice are skipped. If `entries` is
// given it is incremented by total_size (one per materialized entry).
std::vector<BigInt> trimmed_zeta(const ProductLattice& l,
                                 const std::function<BigInt(const VertexSet&)>& base,
                                 std::uint64_t* entries = nullptr);

// Dense-mask flavor used by the solvers (identical semantics).
std::vector<BigInt> trimmed_zeta_dense(const ProductLattice& l,
                                       const std::function<int(std::uint64_t)>& base,
                                       std::uint64_t* entries = nullptr);

}  // namespace excol
