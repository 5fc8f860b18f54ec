#include "excol/subset_algebra.hpp"

#include <algorithm>

namespace excol {

SubsetTable fast_zeta(SubsetTable t) {
    const int m = t.ground_size;
    const std::size_t n = std::size_t{1} << m;
    for (int i = 0; i < m; ++i) {
        const std::size_t bit = std::size_t{1} << i;
        for (std::size_t x = 0; x < n; ++x)
            if (x & bit) t.values[x] += t.values[x ^ bit];
    }
    return t;
}

GroundMap::GroundMap(const Graph& g, const VertexSet& ground, int table_cap) {
    verts_ = ground.elements();
    if (!verts_.empty() && verts_.back() >= g.vertex_count())
        throw ContractError("ground map: vertex outside the graph");
    if (static_cast<int>(verts_.size()) > table_cap || static_cast<int>(verts_.size()) > kHardMaskBits)
        throw ResourceError("ground map: " + std::to_string(verts_.size()) +
                            " active vertices exceed the table capacity of " +
                            std::to_string(std::min(table_cap, kHardMaskBits)));
    pos_.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < verts_.size(); ++i)
        pos_[static_cast<std::size_t>(verts_[i])] = static_cast<int>(i);
    adj_.assign(verts_.size(), 0);
    for (std::size_t i = 0; i < verts_.size(); ++i)
        adj_[i] = to_mask(g.neighbors(verts_[i]) & ground);
}

int GroundMap::position_of(int vertex) const {
    if (vertex < 0 || static_cast<std::size_t>(vertex) >= pos_.size()) return -1;
    return pos_[static_cast<std::size_t>(vertex)];
}

std::uint64_t GroundMap::to_mask(const VertexSet& s) const {
    std::uint64_t mask = 0;
    for (int v : s.elements()) {
        int p = position_of(v);
        if (p < 0) throw ContractError("ground map: set leaves the ground set");
        mask |= std::uint64_t{1} << p;
    }
    return mask;
}

VertexSet GroundMap::to_set(std::uint64_t mask) const {
    VertexSet s;
    while (mask != 0) {
        int b = std::countr_zero(mask);
        mask &= mask - 1;
        s.insert(verts_[static_cast<std::size_t>(b)]);
    }
    return s;
}

ProductLattice::ProductLattice(GroundMap ground, const std::vector<VertexSet>& blocks)
    : ground_(std::move(ground)), blocks_(blocks) {
    VertexSet used;
    for (const VertexSet& b : blocks_) {
        if (b.intersects(used))
            throw ContractError("product lattice: blocks must be pairwise disjoint");
        used |= b;
    }
    free_part_ = VertexSet();
    for (int v : ground_.verts())
        if (!used.test(v)) free_part_.insert(v);

    free_mask_ = ground_.to_mask(free_part_);
    for (std::uint64_t m = free_mask_; m != 0; m &= m - 1)
        free_bits_.push_back(std::countr_zero(m));

    total_ = std::uint64_t{1} << free_bits_.size();
    for (const VertexSet& b : blocks_) {
        std::uint64_t mask = ground_.to_mask(b);
        block_masks_.push_back(mask);
        std::vector<int> bits;
        for (std::uint64_t m = mask; m != 0; m &= m - 1) bits.push_back(std::countr_zero(m));
        std::uint64_t radix = (std::uint64_t{1} << bits.size()) - 1;
        block_bits_.push_back(std::move(bits));
        radices_.push_back(radix);
        weights_.push_back(total_);
        total_ *= radix;  // an empty block zeroes the lattice out
    }
}

std::int64_t ProductLattice::index_mask(std::uint64_t mask) const {
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < free_bits_.size(); ++i)
        if (mask & (std::uint64_t{1} << free_bits_[i])) rank |= std::uint64_t{1} << i;
    for (std::size_t b = 0; b < block_masks_.size(); ++b) {
        std::uint64_t sub = 0;
        for (std::size_t i = 0; i < block_bits_[b].size(); ++i)
            if (mask & (std::uint64_t{1} << block_bits_[b][i])) sub |= std::uint64_t{1} << i;
        if (sub == 0) return -1;  // misses the block
        rank += (sub - 1) * weights_[b];
    }
    return static_cast<std::int64_t>(rank);
}

std::uint64_t ProductLattice::unindex_mask(std::uint64_t rank) const {
    std::uint64_t mask = 0;
    std::uint64_t free_digit = rank & (free_size() - 1);
    for (std::size_t i = 0; i < free_bits_.size(); ++i)
        if (free_digit & (std::uint64_t{1} << i)) mask |= std::uint64_t{1} << free_bits_[i];
    rank >>= free_bits_.size();
    for (std::size_t b = 0; b < block_masks_.size(); ++b) {
        std::uint64_t digit = rank % radices_[b];
        rank /= radices_[b];
        std::uint64_t sub = digit + 1;
        for (std::size_t i = 0; i < block_bits_[b].size(); ++i)
            if (sub & (std::uint64_t{1} << i)) mask |= std::uint64_t{1} << block_bits_[b][i];
    }
    return mask;
}

std::optional<std::uint64_t> ProductLattice::index(const VertexSet& v) const {
    std::int64_t r = index_mask(ground_.to_mask(v));
    if (r < 0) return std::nullopt;
    return static_cast<std::uint64_t>(r);
}

VertexSet ProductLattice::unindex(std::uint64_t rank) const {
    return ground_.to_set(unindex_mask(rank));
}

LatticeWalker::LatticeWalker(const ProductLattice& l) : l_(&l) {
    if (l.total_size() == 0) {
        rank_ = 0;
        return;
    }
    block_subs_.assign(static_cast<std::size_t>(l.block_count()), 1);
    mask_ = 0;
    pop_ = 0;
    for (int b = 0; b < l.block_count(); ++b) {
        mask_ |= std::uint64_t{1} << std::countr_zero(l.block_mask(b));
        pop_ += 1;
    }
}

void LatticeWalker::advance() {
    ++rank_;
    if (done()) return;
    std::uint64_t free_cap = l_->free_size();
    if (free_digit_ + 1 < free_cap) {
        std::uint64_t old = free_digit_;
        ++free_digit_;
        std::uint64_t changed = old ^ free_digit_;
        int idx = 0;
        for (std::uint64_t fm = l_->free_mask(); fm != 0 && changed != 0; fm &= fm - 1, ++idx) {
            if (changed & 1) {
                std::uint64_t bit = std::uint64_t{1} << std::countr_zero(fm);
                if (free_digit_ & (std::uint64_t{1} << idx)) {
                    mask_ |= bit;
                    ++pop_;
                } else {
                    mask_ &= ~bit;
                    --pop_;
                }
            }
            changed >>= 1;
        }
        return;
    }
    // free digit wraps; carry through the block digits
    pop_ -= std::popcount(free_digit_);
    mask_ &= ~l_->free_mask();
    free_digit_ = 0;
    for (std::size_t b = 0; b < block_subs_.size(); ++b) {
        std::uint64_t radix = l_->radices()[b];
        std::uint64_t block = l_->block_mask(b);
        std::uint64_t old_sub = block_subs_[b];
        pop_ -= std::popcount(old_sub);
        {
            std::uint64_t sub = old_sub;
            for (std::uint64_t bm = block; bm != 0; bm &= bm - 1) {
                if (sub & 1) mask_ &= ~(std::uint64_t{1} << std::countr_zero(bm));
                sub >>= 1;
            }
        }
        std::uint64_t next = old_sub + 1;
        bool carry = next > radix;
        if (carry) next = 1;
        block_subs_[b] = next;
        {
            std::uint64_t sub = next;
            for (std::uint64_t bm = block; bm != 0; bm &= bm - 1) {
                if (sub & 1) mask_ |= std::uint64_t{1} << std::countr_zero(bm);
                sub >>= 1;
            }
        }
        pop_ += std::popcount(next);
        if (!carry) return;
    }
    // every digit carried: rank_ has just reached total_size
}

namespace {

// In-place zeta sweeps over the lattice. Sources that would leave B(S')
// (a block digit dropping its last element) are skipped; free-part sources
// always stay inside.
void run_sweeps(const ProductLattice& l, std::vector<BigInt>& f) {
    const std::uint64_t total = l.total_size();
    if (total == 0) return;
    const std::uint64_t free_count = l.free_size();
    const int free_bits = std::popcount(l.free_mask());
    for (int i = 0; i < free_bits; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << i;
        for (std::uint64_t hi = 0; hi < total; hi += free_count)
            for (std::uint64_t d = 0; d < free_count; ++d)
                if (d & bit) f[hi + d] += f[hi + d - bit];
    }
    for (int b = 0; b < l.block_count(); ++b) {
        const std::uint64_t radix = l.radices()[b];
        const std::uint64_t weight = l.block_weight(b);
        const std::uint64_t period = weight * radix;
        const int nbits = std::popcount(l.block_mask(b));
        for (int j = 0; j < nbits; ++j) {
            const std::uint64_t bit = std::uint64_t{1} << j;
            for (std::uint64_t hi = 0; hi < total; hi += period)
                for (std::uint64_t sub = 1; sub <= radix; ++sub) {
                    if (!(sub & bit) || sub == bit) continue;
                    BigInt* to = f.data() + hi + (sub - 1) * weight;
                    BigInt* from = f.data() + hi + (sub - bit - 1) * weight;
                    for (std::uint64_t lo = 0; lo < weight; ++lo) to[lo] += from[lo];
                }
        }
    }
}

}  // namespace

std::vector<BigInt> trimmed_zeta_dense(const ProductLattice& l,
                                       const std::function<int(std::uint64_t)>& base,
                                       std::uint64_t* entries) {
    std::vector<BigInt> f(l.total_size());
    if (entries != nullptr) *entries += l.total_size();
    for (LatticeWalker w(l); !w.done(); w.advance()) f[w.rank()] = base(w.mask());
    run_sweeps(l, f);
    return f;
}

std::vector<BigInt> trimmed_zeta(const ProductLattice& l,
                                 const std::function<BigInt(const VertexSet&)>& base,
                                 std::uint64_t* entries) {
    std::vector<BigInt> f(l.total_size());
    if (entries != nullptr) *entries += l.total_size();
    for (LatticeWalker w(l); !w.done(); w.advance())
        f[w.rank()] = base(l.ground().to_set(w.mask()));
    run_sweeps(l, f);
    return f;
}

}  // namespace excol
