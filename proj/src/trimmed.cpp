#include "excol/trimmed.hpp"

#include <memory>

#include "excol/certified.hpp"
#include "excol/set_removal.hpp"
#include "excol/structure.hpp"

namespace excol {

namespace {

BigInt pow_bigint(const BigInt& base, int k) {
    BigInt r = 1;
    for (int i = 0; i < k; ++i) r *= base;
    return r;
}

// 2^ground * (2 - 2^-delta)^t: closed-form ceiling on the entries one
// transform family can touch when blocks have at most `delta` elements.
Rational work_bound(int ground_size, int delta, int t) {
    int d = std::max(delta, 0);
    Rational factor((BigInt(1) << (d + 1)) - 1, BigInt(1) << d);
    Rational b(BigInt(1) << ground_size);
    for (int i = 0; i < t; ++i) b *= factor;
    return b;
}

// Family {N(s)} over the whole vertex range; unused ids have degree zero
// and never reach any removal threshold.
SetFamily neighborhood_family(const Graph& g, const std::vector<int>& svec) {
    SetFamily f;
    f.universe_size = g.vertex_count();
    int max_size = 1;
    for (int s : svec) {
        f.members.push_back(g.neighbors(s).elements());
        max_size = std::max(max_size, g.degree(s));
    }
    f.delta = max_size;
    return f;
}

// Upper rational enclosure of log k / (-log(1 - 2^-(delta+1))), clamped to
// the family size once it provably exceeds it: with any C >= |F| every
// positive-removal threshold scores below the remove-nothing one, so the
// removal output no longer depends on C and the small clamp keeps the
// certificate constants desk-sized.
Rational trimmed_removal_constant(int k, int delta, std::size_t family_size) {
    Rational x(1, BigInt(1) << (delta + 1));
    // a one-color palette degenerates the balance constant to zero; any
    // positive C keeps the pipeline exact, so clamp the palette at two
    RatInterval lnk = ln_enclosure(Rational(std::max(k, 2)), 64);
    Rational c_lo = lnk.lo / (x + x * x);  // -ln(1-x) <= x + x^2 for x <= 1/2
    Rational fam(static_cast<long long>(family_size));
    if (c_lo >= fam) return fam;
    return lnk.hi / x;
}

struct RemovalSetup {
    VertexSet s_kept;
    VertexSet v0;
};

RemovalSetup run_removal(const Graph& g, const VertexSet& s_full, int k, int delta) {
    RemovalSetup out;
    if (s_full.empty()) return out;
    std::vector<int> svec = s_full.elements();
    SetFamily fam = neighborhood_family(g, svec);
    Rational c = trimmed_removal_constant(k, delta, fam.members.size());
    RemovalResult rr = removal_lemma(fam, c);
    for (int idx : rr.kept) out.s_kept.insert(svec[static_cast<std::size_t>(idx)]);
    for (int u : rr.removed_universe) out.v0.insert(u);
    return out;
}

std::uint64_t checked_pow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > (std::uint64_t{1} << 62) / base)
            throw ResourceError("enumeration space too large");
        r *= base;
    }
    return r;
}

}  // namespace

void TrimmedInstance::validate() const {
    if (k < 0) throw ContractError("trimmed: negative k");
    if (!s.is_subset_of(g.vertices())) throw ContractError("trimmed: S outside the graph");
    if (!g.is_independent(s)) throw ContractError("trimmed: S must be independent");
    for (int v : s.elements())
        if (g.degree(v) > max_block_degree)
            throw ContractError("trimmed: S member degree above the declared bound");
}

void FixedColoringInstance::validate() const {
    if (k < 0) throw ContractError("extension: negative k");
    if (!v0.is_subset_of(g.vertices()) || !s.is_subset_of(g.vertices()))
        throw ContractError("extension: vertex set outside the graph");
    if (v0.intersects(s)) throw ContractError("extension: S must avoid V0");
    if (!(c0.domain == v0)) throw ContractError("extension: coloring domain must equal V0");
    for (int v : v0.elements())
        if (c0.color(v) < 0 || c0.color(v) >= k)
            throw ContractError("extension: color outside [0,k)");
    if (!c0.proper_on(g, v0)) throw ContractError("extension: c0 improper on g[V0]");
    if (!g.is_independent(s)) throw ContractError("extension: S must be independent");
    VertexSet v = uncolored();
    VertexSet seen;
    for (int sv : s.elements()) {
        VertexSet nb = g.neighbors(sv) & v;
        if (nb.intersects(seen))
            throw ContractError("extension: neighborhoods must be disjoint inside V");
        seen |= nb;
    }
}

BigInt h_count(const TrimmedInstance& inst, const VertexSet& s_prime, WorkStats* stats,
               int table_cap) {
    inst.validate();
    if (!s_prime.is_subset_of(inst.s)) throw ContractError("h_count: S' must sit inside S");
    VertexSet ground_set = inst.g.vertices() - inst.s;
    GroundMap gm(inst.g, ground_set, table_cap);
    std::vector<VertexSet> blocks;
    for (int sv : s_prime.elements()) blocks.push_back(inst.g.neighbors(sv));
    ProductLattice lat(gm, blocks);  // rejects overlapping neighborhoods
    std::uint64_t entries = 0;
    std::vector<BigInt> beta = trimmed_zeta_dense(
        lat, [&gm](std::uint64_t mask) { return gm.independent(mask) ? 1 : 0; }, &entries);
    if (stats != nullptr) stats->lattice_entries += entries;
    const int gsize = gm.size();
    BigInt h = 0;
    for (LatticeWalker w(lat); !w.done(); w.advance()) {
        BigInt term = pow_bigint(beta[w.rank()], inst.k);
        if ((gsize - w.popcount()) & 1)
            h -= term;
        else
            h += term;
    }
    if (h < 0) throw InternalError("h_count: negative cover count");
    return h;
}

HCount h_total(const TrimmedInstance& inst, WorkStats* stats, int table_cap) {
    inst.validate();
    VertexSet seen;
    for (int v : inst.s.elements()) {
        if (inst.g.neighbors(v).intersects(seen))
            throw ContractError("decide_trimmed: neighborhoods of S must be pairwise disjoint");
        seen |= inst.g.neighbors(v);
    }
    std::vector<int> svec = inst.s.elements();
    if (svec.size() > 25) throw ResourceError("decide_trimmed: S too large to enumerate");
    std::uint64_t before = stats != nullptr ? stats->lattice_entries : 0;
    BigInt big_h = 0;
    for (std::uint64_t smask = 0; smask < (std::uint64_t{1} << svec.size()); ++smask) {
        VertexSet s_prime;
        for (std::size_t b = 0; b < svec.size(); ++b)
            if (smask & (std::uint64_t{1} << b)) s_prime.insert(svec[b]);
        BigInt h = h_count(inst, s_prime, stats, table_cap);
        if (std::popcount(smask) & 1)
            big_h -= h;
        else
            big_h += h;
    }
    if (stats != nullptr) {
        std::uint64_t entries = stats->lattice_entries - before;
        int ground = inst.g.vertex_count() - inst.s.count();
        stats->records.push_back(
            WorkRecord{entries, work_bound(ground, inst.max_block_degree, inst.s.count())});
    }
    if (big_h < 0) throw InternalError("decide_trimmed: negative H");
    return HCount{big_h};
}

bool decide_trimmed(const TrimmedInstance& inst, WorkStats* stats, int table_cap) {
    return h_total(inst, stats, table_cap).value > 0;
}

bool decide_extension(const FixedColoringInstance& inst, WorkStats* stats, int table_cap) {
    inst.validate();
    const Graph& g = inst.g;
    const int k = inst.k;
    if (k == 0) return g.vertex_count() == 0;
    VertexSet v = inst.uncolored();
    VertexSet ground_set = v - inst.s;
    std::vector<int> svec = inst.s.elements();
    const int ssize = static_cast<int>(svec.size());
    if (ssize > 25) throw ResourceError("decide_extension: S too large to enumerate");
    const std::uint64_t s_all = (std::uint64_t{1} << ssize) - 1;

    std::vector<VertexSet> v0j(static_cast<std::size_t>(k));
    for (int u : inst.v0.elements()) v0j[static_cast<std::size_t>(inst.c0.color(u))].insert(u);

    // S_j = members of S with a j-colored neighbor
    std::vector<std::uint64_t> in_sj(static_cast<std::size_t>(k), 0);
    for (int j = 0; j < k; ++j)
        for (int b = 0; b < ssize; ++b)
            if (g.neighbors(svec[static_cast<std::size_t>(b)]).intersects(v0j[static_cast<std::size_t>(j)]))
                in_sj[static_cast<std::size_t>(j)] |= std::uint64_t{1} << b;

    std::uint64_t intersection = s_all;
    for (int j = 0; j < k; ++j) intersection &= in_sj[static_cast<std::size_t>(j)];
    if (intersection != 0) return false;  // some s sees every color already

    GroundMap gm(g, ground_set, table_cap);
    const int gsize = gm.size();

    // ground vertices adjacent to the j-colored class
    std::vector<std::uint64_t> forbid(static_cast<std::size_t>(k), 0);
    for (int j = 0; j < k; ++j)
        for (int p = 0; p < gsize; ++p)
            if (g.neighbors(gm.verts()[static_cast<std::size_t>(p)])
                    .intersects(v0j[static_cast<std::size_t>(j)]))
                forbid[static_cast<std::size_t>(j)] |= std::uint64_t{1} << p;

    std::vector<VertexSet> block_of(static_cast<std::size_t>(ssize));
    int max_block = 0;
    for (int b = 0; b < ssize; ++b) {
        block_of[static_cast<std::size_t>(b)] =
            g.neighbors(svec[static_cast<std::size_t>(b)]) & ground_set;
        max_block = std::max(max_block, block_of[static_cast<std::size_t>(b)].count());
    }

    auto blocks_for = [&](std::uint64_t mask) {
        std::vector<VertexSet> blocks;
        for (int b = 0; b < ssize; ++b)
            if (mask & (std::uint64_t{1} << b)) blocks.push_back(block_of[static_cast<std::size_t>(b)]);
        return blocks;
    };

    // Every beta_j table for S' inside S \ S_j is built before any h is
    // assembled; values for other S' follow from beta_j(V',S') =
    // beta_j(V', S' \ S_j).
    struct BetaTable {
        std::unique_ptr<ProductLattice> lat;
        std::vector<BigInt> vals;
    };
    std::vector<std::vector<BetaTable>> beta(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        beta[static_cast<std::size_t>(j)].resize(std::size_t{1} << ssize);
        std::uint64_t avail = s_all & ~in_sj[static_cast<std::size_t>(j)];
        std::uint64_t fam_entries = 0;
        const std::uint64_t fb = forbid[static_cast<std::size_t>(j)];
        for (std::uint64_t t = 0; t <= s_all; ++t) {
            if (t & ~avail) continue;
            auto lat = std::make_unique<ProductLattice>(gm, blocks_for(t));
            BetaTable& slot = beta[static_cast<std::size_t>(j)][t];
            slot.vals = trimmed_zeta_dense(
                *lat,
                [&gm, fb](std::uint64_t mask) {
                    return (!(mask & fb) && gm.independent(mask)) ? 1 : 0;
                },
                &fam_entries);
            slot.lat = std::move(lat);
            if (s_all == 0) break;
        }
        if (stats != nullptr) {
            stats->lattice_entries += fam_entries;
            stats->records.push_back(
                WorkRecord{fam_entries, work_bound(gsize, max_block, std::popcount(avail))});
        }
    }

    BigInt big_h = 0;
    std::uint64_t asm_entries = 0;
    for (std::uint64_t sp = 0; sp <= s_all; ++sp) {
        ProductLattice lat(gm, blocks_for(sp));
        asm_entries += lat.total_size();
        BigInt h = 0;
        for (LatticeWalker w(lat); !w.done(); w.advance()) {
            BigInt prod = 1;
            for (int j = 0; j < k && prod != 0; ++j) {
                std::uint64_t t = sp & ~in_sj[static_cast<std::size_t>(j)];
                const BetaTable& bt = beta[static_cast<std::size_t>(j)][t];
                std::int64_t idx = bt.lat->index_mask(w.mask());
                if (idx < 0) throw InternalError("decide_extension: lattice lookup escaped B(S')");
                prod *= bt.vals[static_cast<std::size_t>(idx)];
            }
            if ((gsize - w.popcount()) & 1)
                h -= prod;
            else
                h += prod;
        }
        if (h < 0) throw InternalError("decide_extension: negative h");
        if (std::popcount(sp) & 1)
            big_h -= h;
        else
            big_h += h;
        if (s_all == 0) break;
    }
    if (stats != nullptr) {
        stats->lattice_entries += asm_entries;
        stats->records.push_back(WorkRecord{asm_entries, work_bound(gsize, max_block, ssize)});
    }
    if (big_h < 0) throw InternalError("decide_extension: negative H");
    return big_h > 0;
}

namespace {

// Shared driver: enumerate colorings of v0 (whole palette, or per-vertex
// lists when `lists` is nonnull) in ascending mixed-radix order with the
// lowest vertex as the least significant digit, and test extension on the
// graph `host` whose pre-colored part is v0 plus `extra_fixed`.
bool enumerate_and_extend(const Graph& host, const VertexSet& v0, const VertexSet& extra_fixed,
                          const PartialColoring& fixed_base, int k_eff, int k_enum,
                          const std::vector<std::vector<int>>* lists, const VertexSet& s_kept,
                          WorkStats* stats, int table_cap, int enum_cap) {
    std::vector<int> v0v = v0.elements();
    if (static_cast<int>(v0v.size()) > enum_cap)
        throw ResourceError("trimmed pipeline: enumeration set of " +
                            std::to_string(v0v.size()) + " vertices exceeds the cap of " +
                            std::to_string(enum_cap));
    std::vector<std::uint64_t> radix(v0v.size());
    for (std::size_t i = 0; i < v0v.size(); ++i) {
        radix[i] = lists != nullptr
                       ? (*lists)[static_cast<std::size_t>(v0v[i])].size()
                       : static_cast<std::uint64_t>(k_enum);
        if (radix[i] == 0) return false;  // empty palette for a forced vertex
    }
    std::uint64_t combos = 1;
    for (std::uint64_t r : radix) {
        if (r != 0 && combos > (std::uint64_t{1} << 62) / r)
            throw ResourceError("trimmed pipeline: enumeration space too large");
        combos *= r;
    }
    VertexSet fixed = v0 | extra_fixed;
    for (std::uint64_t counter = 0; counter < combos; ++counter) {
        PartialColoring c0 = fixed_base;
        std::uint64_t rest = counter;
        for (std::size_t i = 0; i < v0v.size(); ++i) {
            std::uint64_t digit = rest % radix[i];
            rest /= radix[i];
            int color = lists != nullptr
                            ? (*lists)[static_cast<std::size_t>(v0v[i])][digit]
                            : static_cast<int>(digit);
            c0.set(v0v[i], color);
        }
        if (!c0.proper_on(host, fixed)) continue;
        FixedColoringInstance inst{host, fixed, c0, s_kept, k_eff};
        if (decide_extension(inst, stats, table_cap)) return true;
    }
    return false;
}

}  // namespace

bool decide_bounded(const Graph& g, int k, int delta, WorkStats* stats, int table_cap,
                    int enum_cap) {
    if (delta < 0) throw ContractError("decide_bounded: negative delta");
    if (g.vertex_count() > table_cap)
        throw ResourceError("decide_bounded: graph above the table capacity");
    if (k <= 0) return k == 0 && g.vertex_count() == 0;
    if (k == 1) return g.edge_count() == 0;

    VertexSet s_full = greedy_independent_low_degree(g, delta);
    RemovalSetup setup = run_removal(g, s_full, k, delta);
    checked_pow(static_cast<std::uint64_t>(k), setup.v0.count());
    PartialColoring base(g.vertex_count());
    return enumerate_and_extend(g, setup.v0, VertexSet(), base, k, k, nullptr, setup.s_kept,
                                stats, table_cap, enum_cap);
}

bool decide_list_bounded(const Graph& g, const ListAssignment& lists, int k, int delta,
                         WorkStats* stats, int table_cap, int enum_cap) {
    lists.validate(g.vertex_count());
    if (lists.max_list_size() > k)
        throw ContractError("decide_list_bounded: a list exceeds the declared k");
    const int n = g.vertex_count();
    if (n > table_cap) throw ResourceError("decide_list_bounded: graph above the table capacity");
    if (n == 0) return true;
    for (const auto& l : lists.lists)
        if (l.empty()) return false;
    const int universe = lists.universe_size;

    // augmented graph: one vertex per universe color, adjacent to every
    // graph vertex whose list misses that color
    GraphBuilder builder(n + universe);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v).elements())
            if (u > v) builder.add_edge(v, u);
    for (int v = 0; v < n; ++v) {
        std::size_t at = 0;
        const auto& l = lists.lists[static_cast<std::size_t>(v)];
        for (int u = 0; u < universe; ++u) {
            if (at < l.size() && l[at] == u) {
                ++at;
                continue;
            }
            builder.add_edge(v, n + u);
        }
    }
    Graph gp = builder.build();

    VertexSet color_vertices;
    PartialColoring base(n + universe);
    for (int u = 0; u < universe; ++u) {
        color_vertices.insert(n + u);
        base.set(n + u, u);
    }

    VertexSet s_full = greedy_independent_low_degree(g, delta);  // degrees within g
    RemovalSetup setup = run_removal(g, s_full, k, delta);
    checked_pow(static_cast<std::uint64_t>(std::max(k, 1)), setup.v0.count());
    return enumerate_and_extend(gp, setup.v0, color_vertices, base, universe, k, &lists.lists,
                                setup.s_kept, stats, table_cap, enum_cap);
}

std::optional<PartialColoring> extend_over_s(const Graph& g, const VertexSet& s,
                                             const PartialColoring& partial, int k) {
    if (!g.is_independent(s)) throw ContractError("extend_over_s: S must be independent");
    VertexSet rest = g.vertices() - s;
    if (!partial.total_on(rest)) throw ContractError("extend_over_s: coloring must cover V \\ S");
    for (int v : rest.elements())
        if (partial.color(v) < 0 || partial.color(v) >= k)
            throw ContractError("extend_over_s: color outside [0,k)");
    if (!partial.proper_on(g, rest)) throw ContractError("extend_over_s: improper partial coloring");
    PartialColoring out = partial;
    for (int v : s.elements()) {
        std::vector<bool> used(static_cast<std::size_t>(k), false);
        for (int u : g.neighbors(v).elements()) used[static_cast<std::size_t>(partial.color(u))] = true;
        int pick = -1;
        for (int c = 0; c < k; ++c)
            if (!used[static_cast<std::size_t>(c)]) {
                pick = c;
                break;
            }
        if (pick < 0) return std::nullopt;
        out.set(v, pick);
    }
    return out;
}

std::optional<PartialColoring> find_coloring_trimmed(const Graph& g, int k, int delta,
                                                     WorkStats* stats, int table_cap,
                                                     int enum_cap) {
    const int n = g.vertex_count();
    if (n > table_cap) throw ResourceError("find_coloring_trimmed: graph above the table capacity");
    if (k <= 0) {
        if (k == 0 && n == 0) return PartialColoring(0);
        return std::nullopt;
    }
    if (k == 1) {
        if (g.edge_count() != 0) return std::nullopt;
        PartialColoring all(n);
        for (int v = 0; v < n; ++v) all.set(v, 0);
        return all;
    }

    VertexSet s_full = greedy_independent_low_degree(g, delta);
    RemovalSetup setup = run_removal(g, s_full, k, delta);
    checked_pow(static_cast<std::uint64_t>(k), setup.v0.count());
    const VertexSet s_kept = setup.s_kept;
    auto decide_fixed = [&](const Graph& h) {
        PartialColoring base(n);
        return enumerate_and_extend(h, setup.v0, VertexSet(), base, k, k, nullptr, s_kept, stats,
                                    table_cap, enum_cap);
    };

    if (!decide_fixed(g)) return std::nullopt;

    // saturate non-edges outside S; additions there leave the degrees and
    // independence of S untouched
    VertexSet scope = g.vertices() - s_kept;
    std::vector<int> sv = scope.elements();
    Graph h = g;
    for (std::size_t i = 0; i < sv.size(); ++i)
        for (std::size_t j = i + 1; j < sv.size(); ++j) {
            if (h.has_edge(sv[i], sv[j])) continue;
            Graph candidate = h.with_edge(sv[i], sv[j]);
            if (decide_fixed(candidate)) h = std::move(candidate);
        }

    PartialColoring on_rest(n);
    std::vector<int> cls(static_cast<std::size_t>(n), -1);
    int classes = 0;
    for (int v : sv) {
        if (cls[static_cast<std::size_t>(v)] >= 0) continue;
        int id = classes++;
        cls[static_cast<std::size_t>(v)] = id;
        for (int u : sv) {
            if (u == v || h.has_edge(u, v)) continue;
            int& c = cls[static_cast<std::size_t>(u)];
            if (c >= 0 && c != id)
                throw InternalError("find_coloring_trimmed: saturation is not transitive");
            c = id;
        }
    }
    if (classes > k) throw InternalError("find_coloring_trimmed: more than k classes");
    for (int v : sv) on_rest.set(v, cls[static_cast<std::size_t>(v)]);

    std::optional<PartialColoring> full = extend_over_s(g, s_kept, on_rest, k);
    if (!full.has_value())
        throw InternalError("find_coloring_trimmed: extension over S failed after saturation");
    if (!full->proper_total(g))
        throw InternalError("find_coloring_trimmed: produced an improper coloring");
    return full;
}

}  // namespace excol
