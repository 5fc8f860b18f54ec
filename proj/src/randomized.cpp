#include "excol/randomized.hpp"

#include <future>
#include <tuple>
#include <map>
#include <mutex>

#include "excol/certified.hpp"
#include "excol/list_solver.hpp"
#include "excol/rng.hpp"
#include "excol/structure.hpp"

namespace excol {

namespace {

Rational rational_pow(Rational base, std::uint64_t e) {
    Rational r = 1;
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return r;
}

}  // namespace

ReductionParams ReductionParams::derive(int k, const Rational& epsilon, int r, int delta_prime) {
    ReductionParams p;
    p.k = k;
    p.epsilon = epsilon;
    p.r = r;
    p.delta_prime = delta_prime;
    p.delta = static_cast<long long>(r) * r + static_cast<long long>(r) * (k - 1) * delta_prime;
    Rational base = 2 - epsilon;
    Rational inv_r1 = 1 / rational_pow(base, static_cast<std::uint64_t>(r - 1));
    Rational inv_r = 1 / rational_pow(base, static_cast<std::uint64_t>(r));
    p.beta_prime = 8 * inv_r1 / (1 - inv_r);
    p.alpha_prime = p.beta_prime / 2;
    return p;
}

bool feasibility_holds(int k, const Rational& epsilon, int r, int delta_prime) {
    if (epsilon <= 0 || epsilon >= 1) throw ContractError("feasibility: epsilon outside (0,1)");
    if (k < 3 || r < 2 || delta_prime < 2) return false;
    ReductionParams p = ReductionParams::derive(k, epsilon, r, delta_prime);
    Rational big_l = Rational(k) / (2 - epsilon);  // > 1
    // (k/(2-eps))^x * (2-eps) < 2  <=>  x ln L < ln 2 - ln(2-eps)
    for (int prec = 96; prec <= 768; prec *= 2) {
        RatInterval lnd = ln_enclosure(Rational(delta_prime), prec);
        RatInterval lnl = ln_enclosure(big_l, prec);
        RatInterval ln2 = ln_enclosure(Rational(2), prec);
        RatInterval ln2e = ln_enclosure(2 - epsilon, prec);
        Rational x_lo = (6 + lnd.lo) / delta_prime + p.beta_prime;
        Rational x_hi = (6 + lnd.hi) / delta_prime + p.beta_prime;
        if (x_hi * lnl.hi < ln2.lo - ln2e.hi) return true;
        if (x_lo * lnl.lo >= ln2.hi - ln2e.lo) return false;
    }
    return false;  // enclosures stayed astride; treat as infeasible
}

ReductionParams select_parameters(int k, const Rational& epsilon, int r_cap, int delta_prime_cap) {
    if (epsilon <= 0 || epsilon >= 1)
        throw ContractError("select_parameters: epsilon outside (0,1)");
    if (k < 3) throw ContractError("select_parameters: k must be at least 3");
    static std::mutex memo_mutex;
    static std::map<std::tuple<int, Rational, int, int>, ReductionParams> memo;
    std::tuple<int, Rational, int, int> key{k, epsilon, r_cap, delta_prime_cap};
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    Rational big_l = Rational(k) / (2 - epsilon);
    RatInterval lnl = ln_enclosure(big_l, 96);
    RatInterval ln2 = ln_enclosure(Rational(2), 96);
    RatInterval ln2e = ln_enclosure(2 - epsilon, 96);
    for (int r = 2; r <= r_cap; ++r) {
        ReductionParams probe = ReductionParams::derive(k, epsilon, r, 2);
        // necessary for any delta': beta' ln L < ln 2 - ln(2-eps)
        if (!(probe.beta_prime * lnl.lo < ln2.hi - ln2e.lo)) continue;
        for (int dp = 2; dp <= delta_prime_cap; ++dp)
            if (feasibility_holds(k, epsilon, r, dp)) {
                ReductionParams found = ReductionParams::derive(k, epsilon, r, dp);
                std::lock_guard<std::mutex> lock(memo_mutex);
                memo.emplace(std::move(key), found);
                return found;
            }
    }
    throw ResourceError("select_parameters: no feasible (r, delta') under the search caps");
}

namespace {

// Lists built for vertices outside R0 u B have at least two neighbor colors
// forbidden.
std::optional<PartialColoring> a1_finish(const Graph& g, const ReductionParams& params,
                                         const VertexSet& fixed, const PartialColoring& cfix) {
    const int k = params.k;
    VertexSet rest = g.vertices() - fixed;
    std::vector<int> to_orig;
    ListInstance inst;
    inst.g = g.induced(rest, &to_orig);
    inst.lists.universe_size = k;
    inst.lists.lists.resize(to_orig.size());
    for (std::size_t i = 0; i < to_orig.size(); ++i) {
        std::vector<bool> forbidden(static_cast<std::size_t>(k), false);
        for (int u : (g.neighbors(to_orig[i]) & fixed).elements())
            forbidden[static_cast<std::size_t>(cfix.color(u))] = true;
        for (int c = 0; c < k; ++c)
            if (!forbidden[static_cast<std::size_t>(c)])
                inst.lists.lists[i].push_back(c);
        if (static_cast<int>(inst.lists.lists[i].size()) > k - 2)
            throw InternalError("a1: a leftover vertex kept more than k-2 colors");
    }
    std::optional<PartialColoring> sub = solve_list_backtracking(inst);
    if (!sub.has_value()) return std::nullopt;
    PartialColoring full = cfix;
    for (std::size_t i = 0; i < to_orig.size(); ++i)
        full.set(to_orig[i], sub->color(static_cast<int>(i)));
    if (!full.proper_total(g)) throw InternalError("a1: assembled coloring improper");
    return full;
}

std::uint64_t checked_pow_u64(std::uint64_t base, std::size_t exp) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && r > (std::uint64_t{1} << 62) / base)
            throw ResourceError("a1: enumeration space too large");
        r *= base;
    }
    return r;
}

}  // namespace

VertexSet undercolored_set(const Graph& g, const VertexSet& r0, const PartialColoring& c_r0) {
    VertexSet bset;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (r0.test(v)) continue;
        int first = -1;
        bool two = false;
        for (int u : (g.neighbors(v) & r0).elements()) {
            int c = c_r0.color(u);
            if (first < 0)
                first = c;
            else if (c != first) {
                two = true;
                break;
            }
        }
        if (!two) bset.insert(v);
    }
    return bset;
}

std::optional<PartialColoring> algorithm_a1(const Graph& g, const ReductionParams& params,
                                            std::uint64_t seed) {
    const int n = g.vertex_count();
    const int k = params.k;
    CounterRng rng(seed);
    RatInterval lnd = ln_enclosure(Rational(params.delta_prime), 64);

    // choice order: one Bernoulli per vertex, ascending
    Rational p = round_down_dyadic(lnd.lo / params.delta_prime, 48);
    VertexSet r0;
    for (int v = 0; v < n; ++v)
        if (rng.bernoulli(p)) r0.insert(v);
    if (Rational(r0.count()) > (1 + lnd.hi) * n / params.delta_prime) return std::nullopt;

    std::vector<int> r0v = r0.elements();
    std::uint64_t outer = checked_pow_u64(static_cast<std::uint64_t>(k), r0v.size());
    for (std::uint64_t oc = 0; oc < outer; ++oc) {
        PartialColoring cp(n);
        std::uint64_t rest = oc;
        for (std::size_t i = 0; i < r0v.size(); ++i) {
            cp.set(r0v[i], static_cast<int>(rest % static_cast<std::uint64_t>(k)));
            rest /= static_cast<std::uint64_t>(k);
        }
        if (!cp.proper_on(g, r0)) continue;

        VertexSet bset = undercolored_set(g, r0, cp);
        if (!(Rational(bset.count()) <
              params.beta_prime * n + Rational(5) * n / params.delta_prime))
            continue;

        std::vector<int> bv = bset.elements();
        std::uint64_t inner = checked_pow_u64(static_cast<std::uint64_t>(k), bv.size());
        VertexSet fixed = r0 | bset;
        for (std::uint64_t ic = 0; ic < inner; ++ic) {
            PartialColoring cfix = cp;
            std::uint64_t irest = ic;
            for (std::size_t i = 0; i < bv.size(); ++i) {
                cfix.set(bv[i], static_cast<int>(irest % static_cast<std::uint64_t>(k)));
                irest /= static_cast<std::uint64_t>(k);
            }
            if (!cfix.proper_on(g, fixed)) continue;
            std::optional<PartialColoring> full = a1_finish(g, params, fixed, cfix);
            if (full.has_value()) return full;
        }
    }
    return std::nullopt;
}

std::optional<PartialColoring> algorithm_a2(const Graph& g, const ReductionParams& params,
                                            std::uint64_t seed) {
    int delta_cmp = static_cast<int>(std::min<long long>(params.delta, 1 << 30));
    if (low_degree_count_at_least(g, params.alpha_prime, delta_cmp)) {
        // the trimmed search path is exact for any degree parameter; the
        // graph's own maximum degree keeps the constants desk-sized
        long long ds = std::min<long long>(params.delta, std::max(1, g.max_degree()));
        return find_coloring_trimmed(g, params.k, static_cast<int>(std::max<long long>(1, ds)));
    }
    return algorithm_a1(g, params, seed);
}

namespace {

struct Contraction {
    Graph h;
    std::vector<int> orig_to_new;  // members of S map to the contracted vertex
    int contracted_vertex = -1;
};

Contraction contract_set(const Graph& g, const VertexSet& s) {
    const int n = g.vertex_count();
    Contraction out;
    out.orig_to_new.assign(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!s.test(v)) out.orig_to_new[static_cast<std::size_t>(v)] = next++;
    out.contracted_vertex = next;
    for (int v : s.elements()) out.orig_to_new[static_cast<std::size_t>(v)] = next;

    GraphBuilder b(next + 1);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v).elements())
            if (u > v) {
                int a = out.orig_to_new[static_cast<std::size_t>(v)];
                int c = out.orig_to_new[static_cast<std::size_t>(u)];
                if (a != c) b.add_edge(a, c);
            }
    out.h = b.build();
    return out;
}

std::optional<PartialColoring> a3_recurse(const Graph& g, const ReductionParams& params,
                                          CounterRng& rng) {
    const int n = g.vertex_count();
    Rational p_flag = rational_pow(1 / (2 - params.epsilon), static_cast<std::uint64_t>(n));
    bool flag = rng.bernoulli(p_flag);
    if (flag || n <= params.r) return algorithm_a2(g, params, rng.next_u64());

    int v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    if (g.degree(v) < params.delta) return std::nullopt;  // halt this attempt
    std::vector<int> nbrs = g.neighbors(v).elements();
    VertexSet s;
    for (int i = 0; i < params.r; ++i) {
        // uniform over the not-yet-picked neighbors, swap-remove order
        std::uint64_t idx = rng.next_below(static_cast<std::uint64_t>(nbrs.size() - i));
        std::swap(nbrs[idx], nbrs[nbrs.size() - 1 - i]);
        s.insert(nbrs[nbrs.size() - 1 - i]);
    }
    if (!g.is_independent(s)) return std::nullopt;  // halt this attempt

    Contraction c = contract_set(g, s);
    std::optional<PartialColoring> sub = a3_recurse(c.h, params, rng);
    if (!sub.has_value()) return std::nullopt;
    PartialColoring full(n);
    for (int u = 0; u < n; ++u)
        full.set(u, sub->color(c.orig_to_new[static_cast<std::size_t>(u)]));
    if (!full.proper_total(g))
        throw InternalError("a3: expansion of a contracted coloring is improper");
    return full;
}

}  // namespace

std::optional<PartialColoring> algorithm_a3(const Graph& g, const ReductionParams& params,
                                            std::uint64_t seed) {
    CounterRng rng(seed);
    return a3_recurse(g, params, rng);
}

SixColoringResult solve_coloring_randomized(const Graph& g, int k, const Rational& epsilon,
                                            std::uint64_t seed, std::uint64_t max_reps,
                                            int threads) {
    ReductionParams params = select_parameters(k, epsilon);
    const int n = g.vertex_count();
    if (max_reps == 0) {
        std::uint64_t def = 1'000'000;
        if (n < 17) {
            std::uint64_t by_n = 10ULL * std::max(1, n) * (std::uint64_t{1} << n);
            def = std::min(def, by_n);
        }
        max_reps = def;
    }
    params.seed = seed;
    params.max_reps = max_reps;

    // n (2-eps)^(n+1) repetitions already push the miss probability below
    // e^-n; the cap only binds on tiny graphs
    std::uint64_t rep_cap = max_reps;
    Rational analysis_cap = Rational(std::max(1, n)) *
                            rational_pow(2 - params.epsilon, static_cast<std::uint64_t>(n) + 1);
    if (analysis_cap < Rational(max_reps)) {
        BigInt flo = boost::multiprecision::numerator(analysis_cap) /
                     boost::multiprecision::denominator(analysis_cap);
        rep_cap = std::max<std::uint64_t>(1, flo.convert_to<std::uint64_t>());
    }

    SixColoringResult result;
    result.params = params;
    result.rep_cap = rep_cap;

    auto run_one = [&](std::uint64_t i) {
        return algorithm_a3(g, params, CounterRng::derive(seed, i));
    };

    if (threads <= 1) {
        for (std::uint64_t i = 0; i < rep_cap; ++i) {
            std::optional<PartialColoring> got = run_one(i);
            if (got.has_value()) {
                result.coloring = std::move(got);
                result.attempts = i + 1;
                return result;
            }
        }
        result.attempts = rep_cap;
        return result;
    }

    // batches with lowest-index-wins reduction reproduce the sequential
    // transcript
    for (std::uint64_t base = 0; base < rep_cap; base += static_cast<std::uint64_t>(threads)) {
        std::uint64_t batch = std::min<std::uint64_t>(threads, rep_cap - base);
        std::vector<std::future<std::optional<PartialColoring>>> futs;
        futs.reserve(batch);
        for (std::uint64_t j = 0; j < batch; ++j)
            futs.push_back(std::async(std::launch::async, run_one, base + j));
        for (std::uint64_t j = 0; j < batch; ++j) {
            std::optional<PartialColoring> got = futs[j].get();
            if (got.has_value() && !result.coloring.has_value()) {
                result.coloring = std::move(got);
                result.attempts = base + j + 1;
            }
        }
        if (result.coloring.has_value()) return result;
    }
    result.attempts = rep_cap;
    return result;
}

SixColoringResult solve_6_coloring(const Graph& g, std::uint64_t seed, std::uint64_t max_reps,
                                   int threads) {
    return solve_coloring_randomized(g, 6, Rational(19, 100), seed, max_reps, threads);
}

}  // namespace excol
