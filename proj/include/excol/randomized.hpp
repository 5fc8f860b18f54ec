#pragma once

#include <cstdint>
#include <optional>

#include "excol/coloring.hpp"
#include "excol/graph.hpp"
#include "excol/trimmed.hpp"

namespace excol {

// Constant schedule of the k-to-(k-2) reduction. epsilon is the list
// solver's guaranteed base (a configuration input); the remaining fields
// derive from (k, epsilon, r, delta_prime).
struct ReductionParams {
    int k = 0;
    Rational epsilon;
    int delta_prime = 0;
    int r = 0;
    long long delta = 0;    // r^2 + r(k-1)delta'
    Rational beta_prime;    // 8 (2-eps)^-(r-1) / (1 - (2-eps)^-r)
    Rational alpha_prime;   // beta' / 2
    std::uint64_t seed = 0;
    std::uint64_t max_reps = 0;

    static ReductionParams derive(int k, const Rational& epsilon, int r, int delta_prime);
};

// True iff (k/(2-eps))^((6+ln d')/d' + beta') * (2-eps) < 2, decided with
// certified rational enclosures.
bool feasibility_holds(int k, const Rational& epsilon, int r, int delta_prime);

// Smallest (r, delta') in lexicographic order passing the feasibility
// inequality; ResourceError if none exists under the search caps.
ReductionParams select_parameters(int k, const Rational& epsilon, int r_cap = 64,
                                  int delta_prime_cap = 1 << 14);

// Vertices outside r0 that do not see two distinct colors among their
// r0-neighbors under c_r0 (the set whose colors A1 enumerates).
VertexSet undercolored_set(const Graph& g, const VertexSet& r0, const PartialColoring& c_r0);

// Random-subset reduction to (k-2)-list-coloring. Soundness is
// unconditional: anything returned is a verified proper coloring.
std::optional<PartialColoring> algorithm_a1(const Graph& g, const ReductionParams& params,
                                            std::uint64_t seed);

// Bounded graphs take the trimmed search path, the rest run A1.
std::optional<PartialColoring> algorithm_a2(const Graph& g, const ReductionParams& params,
                                            std::uint64_t seed);

// Contraction recursion: with probability (2-eps)^-n (or once n <= r) run
// A2; otherwise contract a random independent r-subset of a random
// high-degree vertex's neighborhood and recurse, expanding on the way out.
std::optional<PartialColoring> algorithm_a3(const Graph& g, const ReductionParams& params,
                                            std::uint64_t seed);

struct SixColoringResult {
    std::optional<PartialColoring> coloring;
    std::uint64_t attempts = 0;       // A3 repetitions actually used
    std::uint64_t rep_cap = 0;        // min(max_reps, n (2-eps)^(n+1))
    ReductionParams params;
};

// Repeats A3 with derived seeds until a verified coloring appears or the
// repetition cap runs out. One-sided error: "absent" may be wrong, a
// returned coloring never is. max_reps = 0 picks the default
// min(10 n 2^n, 10^6). threads > 1 runs repetition batches concurrently
// and keeps the lowest-index success, so transcripts match the sequential
// ones.
SixColoringResult solve_coloring_randomized(const Graph& g, int k, const Rational& epsilon,
                                            std::uint64_t seed, std::uint64_t max_reps = 0,
                                            int threads = 1);

// The k = 6 instantiation with the stock list-solver base.
SixColoringResult solve_6_coloring(const Graph& g, std::uint64_t seed,
                                   std::uint64_t max_reps = 0, int threads = 1);

}  // namespace excol
