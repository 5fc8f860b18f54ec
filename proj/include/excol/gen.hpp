#pragma once

#include <cstdint>

#include "excol/graph.hpp"
#include "excol/set_removal.hpp"

namespace excol {

// G(n, p) with a platform-independent edge draw (u64 threshold test).
Graph gen_gnp(int n, double p, std::uint64_t seed);

// Dense core plus bounded fringe: at least ceil(alpha * n) vertices of
// degree <= delta, the rest a clique. The composite passes
// is_alpha_delta_bounded(alpha, delta) by construction.
Graph gen_bounded(int n, int delta, double alpha, std::uint64_t seed);

// G(n, p) patched with extra random edges until the minimum degree reaches
// min_degree.
Graph gen_min_degree(int n, double p, int min_degree, std::uint64_t seed);

// Spine path of `teeth` vertices with one pendant leaf each (leaves get the
// low indices). Max degree 3; the leaves form a distance-3 independent set
// of size n/2 with singleton neighborhoods.
Graph comb_graph(int teeth);

// Petersen graph (3-chromatic, 3-regular, n = 10).
Graph petersen();

// Random family of `count` sets of size <= delta over [0, universe_size).
SetFamily gen_family(int universe_size, int count, int delta, std::uint64_t seed);

}  // namespace excol
