#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "excol/common.hpp"

namespace excol {

// A multiset of small element-sets over [0, universe_size); every member
// has at most `delta` elements.
struct SetFamily {
    int universe_size = 0;
    std::vector<std::vector<int>> members;
    int delta = 0;

    void normalize();  // sort + dedupe each member
    void validate() const;

    std::vector<int> element_degrees() const;
    int max_element_degree() const;
};

// Certified output of the removal lemma: the kept sub-family is pairwise
// disjoint once removed_universe is deleted, and
// |kept| > rho_bound * |F| + C * |removed_universe| holds exactly.
struct RemovalResult {
    std::vector<int> kept;              // indices into members
    std::vector<int> removed_universe;  // sorted element ids
    Rational rho_bound;                 // exact rational strictly below 1/(Delta e^{1+C Delta^2})
    std::int64_t threshold_used = 0;    // degree threshold d that won
};

// Greedy pairwise-disjoint sub-family, ascending index scan. If every
// element degree is <= d the result has >= ceil(|F| / (Delta d)) members.
std::vector<int> greedy_disjoint(const SetFamily& f);

// Scans degree thresholds d = 1..D with D = floor(e^{1 + C Delta^2}),
// removing the universe elements of degree > d and greedily keeping a
// disjoint sub-family of the rest; returns the best-scoring threshold
// (score = kept - C * removed; ties to the smallest d). Thresholds past the
// maximum element degree collapse onto it, so the scan is linear overall.
RemovalResult removal_lemma(const SetFamily& f, const Rational& c);

// Both certificate bullets, in exact arithmetic.
bool removal_certificate_holds(const SetFamily& f, const Rational& c, const RemovalResult& r);

// D = floor(e^{1 + C Delta^2}).
BigInt removal_threshold_count(const Rational& c, int delta);

// Exact rational strictly below 1 / (Delta * e^{1 + C Delta^2}).
Rational removal_rho_lower_bound(const Rational& c, int delta);

// Adversarial family: n disjoint copies of the complete (C+1)-ary tree of
// depth Delta-1, whose root-to-leaf paths are taken with multiplicity C+1.
// Total (C+1)^Delta * n sets of size Delta.
SetFamily hard_instance(int c, int delta, int n);

// Family text format: first line "universe_size count delta", then one line
// of space-separated element ids per set.
SetFamily load_family(std::istream& in);
SetFamily load_family_file(const std::string& path);
std::string emit_family(const SetFamily& f);

}  // namespace excol
