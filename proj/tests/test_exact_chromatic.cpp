#include <doctest.h>

#include "excol/exact_chromatic.hpp"
#include "excol/gen.hpp"
#include "excol/oracle.hpp"

using namespace excol;

namespace {

Graph path(int n) {
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return b.build();
}

Graph cycle(int n) {
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return b.build();
}

Graph complete(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.build();
}

// direct subset enumeration, independent of the DP
long long count_independent_sets(const Graph& g, const VertexSet& within) {
    std::vector<int> verts = within.elements();
    long long count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << verts.size()); ++mask) {
        VertexSet s;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (mask & (std::uint64_t{1} << i)) s.insert(verts[i]);
        if (g.is_independent(s)) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("independent set table matches enumeration on P3 and K3") {
    Graph p3 = path(3);
    SubsetTable t = independent_set_table(p3);
    CHECK(t.values[7] == 5);
    CHECK(t.values[0] == 1);
    Graph k3 = complete(3);
    CHECK(independent_set_table(k3).values[7] == 4);
}

TEST_CASE("independent set table matches enumeration everywhere") {
    Graph g = gen_gnp(8, 0.45, 3);
    SubsetTable t = independent_set_table(g);
    for (std::uint64_t mask = 0; mask < 256; ++mask) {
        VertexSet s;
        for (int v = 0; v < 8; ++v)
            if (mask & (std::uint64_t{1} << v)) s.insert(v);
        CHECK(t.values[mask] == count_independent_sets(g, s));
    }
}

TEST_CASE("cover count on K3") {
    CHECK(cover_count(complete(3), 3).value == 6);  // the 3! orderings
    CHECK(cover_count(complete(3), 2).value == 0);
    CHECK(cover_count(Graph(1), 1).value == 1);
}

TEST_CASE("cover count equals the brute oracle") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = gen_gnp(7, 0.4, seed);
        for (int k = 0; k <= 4; ++k)
            CHECK(cover_count(g, k).value == brute_cover_count(g, k, {}, g.vertices()));
    }
}

TEST_CASE("decide examples") {
    CHECK(decide_k_colorable(cycle(5), 3));
    CHECK_FALSE(decide_k_colorable(cycle(5), 2));
    CHECK_FALSE(decide_k_colorable(complete(4), 3));
    CHECK(decide_k_colorable(petersen(), 3));
    CHECK(brute_k_colorable(petersen(), 3));
}

TEST_CASE("decide is monotone in k") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = gen_gnp(9, 0.5, seed);
        bool prev = false;
        for (int k = 0; k <= 9; ++k) {
            bool cur = decide_k_colorable(g, k);
            if (prev) CHECK(cur);
            prev = cur;
        }
    }
}

TEST_CASE("chromatic number examples") {
    CHECK(chromatic_number(Graph(0)) == 0);
    CHECK(chromatic_number(Graph(3)) == 1);
    CHECK(chromatic_number(complete(4)) == 4);
    CHECK(chromatic_number(petersen()) == 3);
    CHECK(chromatic_number(cycle(7)) == 3);
}

TEST_CASE("find_coloring on the path bipartition") {
    auto decider = [](const Graph& h, int k) { return decide_k_colorable(h, k); };
    auto c = find_coloring(path(3), 2, decider);
    REQUIRE(c.has_value());
    CHECK(c->proper_total(path(3)));
    CHECK(c->color(0) == c->color(2));
    CHECK(c->color(0) != c->color(1));
}

TEST_CASE("find_coloring refuses K3 with two colors") {
    auto decider = [](const Graph& h, int k) { return decide_k_colorable(h, k); };
    CHECK_FALSE(find_coloring(complete(3), 2, decider).has_value());
}

TEST_CASE("find_coloring output is proper whenever brute force succeeds") {
    auto decider = [](const Graph& h, int k) { return decide_k_colorable(h, k); };
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = gen_gnp(8, 0.5, seed);
        int chi = chromatic_number(g);
        CHECK(brute_k_colorable(g, chi));
        CHECK_FALSE(brute_k_colorable(g, chi - 1));
        auto c = find_coloring(g, chi, decider);
        REQUIRE(c.has_value());
        CHECK(c->proper_total(g));
        int used = c->max_color_used();
        CHECK(used < chi);
    }
}

TEST_CASE("capacity errors are loud") {
    CHECK_THROWS_AS(independent_set_table(Graph(12), 10), ResourceError);
}
