#include <doctest.h>

#include <sstream>

#include "excol/gen.hpp"
#include "excol/io.hpp"
#include "excol/oracle.hpp"
#include "excol/structure.hpp"

using namespace excol;

namespace {

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

Graph star(int leaves) {
    GraphBuilder b(leaves + 1);
    for (int i = 1; i <= leaves; ++i) b.add_edge(0, i);
    return b.build();
}

}  // namespace

TEST_CASE("dimacs path example") {
    Graph g = load_dimacs_string("p edge 3 2\ne 1 2\ne 2 3\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(2) == 1);
}

TEST_CASE("dimacs edgeless and comments") {
    Graph g = load_dimacs_string("c empty\np edge 2 0\n");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("dimacs rejects self-loops with the line number") {
    CHECK_THROWS_WITH_AS(load_dimacs_string("p edge 2 1\ne 1 1\n"), "line 2: self-loop",
                         ParseError);
}

TEST_CASE("dimacs rejects bad input") {
    CHECK_THROWS_AS(load_dimacs_string("p edge 2 1\ne 1 3\n"), ParseError);
    CHECK_THROWS_AS(load_dimacs_string("p vertex 2 1\n"), ParseError);
    CHECK_THROWS_AS(load_dimacs_string("e 1 2\n"), ParseError);
    CHECK_THROWS_AS(load_dimacs_string(""), ParseError);
}

TEST_CASE("duplicate and reversed edges collapse") {
    Graph g = load_dimacs_string("p edge 3 4\ne 1 2\ne 2 1\ne 1 2\ne 2 3\n");
    CHECK(g.edge_count() == 2);
}

TEST_CASE("load after emit is the identity") {
    Graph g = gen_gnp(9, 0.4, 77);
    Graph back = load_dimacs_string(emit_dimacs(g));
    CHECK(g == back);
}

TEST_CASE("lists file round-trip") {
    ListAssignment lists;
    lists.universe_size = 5;
    lists.lists = {{0, 2}, {1}, {3, 4, 0}};
    lists.normalize();
    std::istringstream in(emit_lists(lists));
    ListAssignment back = load_lists(in, 3, 5);
    CHECK(back.lists == lists.lists);
    CHECK(back.universe_size == 5);
}

TEST_CASE("greedy distance-3 set on C6 takes antipodal vertices") {
    VertexSet s = greedy_distance3_set(cycle(6), 2);
    CHECK(s == VertexSet::of({0, 3}));
    CHECK(s.count() * 5 >= 6);  // the 1/(1+Delta^2) guarantee
}

TEST_CASE("greedy distance-3 set: edgeless keeps everything") {
    CHECK(greedy_distance3_set(Graph(5), 0) == VertexSet::range(5));
}

TEST_CASE("greedy distance-3 set: star leaves collide at the center") {
    VertexSet s = greedy_distance3_set(star(4), 1);
    CHECK(s == VertexSet::single(1));
}

TEST_CASE("distance-3 property holds on random graphs") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Graph g = gen_gnp(11, 0.25, seed);
        int delta = 3;
        VertexSet s = greedy_distance3_set(g, delta);
        if (g.max_degree() <= delta)
            CHECK(s.count() * (1 + delta * delta) >= g.vertex_count());
        std::vector<int> sv = s.elements();
        for (std::size_t i = 0; i < sv.size(); ++i) {
            CHECK(g.degree(sv[i]) <= delta);
            std::vector<int> dist = bfs_distances(g, sv[i]);
            for (std::size_t j = i + 1; j < sv.size(); ++j) {
                int d = dist[static_cast<std::size_t>(sv[j])];
                CHECK((d < 0 || d >= 3));
            }
        }
    }
}

TEST_CASE("greedy independent low degree on P4") {
    GraphBuilder b(4);
    b.add_edge(0, 1);
    b.add_edge(1, 2);
    b.add_edge(2, 3);
    Graph p4 = b.build();
    VertexSet s = greedy_independent_low_degree(p4, 2);
    CHECK(s == VertexSet::of({0, 2}));
    CHECK(s.count() >= 2);  // ceil(4 / 3)
}

TEST_CASE("greedy independent low degree: K5 with delta 1 is empty") {
    CHECK(greedy_independent_low_degree(complete(5), 1).empty());
}

TEST_CASE("greedy independent low degree: edgeless keeps all") {
    CHECK(greedy_independent_low_degree(Graph(6), 0) == VertexSet::range(6));
}

TEST_CASE("independence and size guarantee on random graphs") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Graph g = gen_gnp(12, 0.3, seed);
        int delta = 3;
        VertexSet s = greedy_independent_low_degree(g, delta);
        CHECK(g.is_independent(s));
        int candidates = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) <= delta) ++candidates;
        CHECK(s.count() * (1 + delta) >= candidates);
        for (int v : s.elements()) CHECK(g.degree(v) <= delta);
    }
}

TEST_CASE("alpha-delta boundedness is exact") {
    CHECK(is_alpha_delta_bounded(complete(4), Rational(1, 2), 3));
    CHECK_FALSE(is_alpha_delta_bounded(complete(4), Rational(1, 4), 2));
    CHECK(is_alpha_delta_bounded(star(9), Rational(9, 10), 1));
    CHECK_THROWS_AS(is_alpha_delta_bounded(complete(3), Rational(3, 2), 1), ContractError);
}

TEST_CASE("graph construction rejects bad edges") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), ContractError);
    CHECK_THROWS_AS(Graph(3, {{0, 5}}), ContractError);
}

TEST_CASE("induced subgraph keeps adjacency") {
    Graph g = cycle(5);
    std::vector<int> map;
    Graph h = g.induced(VertexSet::of({0, 1, 3}), &map);
    CHECK(h.vertex_count() == 3);
    CHECK(map == std::vector<int>{0, 1, 3});
    CHECK(h.has_edge(0, 1));
    CHECK_FALSE(h.has_edge(0, 2));
    CHECK_FALSE(h.has_edge(1, 2));
}
