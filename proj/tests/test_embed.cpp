#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "efc/embed.hpp"
#include "efc/io_gen.hpp"
#include "helpers.hpp"

using namespace efc;
using namespace efc::testing;

TEST_CASE("triangle builds with V=3 E=3 F=2") {
    PlaneGraph g = k3();
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.face_count() == 2);
    g.check_invariants();
}

TEST_CASE("single edge: one face of degree 2") {
    PlaneGraph g = k1_1();
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.face_count() == 1);
    CHECK(g.face_degree(0) == 2);
}

TEST_CASE("single vertex gets the synthetic plane face") {
    PlaneGraph g = from_lists({{}});
    CHECK(g.face_count() == 1);
    CHECK(g.face_degree(0) == 0);
    g.check_invariants();
}

TEST_CASE("inconsistent and degenerate inputs are rejected") {
    CHECK_THROWS_AS(from_lists({{1}, {}}), Error);          // missing reciprocal
    CHECK_THROWS_AS(from_lists({{0}}), Error);              // loop
    CHECK_THROWS_AS(from_lists({{1, 1}, {0, 0}}), Error);   // parallel darts
    try {
        from_lists({{1}, {}});
    } catch (const Error &e) {
        CHECK(e.code() == Errc::inconsistent_adjacency);
    }
}

TEST_CASE("every rotation system of K5 fails the Euler check") {
    // 3! cyclic orders per vertex once the first neighbour is pinned
    std::vector<std::vector<int>> adj(5);
    for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v)
            if (u != v) adj[u].push_back(v);

    std::vector<int> perm_idx(5, 0);
    std::vector<std::vector<int>> perms; // permutations of 3 items
    std::vector<int> base{0, 1, 2};
    do {
        perms.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));

    long long tried = 0, rejected = 0;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            for (int c = 0; c < 6; ++c)
                for (int d = 0; d < 6; ++d)
                    for (int e = 0; e < 6; ++e) {
                        int choice[5] = {a, b, c, d, e};
                        std::vector<std::vector<int>> rot(5);
                        for (int v = 0; v < 5; ++v) {
                            rot[v].push_back(adj[v][0]);
                            for (int i : perms[choice[v]])
                                rot[v].push_back(adj[v][1 + i]);
                        }
                        ++tried;
                        try {
                            PlaneGraph::from_rotations(rot);
                        } catch (const Error &err) {
                            CHECK(err.code() == Errc::non_planar_embedding);
                            ++rejected;
                        }
                    }
    CHECK(tried == 7776);
    CHECK(rejected == tried);
}

TEST_CASE("face tracing is canonical and deterministic") {
    PlaneGraph g = k4();
    REQUIRE(g.face_count() == 4);
    for (int f = 0; f < 4; ++f) CHECK(g.face_degree(f) == 3);
    // faces start at their smallest dart and are discovered in dart order
    CHECK(g.dart_tail(g.face(0).boundary[0]) == 0);

    PlaneGraph h = k4();
    for (int f = 0; f < 4; ++f) CHECK(g.face(f).boundary == h.face(f).boundary);
}

TEST_CASE("star K1,8 has one face of degree 16") {
    PlaneGraph g = generate(GenKind::Star, 9);
    CHECK(g.face_count() == 1);
    CHECK(g.face_degree(0) == 16);
}

TEST_CASE("delete_edge merges two faces") {
    PlaneGraph g = k3();
    PlaneGraph h = delete_edge(g, 0, 1);
    CHECK(h.edge_count() == 2);
    CHECK(h.face_count() == 1);

    PlaneGraph k = delete_edge(k4(), 0, 1);
    CHECK(k.vertex_count() == 4);
    CHECK(k.edge_count() == 5);
    CHECK(k.face_count() == 3);

    CHECK_THROWS_AS(delete_edge(k1_1(), 0, 1), Error);
    CHECK_THROWS_AS(delete_edge(k3(), 0, 99), Error);
}

TEST_CASE("delete then reinsert reproduces the rotation system") {
    PlaneGraph g = k4();
    for (const Edge &e : g.edges()) {
        DeleteRecord rec;
        PlaneGraph h = delete_edge(g, e.u, e.v, &rec);
        PlaneGraph back = insert_edge(h, rec);
        CHECK(back.rotations() == g.rotations());
    }
}

TEST_CASE("contract_edge") {
    PlaneGraph p3 = path(3);
    PlaneGraph h = contract_edge(p3, 0, 1); // deg(1) = 2
    CHECK(h.vertex_count() == 2);
    CHECK(h.edge_count() == 1);

    PlaneGraph c4 = generate(GenKind::Cycle, 4);
    PlaneGraph c3 = contract_edge(c4, 0, 1);
    CHECK(c3.vertex_count() == 3);
    CHECK(c3.edge_count() == 3);
    CHECK(c3.face_count() == 2);

    CHECK_THROWS_AS(contract_edge(k3(), 0, 1), Error); // common neighbour
    try {
        contract_edge(k3(), 0, 1);
    } catch (const Error &e) {
        CHECK(e.code() == Errc::would_create_multi_edge);
    }
}

TEST_CASE("split at a cut vertex: two triangles sharing a vertex") {
    PlaneGraph g = bowtie();
    SplitResult r = split_at_cut_vertex(g, 0, 1);
    CHECK(r.g1.vertex_count() == 3);
    CHECK(r.g1.edge_count() == 3);
    CHECK(r.g2.vertex_count() == 3);
    CHECK(r.g2.edge_count() == 3);
    CHECK(r.rec.f1 >= 0);
    CHECK(r.rec.f2 >= 0);
}

TEST_CASE("split at a pendant edge support") {
    PlaneGraph g = k4_pendant();
    SplitResult r = split_at_cut_vertex(g, 0, 4);
    CHECK(r.g1.edge_count() == 1);
    CHECK(r.g2.edge_count() == 6);
}

TEST_CASE("interior vertex of a 2-connected graph is not eligible") {
    CHECK_THROWS_AS(split_at_cut_vertex(k4(), 0, 1), Error);
}

TEST_CASE("is_bridge") {
    CHECK(k1_1().is_bridge(0, 1));
    CHECK_FALSE(k3().is_bridge(0, 1));
    PlaneGraph g = dumbbell();
    CHECK(g.is_bridge(2, 3));
    CHECK_FALSE(g.is_bridge(0, 1));
}

TEST_CASE("random trees have exactly one face of degree 2|E|") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        PlaneGraph g = generate(GenKind::Tree, 1 + static_cast<int>(seed % 30), 8, seed);
        g.check_invariants();
        CHECK(g.face_count() == 1);
        CHECK(g.face_degree(0) == 2 * g.edge_count());
    }
}

TEST_CASE("surgery preserves the embed invariants") {
    PlaneGraph g = generate(GenKind::Triangulation, 20, 8, 5);
    g.check_invariants();
    Rng rng(7);
    for (int step = 0; step < 10; ++step) {
        std::vector<Edge> nonbridge;
        for (const Edge &e : g.edges())
            if (!g.is_bridge(e.u, e.v)) nonbridge.push_back(e);
        if (nonbridge.empty()) break;
        Edge e = nonbridge[rng.below(nonbridge.size())];
        int before = g.face_count();
        g = delete_edge(g, e.u, e.v);
        g.check_invariants();
        CHECK(g.face_count() == before - 1);
    }
}
