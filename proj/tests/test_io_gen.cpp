#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "efc/io_gen.hpp"
#include "helpers.hpp"

using namespace efc;
using namespace efc::testing;

TEST_CASE("parse the K3 document") {
    PlaneGraph g = parse_graph("vertex 0: 1 2\nvertex 1: 2 0\nvertex 2: 0 1");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.face_count() == 2);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_graph("vertex 0 1 2"), Error);
    try {
        parse_graph("vertex 0: 1\nvertex 1:"); // missing reciprocal
    } catch (const Error &e) {
        CHECK(e.code() == Errc::semantic_error);
        CHECK(std::string(e.what()).find("InconsistentAdjacency") != std::string::npos);
    }
    // K5 with an arbitrary rotation: planar Euler check must fail
    std::string k5 = "vertex 0: 1 2 3 4\nvertex 1: 0 2 3 4\nvertex 2: 0 1 3 4\n"
                     "vertex 3: 0 1 2 4\nvertex 4: 0 1 2 3\n";
    try {
        parse_graph(k5);
        CHECK(false);
    } catch (const Error &e) {
        CHECK(e.code() == Errc::semantic_error);
        CHECK(std::string(e.what()).find("NonPlanarEmbedding") != std::string::npos);
    }
}

TEST_CASE("graph documents round-trip byte-identically") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        PlaneGraph g = generate(GenKind::Subgraph, 18, 8, seed);
        std::string doc = serialise_graph(g);
        PlaneGraph h = parse_graph(doc);
        CHECK(serialise_graph(h) == doc);
        CHECK(h.rotations() == parse_graph(serialise_graph(h)).rotations());
    }
}

TEST_CASE("colouring documents round-trip") {
    PlaneGraph g = k4();
    OracleResult r = oracle_colour(g, 9);
    REQUIRE(r.status == OracleStatus::Feasible);
    std::string doc = serialise_colouring(g, r.colouring);
    EdgeFaceColouring c = parse_colouring(g, doc);
    CHECK(c.edge == r.colouring.edge);
    CHECK(c.face == r.colouring.face);
    CHECK(serialise_colouring(g, c) == doc);
}

TEST_CASE("colouring parse rejects unknown elements") {
    PlaneGraph g = k3();
    CHECK_THROWS_AS(parse_colouring(g, "edge 0 7 : 1"), Error);
    CHECK_THROWS_AS(parse_colouring(g, "face f9 : 1"), Error);
}

TEST_CASE("generators are deterministic given the seed") {
    std::string a = serialise_graph(generate(GenKind::Triangulation, 50, 8, 7));
    std::string b = serialise_graph(generate(GenKind::Triangulation, 50, 8, 7));
    CHECK(a == b);
    std::string c = serialise_graph(generate(GenKind::Triangulation, 50, 8, 8));
    CHECK(a != c);
}

TEST_CASE("generator outputs satisfy the degree cap and connectivity") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        for (GenKind kind :
             {GenKind::Tree, GenKind::Cycle, GenKind::Triangulation, GenKind::Subgraph}) {
            int n = 3 + static_cast<int>((seed * 7) % 40);
            PlaneGraph g = generate(kind, n, 8, seed);
            CHECK(g.connected());
            CHECK(g.max_degree() <= 8);
            g.check_invariants();
        }
    }
}

TEST_CASE("star generator") {
    PlaneGraph g = generate(GenKind::Star, 9);
    CHECK(g.vertex_count() == 9);
    CHECK(g.degree(0) == 8);
    CHECK_THROWS_AS(generate(GenKind::Star, 10), Error); // exceeds the cap
}

TEST_CASE("platonic solids") {
    struct Expect {
        int n, e, f, deg, fdeg;
    };
    for (Expect x : {Expect{4, 6, 4, 3, 3}, Expect{6, 12, 8, 4, 3}, Expect{8, 12, 6, 3, 4},
                     Expect{12, 30, 20, 5, 3}, Expect{20, 30, 12, 3, 5}}) {
        PlaneGraph g = platonic_solid(x.n);
        CHECK(g.vertex_count() == x.n);
        CHECK(g.edge_count() == x.e);
        CHECK(g.face_count() == x.f);
        for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == x.deg);
        for (int f = 0; f < g.face_count(); ++f) CHECK(g.face_degree(f) == x.fdeg);
    }
}

TEST_CASE("enumerate_small(2) yields exactly the single edge") {
    auto gs = enumerate_small(2);
    REQUIRE(gs.size() == 1);
    CHECK(gs[0].edge_count() == 1);
}

TEST_CASE("enumerate_small(3) contains P3 and K3") {
    auto gs = enumerate_small(3);
    int p3 = 0, k3 = 0;
    for (const auto &g : gs) {
        if (g.vertex_count() == 3 && g.edge_count() == 2) ++p3;
        if (g.vertex_count() == 3 && g.edge_count() == 3) ++k3;
    }
    CHECK(p3 == 1);
    CHECK(k3 == 1); // one embedding class
    CHECK(gs.size() == 3);
}

TEST_CASE("enumerated graphs satisfy the embed invariants") {
    auto gs = enumerate_small(4);
    CHECK(gs.size() > 3);
    for (const auto &g : gs) {
        g.check_invariants();
        CHECK(g.connected());
    }
}

TEST_CASE("enumeration order is canonical and stable") {
    auto a = enumerate_small(4);
    auto b = enumerate_small(4);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i)
        CHECK(serialise_graph(a[i]) == serialise_graph(b[i]));
}
