#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "efc/configs.hpp"
#include "efc/io_gen.hpp"
#include "helpers.hpp"

using namespace efc;
using namespace efc::testing;

namespace {

bool has(const std::vector<ConfigMatch> &ms, ConfigId id) {
    for (const auto &m : ms)
        if (m.id == id) return true;
    return false;
}

int count(const std::vector<ConfigMatch> &ms, ConfigId id) {
    int n = 0;
    for (const auto &m : ms)
        if (m.id == id) ++n;
    return n;
}

} // namespace

TEST_CASE("tight edges") {
    // hub-rim edges of the triangulated wheel lie on two triangles;
    // hub degree 8, rim degree 3: 8+3-2 = 9, tight
    PlaneGraph g = gadget_e3();
    TightInfo t = is_tight(g, 0, 1);
    CHECK(t.s == 2);
    CHECK(t.tight);

    // degrees 4+4 on two triangles in the octahedron: 8-2 = 6, not tight
    PlaneGraph octa = platonic_solid(6);
    TightInfo t2 = is_tight(octa, 0, octa.neighbours(0)[0]);
    CHECK(t2.s == 2);
    CHECK_FALSE(t2.tight);

    // degrees 5+5 with one triangle and one (>=5)-face: 10-1 = 9, tight
    PlaneGraph b2 = gadget_b2();
    TightInfo t3 = is_tight(b2, 0, 1);
    CHECK(t3.s == 1);
    CHECK(t3.tight);
}

TEST_CASE("loose edges") {
    PlaneGraph c5 = generate(GenKind::Cycle, 5);
    CHECK(is_loose(c5, 0, 1)); // 2+2
    PlaneGraph octa = platonic_solid(6);
    CHECK(is_loose(octa, 0, octa.neighbours(0)[0])); // 4+4
    PlaneGraph ico = platonic_solid(12);
    CHECK_FALSE(is_loose(ico, 0, ico.neighbours(0)[0])); // 5+5
}

TEST_CASE("special faces") {
    // 8-vertex with a 2-neighbour whose both faces are large: both special
    PlaneGraph g = from_lists({
        {1, 2, 3, 4, 5, 6, 7, 8}, // v, degree 8
        {9, 0},                   // u, the 2-neighbour
        {0}, {0}, {0}, {0}, {0}, {0}, {0},
        {1},
    });
    auto sp = special_faces(g, 0);
    REQUIRE(sp.size() == 1);  // the single (tree) face, on both sides of u
    CHECK(sp[0].second == 8); // v occurs 8 times on it

    CHECK_THROWS_AS(special_faces(g, 1), Error); // degree too low

    // no 2-neighbours: empty
    PlaneGraph wheel = gadget_e3();
    CHECK(special_faces(wheel, 0).empty());

    // 2-neighbour with two distinct (>=5)-faces: both listed
    PlaneGraph cyc = from_lists({
        {1, 6, 7, 8, 9, 10, 5}, // degree 7, on the 6-cycle 0..5
        {2, 0},                 // the 2-neighbour
        {3, 1},
        {4, 2},
        {5, 3},
        {0, 4},
        {0}, {0}, {0}, {0}, {0},
    });
    CHECK(special_faces(cyc, 0).size() == 2);
}

TEST_CASE("exceptional faces") {
    // 6-face 0,1,2,3,4,5 around the 6-vertex 0 with deg(1)=2, deg(2)=3;
    // vertex 0 carries leaves so its degree is 6
    PlaneGraph g = from_lists({
        {1, 6, 7, 8, 9, 5}, // v, degree 6
        {2, 0},             // 2-vertex
        {1, 3, 10},         // 3-vertex, leaf on the outer side
        {4, 2},
        {5, 3},
        {0, 4},
        {0}, {0}, {0}, {0},
        {2},
    });
    auto ex = exceptional_faces(g, 0);
    REQUIRE(ex.size() == 1);
    CHECK(g.face_degree(ex[0]) == 6);

    // reversed orientation must also match
    auto rev = g.rotations();
    for (auto &r : rev) std::reverse(r.begin(), r.end());
    PlaneGraph g2 = PlaneGraph::from_rotations(rev);
    CHECK(exceptional_faces(g2, 0).size() == 1);

    CHECK_THROWS_AS(exceptional_faces(g, 1), Error);

    // a 6-vertex incident only to triangles has no exceptional faces
    std::vector<std::vector<int>> hexwheel{{1, 2, 3, 4, 5, 6}};
    for (int i = 1; i <= 6; ++i) {
        int next = i == 6 ? 1 : i + 1, prev = i == 1 ? 6 : i - 1;
        hexwheel.push_back({next, 0, prev});
    }
    CHECK(exceptional_faces(PlaneGraph::from_rotations(hexwheel), 0).empty());
}

TEST_CASE("loose-edge face statistics") {
    PlaneGraph c5 = generate(GenKind::Cycle, 5);
    FaceLooseStats st = check_lemma_new(c5, 0);
    CHECK(st.d == 5);
    CHECK(st.q == 5);
    CHECK(st.x == 5);
    CHECK(st.violation); // 10 - 5 - 5 = 0 < 9

    PlaneGraph ico = platonic_solid(12);
    CHECK_THROWS_AS(check_lemma_new(ico, 0), Error); // triangles are too small

    // a 9-face with exactly one loose edge: no violation (18-1-1 >= 9)
    PlaneGraph c9 = generate(GenKind::Cycle, 9);
    auto rot = c9.rotations();
    int next = 9;
    auto pad = [&](int v, int upto) {
        while (static_cast<int>(rot[v].size()) < upto) {
            rot[v].push_back(next);
            rot.push_back({v});
            ++next;
        }
    };
    pad(1, 6); // edge 0-1 has degree sum 8: loose
    for (int v = 2; v < 9; ++v) pad(v, 7);
    PlaneGraph padded = PlaneGraph::from_rotations(rot);
    int nine_face = -1;
    for (int f = 0; f < padded.face_count(); ++f)
        if (padded.face_degree(f) == 9) nine_face = f;
    REQUIRE(nine_face >= 0);
    FaceLooseStats st2 = check_lemma_new(padded, nine_face);
    CHECK(st2.d == 9);
    CHECK(st2.x == 1);
    CHECK(st2.q == 1);
    CHECK_FALSE(st2.violation);
}

TEST_CASE("adjacent 2-vertex pair matches") {
    // path of 2-vertices: adjacent pair with distinct outer neighbours
    PlaneGraph p4 = path(4);
    auto ms = check_lemma_newnew(p4);
    REQUIRE(ms.size() == 1);
    CHECK(ms[0].reduction.applicable); // contractible

    // adjacent 2-vertices both joined to one 8-vertex: the allowed shape
    PlaneGraph allowed = from_lists({
        {1, 2},                   // u
        {2, 0},                   // v
        {0, 1, 3, 4, 5, 6, 7, 8}, // w, degree 8
        {2}, {2}, {2}, {2}, {2}, {2},
    });
    CHECK(check_lemma_newnew(allowed).empty());

    // same but degree 5: a match that is not contractible (u' = v')
    PlaneGraph bad = from_lists({
        {1, 2},          // u
        {2, 0},          // v
        {0, 1, 3, 4, 5}, // w, degree 5
        {2}, {2}, {2},
    });
    auto ms2 = check_lemma_newnew(bad);
    REQUIRE(ms2.size() == 1);
    CHECK_FALSE(ms2[0].reduction.applicable);
}

TEST_CASE("detect_all on reference graphs") {
    auto k11 = detect_all(k1_1());
    CHECK(count(k11, ConfigId::A0) == 2);

    auto k4m = detect_all(k4());
    CHECK(count(k4m, ConfigId::B1) == 6);
    CHECK(has(k4m, ConfigId::C1));
    CHECK(has(k4m, ConfigId::C4));
    CHECK(has(k4m, ConfigId::C5));
    CHECK(has(k4m, ConfigId::D1));
    CHECK(has(k4m, ConfigId::D2));

    auto ico = detect_all(platonic_solid(12));
    CHECK_FALSE(has(ico, ConfigId::B1));   // 5+5 > 9
    CHECK(count(ico, ConfigId::C1) == 30); // every edge: 10 <= 10, two triangles

    auto octa = detect_all(platonic_solid(6));
    CHECK(count(octa, ConfigId::B1) == 12); // every edge: 4+4 <= 9

    auto dodeca = detect_all(platonic_solid(20));
    CHECK(count(dodeca, ConfigId::LN) == 12); // every pentagon violates lemma 1
    CHECK_FALSE(has(dodeca, ConfigId::B1));
}

TEST_CASE("detect_all preconditions") {
    PlaneGraph star9 = generate(GenKind::Star, 10, 9); // degree 9 hub
    CHECK_THROWS_AS(detect_all(star9), Error);
}

TEST_CASE("each gadget contains its configuration") {
    CHECK(has(detect_all(gadget_a3()), ConfigId::A3));
    CHECK(has(detect_all(gadget_b2()), ConfigId::B2));
    CHECK(has(detect_all(gadget_b3()), ConfigId::B3));
    CHECK(has(detect_all(gadget_b4()), ConfigId::B4));
    CHECK(has(detect_all(gadget_c2()), ConfigId::C2));
    CHECK(has(detect_all(gadget_c3()), ConfigId::C3));
    CHECK(has(detect_all(gadget_d3()), ConfigId::D3));
    CHECK(has(detect_all(gadget_d4()), ConfigId::D4));
    CHECK(has(detect_all(gadget_e1()), ConfigId::E1));
    CHECK(has(detect_all(gadget_e2()), ConfigId::E2));
    CHECK(has(detect_all(gadget_e3()), ConfigId::E3));
    CHECK(has(detect_all(gadget_e4_adjacent()), ConfigId::E4));
    CHECK(has(detect_all(gadget_e4_contract()), ConfigId::E4));

    CHECK(has(detect_all(generate(GenKind::Cycle, 4)), ConfigId::LNN));
    CHECK(has(detect_all(k3()), ConfigId::A1));
    CHECK(has(detect_all(generate(GenKind::Cycle, 4)), ConfigId::A2));
    CHECK(has(detect_all(generate(GenKind::Cycle, 5)), ConfigId::LN));
}

TEST_CASE("K4 has no A-family matches") {
    auto k4m = detect_all(k4());
    CHECK_FALSE(has(k4m, ConfigId::A0));
    CHECK_FALSE(has(k4m, ConfigId::A1));
    CHECK_FALSE(has(k4m, ConfigId::A2));
    CHECK_FALSE(has(k4m, ConfigId::A3));
}

TEST_CASE("matches re-validate against their predicates") {
    for (const PlaneGraph &g : {k4(), platonic_solid(6), gadget_d4(), gadget_e1()})
        for (const ConfigMatch &m : detect_all(g)) CHECK(verify_match(g, m));
}

TEST_CASE("match lists are deterministic and canonically ordered") {
    PlaneGraph g = platonic_solid(6);
    auto a = detect_all(g), b = detect_all(g);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].key() == b[i].key());
        if (i > 0) CHECK(a[i - 1].key() < a[i].key());
    }
}

TEST_CASE("completeness on the exhaustive small corpus") {
    // every simple connected plane graph with an edge and max degree <= 8
    // contains a configuration
    for (const PlaneGraph &g : enumerate_small(5)) CHECK(!detect_all(g).empty());
}

TEST_CASE("completeness on generated graphs") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        for (GenKind kind :
             {GenKind::Tree, GenKind::Cycle, GenKind::Triangulation, GenKind::Subgraph}) {
            int n = 3 + static_cast<int>((seed * 11) % 45);
            PlaneGraph g = generate(kind, n, 8, seed);
            CHECK(!detect_all(g).empty());
        }
    }
}
