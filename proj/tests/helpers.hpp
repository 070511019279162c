#pragma once

#include <vector>

#include "efc/embed.hpp"
#include "efc/io_gen.hpp"

namespace efc::testing {

inline PlaneGraph from_lists(std::vector<std::vector<int>> rot) {
    return PlaneGraph::from_rotations(std::move(rot));
}

inline PlaneGraph k1_1() { return from_lists({{1}, {0}}); }

inline PlaneGraph k3() { return from_lists({{1, 2}, {2, 0}, {0, 1}}); }

inline PlaneGraph k4() {
    // one vertex inside a triangle, joined to all three corners
    return from_lists({{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}});
}

inline PlaneGraph path(int n) {
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v + 1 < n; ++v) {
        rot[v].push_back(v + 1);
        rot[v + 1].push_back(v);
    }
    return from_lists(std::move(rot));
}

// two triangles sharing vertex 0
inline PlaneGraph bowtie() {
    return from_lists({{1, 2, 3, 4}, {2, 0}, {0, 1}, {4, 0}, {0, 3}});
}

// two triangles joined by the bridge 2-3
inline PlaneGraph dumbbell() {
    return from_lists({{1, 2}, {2, 0}, {0, 1, 3}, {4, 5, 2}, {5, 3}, {3, 4}});
}

// K4 with a pendant vertex 4 attached at vertex 0
inline PlaneGraph k4_pendant() {
    return from_lists({{1, 3, 2, 4}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}, {0}});
}

// --- configuration gadgets -------------------------------------------------
// Hand-built rotation systems containing one target configuration each;
// vertex roles are noted per gadget.

// A3: 2-vertex 1 between a 3-vertex 0 and a 1-vertex 2, non-adjacent
inline PlaneGraph gadget_a3() {
    return from_lists({{3, 4, 1}, {0, 2}, {1}, {0}, {0}});
}

// B2 (tight): triangle u=0, v=1, w=2 with deg(u)=deg(v)=5, deg(w)=6
inline PlaneGraph gadget_b2() {
    return from_lists({
        {2, 1, 3, 4, 5},    // u
        {0, 2, 6, 7, 8},    // v
        {1, 0, 9, 10, 11, 12}, // w
        {0}, {0}, {0}, {1}, {1}, {1}, {2}, {2}, {2}, {2},
    });
}

// B3: triangles (0,1,2) and (0,2,3) sharing 0-2, deg(2)=7
inline PlaneGraph gadget_b3() {
    return from_lists({
        {3, 2, 1},          // u
        {0, 2},             // v
        {1, 0, 3, 4, 5, 6, 7}, // w, degree 7
        {2, 0},             // t
        {2}, {2}, {2}, {2},
    });
}

// B4: fan of triangles (3,0,2), (0,1,2), (1,4,2) around w=2,
// with deg(0)=deg(1)=5
inline PlaneGraph gadget_b4() {
    return from_lists({
        {3, 2, 1, 5, 6},  // u
        {0, 2, 4, 7, 8},  // v
        {4, 1, 0, 3},     // w
        {2, 0},           // t
        {1, 2},           // s
        {0}, {0}, {1}, {1},
    });
}

// C2: triangles (0,1,2) and (1,0,3) sharing 0-1, deg(2)=6
inline PlaneGraph gadget_c2() {
    return from_lists({
        {2, 1, 3},          // u
        {3, 0, 2},          // v
        {1, 0, 4, 5, 6, 7}, // w, degree 6
        {0, 1},             // t
        {2}, {2}, {2}, {2},
    });
}

// C3: triangles (0,1,2) around u=0 with second small faces on 0-1 and 0-2
inline PlaneGraph gadget_c3() {
    return from_lists({
        {4, 2, 1, 3},          // u
        {3, 0, 2},             // v
        {1, 0, 4, 5, 6, 7, 8}, // w, degree 7
        {0, 1},                // t
        {2, 0},                // r
        {2}, {2}, {2}, {2},
    });
}

// D3: 2-path 4-0-1 with triangle (0,1,2), deg(0)=7, deg(1)=3, deg(4)=2
inline PlaneGraph gadget_d3() {
    return from_lists({
        {1, 2, 3, 4, 7, 8, 9}, // v, degree 7
        {2, 0, 6},             // w, degree 3
        {3, 0, 1},             // x
        {0, 2},                // r
        {0, 5},                // u, degree 2
        {4}, {1}, {0}, {0}, {0},
    });
}

// D4: as D3 plus the triangle (0,9,1) so that 0-1 also has two small faces
inline PlaneGraph gadget_d4() {
    return from_lists({
        {9, 1, 2, 3, 4, 7, 8}, // v, degree 7
        {2, 0, 9, 6},          // w, degree 4
        {3, 0, 1},             // x
        {0, 2},                // r
        {0, 5},                // u, degree 2
        {4}, {1}, {0}, {0},
        {1, 0},                // s of the extra triangle
    });
}

// E1: fan u=1, v=2, w=3, x=4, y=5 around z=0 with the far triangle (0,5,6)
inline PlaneGraph gadget_e1() {
    return from_lists({
        {1, 2, 3, 4, 5, 6}, // z
        {2, 0},             // u
        {3, 0, 1},          // v, degree 3
        {4, 0, 2},          // w
        {5, 0, 3, 7},       // x, degree 4
        {6, 0, 4},          // y
        {0, 5},             // q
        {4},
    });
}

// E2: fan u=1, v=2, w=3, x=4, y=5 around z=0 with deg(y)=6
inline PlaneGraph gadget_e2() {
    return from_lists({
        {1, 2, 3, 4, 5},    // z
        {2, 0},             // u
        {3, 0, 1},          // v, degree 3
        {4, 0, 2},          // w
        {5, 0, 3, 6},       // x, degree 4
        {0, 4, 7, 8, 9, 10}, // y, degree 6
        {4},
        {5}, {5}, {5}, {5},
    });
}

// E3: triangulated wheel around 0, rim vertex 3 padded to degree 4
inline PlaneGraph gadget_e3() {
    std::vector<std::vector<int>> rot{{1, 2, 3, 4, 5, 6, 7, 8}};
    for (int i = 1; i <= 8; ++i) {
        int next = i == 8 ? 1 : i + 1, prev = i == 1 ? 8 : i - 1;
        rot.push_back({next, 0, prev});
    }
    rot[3].push_back(9); // degree 4
    rot.push_back({3});
    return from_lists(std::move(rot));
}

// E4 with v,x adjacent: path u=0 v=2 w=3 x=4 plus triangles (0,2,1), (3,2,4)
inline PlaneGraph gadget_e4_adjacent() {
    return from_lists({
        {1, 2},             // u
        {2, 0},             // t
        {0, 1, 3, 4, 5, 6}, // v, degree 6
        {4, 2},             // w, degree 2
        {2, 3, 7},          // x, degree 3
        {2}, {2}, {4},
    });
}

// E4 with v,x non-adjacent: contraction case
inline PlaneGraph gadget_e4_contract() {
    return from_lists({
        {1, 2},             // u
        {2, 0},             // t
        {0, 1, 3, 4, 5, 6}, // v, degree 6
        {7, 2},             // w, degree 2
        {2}, {2}, {2},      // leaves on v
        {3, 8, 9},          // x, degree 3
        {7}, {7},
    });
}

} // namespace efc::testing
