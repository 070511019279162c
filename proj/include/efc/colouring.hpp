#pragma once

// Edge-face colourings: a partial assignment of colours to the edges and
// faces of a plane graph such that adjacent edges, incident edge/face
// pairs, and adjacent distinct faces receive different colours.  The
// distinctness exemption matters only across cut-edges, where a face is
// adjacent to itself.

#include <string>
#include <vector>

#include "efc/embed.hpp"

namespace efc {

constexpr int kColours = 9;

struct Elem {
    enum Kind { EdgeKind, FaceKind } kind;
    int id;

    bool operator==(const Elem &o) const { return kind == o.kind && id == o.id; }
    bool operator<(const Elem &o) const { return kind != o.kind ? kind < o.kind : id < o.id; }
};

struct EdgeFaceColouring {
    std::vector<int> edge; // by edge id, 0 = uncoloured
    std::vector<int> face; // by face id, 0 = uncoloured

    static EdgeFaceColouring empty(const PlaneGraph &g) {
        return EdgeFaceColouring{std::vector<int>(g.edge_count(), 0),
                                 std::vector<int>(g.face_count(), 0)};
    }
    int of(const Elem &x) const { return x.kind == Elem::EdgeKind ? edge[x.id] : face[x.id]; }
    int &of(const Elem &x) { return x.kind == Elem::EdgeKind ? edge[x.id] : face[x.id]; }
    bool total() const;
    // only some (<=4)-faces uncoloured
    bool nice(const PlaneGraph &g) const;
};

struct Violation {
    enum Kind { AdjacentEdges, EdgeFace, AdjacentFaces, ColourRange, Uncoloured } kind;
    Elem a, b;
    std::string describe(const PlaneGraph &g) const;
};

struct Verdict {
    std::vector<Violation> violations;
    bool valid() const { return violations.empty(); }
};

// Checks conditions (i)-(iii); with require_total also reports uncoloured
// elements.  max_colour bounds the palette (9 for the library, arbitrary
// for the oracle).
Verdict validate(const PlaneGraph &g, const EdgeFaceColouring &c, bool require_total,
                 int max_colour = kColours);

// Set of colours on elements adjacent or incident to x, as a bitmask over
// colours 1..max_colour (bit c-1 set when colour c is taken).
unsigned forbidden_mask(const PlaneGraph &g, const EdgeFaceColouring &c, const Elem &x);
std::vector<int> forbidden(const PlaneGraph &g, const EdgeFaceColouring &c, const Elem &x);

// E(v): colours of the edges incident to vertex v.
unsigned edge_colours_at(const PlaneGraph &g, const EdgeFaceColouring &c, int v);

int smallest_free(unsigned mask, int max_colour = kColours); // 0 if none

// Extends a nice colouring to a total one by giving every uncoloured
// (<=4)-face the smallest free colour, in canonical face order.
EdgeFaceColouring greedy_complete(const PlaneGraph &g, EdgeFaceColouring c);

// --- exact oracle ---------------------------------------------------------

enum class OracleStatus { Feasible, Infeasible, BudgetExhausted };

struct OracleResult {
    OracleStatus status;
    EdgeFaceColouring colouring; // populated when feasible
    long long nodes = 0;
};

// Exhaustive backtracking over E u F in most-constrained-first order with
// static conflict-degree fallback; the first element in canonical order is
// fixed to colour 1 and fresh colours are introduced in increasing order.
// "Infeasible" is a proof that no k-colouring exists.
OracleResult oracle_colour(const PlaneGraph &g, int k, long long budget = 10'000'000);

} // namespace efc
