#pragma once

// Combinatorial plane embeddings as rotation systems over darts.
//
// A dart is an orientation of an edge; each vertex carries the clockwise
// cyclic order of its incident darts.  Faces are the orbits of
// face_next(d) = rot_next(twin(d)); a face's degree is the length of its
// boundary walk, so a cut-edge contributes twice to its single face.
// A vertex of degree 0 owns one synthetic face of degree 0 (the plane
// around it), which keeps Euler's formula and the charge identity exact
// for edgeless components.

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "efc/error.hpp"

namespace efc {

using Vertex = int;

struct Edge {
    int u, v; // canonical: u < v

    bool operator==(const Edge &o) const { return u == o.u && v == o.v; }
    bool operator<(const Edge &o) const { return u != o.u ? u < o.u : v < o.v; }
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

struct FacialWalk {
    int id = -1;
    std::vector<int> boundary; // dart ids, starting at the smallest dart
    int degree() const { return static_cast<int>(boundary.size()); }
};

class PlaneGraph {
public:
    // Builds from per-vertex clockwise neighbour lists.  Throws
    // InconsistentAdjacency, LoopOrMultiEdge or NonPlanarEmbedding.
    static PlaneGraph from_rotations(std::vector<std::vector<int>> rot);

    int vertex_count() const { return static_cast<int>(rot_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }
    int dart_count() const { return static_cast<int>(dart_head_.size()); }

    int degree(int v) const { return static_cast<int>(rot_[v].size()); }
    int max_degree() const;
    const std::vector<int> &neighbours(int v) const { return rot_[v]; }
    const std::vector<std::vector<int>> &rotations() const { return rot_; }
    bool adjacent(int u, int v) const;

    // darts
    int dart_tail(int d) const { return dart_tail_[d]; }
    int dart_head(int d) const { return dart_head_[d]; }
    int twin(int d) const { return twin_[d]; }
    int rot_next(int d) const { return rot_next_[d]; }
    int face_next(int d) const { return rot_next_[twin_[d]]; }
    int dart_id(int tail, int head) const; // throws UnknownEdge
    int find_dart(int tail, int head) const; // -1 if absent

    // faces (only walks of darts; degree-0 synthetic faces have empty boundary)
    const std::vector<FacialWalk> &faces() const { return faces_; }
    const FacialWalk &face(int f) const { return faces_[f]; }
    int face_of(int dart) const { return face_of_[dart]; }
    int face_degree(int f) const { return faces_[f].degree(); }
    // face on the given side of edge (u,v): side 0 = dart u->v, 1 = dart v->u
    int face_at(int u, int v, int side) const;
    // vertices in corner order around a face (one entry per corner occurrence)
    std::vector<int> face_vertices(int f) const;

    // edges, canonically ordered by (u, v)
    const std::vector<Edge> &edges() const { return edges_; }
    int edge_id(int u, int v) const; // throws UnknownEdge
    int find_edge(int u, int v) const; // -1 if absent
    const Edge &edge(int e) const { return edges_[e]; }
    // the two darts of edge e: [0] = u->v, [1] = v->u
    std::array<int, 2> edge_darts(int e) const;

    bool is_bridge(int u, int v) const;

    bool connected() const { return component_count_ <= 1; }
    int component_count() const { return component_count_; }
    const std::vector<int> &component_of() const { return component_of_; }

    // sum of vertex degrees == 2|E| == sum of face degrees; per-component Euler
    void check_invariants() const;

private:
    std::vector<std::vector<int>> rot_;
    std::vector<int> dart_tail_, dart_head_, twin_, rot_next_;
    std::vector<int> dart_offset_; // first dart id of each vertex
    std::vector<Edge> edges_;
    std::vector<FacialWalk> faces_;
    std::vector<int> face_of_;
    std::unordered_map<std::int64_t, int> dart_by_pair_;
    std::unordered_map<std::int64_t, int> edge_by_pair_;
    std::vector<int> component_of_;
    int component_count_ = 0;
};

// --- surgery -------------------------------------------------------------
// All operations return new graphs; inputs are never mutated.

struct DeleteRecord {
    int u, v;        // deleted edge
    int pos_u, pos_v; // positions of v in rot[u] and of u in rot[v]
};

// Deletes a non-bridge edge; |F| drops by exactly one.
PlaneGraph delete_edge(const PlaneGraph &g, int u, int v, DeleteRecord *rec = nullptr);

// Reinserts an edge at recorded rotation positions (inverse of delete_edge).
PlaneGraph insert_edge(const PlaneGraph &g, const DeleteRecord &rec);

// Deletes a set of edges with no bridge check; the result may be
// disconnected.  Used by the loose-edge reduction.
PlaneGraph delete_edges(const PlaneGraph &g, const std::vector<Edge> &del);

struct ContractRecord {
    int keep, removed;           // removed is merged into keep
    std::vector<int> vertex_map; // old id -> new id, removed -> -1
};

// Contracts edge (keep, removed) where deg(removed) <= 2; the merged vertex
// inherits the concatenated rotation.  Throws WouldCreateMultiEdge if the
// endpoints share a neighbour.
PlaneGraph contract_edge(const PlaneGraph &g, int keep, int removed,
                         ContractRecord *rec = nullptr);

struct SplitRecord {
    int v;                    // the cut vertex
    std::vector<int> map1, map2; // old id -> id in g1 / g2 (-1 if absent)
    int f1 = -1, f2 = -1;     // boundary faces: f1 in g1 and f2 in g2
                              // correspond to the same face of g
};

struct SplitResult {
    PlaneGraph g1, g2;
    SplitRecord rec;
};

// Splits at a cut vertex v whose neighbourhood in the component containing
// rep is one vertex or two rotation-consecutive vertices.  g1 holds that
// component plus v; g2 holds the rest.
SplitResult split_at_cut_vertex(const PlaneGraph &g, int v, int rep);

// Components of g - v, each listed as its vertex set.
std::vector<std::vector<int>> components_without(const PlaneGraph &g, int v);

struct InducedResult {
    PlaneGraph graph;
    std::vector<int> vertex_map; // old id -> new id (-1 if absent)
};

// Subgraph induced by a vertex set that is closed under adjacency
// restriction (rotations are restricted to kept neighbours).
InducedResult induced_subgraph(const PlaneGraph &g, const std::vector<int> &keep);

std::vector<std::vector<int>> components(const PlaneGraph &g);

} // namespace efc
