#pragma once

// Detection of the reducible-configuration catalogue: A0-A3, B1-B4, C1-C5,
// D1-D4, E1-E4, plus the loose-edge face structure (LN) and the
// adjacent-2-vertex structure (LNN).  Every detector is a pure read-only
// pattern match; each match carries a reduction descriptor naming the
// surgery that eliminates it.

#include <string>
#include <vector>

#include "efc/embed.hpp"

namespace efc {

enum class ConfigId {
    A0, A1, A2, A3,
    B1, B2, B3, B4,
    C1, C2, C3, C4, C5,
    D1, D2, D3, D4,
    E1, E2, E3, E4,
    LN, LNN,
};

const char *config_name(ConfigId id);
enum class ConfigFamily { A, B, C, D, E, LN, LNN };
ConfigFamily config_family(ConfigId id);

struct Reduction {
    enum Kind { DeleteEdge, DeletePendant, ContractEdge, DeleteLooseEdges } kind;
    // DeleteEdge: edge (u, v).  DeletePendant: leaf u with support v.
    // ContractEdge: remove v, merging it into u.
    int u = -1, v = -1;
    int face = -1;           // DeleteLooseEdges
    std::vector<Edge> edges; // DeleteLooseEdges
    bool applicable = true;  // false for structural redirects (LNN with
                             // u' = v', A3 with adjacent neighbours)
};

struct ConfigMatch {
    ConfigId id;
    // role bindings, in the fixed role order of the configuration
    std::vector<std::pair<const char *, int>> vertices;
    std::vector<std::pair<const char *, int>> faces;
    Reduction reduction;

    std::vector<int> key() const; // canonical comparison tuple
    std::string describe() const; // "<config-id> <role>=<value>..."
};

struct FaceLooseStats {
    int face = -1;
    int d = 0; // face degree
    int x = 0; // incident loose-edge occurrences (per dart)
    int q = 0; // 2-vertex corners (per boundary occurrence)
    bool violation = false; // x >= 1 and 2d - q - x < 9
};

// deg(u) + deg(v) - s == 9, where s counts (<=4)-face sides at dart level
// (an edge inside a (<=4)-face on both sides has s = 2).
struct TightInfo {
    bool tight = false;
    int s = 0;
};
TightInfo is_tight(const PlaneGraph &g, int u, int v);

// deg(u) + deg(v) <= 8
bool is_loose(const PlaneGraph &g, int u, int v);

// For an (>=7)-vertex: incident (>=5)-faces that touch a 2-neighbour of v,
// with the (v, face) incidence multiplicity.
std::vector<std::pair<int, int>> special_faces(const PlaneGraph &g, int v);

// For a 6-vertex: incident 6-faces whose boundary next to some occurrence
// of v reads (2-vertex, 3-vertex), in either orientation.
std::vector<int> exceptional_faces(const PlaneGraph &g, int v);

FaceLooseStats check_lemma_new(const PlaneGraph &g, int f);
std::vector<ConfigMatch> check_lemma_newnew(const PlaneGraph &g);

// All matches of one configuration, canonically ordered.
std::vector<ConfigMatch> detect_config(const PlaneGraph &g, ConfigId id);

// Every occurrence of every configuration; requires G simple, connected,
// max degree <= 8.
std::vector<ConfigMatch> detect_all(const PlaneGraph &g);

// Re-checks a match against its configuration predicate (test support).
bool verify_match(const PlaneGraph &g, const ConfigMatch &m);

} // namespace efc
