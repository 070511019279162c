#pragma once

// The constructive colouring engine: split at eligible cut vertices, find a
// reducible configuration, apply its reduction, colour the smaller graph
// recursively, and extend through the configuration's recolouring script.
// Every script move is validated at run time; a blocked script falls back
// to a bounded exhaustive recolouring of the reinserted neighbourhood.

#include <map>
#include <optional>
#include <string>

#include "efc/colouring.hpp"
#include "efc/configs.hpp"
#include "efc/embed.hpp"

namespace efc {

struct SolveStats {
    std::map<ConfigId, long long> script_ok;   // extensions done by the script
    std::map<ConfigId, long long> fallback_ok; // blocked, resolved by fallback
    long long decompose_splits = 0;
    long long base_cases = 0;

    std::string summary() const;
    long long total_fallbacks() const;
};

// Valid total 9-colouring of a simple connected plane graph with max
// degree <= 8.  Deterministic.  Throws PreconditionViolated or, on an
// implementation bug, InternalExtensionFailure (persisting the instance).
EdgeFaceColouring colour(const PlaneGraph &g, SolveStats *stats = nullptr);

// --- pieces exposed for tests ----------------------------------------------

struct Reduced {
    PlaneGraph graph;
    std::vector<int> vertex_map; // g vertex -> reduced vertex; for a
                                 // contraction the removed vertex maps to
                                 // the merge target
    ConfigMatch match;
};

// Applies the match's reduction.  Throws SurgeryPreconditionFailed when the
// reduction is a structural redirect or the surgery is illegal.
Reduced reduce(const PlaneGraph &g, const ConfigMatch &match);

// Extends a valid total colouring of the reduced graph to one of g via the
// configuration's script, falling back to bounded exhaustive recolouring.
EdgeFaceColouring extend(const PlaneGraph &g, const Reduced &step,
                         const EdgeFaceColouring &sub, SolveStats *stats = nullptr,
                         bool *used_fallback = nullptr);

// Bounded exhaustive recolouring used when a script blocks: uncoloured
// elements plus growing rings of their neighbourhood are recoloured by
// exact search (9 colours, most-constrained-first).  Returns a valid total
// colouring or nothing.
std::optional<EdgeFaceColouring> fallback_recolour(const PlaneGraph &g,
                                                   const EdgeFaceColouring &base);

struct EligibleCut {
    bool found = false;
    int v = -1;   // the cut vertex
    int rep = -1; // smallest vertex of the hanging component
};

// Smallest eligible cut vertex, if any: a component of g - v attaches to at
// most two rotation-consecutive neighbours of v.
EligibleCut find_eligible_cut(const PlaneGraph &g);

// Merges total colourings of the two split parts by colour permutation.
EdgeFaceColouring merge_split(const PlaneGraph &g, const SplitResult &sr,
                              const EdgeFaceColouring &c1, const EdgeFaceColouring &c2);

} // namespace efc
