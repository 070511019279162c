#pragma once

#include <stdexcept>
#include <string>

namespace efc {

enum class Errc {
    inconsistent_adjacency,
    loop_or_multi_edge,
    non_planar_embedding,
    bridge_deletion,
    unknown_edge,
    would_create_multi_edge,
    not_eligible_cut_vertex,
    unknown_element,
    not_nice,
    no_free_colour,
    degree_too_low,
    face_too_small,
    precondition_violated,
    surgery_precondition_failed,
    internal_extension_failure,
    disconnected,
    infeasible_parameters,
    syntax_error,
    semantic_error,
};

inline const char *errc_name(Errc c) {
    switch (c) {
    case Errc::inconsistent_adjacency: return "InconsistentAdjacency";
    case Errc::loop_or_multi_edge: return "LoopOrMultiEdge";
    case Errc::non_planar_embedding: return "NonPlanarEmbedding";
    case Errc::bridge_deletion: return "BridgeDeletion";
    case Errc::unknown_edge: return "UnknownEdge";
    case Errc::would_create_multi_edge: return "WouldCreateMultiEdge";
    case Errc::not_eligible_cut_vertex: return "NotEligibleCutVertex";
    case Errc::unknown_element: return "UnknownElement";
    case Errc::not_nice: return "NotNice";
    case Errc::no_free_colour: return "NoFreeColour";
    case Errc::degree_too_low: return "DegreeTooLow";
    case Errc::face_too_small: return "FaceTooSmall";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::surgery_precondition_failed: return "SurgeryPreconditionFailed";
    case Errc::internal_extension_failure: return "InternalExtensionFailure";
    case Errc::disconnected: return "Disconnected";
    case Errc::infeasible_parameters: return "InfeasibleParameters";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::semantic_error: return "SemanticError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string &what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace efc
