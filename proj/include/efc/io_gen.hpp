#pragma once

// Text formats, graph generators and the exhaustive enumerator of small
// plane embeddings.
//
// Graph documents are line-oriented UTF-8 with '#' comments and LF endings:
//
//   # efc-graph 1
//   vertex 0: 1 2
//   vertex 1: 2 0
//   vertex 2: 0 1
//
// Neighbour lists are clockwise.  Canonical serialisation sorts vertices
// ascending and starts each rotation at the smallest neighbour, so
// serialise(parse(serialise(g))) is byte-identical to serialise(g).
//
// Colouring documents:
//
//   # efc-colouring 1
//   edge 0 1: 3
//   face f0: 2

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "efc/colouring.hpp"
#include "efc/embed.hpp"

namespace efc {

PlaneGraph parse_graph(const std::string &text);
std::string serialise_graph(const PlaneGraph &g, const std::string &comment = "");

EdgeFaceColouring parse_colouring(const PlaneGraph &g, const std::string &text);
std::string serialise_colouring(const PlaneGraph &g, const EdgeFaceColouring &c);

// Seeded portable PRNG: mt19937_64 with rejection sampling, so generated
// graphs are identical across platforms for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t below(std::uint64_t n); // uniform in [0, n)
    bool chance(int num, int den) { return below(den) < static_cast<std::uint64_t>(num); }

private:
    std::mt19937_64 eng_;
};

enum class GenKind { Tree, Star, Cycle, Platonic, Triangulation, Subgraph };

GenKind gen_kind_from_name(const std::string &name); // throws InfeasibleParameters

// Deterministic generator; max_degree is enforced by rejection.  For the
// platonic kind, n selects the solid by vertex count: 4 tetrahedron,
// 6 octahedron, 8 cube, 12 icosahedron, 20 dodecahedron.
PlaneGraph generate(GenKind kind, int n, int max_degree = 8, std::uint64_t seed = 0);

PlaneGraph platonic_solid(int n);

// All connected simple plane-embedded graphs with at least one edge on at
// most max_vertices labelled vertices (max_vertices <= 6), one embedding
// per canonical-form class, in canonical order.
std::vector<PlaneGraph> enumerate_small(int max_vertices);

// Lexicographically smallest rotation-system relabelling, used for
// deduplication: [n, deg(0), rot(0)..., deg(1), rot(1)...].
std::vector<int> canonical_form(const PlaneGraph &g);

} // namespace efc
