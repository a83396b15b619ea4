#ifndef FAREYFLIP_ORACLE_HPP
#define FAREYFLIP_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "fareyflip/triangulation.hpp"

namespace fareyflip {

// Brute-force ground truth, guarded to desk scale.  FAREY_FLIP_GUARD in the
// environment overrides the point-set guard (and scales the unique-quad
// guard to its square).
std::int64_t oracle_point_guard();

// Every triangulation of the polygon containing all `constraints`, each
// exactly once.  Throws TooLarge past the guard.
std::vector<Triangulation> enumerate_triangulations(const Polygon& poly,
                                                    const std::vector<Segment>& constraints = {});

// The flip graph over a fixed polygon: vertices are triangulations,
// adjacency joins pairs that differ by one flip.
struct FlipGraph {
    std::vector<Triangulation> vertices;
    std::vector<std::vector<int>> adjacency;

    int find(const Triangulation& t) const;
    bool connected() const;
};

FlipGraph build_flip_graph(const Polygon& poly, const std::vector<Segment>& constraints = {});

// One flip along a path, identified by its quad and diagonals.
struct FlipMove {
    QuadKey quad;
    Segment removed;
    Segment created;

    friend bool operator==(const FlipMove&, const FlipMove&) = default;
    friend auto operator<=>(const FlipMove&, const FlipMove&) = default;
};

using FlipMultiset = std::vector<FlipMove>;  // sorted

struct BfsResult {
    bool reachable = false;
    int distance = -1;
    std::uint64_t shortest_paths = 0;          // capped at path_cap
    bool paths_exact = true;
    std::set<FlipMultiset> multisets;          // over all shortest paths
    std::vector<Triangulation> goal_states;    // min-distance satisfying states
};

// BFS from `start` to the nearest triangulation satisfying `goal`, plus the
// set of flip multisets over all shortest paths.
BfsResult flip_graph_bfs(const Triangulation& start,
                         const std::function<bool(const Triangulation&)>& goal,
                         std::uint64_t path_cap = 1u << 20);

// All convex lattice quadrilaterals with `e` as strictly longer diagonal and
// lattice-point-free interior (each as a sorted vertex 4-tuple).
std::vector<QuadKey> brute_unique_quad(const EdgeInstance& e);

struct MinPairResult {
    int minimum = -1;
    Triangulation witness_u;
    Triangulation witness_v;
};

// Exact minimum of the flip distance over all pairs (U,V) with U containing
// e_set and V containing e_set2, inside `poly`.
MinPairResult brute_min_pair(const std::vector<Segment>& e_set,
                             const std::vector<Segment>& e_set2, const Polygon& poly);

}  // namespace fareyflip

#endif
