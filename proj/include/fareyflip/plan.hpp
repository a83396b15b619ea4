#ifndef FAREYFLIP_PLAN_HPP
#define FAREYFLIP_PLAN_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fareyflip/farey.hpp"
#include "fareyflip/lattice.hpp"

namespace fareyflip {

enum class FlipDirection { Forward, Reversed };

// Sorted vertex 4-tuple; the identity under which duplicate flips are
// consolidated and plans are merged.
using QuadKey = std::array<LatticePoint, 4>;

struct Flip {
    std::array<LatticePoint, 4> quad;  // counterclockwise ring
    Segment removed;
    Segment created;
    FlipDirection direction = FlipDirection::Forward;

    QuadKey key() const;
};

Flip forward_flip(const FareyParallelogram& p);
Flip reversed(const Flip& f);

// A partially-ordered set of flips as a DAG.  children[i] lists the flips
// that must be performed before flip i (DAG edges point toward parents).
struct FlipPlan {
    std::vector<Flip> nodes;
    std::vector<std::vector<int>> children;
    std::vector<std::vector<int>> parents;
    std::vector<EdgeInstance> targets;
    // For every node, the sorted target indices whose per-edge plan contains it.
    std::vector<std::vector<int>> node_targets;

    std::size_t size() const { return nodes.size(); }
    bool empty() const { return nodes.empty(); }

    int find(const QuadKey& key) const;
    bool contains(const QuadKey& key) const;

    // Maximal flips (no parents) / minimal flips (no prerequisites).
    std::vector<int> maximal() const;
    std::vector<int> minimal() const;

    // All nodes in the DAG rooted at `node` (its prerequisites), inclusive.
    std::vector<int> descendants(int node) const;

    // Deterministic topological order: prerequisites first, ties broken by
    // (direction, quad key) with reversed flips preferred.
    std::vector<int> default_order() const;

    std::map<QuadKey, int> build_index() const;
};

// Algorithm output for one edge; empty for unit classes.  Duplicate flips are
// consolidated during construction.
FlipPlan flip_plan(const EdgeInstance& e);

// Merged union of the per-edge plans (shared flips appear once).  Inputs may
// meet only at lattice points; crossings raise IntersectingTargets.
FlipPlan multi_flip_plan(const std::vector<EdgeInstance>& edges);

struct OrderingReport {
    bool ok = true;
    int violation_index = -1;  // position in `order` of the offending flip
    std::string message;
};

// True iff `order` is a permutation of plan.nodes where every flip appears
// after all flips in the DAG rooted at it.
OrderingReport validate_linear_ordering(const FlipPlan& plan, const std::vector<int>& order);

struct ExtensionCount {
    std::uint64_t value = 0;
    bool exact = true;  // false means "at least value" (cap reached)
};

// Number of valid linear orderings, exact when below `limit`.
ExtensionCount count_linear_extensions(const FlipPlan& plan, std::uint64_t limit);

// Parallelogram spanned by (x,0) and (0,y) in e's defining pair, anchored at
// e.origin; counterclockwise.  Unit classes raise UnitEdge.
std::array<LatticePoint, 4> bounding_parallelogram(const EdgeInstance& e);

// True iff the (closed) bounding parallelograms are disjoint.  Unit-class
// edges degenerate to their own segment.
bool geometrically_separated(const EdgeInstance& e1, const EdgeInstance& e2);

enum class FlipQuality { Good, Bad };

// Good iff the removed edge is a unit edge.
FlipQuality classify_flip(const Flip& f);

// Longest child-to-root chain counted in nodes; 0 for the empty plan.
int plan_height(const FlipPlan& plan);

// Heights per node (leaves = 1).
std::vector<int> node_heights(const FlipPlan& plan);

// pi_1 || ... || pi_n: plan i must complete before plan i+1 starts.  Plans
// are merged on quad identity (an earlier occurrence wins).
FlipPlan sequential_compose(const std::vector<FlipPlan>& plans);

// Graphviz rendering of the DAG; arcs child -> parent.
std::string to_dot(const FlipPlan& plan);

}  // namespace fareyflip

#endif
