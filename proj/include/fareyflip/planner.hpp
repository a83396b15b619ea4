#ifndef FAREYFLIP_PLANNER_HPP
#define FAREYFLIP_PLANNER_HPP

#include <cstddef>
#include <vector>

#include "fareyflip/plan.hpp"
#include "fareyflip/triangulation.hpp"

namespace fareyflip {

// The unique minimum flip plan between two triangulations of one polygon.
// `merged` holds the reversed flips of pi1 (undoing t1's surplus structure,
// longest edges first) and the forward flips of pi2, with cross links from
// every pi2 flip to every reversed flip whose longer diagonal crosses the
// edge it creates.
struct PlanBetween {
    FlipPlan merged;
    std::vector<int> reversed_ids;  // indices into merged (pi1 side)
    std::vector<int> forward_ids;   // indices into merged (pi2 side)
    std::size_t intersection_tests = 0;

    std::size_t size() const { return merged.size(); }
};

PlanBetween plan_between(const Triangulation& t1, const Triangulation& t2,
                         const std::vector<Segment>& constraints = {});

struct OptimalPairViolation {
    enum class Kind { FlipOutsideConstraintPlan, UncrossedGeneratedEdge } kind;
    int side = 0;  // 1 = the (u, e_set) side, 2 = the (v, e_set2) side
    Flip flip;
};

struct OptimalPairReport {
    bool optimal = true;
    std::vector<OptimalPairViolation> violations;
};

// Optimality conditions for a pair of triangulations containing e_set and
// e_set2: the pair minimizes the plan size over all such pairs iff every
// non-shared flip belongs to its own constraint set's minimum plan and every
// edge it generates crosses an edge generated by the other constraint set's
// minimum plan.  Throws ConstraintNotPresent.
OptimalPairReport check_optimal_pair(const Triangulation& u, const Triangulation& v,
                                     const std::vector<EdgeInstance>& e_set,
                                     const std::vector<EdgeInstance>& e_set2);

// Greedy realization: performs plan flips that keep e_set in u and e_set2 in
// v until the pair is optimal.  Terminates; each step shrinks the plan.
std::pair<Triangulation, Triangulation> optimize_pair(const Triangulation& u,
                                                      const Triangulation& v,
                                                      const std::vector<EdgeInstance>& e_set,
                                                      const std::vector<EdgeInstance>& e_set2);

}  // namespace fareyflip

#endif
