#ifndef FAREYFLIP_MINTRI_HPP
#define FAREYFLIP_MINTRI_HPP

#include <vector>

#include "fareyflip/plan.hpp"
#include "fareyflip/triangulation.hpp"

namespace fareyflip {

struct MetResult {
    Polygon phi;        // enclosing polygon admitting an equilateral triangulation
    Triangulation met;  // its equilateral triangulation
};

// Enclosing polygon and its equilateral triangulation.  phi contains the
// polygon and the bounding parallelograms of its boundary edges plus all
// `extra_edges`; when poly itself qualifies it is returned unchanged,
// otherwise the minimal direction-aligned lattice hexagon is used.
MetResult met(const Polygon& poly, const std::vector<EdgeInstance>& extra_edges = {});

// The unique minimum (total edge length) triangulation of poly containing
// the constraints.  Throws ConstraintOutsidePolygon / IntersectingConstraints.
Triangulation min_triangulation(const Polygon& poly,
                                const std::vector<EdgeInstance>& constraints = {});

// Maximum common triangulation: the minimum triangulation of the shared
// polygon constrained by the edges common to both inputs.
Triangulation mct(const Triangulation& t1, const Triangulation& t2);

// The remaining minimum flip plan for `goals` once MT(poly, constraints) is
// already in place: multi_flip_plan(boundary + goals) minus the flips spent
// building the constrained minimum triangulation.
FlipPlan plan_from_mt(const Polygon& poly, const std::vector<EdgeInstance>& constraints,
                      const std::vector<EdgeInstance>& goals);

// Total edge length (Cartesian, 60-degree embedding); used only for
// minimality comparisons in tests and the oracle.
double total_edge_length(const Triangulation& t);

}  // namespace fareyflip

#endif
