#ifndef FAREYFLIP_RENDER_HPP
#define FAREYFLIP_RENDER_HPP

#include <string>

#include "fareyflip/plan.hpp"
#include "fareyflip/triangulation.hpp"

namespace fareyflip {

// Deterministic SVG in the 60-degree embedding.  Highlighted edges (the
// non-unit ones) are drawn in red like the figures this mirrors.
std::string to_svg(const Triangulation& t);

// Plan DAG as layered boxes, children below parents.
std::string to_svg(const FlipPlan& plan);

}  // namespace fareyflip

#endif
