#include "fareyflip/mintri.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace fareyflip {

namespace {

// Boundary edges of the polygon as instances (dense ring sides merged back
// into maximal straight runs, so a straight stretch counts as one edge).
std::vector<EdgeInstance> boundary_edge_instances(const Polygon& poly) {
    std::vector<EdgeInstance> out;
    const auto& ring = poly.ring();
    const std::size_t n = ring.size();
    // Find corner positions (direction changes).
    std::vector<std::size_t> corners;
    for (std::size_t i = 0; i < n; ++i) {
        LatticePoint prev = ring[(i + n - 1) % n];
        LatticePoint cur = ring[i];
        LatticePoint next = ring[(i + 1) % n];
        if (cross(cur - prev, next - cur) != 0) corners.push_back(i);
    }
    if (corners.empty()) throw_internal("polygon ring has no corners");
    for (std::size_t k = 0; k < corners.size(); ++k) {
        std::size_t i = corners[k];
        std::size_t j = corners[(k + 1) % corners.size()];
        LatticePoint from = ring[i];
        LatticePoint to = ring[j];
        LatticeVector d = to - from;
        std::int64_t g = gcd64(d.a, d.b);
        LatticeVector step{d.a / g, d.b / g};
        // Each unit step of a straight run is a boundary edge instance; the
        // run direction is primitive (unit) for equilateral-admitting rings
        // but may be a longer class otherwise, in which case the whole side
        // is one primitive instance per lattice step pair.
        for (std::int64_t s = 0; s < g; ++s) out.emplace_back(from + step * s, step);
    }
    return out;
}

std::vector<LatticePoint> gather_required_points(const Polygon& poly,
                                                 const std::vector<EdgeInstance>& extra_edges) {
    std::vector<LatticePoint> pts(poly.ring().begin(), poly.ring().end());
    auto add_parallelogram = [&](const EdgeInstance& e) {
        if (e.edge_class().is_unit()) {
            pts.push_back(e.origin);
            pts.push_back(e.head());
            return;
        }
        for (const LatticePoint& v : bounding_parallelogram(e)) pts.push_back(v);
    };
    for (const EdgeInstance& e : boundary_edge_instances(poly)) add_parallelogram(e);
    for (const EdgeInstance& e : extra_edges) add_parallelogram(e);
    return pts;
}

// Minimal lattice hexagon with sides along the unit directions containing
// all points: amin<=a<=amax, bmin<=b<=bmax, smin<=a+b<=smax.
Polygon hexagon_hull(const std::vector<LatticePoint>& pts) {
    std::int64_t amin = std::numeric_limits<std::int64_t>::max(), amax = std::numeric_limits<std::int64_t>::min();
    std::int64_t bmin = amin, bmax = amax, smin = amin, smax = amax;
    for (const LatticePoint& p : pts) {
        amin = std::min(amin, p.a);
        amax = std::max(amax, p.a);
        bmin = std::min(bmin, p.b);
        bmax = std::max(bmax, p.b);
        smin = std::min(smin, p.a + p.b);
        smax = std::max(smax, p.a + p.b);
    }
    std::vector<LatticePoint> ring = {
        {amax, smax - amax}, {smax - bmax, bmax}, {amin, bmax},
        {amin, smin - amin}, {smin - bmin, bmin}, {amax, bmin},
    };
    std::vector<LatticePoint> dedup;
    for (const LatticePoint& p : ring) {
        if (dedup.empty() || dedup.back() != p) dedup.push_back(p);
    }
    while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
    return Polygon::from_ring(dedup);
}

bool polygon_contains_quad(const Polygon& poly, const std::array<LatticePoint, 4>& quad) {
    for (int i = 0; i < 4; ++i) {
        LatticePoint a = quad[static_cast<std::size_t>(i)];
        LatticePoint b = quad[static_cast<std::size_t>((i + 1) % 4)];
        if (a == b) continue;
        if (!poly.contains_segment(Segment(a, b))) return false;
    }
    return true;
}

void validate_constraints(const Polygon& poly, const std::vector<EdgeInstance>& constraints) {
    for (const EdgeInstance& e : constraints) {
        if (!poly.has_point(e.origin) || !poly.has_point(e.head()) ||
            !poly.contains_segment(Segment(e))) {
            throw_validation("ConstraintOutsidePolygon", "constraint leaves the polygon");
        }
    }
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        for (std::size_t j = i + 1; j < constraints.size(); ++j) {
            SegmentRelation rel =
                segments_intersect(Segment(constraints[i]), Segment(constraints[j]));
            if (rel == SegmentRelation::Crossing || rel == SegmentRelation::CollinearOverlap) {
                throw_validation("IntersectingConstraints",
                                 "constraints may meet only at lattice points");
            }
        }
    }
}

std::vector<EdgeInstance> non_unit(const std::vector<EdgeInstance>& edges) {
    std::vector<EdgeInstance> out;
    for (const EdgeInstance& e : edges) {
        if (!e.edge_class().is_unit()) out.push_back(e);
    }
    return out;
}

}  // namespace

MetResult met(const Polygon& poly, const std::vector<EdgeInstance>& extra_edges) {
    bool fits = admits_equilateral(poly);
    if (fits) {
        for (const EdgeInstance& e : extra_edges) {
            if (e.edge_class().is_unit()) continue;
            if (!polygon_contains_quad(poly, bounding_parallelogram(e))) {
                fits = false;
                break;
            }
        }
    }
    MetResult out;
    out.phi = fits ? poly : hexagon_hull(gather_required_points(poly, extra_edges));
    out.met = equilateral_triangulation(out.phi);
    return out;
}

Triangulation min_triangulation(const Polygon& poly,
                                const std::vector<EdgeInstance>& constraints) {
    validate_constraints(poly, constraints);

    MetResult base = met(poly, constraints);

    std::vector<EdgeInstance> targets = non_unit(boundary_edge_instances(poly));
    for (const EdgeInstance& e : non_unit(constraints)) targets.push_back(e);

    Triangulation full = base.met;
    if (!targets.empty()) {
        FlipPlan plan = multi_flip_plan(targets);
        full = apply_plan(full, plan);
    }
    if (base.phi == poly) return full;

    // Trim everything outside the polygon's lattice point-set.
    Triangulation out;
    out.polygon = poly;
    for (const Segment& e : full.edges) {
        if (!poly.has_point(e.p) || !poly.has_point(e.q)) continue;
        if (!poly.contains_segment(e)) continue;
        out.edges.insert(e);
    }
    return out;
}

Triangulation mct(const Triangulation& t1, const Triangulation& t2) {
    if (!(t1.polygon == t2.polygon)) {
        throw_validation("PolygonMismatch", "triangulations must share a polygon");
    }
    std::vector<EdgeInstance> common;
    for (const Segment& e : t1.edges) {
        if (e.squared() == 1) continue;
        if (t2.has_edge(e)) common.emplace_back(e.p, e.q - e.p);
    }
    return min_triangulation(t1.polygon, common);
}

FlipPlan plan_from_mt(const Polygon& poly, const std::vector<EdgeInstance>& constraints,
                      const std::vector<EdgeInstance>& goals) {
    validate_constraints(poly, constraints);
    validate_constraints(poly, goals);

    std::vector<EdgeInstance> base_targets = non_unit(boundary_edge_instances(poly));
    for (const EdgeInstance& e : non_unit(constraints)) base_targets.push_back(e);
    std::vector<EdgeInstance> goal_targets = non_unit(boundary_edge_instances(poly));
    for (const EdgeInstance& e : non_unit(goals)) goal_targets.push_back(e);

    FlipPlan big = multi_flip_plan(goal_targets);
    std::set<QuadKey> spent;
    if (!base_targets.empty()) {
        FlipPlan mt_plan = multi_flip_plan(base_targets);
        for (const Flip& f : mt_plan.nodes) spent.insert(f.key());
    }

    // Induced sub-DAG on the unspent flips.
    FlipPlan out;
    std::vector<int> remap(big.size(), -1);
    for (std::size_t i = 0; i < big.size(); ++i) {
        if (spent.count(big.nodes[i].key())) continue;
        remap[i] = static_cast<int>(out.nodes.size());
        out.nodes.push_back(big.nodes[i]);
        out.children.emplace_back();
        out.parents.emplace_back();
        out.node_targets.push_back(big.node_targets[i]);
    }
    out.targets = big.targets;
    for (std::size_t i = 0; i < big.size(); ++i) {
        if (remap[i] < 0) continue;
        for (int c : big.children[i]) {
            if (remap[static_cast<std::size_t>(c)] < 0) continue;
            out.children[static_cast<std::size_t>(remap[i])].push_back(remap[static_cast<std::size_t>(c)]);
            out.parents[static_cast<std::size_t>(remap[static_cast<std::size_t>(c)])].push_back(remap[i]);
        }
    }
    return out;
}

double total_edge_length(const Triangulation& t) {
    double sum = 0.0;
    for (const Segment& e : t.edges) {
        sum += std::sqrt(static_cast<double>(e.squared()));
    }
    return sum;
}

}  // namespace fareyflip
