#ifndef FAREYFLIP_TRIANGULATION_HPP
#define FAREYFLIP_TRIANGULATION_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fareyflip/lattice.hpp"
#include "fareyflip/plan.hpp"

namespace fareyflip {

// Simple, closed, positively-oriented lattice polygon.  The ring is stored
// densely (every boundary lattice point is a vertex) and rotated to start at
// the lexicographically smallest vertex, so polygon equality is structural.
class Polygon {
public:
    static Polygon from_ring(std::vector<LatticePoint> ring);

    const std::vector<LatticePoint>& ring() const { return ring_; }
    const std::vector<LatticePoint>& point_set() const { return points_; }

    std::int64_t boundary_count() const { return static_cast<std::int64_t>(ring_.size()); }
    std::int64_t interior_count() const {
        return static_cast<std::int64_t>(points_.size()) - boundary_count();
    }

    std::vector<Segment> boundary_segments() const;
    bool has_point(LatticePoint p) const;
    bool contains_point(LatticePoint p) const;           // closed
    bool strictly_contains_point(LatticePoint p) const;  // open

    // The closed segment lies inside the polygon (may touch the boundary).
    bool contains_segment(const Segment& s) const;

    friend bool operator==(const Polygon&, const Polygon&) = default;

private:
    std::vector<LatticePoint> ring_;
    std::vector<LatticePoint> points_;  // sorted
};

struct Triangulation {
    Polygon polygon;
    std::set<Segment> edges;  // includes the boundary segments

    bool has_edge(const Segment& s) const { return edges.count(s) > 0; }
    std::vector<Segment> non_unit_edges() const;
    std::vector<EdgeInstance> non_unit_edge_instances() const;

    friend bool operator==(const Triangulation&, const Triangulation&) = default;
};

// Expected counts for a full lattice triangulation (Pick-derived):
// |edges| = 3i + 2b - 3, faces = 2i + b - 2.
std::int64_t expected_edge_count(const Polygon& poly);
std::int64_t expected_face_count(const Polygon& poly);

// Every boundary segment must be a unit edge; otherwise NotEquilateralAdmitting.
Triangulation equilateral_triangulation(const Polygon& poly);

bool admits_equilateral(const Polygon& poly);

struct FaceTriple {
    LatticePoint a, b, c;  // sorted
};

// Faces as sorted point triples (each spanning a primitive triangle).
std::vector<FaceTriple> faces(const Triangulation& t);

// The apex of the face on the given side of (p->q): returns the point r with
// orientation(p,q,r)==side, edges (p,r),(q,r) present and triangle (p,q,r)
// free of point-set points.  Empty if no such face.
std::optional<LatticePoint> face_apex(const Triangulation& t, LatticePoint p, LatticePoint q,
                                      int side);

// Replaces `diagonal` with the other diagonal of the surrounding convex
// quadrilateral.  Throws NotInteriorEdge / NotConvexQuadrilateral.
Triangulation apply_flip(const Triangulation& t, const Segment& diagonal);

// Executes a plan.  With no explicit order, the plan's default topological
// order is used.  An invalid explicit order throws InvalidOrdering; flip
// failures inside a valid ordering indicate a bug and surface as Internal.
Triangulation apply_plan(const Triangulation& t, const FlipPlan& plan,
                         const std::vector<int>* order = nullptr);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(std::string v) {
        ok = false;
        violations.push_back(std::move(v));
    }
};

ValidationReport validate_triangulation(const Triangulation& t);

}  // namespace fareyflip

#endif
