#include "fareyflip/triangulation.hpp"

#include <algorithm>
#include <map>

namespace fareyflip {

namespace {

// Insert the interior lattice points of each side into the ring.
std::vector<LatticePoint> densify_ring(const std::vector<LatticePoint>& ring) {
    std::vector<LatticePoint> out;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        LatticePoint p = ring[i];
        LatticePoint q = ring[(i + 1) % n];
        LatticeVector d = q - p;
        std::int64_t g = gcd64(d.a, d.b);
        LatticeVector step{d.a / g, d.b / g};
        for (std::int64_t k = 0; k < g; ++k) out.push_back(p + step * k);
    }
    return out;
}

std::vector<LatticePoint> rotate_to_min(std::vector<LatticePoint> ring) {
    auto it = std::min_element(ring.begin(), ring.end());
    std::rotate(ring.begin(), it, ring.end());
    return ring;
}

}  // namespace

Polygon Polygon::from_ring(std::vector<LatticePoint> ring) {
    if (ring.size() < 3) throw_validation("NotSimple", "polygon needs at least 3 vertices");
    for (const auto& p : ring) check_coord_range(p);
    {
        // The dense ring and the point-set scan are linear in the bounding
        // box; refuse oversized inputs up front.
        std::int64_t alo = ring[0].a, ahi = ring[0].a, blo = ring[0].b, bhi = ring[0].b;
        for (const auto& p : ring) {
            alo = std::min(alo, p.a);
            ahi = std::max(ahi, p.a);
            blo = std::min(blo, p.b);
            bhi = std::max(bhi, p.b);
        }
        if ((ahi - alo + 1) > kLatticeScanLimit || (bhi - blo + 1) > kLatticeScanLimit ||
            (ahi - alo + 1) * (bhi - blo + 1) > kLatticeScanLimit) {
            throw_validation("PolygonTooLarge", "polygon bounding box exceeds the scan limit");
        }
    }

    // Drop consecutive duplicates, then collapse straight-through vertices so
    // the simplicity check sees clean corners.  Fold-back vertices are kept;
    // they make the ring non-simple and are rejected below.
    std::vector<LatticePoint> dedup;
    for (const auto& p : ring) {
        if (dedup.empty() || dedup.back() != p) dedup.push_back(p);
    }
    while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
    if (dedup.size() < 3) throw_validation("NotSimple", "polygon is degenerate");

    std::vector<LatticePoint> corners;
    const std::size_t n = dedup.size();
    for (std::size_t i = 0; i < n; ++i) {
        LatticePoint prev = dedup[(i + n - 1) % n];
        LatticePoint cur = dedup[i];
        LatticePoint next = dedup[(i + 1) % n];
        LatticeVector in = cur - prev, out = next - cur;
        bool straight = cross(in, out) == 0 && (in.a * out.a + in.b * out.b) > 0;
        if (!straight) corners.push_back(cur);
    }
    if (corners.size() < 3) throw_validation("NotSimple", "polygon is degenerate");
    if (ring_doubled_area(corners) < 0) std::reverse(corners.begin(), corners.end());
    if (!ring_is_simple(corners)) throw_validation("NotSimple", "polygon boundary self-intersects");

    Polygon poly;
    poly.ring_ = rotate_to_min(densify_ring(corners));
    poly.points_ = closed_lattice_points(poly.ring_);
    std::sort(poly.points_.begin(), poly.points_.end());
    return poly;
}

std::vector<Segment> Polygon::boundary_segments() const {
    std::vector<Segment> out;
    const std::size_t n = ring_.size();
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(ring_[i], ring_[(i + 1) % n]);
    return out;
}

bool Polygon::has_point(LatticePoint p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

bool Polygon::contains_point(LatticePoint p) const { return point_in_ring(p, ring_); }

bool Polygon::strictly_contains_point(LatticePoint p) const {
    return point_strictly_in_ring(p, ring_);
}

bool Polygon::contains_segment(const Segment& s) const {
    if (!contains_point(s.p) || !contains_point(s.q)) return false;
    for (const Segment& side : boundary_segments()) {
        SegmentRelation rel = segments_intersect(side, s);
        if (rel == SegmentRelation::Crossing) return false;
    }
    // No proper boundary crossing: the open segment is entirely inside or
    // entirely outside.  Decide with the doubled-coordinate midpoint.
    std::vector<LatticePoint> ring2;
    ring2.reserve(ring_.size());
    for (const auto& v : ring_) ring2.push_back({2 * v.a, 2 * v.b});
    LatticePoint mid{s.p.a + s.q.a, s.p.b + s.q.b};
    return point_in_ring(mid, ring2);
}

std::vector<Segment> Triangulation::non_unit_edges() const {
    std::vector<Segment> out;
    for (const Segment& e : edges) {
        if (e.squared() != 1) out.push_back(e);
    }
    return out;
}

std::vector<EdgeInstance> Triangulation::non_unit_edge_instances() const {
    std::vector<EdgeInstance> out;
    for (const Segment& e : non_unit_edges()) out.emplace_back(e.p, e.q - e.p);
    return out;
}

std::int64_t expected_edge_count(const Polygon& poly) {
    return 3 * poly.interior_count() + 2 * poly.boundary_count() - 3;
}

std::int64_t expected_face_count(const Polygon& poly) {
    return 2 * poly.interior_count() + poly.boundary_count() - 2;
}

bool admits_equilateral(const Polygon& poly) {
    for (const Segment& s : poly.boundary_segments()) {
        if (s.squared() != 1) return false;
    }
    return true;
}

Triangulation equilateral_triangulation(const Polygon& poly) {
    if (!admits_equilateral(poly)) {
        throw_validation("NotEquilateralAdmitting",
                         "polygon has a non-unit boundary segment");
    }
    Triangulation t;
    t.polygon = poly;
    const auto& pts = poly.point_set();
    for (const LatticePoint& p : pts) {
        for (LatticeVector d : {LatticeVector{1, 0}, LatticeVector{0, 1}, LatticeVector{1, -1}}) {
            LatticePoint q = p + d;
            if (!poly.has_point(q)) continue;
            Segment s(p, q);
            if (poly.contains_segment(s)) t.edges.insert(s);
        }
    }
    return t;
}

std::optional<LatticePoint> face_apex(const Triangulation& t, LatticePoint p, LatticePoint q,
                                      int side) {
    for (const LatticePoint& r : t.polygon.point_set()) {
        if (orientation(p, q, r) != side) continue;
        if (std::llabs(cross(q - p, r - p)) != 1) continue;  // primitive triangle
        if (!t.has_edge(Segment(p, r)) || !t.has_edge(Segment(q, r))) continue;
        return r;
    }
    return std::nullopt;
}

Triangulation apply_flip(const Triangulation& t, const Segment& diagonal) {
    if (!t.has_edge(diagonal)) {
        throw_validation("NotInteriorEdge", "segment is not an edge of the triangulation");
    }
    for (const Segment& side : t.polygon.boundary_segments()) {
        if (side == diagonal) {
            throw_validation("NotInteriorEdge", "boundary segments cannot be flipped");
        }
    }
    auto left = face_apex(t, diagonal.p, diagonal.q, +1);
    auto right = face_apex(t, diagonal.p, diagonal.q, -1);
    if (!left || !right) {
        throw_validation("NotInteriorEdge", "segment does not separate two faces");
    }
    // Quad ring p, right, q, left; all four corners must turn left.
    std::array<LatticePoint, 4> quad = {diagonal.p, *right, diagonal.q, *left};
    for (int i = 0; i < 4; ++i) {
        if (orientation(quad[static_cast<std::size_t>(i)], quad[static_cast<std::size_t>((i + 1) % 4)],
                        quad[static_cast<std::size_t>((i + 2) % 4)]) <= 0) {
            throw_validation("NotConvexQuadrilateral",
                             "surrounding quadrilateral is not strictly convex");
        }
    }
    Triangulation out = t;
    out.edges.erase(diagonal);
    out.edges.insert(Segment(*left, *right));
    return out;
}

Triangulation apply_plan(const Triangulation& t, const FlipPlan& plan,
                         const std::vector<int>* order) {
    std::vector<int> seq;
    if (order != nullptr) {
        OrderingReport rep = validate_linear_ordering(plan, *order);
        if (!rep.ok) throw_validation("InvalidOrdering", rep.message);
        seq = *order;
    } else {
        seq = plan.default_order();
    }
    Triangulation cur = t;
    for (int idx : seq) {
        const Flip& f = plan.nodes[static_cast<std::size_t>(idx)];
        Triangulation next = [&] {
            try {
                return apply_flip(cur, f.removed);
            } catch (const Error& e) {
                throw_internal("apply_plan: flip in a valid ordering failed (" +
                               std::string(e.what()) + ")");
            }
        }();
        if (!next.has_edge(f.created)) {
            throw_internal("apply_plan: flip produced an unexpected diagonal");
        }
        cur = std::move(next);
    }
    return cur;
}

std::vector<FaceTriple> faces(const Triangulation& t) {
    std::vector<FaceTriple> out;
    std::set<std::array<LatticePoint, 3>> seen;
    for (const Segment& e : t.edges) {
        for (int side : {+1, -1}) {
            auto apex = face_apex(t, e.p, e.q, side);
            if (!apex) continue;
            std::array<LatticePoint, 3> tri = {e.p, e.q, *apex};
            std::sort(tri.begin(), tri.end());
            if (seen.insert(tri).second) out.push_back({tri[0], tri[1], tri[2]});
        }
    }
    return out;
}

ValidationReport validate_triangulation(const Triangulation& t) {
    ValidationReport rep;
    const Polygon& poly = t.polygon;

    for (const Segment& s : poly.boundary_segments()) {
        if (!t.has_edge(s)) {
            rep.fail("missing boundary segment");
            break;
        }
    }
    for (const Segment& e : t.edges) {
        if (!poly.has_point(e.p) || !poly.has_point(e.q)) {
            rep.fail("edge endpoint outside the lattice point-set");
            continue;
        }
        if (!poly.contains_segment(e)) rep.fail("edge leaves the polygon");
        LatticeVector d = e.delta();
        if (gcd64(d.a, d.b) != 1) rep.fail("edge passes through a lattice point");
    }
    std::vector<Segment> list(t.edges.begin(), t.edges.end());
    for (std::size_t i = 0; i < list.size(); ++i) {
        for (std::size_t j = i + 1; j < list.size(); ++j) {
            SegmentRelation rel = segments_intersect(list[i], list[j]);
            if (rel == SegmentRelation::Crossing || rel == SegmentRelation::CollinearOverlap) {
                rep.fail("edges cross");
            }
        }
    }
    std::int64_t want_edges = expected_edge_count(poly);
    if (static_cast<std::int64_t>(t.edges.size()) != want_edges) {
        rep.fail("edge count " + std::to_string(t.edges.size()) + ", expected " +
                 std::to_string(want_edges));
    }
    if (rep.ok) {
        auto fs = faces(t);
        std::int64_t want_faces = expected_face_count(poly);
        if (static_cast<std::int64_t>(fs.size()) != want_faces) {
            rep.fail("face count " + std::to_string(fs.size()) + ", expected " +
                     std::to_string(want_faces));
        }
        for (const FaceTriple& f : fs) {
            if (std::llabs(cross(f.b - f.a, f.c - f.a)) != 1) {
                rep.fail("non-primitive face");
            }
        }
    }
    return rep;
}

}  // namespace fareyflip
