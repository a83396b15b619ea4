#include "fareyflip/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace fareyflip {

void check_coord_range(std::int64_t value) {
    if (value > kCoordLimit || value < -kCoordLimit) {
        throw_validation("CoordinateOverflow",
                         "coordinate " + std::to_string(value) + " exceeds +/-2^30");
    }
}

void check_coord_range(LatticePoint p) {
    check_coord_range(p.a);
    check_coord_range(p.b);
}

void check_coord_range(LatticeVector v) {
    check_coord_range(v.a);
    check_coord_range(v.b);
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    a = std::llabs(a);
    b = std::llabs(b);
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool is_primitive(LatticeVector v) {
    if (v.a == 0 && v.b == 0) return false;
    return gcd64(v.a, v.b) == 1;
}

int orientation(LatticePoint p, LatticePoint q, LatticePoint r) {
    std::int64_t c = cross(q - p, r - p);
    return (c > 0) - (c < 0);
}

LatticeVector rot60_pow(LatticeVector g, int times) {
    times %= 6;
    if (times < 0) times += 6;
    for (int i = 0; i < times; ++i) g = rot60(g);
    return g;
}

EdgeClass canonical_edge_class(LatticeVector g) {
    if (!is_primitive(g)) {
        throw_validation("NotPrimitive", "edge class requires a primitive nonzero vector");
    }
    bool found = false;
    EdgeClass best{};
    LatticeVector p = g;
    for (int s = 0; s < 3; ++s) {
        for (LatticeVector q : {p, -p}) {
            if (q.a >= 0 && q.b >= 0) {
                EdgeClass cand{q.a, q.b, s};
                if (!found || cand.x + cand.y < best.x + best.y ||
                    (cand.x + cand.y == best.x + best.y && cand.sector < best.sector)) {
                    best = cand;
                    found = true;
                }
            }
        }
        p = rot60_inv(p);
    }
    if (!found) throw_internal("canonical_edge_class: no nonnegative representation");
    return best;
}

LatticeVector class_vector(EdgeClass c) {
    return rot60_pow({c.x, c.y}, c.sector);
}

std::array<LatticeVector, 2> sector_units(int sector) {
    return {rot60_pow({1, 0}, sector), rot60_pow({0, 1}, sector)};
}

EdgeInstance::EdgeInstance(LatticePoint o, LatticeVector v) : origin(o), vec(v) {
    check_coord_range(o);
    check_coord_range(v);
    if (!is_primitive(v)) {
        throw_validation("NotPrimitive", "edge instance vector must be primitive");
    }
}

Segment::Segment(LatticePoint a, LatticePoint b) {
    if (a == b) throw_validation("DegenerateSegment", "segment endpoints must be distinct");
    if (b < a) std::swap(a, b);
    p = a;
    q = b;
}

bool point_on_segment(LatticePoint x, const Segment& s) {
    if (orientation(s.p, s.q, x) != 0) return false;
    return std::min(s.p.a, s.q.a) <= x.a && x.a <= std::max(s.p.a, s.q.a) &&
           std::min(s.p.b, s.q.b) <= x.b && x.b <= std::max(s.p.b, s.q.b);
}

namespace {

// 1D overlap length class for collinear segments: 0 = none, 1 = single point,
// 2 = a positive-length stretch.
int collinear_overlap_class(const Segment& s1, const Segment& s2) {
    // Project onto the dominant axis of s1's direction to order points.
    LatticeVector d = s1.delta();
    auto key = [&](LatticePoint x) {
        return (std::llabs(d.a) >= std::llabs(d.b)) ? x.a : x.b;
    };
    std::int64_t lo1 = std::min(key(s1.p), key(s1.q)), hi1 = std::max(key(s1.p), key(s1.q));
    std::int64_t lo2 = std::min(key(s2.p), key(s2.q)), hi2 = std::max(key(s2.p), key(s2.q));
    std::int64_t lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
    if (lo > hi) return 0;
    return lo == hi ? 1 : 2;
}

}  // namespace

SegmentRelation segments_intersect(const Segment& s1, const Segment& s2) {
    int o1 = orientation(s1.p, s1.q, s2.p);
    int o2 = orientation(s1.p, s1.q, s2.q);
    int o3 = orientation(s2.p, s2.q, s1.p);
    int o4 = orientation(s2.p, s2.q, s1.q);

    if (o1 == 0 && o2 == 0) {
        // All four points on one line.
        int ov = collinear_overlap_class(s1, s2);
        if (ov == 0) return SegmentRelation::Disjoint;
        if (ov == 2) return SegmentRelation::CollinearOverlap;
        // Single shared point; it must be an endpoint of both.
        return SegmentRelation::SharedEndpointOnly;
    }

    if (o1 * o2 < 0 && o3 * o4 < 0) return SegmentRelation::Crossing;

    // Remaining contact can only be an endpoint of one lying on the other.
    bool p2_on = point_on_segment(s2.p, s1);
    bool q2_on = point_on_segment(s2.q, s1);
    bool p1_on = point_on_segment(s1.p, s2);
    bool q1_on = point_on_segment(s1.q, s2);
    if (!(p2_on || q2_on || p1_on || q1_on)) return SegmentRelation::Disjoint;

    auto is_shared_endpoint = [&](LatticePoint x) {
        return (x == s1.p || x == s1.q) && (x == s2.p || x == s2.q);
    };
    if (p2_on && !is_shared_endpoint(s2.p)) return SegmentRelation::Crossing;
    if (q2_on && !is_shared_endpoint(s2.q)) return SegmentRelation::Crossing;
    if (p1_on && !is_shared_endpoint(s1.p)) return SegmentRelation::Crossing;
    if (q1_on && !is_shared_endpoint(s1.q)) return SegmentRelation::Crossing;
    return SegmentRelation::SharedEndpointOnly;
}

bool segments_cross_properly(const Segment& s1, const Segment& s2) {
    int o1 = orientation(s1.p, s1.q, s2.p);
    int o2 = orientation(s1.p, s1.q, s2.q);
    int o3 = orientation(s2.p, s2.q, s1.p);
    int o4 = orientation(s2.p, s2.q, s1.q);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

std::int64_t ring_doubled_area(const std::vector<LatticePoint>& ring) {
    __int128 area2 = 0;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const LatticePoint& p = ring[i];
        const LatticePoint& q = ring[(i + 1) % n];
        area2 += static_cast<__int128>(p.a) * q.b - static_cast<__int128>(q.a) * p.b;
    }
    if (area2 > std::numeric_limits<std::int64_t>::max() ||
        area2 < std::numeric_limits<std::int64_t>::min()) {
        throw_validation("CoordinateOverflow", "polygon area exceeds 64-bit range");
    }
    return static_cast<std::int64_t>(area2);
}

bool ring_is_simple(const std::vector<LatticePoint>& ring) {
    const std::size_t n = ring.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            if (ring[i] == ring[j] && i != j) return false;
        }
    }
    std::vector<Segment> sides;
    sides.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (ring[i] == ring[(i + 1) % n]) return false;
        sides.emplace_back(ring[i], ring[(i + 1) % n]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            SegmentRelation rel = segments_intersect(sides[i], sides[j]);
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) {
                if (rel != SegmentRelation::SharedEndpointOnly) return false;
            } else {
                if (rel != SegmentRelation::Disjoint) return false;
            }
        }
    }
    return true;
}

namespace {

// Crossing-parity test in lattice coordinates with a horizontal ray.  Exact:
// vertices on the ray are handled by the half-open rule on b-extents.
bool parity_inside(LatticePoint x, const std::vector<LatticePoint>& ring) {
    bool inside = false;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        LatticePoint p = ring[i];
        LatticePoint q = ring[(i + 1) % n];
        if ((p.b <= x.b) != (q.b <= x.b)) {
            // Side properly spans the ray level; compare x against the
            // crossing abscissa without division: sign of cross product.
            std::int64_t side = cross(q - p, x - p);
            if (q.b < p.b) side = -side;
            if (side > 0) inside = !inside;
        }
    }
    return inside;
}

}  // namespace

bool point_in_ring(LatticePoint x, const std::vector<LatticePoint>& ring) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (point_on_segment(x, Segment(ring[i], ring[(i + 1) % n]))) return true;
    }
    return parity_inside(x, ring);
}

bool point_strictly_in_ring(LatticePoint x, const std::vector<LatticePoint>& ring) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (point_on_segment(x, Segment(ring[i], ring[(i + 1) % n]))) return false;
    }
    return parity_inside(x, ring);
}

namespace {

std::vector<LatticePoint> lattice_points_impl(const std::vector<LatticePoint>& ring,
                                              bool strict) {
    if (!ring_is_simple(ring)) {
        throw_validation("NotSimple", "polygon boundary self-intersects");
    }
    std::int64_t alo = std::numeric_limits<std::int64_t>::max(), ahi = std::numeric_limits<std::int64_t>::min();
    std::int64_t blo = alo, bhi = ahi;
    for (const auto& p : ring) {
        alo = std::min(alo, p.a);
        ahi = std::max(ahi, p.a);
        blo = std::min(blo, p.b);
        bhi = std::max(bhi, p.b);
    }
    if ((ahi - alo + 1) > kLatticeScanLimit ||
        (bhi - blo + 1) > kLatticeScanLimit ||
        (ahi - alo + 1) * (bhi - blo + 1) > kLatticeScanLimit) {
        throw_validation("PolygonTooLarge", "polygon bounding box exceeds the scan limit");
    }
    std::vector<LatticePoint> out;
    for (std::int64_t a = alo; a <= ahi; ++a) {
        for (std::int64_t b = blo; b <= bhi; ++b) {
            LatticePoint x{a, b};
            if (strict ? point_strictly_in_ring(x, ring) : point_in_ring(x, ring)) {
                out.push_back(x);
            }
        }
    }
    return out;
}

}  // namespace

std::vector<LatticePoint> interior_lattice_points(const std::vector<LatticePoint>& ring) {
    return lattice_points_impl(ring, true);
}

std::vector<LatticePoint> closed_lattice_points(const std::vector<LatticePoint>& ring) {
    return lattice_points_impl(ring, false);
}

}  // namespace fareyflip
