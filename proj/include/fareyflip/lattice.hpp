#ifndef FAREYFLIP_LATTICE_HPP
#define FAREYFLIP_LATTICE_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "fareyflip/error.hpp"

namespace fareyflip {

// Coordinates live in the fixed lattice basis u=(1,0), v=(0,1).  The Cartesian
// embedding (rendering and length sums only) places u at 0 degrees and v at 60
// degrees; the third unit direction is w = u - v.  Every incidence predicate
// below is exact integer arithmetic in this basis.
//
// Coordinates are kept within +/-2^30 so that cross products and squared
// lengths fit comfortably in 64 bits; out-of-range values are rejected at
// construction time instead of silently wrapping.
inline constexpr std::int64_t kCoordLimit = std::int64_t{1} << 30;

struct LatticeVector {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend constexpr bool operator==(LatticeVector, LatticeVector) = default;
    friend constexpr auto operator<=>(LatticeVector, LatticeVector) = default;

    constexpr LatticeVector operator-() const { return {-a, -b}; }
    constexpr LatticeVector operator+(LatticeVector o) const { return {a + o.a, b + o.b}; }
    constexpr LatticeVector operator-(LatticeVector o) const { return {a - o.a, b - o.b}; }
    constexpr LatticeVector operator*(std::int64_t k) const { return {a * k, b * k}; }
};

struct LatticePoint {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend constexpr bool operator==(LatticePoint, LatticePoint) = default;
    friend constexpr auto operator<=>(LatticePoint, LatticePoint) = default;

    constexpr LatticePoint operator+(LatticeVector v) const { return {a + v.a, b + v.b}; }
    constexpr LatticePoint operator-(LatticeVector v) const { return {a - v.a, b - v.b}; }
    constexpr LatticeVector operator-(LatticePoint o) const { return {a - o.a, b - o.b}; }
};

void check_coord_range(std::int64_t value);
void check_coord_range(LatticePoint p);
void check_coord_range(LatticeVector v);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

constexpr std::int64_t cross(LatticeVector p, LatticeVector q) {
    return p.a * q.b - p.b * q.a;
}

// Squared Euclidean length in the 60-degree embedding.  Equals 1 exactly for
// the six unit vectors +-u, +-v, +-w.
constexpr std::int64_t squared_length(LatticeVector v) {
    return v.a * v.a + v.a * v.b + v.b * v.b;
}

constexpr bool is_unit(LatticeVector v) { return squared_length(v) == 1; }

bool is_primitive(LatticeVector v);

// +1 counterclockwise, 0 collinear, -1 clockwise.  The basis change to the
// Cartesian embedding has positive determinant, so the lattice-coordinate
// cross product has the Cartesian sign.
int orientation(LatticePoint p, LatticePoint q, LatticePoint r);

// Rotation by +60 degrees: u -> v, v -> v-u.
constexpr LatticeVector rot60(LatticeVector g) { return {-g.b, g.a + g.b}; }
constexpr LatticeVector rot60_inv(LatticeVector g) { return {g.a + g.b, -g.a}; }
LatticeVector rot60_pow(LatticeVector g, int times);

// An edge equivalence class: nonnegative coprime coefficients (x,y) in the
// defining coordinate pair identified by `sector`.
//
// Sector convention:
//   sector 0: pair (u, v)        covering directions [0,60) degrees
//   sector 1: pair (v, v-u)      covering [60,120)
//   sector 2: pair (v-u, -u)     covering [120,180)
// A vector is reduced up to sign into one of the three pairs; ties on the
// sector boundaries are broken toward the smaller sector index.
struct EdgeClass {
    std::int64_t x = 0;
    std::int64_t y = 0;
    int sector = 0;

    friend constexpr bool operator==(EdgeClass, EdgeClass) = default;
    friend constexpr auto operator<=>(EdgeClass, EdgeClass) = default;

    bool is_unit() const { return x + y == 1; }
};

// Bijective up to sign for primitive vectors.
EdgeClass canonical_edge_class(LatticeVector g);

// The canonical-sign vector of a class: rot60^sector applied to (x,y).
LatticeVector class_vector(EdgeClass c);

// The defining coordinate pair of a sector (rot60^sector of u and v).
std::array<LatticeVector, 2> sector_units(int sector);

struct EdgeInstance {
    LatticePoint origin;
    LatticeVector vec;  // primitive

    EdgeInstance() = default;
    EdgeInstance(LatticePoint o, LatticeVector v);

    EdgeClass edge_class() const { return canonical_edge_class(vec); }
    LatticePoint head() const { return origin + vec; }

    friend bool operator==(const EdgeInstance&, const EdgeInstance&) = default;
};

// Unordered pair of distinct lattice points, stored with endpoints sorted.
struct Segment {
    LatticePoint p;
    LatticePoint q;

    Segment() = default;
    Segment(LatticePoint a, LatticePoint b);
    explicit Segment(const EdgeInstance& e) : Segment(e.origin, e.head()) {}

    LatticeVector delta() const { return q - p; }
    std::int64_t squared() const { return squared_length(delta()); }

    friend bool operator==(const Segment&, const Segment&) = default;
    friend auto operator<=>(const Segment&, const Segment&) = default;
};

enum class SegmentRelation {
    Disjoint,
    SharedEndpointOnly,
    Crossing,          // meet at a point interior to at least one segment
    CollinearOverlap,  // share more than a single point
};

SegmentRelation segments_intersect(const Segment& s1, const Segment& s2);

// True iff the open segments cross at a single interior point of both.
bool segments_cross_properly(const Segment& s1, const Segment& s2);

bool point_on_segment(LatticePoint x, const Segment& s);

// --- simple-polygon helpers over a vertex ring --------------------------------

// Signed doubled area (shoelace); positive for counterclockwise rings.
std::int64_t ring_doubled_area(const std::vector<LatticePoint>& ring);

bool ring_is_simple(const std::vector<LatticePoint>& ring);

bool point_in_ring(LatticePoint x, const std::vector<LatticePoint>& ring);          // closed
bool point_strictly_in_ring(LatticePoint x, const std::vector<LatticePoint>& ring); // open

// Point enumeration scans the bounding box; refuse boxes past this many
// cells so hostile inputs fail fast instead of hanging.
inline constexpr std::int64_t kLatticeScanLimit = std::int64_t{1} << 22;

// Lattice points strictly inside a simple polygon.  Throws NotSimple.
std::vector<LatticePoint> interior_lattice_points(const std::vector<LatticePoint>& ring);

// Lattice points inside or on the boundary of a simple polygon.
std::vector<LatticePoint> closed_lattice_points(const std::vector<LatticePoint>& ring);

}  // namespace fareyflip

#endif
