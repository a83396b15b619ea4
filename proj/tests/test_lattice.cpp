#include <doctest.h>

#include <random>
#include <set>

#include "fareyflip/lattice.hpp"
#include "fareyflip/triangulation.hpp"

using namespace fareyflip;

TEST_SUITE_BEGIN("lattice");

TEST_CASE("orientation basics") {
    CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == +1);
    CHECK(orientation({0, 0}, {1, 0}, {2, 0}) == 0);
    CHECK(orientation({0, 0}, {2, 1}, {3, 2}) == +1);  // cross = 2*2 - 1*3 = 1
    CHECK(orientation({0, 0}, {0, 1}, {1, 0}) == -1);
}

TEST_CASE("orientation is antisymmetric under argument swaps") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::int64_t> d(-8, 8);
    for (int i = 0; i < 500; ++i) {
        LatticePoint p{d(rng), d(rng)}, q{d(rng), d(rng)}, r{d(rng), d(rng)};
        CHECK(orientation(p, q, r) == -orientation(q, p, r));
        CHECK(orientation(p, q, r) == -orientation(p, r, q));
        CHECK(orientation(p, q, r) == orientation(q, r, p));
    }
}

TEST_CASE("squared length in the 60-degree basis") {
    CHECK(squared_length({1, 0}) == 1);
    CHECK(squared_length({1, 1}) == 3);
    CHECK(squared_length({3, 2}) == 19);
    CHECK(squared_length({1, -1}) == 1);  // w = u - v
}

TEST_CASE("exactly six unit vectors") {
    int units = 0;
    for (std::int64_t a = -10; a <= 10; ++a) {
        for (std::int64_t b = -10; b <= 10; ++b) {
            if ((a != 0 || b != 0) && squared_length({a, b}) == 1) ++units;
        }
    }
    CHECK(units == 6);
}

TEST_CASE("segment relations") {
    CHECK(segments_intersect(Segment({0, 0}, {1, 0}), Segment({0, 1}, {1, 1})) ==
          SegmentRelation::Disjoint);
    CHECK(segments_intersect(Segment({0, 0}, {1, 1}), Segment({1, 0}, {0, 1})) ==
          SegmentRelation::Crossing);
    CHECK(segments_intersect(Segment({0, 0}, {2, 0}), Segment({1, 0}, {3, 0})) ==
          SegmentRelation::CollinearOverlap);
    CHECK(segments_intersect(Segment({0, 0}, {1, 0}), Segment({1, 0}, {1, 1})) ==
          SegmentRelation::SharedEndpointOnly);
    // T-junction counts as a crossing.
    CHECK(segments_intersect(Segment({0, 0}, {2, 0}), Segment({1, 0}, {1, 1})) ==
          SegmentRelation::Crossing);
    CHECK(segments_intersect(Segment({0, 0}, {2, 0}), Segment({2, 0}, {4, 0})) ==
          SegmentRelation::SharedEndpointOnly);
}

TEST_CASE("canonical class examples") {
    EdgeClass c = canonical_edge_class({3, 2});
    CHECK(c.x == 3);
    CHECK(c.y == 2);
    CHECK(c.sector == 0);

    // The sector-1 copy of (1,1) is v + (v-u).
    EdgeClass c1 = canonical_edge_class({-1, 2});
    CHECK(c1.x == 1);
    CHECK(c1.y == 1);
    CHECK(c1.sector == 1);

    EdgeClass c2 = canonical_edge_class({-2, 1});
    CHECK(c2.x == 1);
    CHECK(c2.y == 1);
    CHECK(c2.sector == 2);

    // Axis vectors.
    CHECK(canonical_edge_class({1, 0}) == EdgeClass{1, 0, 0});
    CHECK(canonical_edge_class({0, -1}) == EdgeClass{0, 1, 0});
    CHECK(canonical_edge_class({1, -1}) == EdgeClass{0, 1, 1});
}

TEST_CASE("canonicalization round-trips up to sign") {
    std::set<EdgeClass> seen_classes;
    for (std::int64_t a = -10; a <= 10; ++a) {
        for (std::int64_t b = -10; b <= 10; ++b) {
            LatticeVector g{a, b};
            if (!is_primitive(g) || squared_length(g) > 100) continue;
            EdgeClass c = canonical_edge_class(g);
            CHECK(c.x >= 0);
            CHECK(c.y >= 0);
            CHECK(gcd64(c.x, c.y) == 1);
            LatticeVector back = class_vector(c);
            CHECK((back == g || back == -g));
            CHECK(canonical_edge_class(-g) == c);
            CHECK(squared_length(back) == squared_length(g));
            // x,y are coordinates in a 60-degree pair, so the length formula
            // applies to the class coefficients as well.
            CHECK(c.x * c.x + c.x * c.y + c.y * c.y == squared_length(g));
            if (b > 0 || (b == 0 && a > 0)) seen_classes.insert(c);
        }
    }
    // Distinct up-to-sign vectors map to distinct classes.
    std::size_t count = 0;
    for (std::int64_t a = -10; a <= 10; ++a) {
        for (std::int64_t b = -10; b <= 10; ++b) {
            LatticeVector g{a, b};
            if (!is_primitive(g) || squared_length(g) > 100) continue;
            if (b > 0 || (b == 0 && a > 0)) ++count;
        }
    }
    CHECK(seen_classes.size() == count);
}

TEST_CASE("interior lattice points") {
    CHECK(interior_lattice_points({{0, 0}, {1, 0}, {0, 1}}).empty());
    // The parallelogram around the edge (3,2) is lattice-point free.
    CHECK(interior_lattice_points({{0, 0}, {2, 1}, {3, 2}, {1, 1}}).empty());
    CHECK(interior_lattice_points({{0, 0}, {2, 0}, {0, 2}}).empty());
    auto pts = interior_lattice_points({{0, 0}, {3, 0}, {0, 3}});
    CHECK(pts.size() == 1);
    CHECK(pts[0] == LatticePoint{1, 1});
    CHECK_THROWS_AS((void)interior_lattice_points({{0, 0}, {2, 2}, {2, 0}, {0, 2}}), Error);
}

TEST_CASE("oversized polygons are refused, not scanned") {
    CHECK_THROWS_AS(
        (void)closed_lattice_points({{0, 0}, {1 << 28, 0}, {1 << 28, 1 << 28}, {0, 1 << 28}}),
        Error);
}

TEST_CASE("interior counts agree with Pick's theorem on random polygons") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::int64_t> d(0, 6);
    int done = 0;
    while (done < 100) {
        // Random triangles and convex quadrilaterals.
        std::vector<LatticePoint> ring;
        int k = 3 + (done % 2);
        for (int i = 0; i < k; ++i) ring.push_back({d(rng), d(rng)});
        if (ring_doubled_area(ring) < 0) std::reverse(ring.begin(), ring.end());
        if (!ring_is_simple(ring)) continue;
        Polygon poly = [&]() -> Polygon {
            return Polygon::from_ring(ring);
        }();
        std::int64_t area2 = ring_doubled_area(poly.ring());
        std::int64_t interior = poly.interior_count();
        std::int64_t boundary = poly.boundary_count();
        CHECK(area2 == 2 * interior + boundary - 2);
        ++done;
    }
}

TEST_SUITE_END();
