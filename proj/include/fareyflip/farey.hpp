#ifndef FAREYFLIP_FAREY_HPP
#define FAREYFLIP_FAREY_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fareyflip/lattice.hpp"

namespace fareyflip {

// Reduced fraction in [0,1].
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    friend bool operator==(Fraction, Fraction) = default;

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

inline bool frac_less(Fraction a, Fraction b) { return a.num * b.den < b.num * a.den; }

Fraction make_fraction(std::int64_t num, std::int64_t den);
Fraction mediant(Fraction a, Fraction b);

// All reduced fractions in [0,1] with denominator <= n, increasing.
std::vector<Fraction> farey_sequence(int n);

// (x,y) -> min(x,y)/max(x,y).
Fraction farey_flip_map(EdgeClass e);

// The inverse map oriented by a context class: fractions land in the same
// (x<y vs x>y) regime and the same sector as `context`.
EdgeClass inverse_farey_flip(Fraction f, EdgeClass context);

struct FareyPlan {
    std::vector<Fraction> fractions;

    bool empty() const { return fractions.empty(); }
    std::size_t size() const { return fractions.size(); }
    std::string str() const;
};

// Mediant walk from F_1 down to the image of `e`; empty for the unit classes.
FareyPlan farey_plan(EdgeClass e);

// Farey neighbor edges of a non-unit class in F_e, as classes in e's regime.
// `longer` is the neighbor with the later first appearance (the longer edge).
struct NeighborClasses {
    EdgeClass longer;
    EdgeClass shorter;
};
NeighborClasses farey_neighbor_classes(EdgeClass e);

struct FareyParallelogram {
    EdgeInstance edge;            // the longer diagonal e
    EdgeInstance boundary_long;   // e1, at e.origin
    EdgeInstance boundary_short;  // e2, at e.origin
    EdgeInstance short_diagonal;  // e1 - e2, from origin+e2 to origin+e1
    std::array<LatticePoint, 4> vertices;  // counterclockwise

    Segment long_diagonal_segment() const { return Segment(edge); }
    Segment short_diagonal_segment() const { return Segment(short_diagonal); }
};

// Throws UnitEdge for the classes (0,1)/(1,0), which have no parallelogram.
FareyParallelogram farey_parallelogram(const EdgeInstance& e);

}  // namespace fareyflip

#endif
