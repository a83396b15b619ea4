#include "fareyflip/farey.hpp"

#include <algorithm>

namespace fareyflip {

Fraction make_fraction(std::int64_t num, std::int64_t den) {
    if (den <= 0 || num < 0 || num > den) {
        throw_validation("BadFraction", "fraction must be in [0,1] with positive denominator");
    }
    std::int64_t g = gcd64(num, den);
    if (g == 0) g = 1;
    return Fraction{num / g, den / g};
}

Fraction mediant(Fraction a, Fraction b) {
    // Mediants of Farey neighbors are already reduced.
    return Fraction{a.num + b.num, a.den + b.den};
}

std::vector<Fraction> farey_sequence(int n) {
    if (n < 1) throw_validation("BadOrder", "Farey order must be >= 1");
    std::vector<Fraction> out;
    // Standard next-term recurrence from 0/1, 1/n.
    std::int64_t a = 0, b = 1, c = 1, d = n;
    out.push_back({a, b});
    while (c <= n) {
        std::int64_t k = (n + b) / d;
        std::int64_t a2 = k * c - a, b2 = k * d - b;
        out.push_back({c, d});
        a = c;
        b = d;
        c = a2;
        d = b2;
    }
    return out;
}

Fraction farey_flip_map(EdgeClass e) {
    if (e.x == 0 && e.y == 0) throw_validation("ZeroClass", "zero edge class");
    std::int64_t lo = std::min(e.x, e.y), hi = std::max(e.x, e.y);
    return make_fraction(lo, hi);
}

EdgeClass inverse_farey_flip(Fraction f, EdgeClass context) {
    // f = p/q with p <= q; orient into the regime of the context class.
    if (context.x >= context.y) return EdgeClass{f.den, f.num, context.sector};
    return EdgeClass{f.num, f.den, context.sector};
}

std::string FareyPlan::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < fractions.size(); ++i) {
        if (i) s += ", ";
        s += fractions[i].str();
    }
    s += "}";
    return s;
}

FareyPlan farey_plan(EdgeClass e) {
    FareyPlan plan;
    if (e.is_unit()) return plan;
    const Fraction f = farey_flip_map(e);

    // X holds the known stretch of the Farey sequence around the walk.
    std::vector<Fraction> x = {{0, 1}, {1, 1}};
    std::size_t pos = 1;  // index of d in x
    Fraction d{1, 1};
    for (;;) {
        plan.fractions.push_back(d);
        if (d == f) break;
        if (frac_less(d, f)) {
            d = mediant(d, x[pos + 1]);
            x.insert(x.begin() + static_cast<std::ptrdiff_t>(pos) + 1, d);
            pos = pos + 1;
        } else {
            d = mediant(d, x[pos - 1]);
            x.insert(x.begin() + static_cast<std::ptrdiff_t>(pos), d);
            // pos now points at the new mediant
        }
    }
    return plan;
}

NeighborClasses farey_neighbor_classes(EdgeClass e) {
    if (e.is_unit()) {
        throw_validation("UnitEdge", "unit edge classes have no Farey parallelogram");
    }
    if (e.x == 1 && e.y == 1) {
        return {EdgeClass{1, 0, e.sector}, EdgeClass{0, 1, e.sector}};
    }
    FareyPlan plan = farey_plan(e);
    const Fraction prev = plan.fractions[plan.fractions.size() - 2];
    EdgeClass longer = inverse_farey_flip(prev, e);
    EdgeClass shorter{e.x - longer.x, e.y - longer.y, e.sector};
    if (shorter.x < 0 || shorter.y < 0 || gcd64(shorter.x, shorter.y) != 1) {
        throw_internal("farey_neighbor_classes: malformed shorter neighbor");
    }
    return {longer, shorter};
}

FareyParallelogram farey_parallelogram(const EdgeInstance& e) {
    EdgeClass cls = e.edge_class();
    NeighborClasses nb = farey_neighbor_classes(cls);

    // Map class coordinates back onto e's actual direction.
    LatticeVector canon = class_vector(cls);
    std::int64_t sign = (canon == e.vec) ? 1 : -1;
    LatticeVector b = rot60_pow({nb.longer.x, nb.longer.y}, cls.sector) * sign;
    LatticeVector s = e.vec - b;

    FareyParallelogram out;
    out.edge = e;
    out.boundary_long = EdgeInstance(e.origin, b);
    out.boundary_short = EdgeInstance(e.origin, s);
    out.short_diagonal = EdgeInstance(e.origin + s, b - s);

    // Counterclockwise ring: put whichever side vector is clockwise of e first.
    LatticeVector first = (cross(b, e.vec) > 0) ? b : s;
    LatticeVector second = e.vec - first;
    out.vertices = {e.origin, e.origin + first, e.origin + e.vec, e.origin + second};
    return out;
}

}  // namespace fareyflip
