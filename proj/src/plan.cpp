#include "fareyflip/plan.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_map>

namespace fareyflip {

QuadKey Flip::key() const {
    QuadKey k = quad;
    std::sort(k.begin(), k.end());
    return k;
}

Flip forward_flip(const FareyParallelogram& p) {
    Flip f;
    f.quad = p.vertices;
    f.removed = p.short_diagonal_segment();
    f.created = p.long_diagonal_segment();
    f.direction = FlipDirection::Forward;
    return f;
}

Flip reversed(const Flip& f) {
    Flip r = f;
    std::swap(r.removed, r.created);
    r.direction =
        f.direction == FlipDirection::Forward ? FlipDirection::Reversed : FlipDirection::Forward;
    return r;
}

int FlipPlan::find(const QuadKey& key) const {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].key() == key) return static_cast<int>(i);
    }
    return -1;
}

bool FlipPlan::contains(const QuadKey& key) const { return find(key) >= 0; }

std::vector<int> FlipPlan::maximal() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (parents[i].empty()) out.push_back(static_cast<int>(i));
    }
    return out;
}

std::vector<int> FlipPlan::minimal() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (children[i].empty()) out.push_back(static_cast<int>(i));
    }
    return out;
}

std::vector<int> FlipPlan::descendants(int node) const {
    std::vector<int> out;
    std::vector<char> seen(nodes.size(), 0);
    std::vector<int> stack = {node};
    seen[static_cast<std::size_t>(node)] = 1;
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        out.push_back(cur);
        for (int c : children[static_cast<std::size_t>(cur)]) {
            if (!seen[static_cast<std::size_t>(c)]) {
                seen[static_cast<std::size_t>(c)] = 1;
                stack.push_back(c);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::map<QuadKey, int> FlipPlan::build_index() const {
    std::map<QuadKey, int> idx;
    for (std::size_t i = 0; i < nodes.size(); ++i) idx[nodes[i].key()] = static_cast<int>(i);
    return idx;
}

std::vector<int> FlipPlan::default_order() const {
    // Kahn with a priority queue: reversed flips preferred, then quad key.
    const std::size_t n = nodes.size();
    std::vector<int> pending(n, 0);
    for (std::size_t i = 0; i < n; ++i) pending[i] = static_cast<int>(children[i].size());

    auto rank = [&](int i) {
        return std::make_pair(nodes[static_cast<std::size_t>(i)].direction == FlipDirection::Reversed ? 0 : 1,
                              nodes[static_cast<std::size_t>(i)].key());
    };
    auto cmp = [&](int a, int b) { return rank(a) > rank(b); };
    std::priority_queue<int, std::vector<int>, decltype(cmp)> ready(cmp);
    for (std::size_t i = 0; i < n; ++i) {
        if (pending[i] == 0) ready.push(static_cast<int>(i));
    }
    std::vector<int> order;
    order.reserve(n);
    while (!ready.empty()) {
        int cur = ready.top();
        ready.pop();
        order.push_back(cur);
        for (int p : parents[static_cast<std::size_t>(cur)]) {
            if (--pending[static_cast<std::size_t>(p)] == 0) ready.push(p);
        }
    }
    if (order.size() != n) throw_internal("default_order: plan DAG has a cycle");
    return order;
}

namespace {

struct PlanBuilder {
    FlipPlan plan;
    std::map<QuadKey, int> index;

    int add_edge_plan(const EdgeInstance& e, int target_idx) {
        if (e.edge_class().is_unit()) return -1;
        FareyParallelogram p = farey_parallelogram(e);
        Flip flip = forward_flip(p);
        QuadKey key = flip.key();
        if (auto it = index.find(key); it != index.end()) {
            tag_subtree(it->second, target_idx);
            return it->second;
        }
        int id = static_cast<int>(plan.nodes.size());
        plan.nodes.push_back(flip);
        plan.children.emplace_back();
        plan.parents.emplace_back();
        plan.node_targets.push_back({target_idx});
        index.emplace(key, id);

        if (!(p.edge.edge_class().x == 1 && p.edge.edge_class().y == 1)) {
            EdgeInstance child1(e.origin, p.boundary_long.vec);
            EdgeInstance child2(e.origin + p.boundary_short.vec, p.boundary_long.vec);
            for (const EdgeInstance& child : {child1, child2}) {
                int cid = add_edge_plan(child, target_idx);
                if (cid >= 0) link(cid, id);
            }
        }
        return id;
    }

    void link(int child, int parent) {
        auto& cs = plan.children[static_cast<std::size_t>(parent)];
        if (std::find(cs.begin(), cs.end(), child) == cs.end()) {
            cs.push_back(child);
            plan.parents[static_cast<std::size_t>(child)].push_back(parent);
        }
    }

    void tag_subtree(int node, int target_idx) {
        auto& tags = plan.node_targets[static_cast<std::size_t>(node)];
        auto pos = std::lower_bound(tags.begin(), tags.end(), target_idx);
        if (pos != tags.end() && *pos == target_idx) return;
        tags.insert(pos, target_idx);
        for (int c : plan.children[static_cast<std::size_t>(node)]) tag_subtree(c, target_idx);
    }
};

}  // namespace

FlipPlan flip_plan(const EdgeInstance& e) {
    PlanBuilder b;
    b.plan.targets.push_back(e);
    b.add_edge_plan(e, 0);
    return b.plan;
}

FlipPlan multi_flip_plan(const std::vector<EdgeInstance>& edges) {
    // Deduplicate identical undirected edges.
    std::vector<EdgeInstance> uniq;
    std::set<Segment> seen;
    for (const EdgeInstance& e : edges) {
        if (seen.insert(Segment(e)).second) uniq.push_back(e);
    }
    for (std::size_t i = 0; i < uniq.size(); ++i) {
        for (std::size_t j = i + 1; j < uniq.size(); ++j) {
            SegmentRelation rel = segments_intersect(Segment(uniq[i]), Segment(uniq[j]));
            if (rel == SegmentRelation::Crossing || rel == SegmentRelation::CollinearOverlap) {
                throw_validation("IntersectingTargets",
                                 "target edges may meet only at lattice points");
            }
        }
    }
    PlanBuilder b;
    for (const EdgeInstance& e : uniq) {
        int t = static_cast<int>(b.plan.targets.size());
        b.plan.targets.push_back(e);
        b.add_edge_plan(e, t);
    }
    return b.plan;
}

OrderingReport validate_linear_ordering(const FlipPlan& plan, const std::vector<int>& order) {
    OrderingReport rep;
    const std::size_t n = plan.size();
    if (order.size() != n) {
        rep.ok = false;
        rep.message = "order has " + std::to_string(order.size()) + " entries, plan has " +
                      std::to_string(n);
        return rep;
    }
    std::vector<char> placed(n, 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int cur = order[i];
        if (cur < 0 || static_cast<std::size_t>(cur) >= n) {
            rep.ok = false;
            rep.violation_index = static_cast<int>(i);
            rep.message = "index out of range";
            return rep;
        }
        if (placed[static_cast<std::size_t>(cur)]) {
            rep.ok = false;
            rep.violation_index = static_cast<int>(i);
            rep.message = "flip " + std::to_string(cur) + " appears twice";
            return rep;
        }
        for (int c : plan.children[static_cast<std::size_t>(cur)]) {
            if (!placed[static_cast<std::size_t>(c)]) {
                rep.ok = false;
                rep.violation_index = static_cast<int>(i);
                rep.message = "flip " + std::to_string(cur) + " before its child flip " +
                              std::to_string(c);
                return rep;
            }
        }
        placed[static_cast<std::size_t>(cur)] = 1;
    }
    return rep;
}

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
    std::uint64_t s = a + b;
    return s > cap || s < a ? cap : s;
}

// Memoized downset counting over a bitmask of placed flips, saturated at cap.
std::uint64_t count_ext_masked(const FlipPlan& plan, std::uint64_t mask, std::uint64_t full,
                               std::uint64_t cap,
                               std::unordered_map<std::uint64_t, std::uint64_t>& memo) {
    if (mask == full) return 1;
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < plan.size(); ++i) {
        std::uint64_t bit = std::uint64_t{1} << i;
        if (mask & bit) continue;
        bool ready = true;
        for (int c : plan.children[i]) {
            if (!(mask & (std::uint64_t{1} << c))) {
                ready = false;
                break;
            }
        }
        if (ready) total = sat_add(total, count_ext_masked(plan, mask | bit, full, cap, memo), cap);
    }
    memo[mask] = total;
    return total;
}

// Plain DFS enumeration with early stop; used beyond 64 nodes.
void count_ext_dfs(const FlipPlan& plan, std::vector<char>& placed, std::size_t done,
                   std::uint64_t cap, std::uint64_t& count) {
    if (count >= cap) return;
    if (done == plan.size()) {
        ++count;
        return;
    }
    for (std::size_t i = 0; i < plan.size(); ++i) {
        if (placed[i]) continue;
        bool ready = true;
        for (int c : plan.children[i]) {
            if (!placed[static_cast<std::size_t>(c)]) {
                ready = false;
                break;
            }
        }
        if (!ready) continue;
        placed[i] = 1;
        count_ext_dfs(plan, placed, done + 1, cap, count);
        placed[i] = 0;
        if (count >= cap) return;
    }
}

}  // namespace

ExtensionCount count_linear_extensions(const FlipPlan& plan, std::uint64_t limit) {
    if (limit == 0) return {0, false};
    if (plan.empty()) return {1, true};
    std::uint64_t value = 0;
    if (plan.size() <= 64) {
        std::unordered_map<std::uint64_t, std::uint64_t> memo;
        std::uint64_t full = plan.size() == 64 ? ~std::uint64_t{0}
                                               : (std::uint64_t{1} << plan.size()) - 1;
        value = count_ext_masked(plan, 0, full, limit, memo);
    } else {
        std::vector<char> placed(plan.size(), 0);
        count_ext_dfs(plan, placed, 0, limit, value);
    }
    if (value >= limit) return {limit, false};
    return {value, true};
}

std::array<LatticePoint, 4> bounding_parallelogram(const EdgeInstance& e) {
    EdgeClass cls = e.edge_class();
    if (cls.is_unit()) {
        throw_validation("UnitEdge", "unit edges have a degenerate bounding parallelogram");
    }
    auto units = sector_units(cls.sector);
    std::int64_t sign = (class_vector(cls) == e.vec) ? 1 : -1;
    LatticeVector side1 = units[0] * (cls.x * sign);
    LatticeVector side2 = units[1] * (cls.y * sign);
    LatticeVector first = (cross(side1, e.vec) >= 0) ? side1 : side2;
    LatticeVector second = e.vec - first;
    return {e.origin, e.origin + first, e.origin + e.vec, e.origin + second};
}

namespace {

// Closed convex regions given as counterclockwise vertex rings (a 2-point
// "ring" denotes a segment).  Two such regions intersect iff some pair of
// boundary segments meets or a vertex of one lies inside the other.
bool point_in_convex_closed(LatticePoint x, const std::vector<LatticePoint>& ring) {
    if (ring.size() == 2) return point_on_segment(x, Segment(ring[0], ring[1]));
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (orientation(ring[i], ring[(i + 1) % n], x) < 0) return false;
    }
    return true;
}

bool convex_closed_disjoint(const std::vector<LatticePoint>& a,
                            const std::vector<LatticePoint>& b) {
    auto sides = [](const std::vector<LatticePoint>& ring) {
        std::vector<Segment> out;
        if (ring.size() == 2) {
            out.emplace_back(ring[0], ring[1]);
            return out;
        }
        for (std::size_t i = 0; i < ring.size(); ++i) {
            out.emplace_back(ring[i], ring[(i + 1) % ring.size()]);
        }
        return out;
    };
    for (const Segment& sa : sides(a)) {
        for (const Segment& sb : sides(b)) {
            if (segments_intersect(sa, sb) != SegmentRelation::Disjoint) return false;
        }
    }
    for (const LatticePoint& x : a) {
        if (point_in_convex_closed(x, b)) return false;
    }
    for (const LatticePoint& x : b) {
        if (point_in_convex_closed(x, a)) return false;
    }
    return true;
}

}  // namespace

bool geometrically_separated(const EdgeInstance& e1, const EdgeInstance& e2) {
    auto region = [](const EdgeInstance& e) -> std::vector<LatticePoint> {
        if (e.edge_class().is_unit()) return {e.origin, e.head()};
        auto q = bounding_parallelogram(e);
        return {q.begin(), q.end()};
    };
    return convex_closed_disjoint(region(e1), region(e2));
}

FlipQuality classify_flip(const Flip& f) {
    return f.removed.squared() == 1 ? FlipQuality::Good : FlipQuality::Bad;
}

std::vector<int> node_heights(const FlipPlan& plan) {
    std::vector<int> h(plan.size(), 0);
    for (int i : plan.default_order()) {
        int best = 0;
        for (int c : plan.children[static_cast<std::size_t>(i)]) {
            best = std::max(best, h[static_cast<std::size_t>(c)]);
        }
        h[static_cast<std::size_t>(i)] = best + 1;
    }
    return h;
}

int plan_height(const FlipPlan& plan) {
    if (plan.empty()) return 0;
    std::vector<int> h = node_heights(plan);
    return *std::max_element(h.begin(), h.end());
}

FlipPlan sequential_compose(const std::vector<FlipPlan>& plans) {
    FlipPlan out;
    std::map<QuadKey, int> index;
    std::vector<int> prev_roots;
    for (const FlipPlan& plan : plans) {
        std::vector<int> remap(plan.size(), -1);
        std::vector<int> fresh;
        for (std::size_t i = 0; i < plan.size(); ++i) {
            QuadKey key = plan.nodes[i].key();
            auto it = index.find(key);
            if (it != index.end()) {
                remap[i] = it->second;
                continue;
            }
            int id = static_cast<int>(out.nodes.size());
            out.nodes.push_back(plan.nodes[i]);
            out.children.emplace_back();
            out.parents.emplace_back();
            out.node_targets.emplace_back();
            index.emplace(key, id);
            remap[i] = id;
            fresh.push_back(static_cast<int>(i));
        }
        int target_base = static_cast<int>(out.targets.size());
        for (const EdgeInstance& t : plan.targets) out.targets.push_back(t);
        for (std::size_t i = 0; i < plan.size(); ++i) {
            for (int t : plan.node_targets[i]) {
                auto& tags = out.node_targets[static_cast<std::size_t>(remap[i])];
                int tt = target_base + t;
                if (std::find(tags.begin(), tags.end(), tt) == tags.end()) tags.push_back(tt);
            }
            for (int c : plan.children[i]) {
                int pc = remap[static_cast<std::size_t>(c)];
                int pp = remap[i];
                auto& cs = out.children[static_cast<std::size_t>(pp)];
                if (std::find(cs.begin(), cs.end(), pc) == cs.end()) {
                    cs.push_back(pc);
                    out.parents[static_cast<std::size_t>(pc)].push_back(pp);
                }
            }
        }
        // Layering: every leaf of this plan waits for every root of the
        // previous one.
        if (!prev_roots.empty()) {
            for (std::size_t i = 0; i < plan.size(); ++i) {
                if (!plan.children[i].empty() || remap[i] < 0) continue;
                if (std::find(fresh.begin(), fresh.end(), static_cast<int>(i)) == fresh.end()) {
                    continue;  // merged into an earlier layer
                }
                int leaf = remap[i];
                for (int r : prev_roots) {
                    auto& cs = out.children[static_cast<std::size_t>(leaf)];
                    if (std::find(cs.begin(), cs.end(), r) == cs.end()) {
                        cs.push_back(r);
                        out.parents[static_cast<std::size_t>(r)].push_back(leaf);
                    }
                }
            }
        }
        prev_roots.clear();
        for (std::size_t i = 0; i < plan.size(); ++i) {
            if (plan.parents[i].empty()) prev_roots.push_back(remap[i]);
        }
    }
    return out;
}

namespace {

std::string point_str(LatticePoint p) {
    return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
}

}  // namespace

std::string to_dot(const FlipPlan& plan) {
    // Stable node order: sort by (direction, quad key).
    std::vector<int> order(plan.size());
    for (std::size_t i = 0; i < plan.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Flip& fa = plan.nodes[static_cast<std::size_t>(a)];
        const Flip& fb = plan.nodes[static_cast<std::size_t>(b)];
        if (fa.direction != fb.direction) return fa.direction < fb.direction;
        return fa.key() < fb.key();
    });
    std::vector<int> pos(plan.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

    std::string dot = "digraph flip_plan {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Flip& f = plan.nodes[static_cast<std::size_t>(order[i])];
        EdgeClass created = canonical_edge_class(f.created.delta());
        std::string label = "quad";
        for (const auto& v : f.quad) label += " " + point_str(v);
        label += "\\ncreates (" + std::to_string(created.x) + "," + std::to_string(created.y) + ")";
        std::string style = f.direction == FlipDirection::Reversed ? ", style=dashed" : "";
        dot += "  n" + std::to_string(i) + " [label=\"" + label + "\"" + style + "];\n";
    }
    // Arcs child -> parent.
    for (std::size_t p = 0; p < plan.size(); ++p) {
        for (int c : plan.children[p]) {
            dot += "  n" + std::to_string(pos[static_cast<std::size_t>(c)]) + " -> n" +
                   std::to_string(pos[p]) + ";\n";
        }
    }
    dot += "}\n";
    return dot;
}

}  // namespace fareyflip
