#include "fareyflip/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <map>
#include <string>
#include <unordered_map>

namespace fareyflip {

std::int64_t oracle_point_guard() {
    if (const char* env = std::getenv("FAREY_FLIP_GUARD")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && v > 0) return v;
    }
    return 14;
}

namespace {

std::string state_key(const std::set<Segment>& edges) {
    std::string key;
    key.reserve(edges.size() * 32);
    for (const Segment& s : edges) {
        for (std::int64_t v : {s.p.a, s.p.b, s.q.a, s.q.b}) {
            key.append(reinterpret_cast<const char*>(&v), sizeof(v));
        }
    }
    return key;
}

struct Enumerator {
    const Polygon& poly;
    std::vector<Segment> cands;
    std::map<Segment, int> cand_id;
    std::vector<std::vector<char>> crosses;
    std::vector<char> active;
    std::vector<int> active_ids;
    // claimed[i][0]: face on the left of (p->q) exists or is not needed;
    // claimed[i][1]: same for (q->p).
    std::vector<std::array<char, 2>> claimed;
    std::vector<Triangulation>* out;

    explicit Enumerator(const Polygon& p, std::vector<Triangulation>* o) : poly(p), out(o) {
        const auto& pts = poly.point_set();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                LatticeVector d = pts[j] - pts[i];
                if (gcd64(d.a, d.b) != 1) continue;
                Segment s(pts[i], pts[j]);
                if (!poly.contains_segment(s)) continue;
                cands.push_back(s);
            }
        }
        std::sort(cands.begin(), cands.end());
        for (std::size_t i = 0; i < cands.size(); ++i) cand_id[cands[i]] = static_cast<int>(i);
        crosses.assign(cands.size(), std::vector<char>(cands.size(), 0));
        for (std::size_t i = 0; i < cands.size(); ++i) {
            for (std::size_t j = i + 1; j < cands.size(); ++j) {
                SegmentRelation rel = segments_intersect(cands[i], cands[j]);
                bool bad = rel == SegmentRelation::Crossing ||
                           rel == SegmentRelation::CollinearOverlap;
                crosses[i][j] = crosses[j][i] = bad ? 1 : 0;
            }
        }
        active.assign(cands.size(), 0);
        claimed.assign(cands.size(), {0, 0});
    }

    bool can_activate(int id) const {
        for (int a : active_ids) {
            if (crosses[static_cast<std::size_t>(id)][static_cast<std::size_t>(a)]) return false;
        }
        return true;
    }

    void activate(int id) {
        active[static_cast<std::size_t>(id)] = 1;
        active_ids.push_back(id);
    }

    void deactivate(int id) {
        active[static_cast<std::size_t>(id)] = 0;
        active_ids.pop_back();
    }

    // claim slot for the face on the left of direction from -> to.
    int slot(const Segment& s, LatticePoint from) const { return s.p == from ? 0 : 1; }

    void search() {
        // Smallest active candidate with an unclaimed slot.
        int pick = -1, pick_slot = -1;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            if (!active[i]) continue;
            if (!claimed[i][0]) {
                pick = static_cast<int>(i);
                pick_slot = 0;
                break;
            }
            if (!claimed[i][1]) {
                pick = static_cast<int>(i);
                pick_slot = 1;
                break;
            }
        }
        if (pick < 0) {
            Triangulation t;
            t.polygon = poly;
            for (int a : active_ids) t.edges.insert(cands[static_cast<std::size_t>(a)]);
            out->push_back(std::move(t));
            return;
        }
        const Segment& s = cands[static_cast<std::size_t>(pick)];
        LatticePoint from = pick_slot == 0 ? s.p : s.q;
        LatticePoint to = pick_slot == 0 ? s.q : s.p;
        for (const LatticePoint& r : poly.point_set()) {
            if (cross(to - from, r - from) != 1) continue;  // primitive left apex
            Segment e1(from, r), e2(to, r);
            auto it1 = cand_id.find(e1);
            auto it2 = cand_id.find(e2);
            if (it1 == cand_id.end() || it2 == cand_id.end()) continue;
            int id1 = it1->second, id2 = it2->second;

            bool add1 = !active[static_cast<std::size_t>(id1)];
            if (add1 && !can_activate(id1)) continue;
            if (add1) activate(id1);
            bool add2 = !active[static_cast<std::size_t>(id2)];
            if (add2 && !can_activate(id2)) {
                if (add1) deactivate(id1);
                continue;
            }
            if (add2) activate(id2);

            // The face claims (from->to), (to->r), (r->from).
            int s1 = slot(e2, to);    // face left of to->r
            int s2 = slot(e1, r);     // face left of r->from
            if (!claimed[static_cast<std::size_t>(id2)][static_cast<std::size_t>(s1)] &&
                !claimed[static_cast<std::size_t>(id1)][static_cast<std::size_t>(s2)]) {
                claimed[static_cast<std::size_t>(pick)][static_cast<std::size_t>(pick_slot)] = 1;
                claimed[static_cast<std::size_t>(id2)][static_cast<std::size_t>(s1)] = 1;
                claimed[static_cast<std::size_t>(id1)][static_cast<std::size_t>(s2)] = 1;
                search();
                claimed[static_cast<std::size_t>(pick)][static_cast<std::size_t>(pick_slot)] = 0;
                claimed[static_cast<std::size_t>(id2)][static_cast<std::size_t>(s1)] = 0;
                claimed[static_cast<std::size_t>(id1)][static_cast<std::size_t>(s2)] = 0;
            }
            if (add2) deactivate(id2);
            if (add1) deactivate(id1);
        }
    }
};

}  // namespace

std::vector<Triangulation> enumerate_triangulations(const Polygon& poly,
                                                    const std::vector<Segment>& constraints) {
    if (static_cast<std::int64_t>(poly.point_set().size()) > oracle_point_guard()) {
        throw_too_large("point-set exceeds the oracle guard (" +
                        std::to_string(poly.point_set().size()) + " points)");
    }
    std::vector<Triangulation> out;
    Enumerator en(poly, &out);

    // Pre-claim the exterior side of each boundary segment and activate it.
    const auto& ring = poly.ring();
    for (std::size_t i = 0; i < ring.size(); ++i) {
        LatticePoint a = ring[i], b = ring[(i + 1) % ring.size()];
        Segment s(a, b);
        auto it = en.cand_id.find(s);
        if (it == en.cand_id.end()) throw_internal("boundary segment is not a candidate");
        // Interior is left of a->b; the other direction needs no face.
        int exterior_slot = en.slot(s, b);
        en.claimed[static_cast<std::size_t>(it->second)][static_cast<std::size_t>(exterior_slot)] = 1;
        if (!en.active[static_cast<std::size_t>(it->second)]) en.activate(it->second);
    }
    for (const Segment& c : constraints) {
        auto it = en.cand_id.find(c);
        if (it == en.cand_id.end()) {
            throw_validation("ConstraintOutsidePolygon",
                             "constraint segment is not available inside the polygon");
        }
        if (!en.active[static_cast<std::size_t>(it->second)]) {
            if (!en.can_activate(it->second)) {
                throw_validation("IntersectingConstraints", "constraints cross each other");
            }
            en.activate(it->second);
        }
    }
    en.search();
    return out;
}

namespace {

struct NeighborMove {
    Triangulation state;
    FlipMove move;
};

std::vector<NeighborMove> flip_neighbors(const Triangulation& t) {
    std::vector<NeighborMove> out;
    auto boundary = t.polygon.boundary_segments();
    std::set<Segment> bnd(boundary.begin(), boundary.end());
    for (const Segment& e : t.edges) {
        if (bnd.count(e)) continue;
        Triangulation next = [&]() -> Triangulation {
            try {
                return apply_flip(t, e);
            } catch (const Error&) {
                return Triangulation{};
            }
        }();
        if (next.edges.empty()) continue;
        Segment created = [&] {
            for (const Segment& g : next.edges) {
                if (!t.has_edge(g)) return g;
            }
            throw_internal("flip created nothing");
        }();
        QuadKey quad = {e.p, e.q, created.p, created.q};
        std::sort(quad.begin(), quad.end());
        out.push_back({std::move(next), FlipMove{quad, e, created}});
    }
    return out;
}

}  // namespace

int FlipGraph::find(const Triangulation& t) const {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i].edges == t.edges) return static_cast<int>(i);
    }
    return -1;
}

bool FlipGraph::connected() const {
    if (vertices.empty()) return true;
    std::vector<char> seen(vertices.size(), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    std::size_t visited = 0;
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        ++visited;
        for (int nb : adjacency[static_cast<std::size_t>(cur)]) {
            if (!seen[static_cast<std::size_t>(nb)]) {
                seen[static_cast<std::size_t>(nb)] = 1;
                stack.push_back(nb);
            }
        }
    }
    return visited == vertices.size();
}

FlipGraph build_flip_graph(const Polygon& poly, const std::vector<Segment>& constraints) {
    FlipGraph g;
    g.vertices = enumerate_triangulations(poly, constraints);
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        index[state_key(g.vertices[i].edges)] = static_cast<int>(i);
    }
    g.adjacency.assign(g.vertices.size(), {});
    std::set<Segment> cset(constraints.begin(), constraints.end());
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        for (const NeighborMove& nb : flip_neighbors(g.vertices[i])) {
            if (cset.count(nb.move.removed)) continue;  // constrained edge stays
            auto it = index.find(state_key(nb.state.edges));
            if (it == index.end()) throw_internal("flip neighbor missing from enumeration");
            g.adjacency[i].push_back(it->second);
        }
    }
    return g;
}

BfsResult flip_graph_bfs(const Triangulation& start,
                         const std::function<bool(const Triangulation&)>& goal,
                         std::uint64_t path_cap) {
    if (static_cast<std::int64_t>(start.polygon.point_set().size()) > oracle_point_guard()) {
        throw_too_large("point-set exceeds the oracle guard");
    }
    struct Node {
        Triangulation state;
        int dist;
        std::vector<std::pair<int, FlipMove>> preds;  // BFS-DAG predecessors
    };
    BfsResult res;
    if (goal(start)) {
        res.reachable = true;
        res.distance = 0;
        res.shortest_paths = 1;
        res.multisets.insert({});
        res.goal_states.push_back(start);
        return res;
    }

    std::vector<Node> nodes;
    std::unordered_map<std::string, int> index;

    nodes.push_back({start, 0, {}});
    index[state_key(start.edges)] = 0;

    int goal_dist = -1;
    std::deque<int> queue = {0};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        int dist = nodes[static_cast<std::size_t>(cur)].dist;
        if (goal_dist >= 0 && dist >= goal_dist) break;  // deeper levels are irrelevant
        for (const NeighborMove& nb : flip_neighbors(nodes[static_cast<std::size_t>(cur)].state)) {
            std::string key = state_key(nb.state.edges);
            auto it = index.find(key);
            if (it == index.end()) {
                int id = static_cast<int>(nodes.size());
                nodes.push_back({nb.state, dist + 1, {{cur, nb.move}}});
                index.emplace(std::move(key), id);
                queue.push_back(id);
                if (goal_dist < 0 && goal(nb.state)) goal_dist = dist + 1;
            } else {
                Node& n = nodes[static_cast<std::size_t>(it->second)];
                if (n.dist == dist + 1) n.preds.push_back({cur, nb.move});
            }
        }
    }
    if (goal_dist < 0) return res;

    res.reachable = true;
    res.distance = goal_dist;

    // Collect all goal states at the minimum distance, then enumerate the
    // shortest paths backwards.
    std::vector<int> goals;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].dist == goal_dist && goal(nodes[i].state)) {
            goals.push_back(static_cast<int>(i));
            res.goal_states.push_back(nodes[i].state);
        }
    }
    FlipMultiset current;
    std::uint64_t count = 0;
    bool exact = true;
    std::function<void(int)> walk = [&](int node) {
        if (count >= path_cap) {
            exact = false;
            return;
        }
        if (node == 0) {
            ++count;
            FlipMultiset sorted = current;
            std::sort(sorted.begin(), sorted.end());
            res.multisets.insert(std::move(sorted));
            return;
        }
        for (const auto& [prev, move] : nodes[static_cast<std::size_t>(node)].preds) {
            current.push_back(move);
            walk(prev);
            current.pop_back();
        }
    };
    for (int g : goals) walk(g);
    res.shortest_paths = count;
    res.paths_exact = exact;
    return res;
}

std::vector<QuadKey> brute_unique_quad(const EdgeInstance& e) {
    std::int64_t sq = squared_length(e.vec);
    std::int64_t guard = 200;
    if (const char* env = std::getenv("FAREY_FLIP_GUARD")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && v > 0) guard = v * v;
    }
    if (sq > guard) throw_too_large("edge too long for brute_unique_quad");

    LatticePoint o = e.origin, h = e.head();
    std::int64_t r = static_cast<std::int64_t>(std::ceil(1.16 * std::sqrt(double(sq)))) + 1;
    std::int64_t alo = std::min(o.a, h.a) - r, ahi = std::max(o.a, h.a) + r;
    std::int64_t blo = std::min(o.b, h.b) - r, bhi = std::max(o.b, h.b) + r;

    auto triangle_empty = [&](LatticePoint p, LatticePoint q, LatticePoint x) {
        std::int64_t talo = std::min({p.a, q.a, x.a}), tahi = std::max({p.a, q.a, x.a});
        std::int64_t tblo = std::min({p.b, q.b, x.b}), tbhi = std::max({p.b, q.b, x.b});
        for (std::int64_t a = talo; a <= tahi; ++a) {
            for (std::int64_t b = tblo; b <= tbhi; ++b) {
                LatticePoint z{a, b};
                int o1 = orientation(p, q, z), o2 = orientation(q, x, z), o3 = orientation(x, p, z);
                if (o1 > 0 && o2 > 0 && o3 > 0) return false;
                if (o1 < 0 && o2 < 0 && o3 < 0) return false;
            }
        }
        return true;
    };

    std::vector<LatticePoint> lefts, rights;
    for (std::int64_t a = alo; a <= ahi; ++a) {
        for (std::int64_t b = blo; b <= bhi; ++b) {
            LatticePoint x{a, b};
            int side = orientation(o, h, x);
            if (side == 0) continue;
            if (!triangle_empty(o, h, x)) continue;
            (side > 0 ? lefts : rights).push_back(x);
        }
    }

    std::vector<QuadKey> out;
    for (const LatticePoint& l : lefts) {
        for (const LatticePoint& rr : rights) {
            LatticeVector d = l - rr;
            if (squared_length(d) >= sq) continue;  // e must be the longer diagonal
            if (gcd64(d.a, d.b) != 1) continue;     // lattice point inside the quad
            // No lattice point may sit anywhere on the quad except its four
            // vertices, or it could not appear in a lattice triangulation.
            auto side_primitive = [](LatticePoint a, LatticePoint b) {
                LatticeVector v = b - a;
                return gcd64(v.a, v.b) == 1;
            };
            if (!side_primitive(o, rr) || !side_primitive(rr, h) || !side_primitive(h, l) ||
                !side_primitive(l, o)) {
                continue;
            }
            // Strict convexity of o, rr, h, l.
            std::array<LatticePoint, 4> quad = {o, rr, h, l};
            bool convex = true;
            for (int i = 0; i < 4 && convex; ++i) {
                if (orientation(quad[static_cast<std::size_t>(i)],
                                quad[static_cast<std::size_t>((i + 1) % 4)],
                                quad[static_cast<std::size_t>((i + 2) % 4)]) <= 0) {
                    convex = false;
                }
            }
            if (!convex) continue;
            std::sort(quad.begin(), quad.end());
            out.push_back(quad);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

MinPairResult brute_min_pair(const std::vector<Segment>& e_set,
                             const std::vector<Segment>& e_set2, const Polygon& poly) {
    std::vector<Triangulation> du = enumerate_triangulations(poly, e_set);
    auto contains_all = [&](const Triangulation& t) {
        for (const Segment& s : e_set2) {
            if (!t.has_edge(s)) return false;
        }
        return true;
    };
    MinPairResult best;
    for (const Triangulation& u : du) {
        BfsResult r = flip_graph_bfs(u, contains_all, 1);
        if (!r.reachable) continue;
        if (best.minimum < 0 || r.distance < best.minimum) {
            best.minimum = r.distance;
            best.witness_u = u;
            best.witness_v = r.goal_states.front();
            if (best.minimum == 0) break;
        }
    }
    return best;
}

}  // namespace fareyflip
