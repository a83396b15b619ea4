#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "fareyflip/mintri.hpp"
#include "fareyflip/oracle.hpp"
#include "fareyflip/planner.hpp"

using namespace fareyflip;

TEST_SUITE_BEGIN("planner");

namespace {

Polygon parallelogram(std::int64_t w, std::int64_t h) {
    return Polygon::from_ring({{0, 0}, {w, 0}, {w, h}, {0, h}});
}

EdgeInstance at(std::int64_t x, std::int64_t y, std::int64_t oa = 0, std::int64_t ob = 0) {
    return EdgeInstance({oa, ob}, {x, y});
}

std::vector<int> transitive_children(const FlipPlan& plan, int node) {
    return plan.descendants(node);
}

std::vector<int> random_order(const FlipPlan& plan, std::mt19937& rng) {
    std::vector<int> pending(plan.size(), 0);
    for (std::size_t i = 0; i < plan.size(); ++i) pending[i] = static_cast<int>(plan.children[i].size());
    std::vector<int> ready, order;
    for (std::size_t i = 0; i < plan.size(); ++i) {
        if (pending[i] == 0) ready.push_back(static_cast<int>(i));
    }
    while (!ready.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
        std::size_t j = pick(rng);
        int cur = ready[j];
        ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(j));
        order.push_back(cur);
        for (int p : plan.parents[static_cast<std::size_t>(cur)]) {
            if (--pending[static_cast<std::size_t>(p)] == 0) ready.push_back(p);
        }
    }
    return order;
}

}  // namespace

TEST_CASE("plan between identical triangulations is empty") {
    Polygon region = parallelogram(2, 2);
    Triangulation t = min_triangulation(region, {at(2, 1)});
    PlanBetween pb = plan_between(t, t);
    CHECK(pb.size() == 0);
}

TEST_CASE("plan between rejects mismatched inputs") {
    Triangulation a = min_triangulation(parallelogram(2, 2));
    Triangulation b = min_triangulation(parallelogram(2, 1));
    CHECK_THROWS_AS((void)plan_between(a, b), Error);

    Triangulation c = min_triangulation(parallelogram(2, 2), {at(2, 1)});
    // (2,1)@(0,0) is a constraint of c but not of the equilateral a.
    CHECK_THROWS_AS((void)plan_between(a, c, {Segment({0, 0}, {2, 1})}), Error);
    CHECK(plan_between(a, c).size() == 3);
}

TEST_CASE("plan between executes t1 into t2") {
    Polygon region = parallelogram(3, 2);
    Triangulation t1 = min_triangulation(region, {at(3, 2)});
    Triangulation t2 = min_triangulation(region, {at(1, 2, 1, 0)});
    PlanBetween pb = plan_between(t1, t2);
    CHECK(pb.size() == pb.reversed_ids.size() + pb.forward_ids.size());

    Triangulation done = apply_plan(t1, pb.merged);
    CHECK(done == t2);

    std::mt19937 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        auto order = random_order(pb.merged, rng);
        REQUIRE(validate_linear_ordering(pb.merged, order).ok);
        CHECK(apply_plan(t1, pb.merged, &order) == t2);
    }

    // Symmetry of size.
    CHECK(plan_between(t2, t1).size() == pb.size());
}

TEST_CASE("worked example: commons vanish, cross links order the rest") {
    Polygon region = parallelogram(2, 3);
    Triangulation t1 = min_triangulation(region, {at(2, 3)});
    // (2,1) and (1,1) facing up-left (their sector-1 copies), plus (1,2).
    EdgeInstance red(LatticePoint{1, 0}, LatticeVector{-1, 3});   // (2,1) class, sector 1
    EdgeInstance green(LatticePoint{1, 0}, LatticeVector{1, 1});  // (1,1) class, sector 0
    EdgeInstance common(LatticePoint{1, 1}, LatticeVector{1, 2});
    CHECK(canonical_edge_class(red.vec) == EdgeClass{2, 1, 1});
    Triangulation t2 = min_triangulation(region, {red, green, common});
    REQUIRE(t1.has_edge(Segment(common)));  // shared constraint

    PlanBetween pb = plan_between(t1, t2);
    CHECK(pb.reversed_ids.size() == 4);
    CHECK(pb.forward_ids.size() == 4);

    // The sub-plan of the common edge contributes nothing.
    for (const Flip& f : flip_plan(common).nodes) {
        CHECK(!pb.merged.contains(f.key()));
    }

    // The green flip can run at any time: no cross links.
    int green_id = pb.merged.find(forward_flip(farey_parallelogram(green)).key());
    REQUIRE(green_id >= 0);
    CHECK(pb.merged.children[static_cast<std::size_t>(green_id)].empty());

    // The red portion's root waits (transitively) for every reversed flip.
    int red_id = pb.merged.find(forward_flip(farey_parallelogram(red)).key());
    REQUIRE(red_id >= 0);
    auto deps = transitive_children(pb.merged, red_id);
    for (int rev : pb.reversed_ids) {
        CHECK(std::find(deps.begin(), deps.end(), rev) != deps.end());
    }

    // Plan size equals the flip-graph distance, the shortest paths use one
    // flip multiset (the plan's own), and their count is the number of valid
    // linear orderings of the merged DAG.
    auto res = flip_graph_bfs(t1, [&](const Triangulation& t) { return t == t2; });
    REQUIRE(res.reachable);
    CHECK(res.distance == static_cast<int>(pb.size()));
    REQUIRE(res.multisets.size() == 1);
    FlipMultiset plan_set;
    for (const Flip& f : pb.merged.nodes) plan_set.push_back({f.key(), f.removed, f.created});
    std::sort(plan_set.begin(), plan_set.end());
    CHECK(*res.multisets.begin() == plan_set);

    auto ext = count_linear_extensions(pb.merged, 10000);
    CHECK(ext.exact);
    CHECK(ext.value == res.shortest_paths);

    // Execution reaches t2.
    CHECK(apply_plan(t1, pb.merged) == t2);
}

TEST_CASE("degenerating flips precede generating ones by default") {
    Polygon region = parallelogram(3, 2);
    Triangulation t1 = min_triangulation(region, {at(3, 1)});
    Triangulation t2 = min_triangulation(region, {at(1, 1, 0, 1)});
    PlanBetween pb = plan_between(t1, t2);
    auto order = pb.merged.default_order();
    bool seen_forward = false;
    for (int idx : order) {
        bool fwd = pb.merged.nodes[static_cast<std::size_t>(idx)].direction == FlipDirection::Forward;
        if (fwd) seen_forward = true;
        // No cross link in this instance forces a reversed flip after a
        // forward one; the default order does all reversals first.
        if (!fwd) CHECK(!seen_forward);
    }
    CHECK(apply_plan(t1, pb.merged) == t2);
}

TEST_CASE("intersection test accounting stays within |pi1| x |pi2|") {
    Polygon region = parallelogram(2, 3);
    Triangulation t1 = min_triangulation(region, {at(2, 3)});
    EdgeInstance red(LatticePoint{1, 0}, LatticeVector{-1, 3});
    Triangulation t2 = min_triangulation(region, {red});
    PlanBetween pb = plan_between(t1, t2);
    REQUIRE(!pb.reversed_ids.empty());
    REQUIRE(!pb.forward_ids.empty());
    CHECK(pb.intersection_tests <= pb.reversed_ids.size() * pb.forward_ids.size());
}

TEST_CASE("plan between distances match BFS on all pairs of a small region") {
    Polygon region = parallelogram(2, 1);
    FlipGraph g = build_flip_graph(region);
    REQUIRE(g.connected());
    // Pairwise distances by BFS from each vertex.
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        std::vector<int> dist(g.vertices.size(), -1);
        std::vector<int> queue = {static_cast<int>(i)};
        dist[i] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int cur = queue[qi];
            for (int nb : g.adjacency[static_cast<std::size_t>(cur)]) {
                if (dist[static_cast<std::size_t>(nb)] < 0) {
                    dist[static_cast<std::size_t>(nb)] = dist[static_cast<std::size_t>(cur)] + 1;
                    queue.push_back(nb);
                }
            }
        }
        for (std::size_t j = 0; j < g.vertices.size(); ++j) {
            PlanBetween pb = plan_between(g.vertices[i], g.vertices[j]);
            CHECK(static_cast<int>(pb.size()) == dist[j]);
        }
    }
}

TEST_CASE("every ordering of every plan between 2x2 pairs executes") {
    // Exhaustive at desk scale: all ordered pairs of triangulations, up to
    // 40 enumerated valid orderings per plan, each executed to the target.
    Polygon region = parallelogram(2, 2);
    FlipGraph g = build_flip_graph(region);
    REQUIRE(g.vertices.size() == 64);
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        for (std::size_t j = 0; j < g.vertices.size(); ++j) {
            const Triangulation& a = g.vertices[i];
            const Triangulation& b = g.vertices[j];
            PlanBetween pb = plan_between(a, b);
            int count = 0;
            std::vector<int> prefix;
            std::vector<char> used(pb.merged.size(), 0);
            std::function<bool()> walk = [&]() -> bool {
                if (count >= 40) return true;
                if (prefix.size() == pb.merged.size()) {
                    ++count;
                    return apply_plan(a, pb.merged, &prefix) == b;
                }
                for (std::size_t k = 0; k < pb.merged.size(); ++k) {
                    if (used[k]) continue;
                    bool ready = true;
                    for (int c : pb.merged.children[k]) {
                        if (!used[static_cast<std::size_t>(c)]) {
                            ready = false;
                            break;
                        }
                    }
                    if (!ready) continue;
                    used[k] = 1;
                    prefix.push_back(static_cast<int>(k));
                    bool ok = walk();
                    prefix.pop_back();
                    used[k] = 0;
                    if (!ok) return false;
                    if (count >= 40) return true;
                }
                return true;
            };
            CHECK(walk());
        }
    }
}

TEST_CASE("optimal pair detection and repair") {
    Polygon region = parallelogram(3, 2);
    std::vector<EdgeInstance> e_set = {at(2, 1)};
    Triangulation base = min_triangulation(region, e_set);

    // Identical constrained minimums are already optimal with plan size 0.
    auto rep0 = check_optimal_pair(base, base, e_set, e_set);
    CHECK(rep0.optimal);
    CHECK(plan_between(base, base).size() == 0);

    // Pad u with one flip outside the constraint plan.
    Triangulation padded = apply_flip(base, Segment({1, 1}, {0, 2}));
    auto rep = check_optimal_pair(padded, base, e_set, e_set);
    CHECK(!rep.optimal);
    REQUIRE(!rep.violations.empty());
    bool found_kind_i = false;
    for (const auto& v : rep.violations) {
        if (v.kind == OptimalPairViolation::Kind::FlipOutsideConstraintPlan && v.side == 1) {
            found_kind_i = true;
            CHECK(v.flip.created == Segment({0, 1}, {1, 2}));
        }
    }
    CHECK(found_kind_i);

    auto [bu, bv] = optimize_pair(padded, base, e_set, e_set);
    CHECK(check_optimal_pair(bu, bv, e_set, e_set).optimal);
    CHECK(plan_between(bu, bv).size() == 0);
    CHECK(bu.has_edge(Segment({0, 0}, {2, 1})));

    // Missing constraint is rejected.
    CHECK_THROWS_AS((void)check_optimal_pair(base, base, {at(3, 2)}, e_set), Error);
}

TEST_CASE("optimize pair agrees with the brute-force minimum") {
    Polygon region = parallelogram(2, 2);
    std::vector<EdgeInstance> e1 = {at(2, 1)};
    std::vector<EdgeInstance> e2 = {at(1, 2, 1, 0)};
    REQUIRE(segments_cross_properly(Segment(e1[0]), Segment(e2[0])));

    std::vector<Segment> s1 = {Segment(e1[0])}, s2 = {Segment(e2[0])};
    auto brute = brute_min_pair(s1, s2, region);
    REQUIRE(brute.minimum > 0);

    Triangulation u = min_triangulation(region, e1);
    Triangulation v = min_triangulation(region, e2);
    auto [bu, bv] = optimize_pair(u, v, e1, e2);
    CHECK(check_optimal_pair(bu, bv, e1, e2).optimal);
    CHECK(static_cast<int>(plan_between(bu, bv).size()) == brute.minimum);
    // The brute witness passes the optimality test as well.
    CHECK(check_optimal_pair(brute.witness_u, brute.witness_v, e1, e2).optimal);
}

TEST_CASE("optimize pair on crossing and multi-edge sets in the 3x2 region") {
    Polygon region = parallelogram(3, 2);
    {
        std::vector<EdgeInstance> e1 = {at(3, 1)};
        std::vector<EdgeInstance> e2 = {at(1, 2, 1, 0)};
        REQUIRE(segments_cross_properly(Segment(e1[0]), Segment(e2[0])));
        auto brute = brute_min_pair({Segment(e1[0])}, {Segment(e2[0])}, region);
        auto [bu, bv] = optimize_pair(min_triangulation(region, e1),
                                      min_triangulation(region, e2), e1, e2);
        CHECK(check_optimal_pair(bu, bv, e1, e2).optimal);
        CHECK(static_cast<int>(plan_between(bu, bv).size()) == brute.minimum);
    }
    {
        std::vector<EdgeInstance> e1 = {at(2, 1), at(1, 1, 2, 1)};
        std::vector<EdgeInstance> e2 = {at(-1, 2, 1, 0), at(1, 0, 1, 2)};
        auto brute = brute_min_pair({Segment(e1[0]), Segment(e1[1])},
                                    {Segment(e2[0]), Segment(e2[1])}, region);
        auto [bu, bv] = optimize_pair(min_triangulation(region, e1),
                                      min_triangulation(region, e2), e1, e2);
        CHECK(check_optimal_pair(bu, bv, e1, e2).optimal);
        CHECK(static_cast<int>(plan_between(bu, bv).size()) == brute.minimum);
    }
}

TEST_CASE("shortest-path multisets and counts match the plan on small regions") {
    // For every ordered pair of distinct triangulations: the BFS shortest
    // paths use exactly one flip multiset, it is the plan's flip set, and
    // the number of shortest paths is the plan's linear-extension count.
    for (auto [w, h] : {std::pair<std::int64_t, std::int64_t>{2, 1}, {3, 1}}) {
        Polygon region = parallelogram(w, h);
        FlipGraph g = build_flip_graph(region);
        for (std::size_t i = 0; i < g.vertices.size(); ++i) {
            for (std::size_t j = 0; j < g.vertices.size(); ++j) {
                if (i == j) continue;
                const Triangulation& a = g.vertices[i];
                const Triangulation& b = g.vertices[j];
                auto res = flip_graph_bfs(a, [&](const Triangulation& t) { return t == b; });
                REQUIRE(res.reachable);
                PlanBetween pb = plan_between(a, b);
                REQUIRE(static_cast<int>(pb.size()) == res.distance);
                REQUIRE(res.multisets.size() == 1);
                FlipMultiset plan_set;
                for (const Flip& f : pb.merged.nodes) {
                    plan_set.push_back({f.key(), f.removed, f.created});
                }
                std::sort(plan_set.begin(), plan_set.end());
                CHECK(*res.multisets.begin() == plan_set);
                auto ext = count_linear_extensions(pb.merged, 100000);
                CHECK(ext.exact);
                CHECK(ext.value == res.shortest_paths);
            }
        }
    }
}

TEST_SUITE_END();
