#include "fareyflip/planner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fareyflip {

namespace {

std::set<QuadKey> key_set(const FlipPlan& plan) {
    std::set<QuadKey> out;
    for (const Flip& f : plan.nodes) out.insert(f.key());
    return out;
}

}  // namespace

PlanBetween plan_between(const Triangulation& t1, const Triangulation& t2,
                         const std::vector<Segment>& constraints) {
    if (!(t1.polygon == t2.polygon)) {
        throw_validation("PolygonMismatch", "triangulations must share a polygon");
    }
    for (const Segment& c : constraints) {
        if (!t1.has_edge(c) || !t2.has_edge(c)) {
            throw_validation("ConstraintMismatch",
                             "constraint must be present in both triangulations");
        }
    }

    // Plans from the shared minimum triangulation.  The flips that build the
    // polygon boundary and the shared constraints appear in both plans and
    // cancel in the shared-flip removal, so only the edge descriptions of the
    // two triangulations are needed.
    FlipPlan plan1 = multi_flip_plan(t1.non_unit_edge_instances());
    FlipPlan plan2 = multi_flip_plan(t2.non_unit_edge_instances());
    std::set<QuadKey> keys1 = key_set(plan1);
    std::set<QuadKey> keys2 = key_set(plan2);

    PlanBetween out;
    FlipPlan& merged = out.merged;

    // Reversed side: surviving plan1 flips with inverted arcs.
    std::vector<int> remap1(plan1.size(), -1);
    for (std::size_t i = 0; i < plan1.size(); ++i) {
        if (keys2.count(plan1.nodes[i].key())) continue;  // shared
        remap1[i] = static_cast<int>(merged.nodes.size());
        merged.nodes.push_back(reversed(plan1.nodes[i]));
        merged.children.emplace_back();
        merged.parents.emplace_back();
        merged.node_targets.emplace_back();
        out.reversed_ids.push_back(remap1[i]);
    }
    for (std::size_t p = 0; p < plan1.size(); ++p) {
        if (remap1[p] < 0) continue;
        for (int c : plan1.children[p]) {
            if (remap1[static_cast<std::size_t>(c)] < 0) continue;
            // Original: c before p.  Reversed: undo p before undoing c.
            int rp = remap1[p], rc = remap1[static_cast<std::size_t>(c)];
            merged.children[static_cast<std::size_t>(rc)].push_back(rp);
            merged.parents[static_cast<std::size_t>(rp)].push_back(rc);
        }
    }

    // Forward side: surviving plan2 flips with their arcs.
    int target_base = static_cast<int>(merged.targets.size());
    merged.targets = plan2.targets;
    std::vector<int> remap2(plan2.size(), -1);
    for (std::size_t i = 0; i < plan2.size(); ++i) {
        if (keys1.count(plan2.nodes[i].key())) continue;  // shared
        remap2[i] = static_cast<int>(merged.nodes.size());
        merged.nodes.push_back(plan2.nodes[i]);
        merged.children.emplace_back();
        merged.parents.emplace_back();
        std::vector<int> tags;
        for (int t : plan2.node_targets[i]) tags.push_back(target_base + t);
        merged.node_targets.push_back(std::move(tags));
        out.forward_ids.push_back(remap2[i]);
    }
    for (std::size_t p = 0; p < plan2.size(); ++p) {
        if (remap2[p] < 0) continue;
        for (int c : plan2.children[p]) {
            if (remap2[static_cast<std::size_t>(c)] < 0) continue;
            merged.children[static_cast<std::size_t>(remap2[p])].push_back(remap2[static_cast<std::size_t>(c)]);
            merged.parents[static_cast<std::size_t>(remap2[static_cast<std::size_t>(c)])].push_back(remap2[p]);
        }
    }

    // Cross links: a forward flip cannot run while a crossing longer diagonal
    // of the reversed side still exists, so each forward flip waits for every
    // reversed flip whose longer diagonal crosses the edge it creates.  This
    // covers non-leaf forward flips as well: a conflicting diagonal may
    // survive past the leaf level, and the crossing makes the dependency
    // necessary in any flip path.
    for (int fwd : out.forward_ids) {
        const Segment& h = merged.nodes[static_cast<std::size_t>(fwd)].created;
        for (int rev : out.reversed_ids) {
            ++out.intersection_tests;
            const Segment& longer = merged.nodes[static_cast<std::size_t>(rev)].removed;
            if (segments_cross_properly(longer, h)) {
                merged.children[static_cast<std::size_t>(fwd)].push_back(rev);
                merged.parents[static_cast<std::size_t>(rev)].push_back(fwd);
            }
        }
    }
    return out;
}

namespace {

struct PairContext {
    PlanBetween pb;
    std::set<QuadKey> plan_e_keys;
    std::set<QuadKey> plan_e2_keys;
    std::vector<Segment> created_e;   // edges generated by the plan for e_set
    std::vector<Segment> created_e2;  // edges generated by the plan for e_set2
};

std::vector<EdgeInstance> non_unit_instances(const std::vector<EdgeInstance>& edges) {
    std::vector<EdgeInstance> out;
    for (const EdgeInstance& e : edges) {
        if (!e.edge_class().is_unit()) out.push_back(e);
    }
    return out;
}

PairContext build_pair_context(const Triangulation& u, const Triangulation& v,
                               const std::vector<EdgeInstance>& e_set,
                               const std::vector<EdgeInstance>& e_set2) {
    for (const EdgeInstance& e : e_set) {
        if (!u.has_edge(Segment(e))) {
            throw_validation("ConstraintNotPresent", "u does not contain its constraint set");
        }
    }
    for (const EdgeInstance& e : e_set2) {
        if (!v.has_edge(Segment(e))) {
            throw_validation("ConstraintNotPresent", "v does not contain its constraint set");
        }
    }
    PairContext ctx;
    ctx.pb = plan_between(u, v);
    FlipPlan pe = multi_flip_plan(non_unit_instances(e_set));
    FlipPlan pe2 = multi_flip_plan(non_unit_instances(e_set2));
    ctx.plan_e_keys = key_set(pe);
    ctx.plan_e2_keys = key_set(pe2);
    for (const Flip& f : pe.nodes) ctx.created_e.push_back(f.created);
    for (const Flip& f : pe2.nodes) ctx.created_e2.push_back(f.created);
    return ctx;
}

}  // namespace

OptimalPairReport check_optimal_pair(const Triangulation& u, const Triangulation& v,
                                     const std::vector<EdgeInstance>& e_set,
                                     const std::vector<EdgeInstance>& e_set2) {
    PairContext ctx = build_pair_context(u, v, e_set, e_set2);
    OptimalPairReport rep;

    auto check_side = [&](const std::vector<int>& ids, int side, const std::set<QuadKey>& own_keys,
                          const std::vector<Segment>& other_created) {
        for (int id : ids) {
            const Flip& node = ctx.pb.merged.nodes[static_cast<std::size_t>(id)];
            // The generated edge in the forward sense (reversed flips store it
            // as `removed`).
            Segment generated =
                node.direction == FlipDirection::Reversed ? node.removed : node.created;
            Flip fwd = node.direction == FlipDirection::Reversed ? reversed(node) : node;
            if (!own_keys.count(node.key())) {
                rep.optimal = false;
                rep.violations.push_back(
                    {OptimalPairViolation::Kind::FlipOutsideConstraintPlan, side, fwd});
                continue;
            }
            bool crossed = false;
            for (const Segment& g : other_created) {
                if (segments_cross_properly(generated, g)) {
                    crossed = true;
                    break;
                }
            }
            if (!crossed) {
                rep.optimal = false;
                rep.violations.push_back(
                    {OptimalPairViolation::Kind::UncrossedGeneratedEdge, side, fwd});
            }
        }
    };
    check_side(ctx.pb.reversed_ids, 1, ctx.plan_e_keys, ctx.created_e2);
    check_side(ctx.pb.forward_ids, 2, ctx.plan_e2_keys, ctx.created_e);
    return rep;
}

namespace {

bool segment_in_instances(const std::vector<EdgeInstance>& edges, const Segment& s) {
    for (const EdgeInstance& e : edges) {
        if (Segment(e) == s) return true;
    }
    return false;
}

// Try one shrinking move; returns true when a flip was applied.
bool optimize_step(Triangulation& u, Triangulation& v, const PlanBetween& pb,
                   const std::vector<EdgeInstance>& e_set,
                   const std::vector<EdgeInstance>& e_set2) {
    const FlipPlan& m = pb.merged;
    auto try_reverse_on = [&](Triangulation& t, int id, const std::vector<EdgeInstance>& keep) {
        const Flip& node = m.nodes[static_cast<std::size_t>(id)];
        Segment longer = node.direction == FlipDirection::Reversed ? node.removed : node.created;
        Segment shorter = node.direction == FlipDirection::Reversed ? node.created : node.removed;
        if (segment_in_instances(keep, longer)) return false;
        if (!t.has_edge(longer)) return false;
        try {
            Triangulation next = apply_flip(t, longer);
            if (!next.has_edge(shorter)) return false;
            t = std::move(next);
            return true;
        } catch (const Error&) {
            return false;
        }
    };
    auto try_forward_on = [&](Triangulation& t, int id, const std::vector<EdgeInstance>& keep) {
        const Flip& node = m.nodes[static_cast<std::size_t>(id)];
        Segment longer = node.direction == FlipDirection::Reversed ? node.removed : node.created;
        Segment shorter = node.direction == FlipDirection::Reversed ? node.created : node.removed;
        if (segment_in_instances(keep, shorter)) return false;
        if (!t.has_edge(shorter) || t.has_edge(longer)) return false;
        try {
            Triangulation next = apply_flip(t, shorter);
            if (!next.has_edge(longer)) return false;
            t = std::move(next);
            return true;
        } catch (const Error&) {
            return false;
        }
    };

    // (a) undo a maximal surplus flip of u; (b) same for v.
    for (int id : pb.reversed_ids) {
        if (!m.children[static_cast<std::size_t>(id)].empty()) continue;  // executes later
        if (try_reverse_on(u, id, e_set)) return true;
    }
    for (int id : pb.forward_ids) {
        if (!m.parents[static_cast<std::size_t>(id)].empty()) continue;  // maximal in pi2
        if (try_reverse_on(v, id, e_set2)) return true;
    }
    // (c) perform a u-side flip in v; (d) perform a v-side flip in u.
    for (int id : pb.reversed_ids) {
        if (try_forward_on(v, id, e_set2)) return true;
    }
    for (int id : pb.forward_ids) {
        if (try_forward_on(u, id, e_set)) return true;
    }
    return false;
}

}  // namespace

std::pair<Triangulation, Triangulation> optimize_pair(const Triangulation& u,
                                                      const Triangulation& v,
                                                      const std::vector<EdgeInstance>& e_set,
                                                      const std::vector<EdgeInstance>& e_set2) {
    Triangulation cu = u, cv = v;
    std::size_t budget = plan_between(cu, cv).size() + 1;
    for (std::size_t round = 0; round <= budget; ++round) {
        OptimalPairReport rep = check_optimal_pair(cu, cv, e_set, e_set2);
        if (rep.optimal) return {cu, cv};
        PlanBetween pb = plan_between(cu, cv);
        std::size_t before = pb.size();
        if (!optimize_step(cu, cv, pb, e_set, e_set2)) {
            throw_internal("optimize_pair: stuck before reaching an optimal pair");
        }
        std::size_t after = plan_between(cu, cv).size();
        if (after >= before) {
            throw_internal("optimize_pair: step did not shrink the plan");
        }
    }
    throw_internal("optimize_pair: exceeded its shrink budget");
}

}  // namespace fareyflip
