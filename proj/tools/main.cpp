// fareyflip: minimum flip plans for lattice triangulations via Farey
// sequences.  See README.md for the document formats.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <string>

#include "fareyflip/farey.hpp"
#include "fareyflip/io.hpp"
#include "fareyflip/mintri.hpp"
#include "fareyflip/oracle.hpp"
#include "fareyflip/plan.hpp"
#include "fareyflip/planner.hpp"
#include "fareyflip/render.hpp"

using namespace fareyflip;

namespace {

std::pair<std::int64_t, std::int64_t> parse_pair(const std::string& text) {
    std::size_t comma = text.find(',');
    if (comma == std::string::npos) {
        throw_validation("ParseError", "expected \"A,B\", got \"" + text + "\"");
    }
    try {
        std::int64_t a = std::stoll(text.substr(0, comma));
        std::int64_t b = std::stoll(text.substr(comma + 1));
        return {a, b};
    } catch (const std::exception&) {
        throw_validation("ParseError", "expected integers in \"" + text + "\"");
    }
}

EdgeClass parse_class(const std::string& text) {
    auto [x, y] = parse_pair(text);
    if (x < 0 || y < 0 || gcd64(x, y) != 1) {
        throw_validation("ValidationError",
                         "edge class needs nonnegative coprime coordinates, got " + text);
    }
    return EdgeClass{x, y, 0};
}

template <typename T>
T load_as(const std::string& path, const char* what) {
    Document doc = load_document_file(path);
    if (auto* v = std::get_if<T>(&doc)) return std::move(*v);
    throw_validation("ValidationError", std::string(path) + " is not a " + what + " document");
}

void emit(const std::string& path, const std::string& content) {
    if (path == "-" || path.empty()) {
        std::fputs(content.c_str(), stdout);
    } else {
        write_file(path, content);
    }
}

void print_plan_summary(const FlipPlan& plan) {
    int good = 0, bad = 0;
    for (const Flip& f : plan.nodes) {
        (classify_flip(f) == FlipQuality::Good ? good : bad) += 1;
    }
    std::printf("flips: %zu\nheight: %d\ngood: %d\nbad: %d\n", plan.size(), plan_height(plan),
                good, bad);
}

std::vector<Segment> to_segments(const EdgeListDocument& doc) {
    std::vector<Segment> out;
    out.reserve(doc.items.size());
    for (const EdgeInstance& e : doc.items) out.emplace_back(e);
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Minimum flip plans for lattice triangulations"};
    app.require_subcommand(1);

    // farey-plan
    std::string fp_edge;
    auto* fp = app.add_subcommand("farey-plan", "Farey plan of an edge class");
    fp->add_option("edge,--edge", fp_edge, "edge class X,Y")->required();
    fp->callback([&] {
        FareyPlan plan = farey_plan(parse_class(fp_edge));
        std::printf("%s\n", plan.str().c_str());
    });

    // flip-plan
    std::string flp_edge, flp_origin = "0,0", flp_json, flp_dot, flp_svg;
    auto* flp = app.add_subcommand("flip-plan", "minimum flip plan generating an edge");
    flp->add_option("edge,--edge", flp_edge, "edge class X,Y")->required();
    flp->add_option("--origin", flp_origin, "originating point A,B");
    flp->add_option("--json", flp_json, "write plan document (- for stdout)");
    flp->add_option("--dot", flp_dot, "write Graphviz DAG");
    flp->add_option("--svg", flp_svg, "write SVG DAG");
    flp->callback([&] {
        EdgeClass cls = parse_class(flp_edge);
        auto [oa, ob] = parse_pair(flp_origin);
        FlipPlan plan = flip_plan(EdgeInstance({oa, ob}, class_vector(cls)));
        if (!flp_json.empty()) emit(flp_json, save_plan(plan));
        if (!flp_dot.empty()) emit(flp_dot, to_dot(plan));
        if (!flp_svg.empty()) emit(flp_svg, to_svg(plan));
        if (flp_json.empty() && flp_dot.empty() && flp_svg.empty()) print_plan_summary(plan);
    });

    // multi-plan
    std::string mp_edges, mp_json, mp_dot;
    auto* mp = app.add_subcommand("multi-plan", "merged plan for a set of edges");
    mp->add_option("--edges", mp_edges, "edges document")->required();
    mp->add_option("--json", mp_json, "write plan document");
    mp->add_option("--dot", mp_dot, "write Graphviz DAG");
    mp->callback([&] {
        EdgeListDocument doc = load_as<EdgeListDocument>(mp_edges, "edges");
        FlipPlan plan = multi_flip_plan(doc.items);
        if (!mp_json.empty()) emit(mp_json, save_plan(plan));
        if (!mp_dot.empty()) emit(mp_dot, to_dot(plan));
        if (mp_json.empty() && mp_dot.empty()) print_plan_summary(plan);
    });

    // min-tri
    std::string mt_poly, mt_constraints, mt_json, mt_svg;
    auto* mt = app.add_subcommand("min-tri", "minimum triangulation of a polygon");
    mt->add_option("--polygon", mt_poly, "polygon document")->required();
    mt->add_option("--constraints", mt_constraints, "edges document");
    mt->add_option("--json", mt_json, "write triangulation document");
    mt->add_option("--svg", mt_svg, "write SVG rendering");
    mt->callback([&] {
        Polygon poly = load_as<Polygon>(mt_poly, "polygon");
        std::vector<EdgeInstance> constraints;
        if (!mt_constraints.empty()) {
            constraints = load_as<EdgeListDocument>(mt_constraints, "edges").items;
        }
        Triangulation t = min_triangulation(poly, constraints);
        if (!mt_svg.empty()) emit(mt_svg, to_svg(t));
        emit(mt_json.empty() ? "-" : mt_json, save_triangulation(t));
    });

    // mct
    std::string mct_a, mct_b, mct_json;
    auto* mc = app.add_subcommand("mct", "maximum common triangulation");
    mc->add_option("--a", mct_a, "triangulation document")->required();
    mc->add_option("--b", mct_b, "triangulation document")->required();
    mc->add_option("--json", mct_json, "write triangulation document");
    mc->callback([&] {
        Triangulation a = load_as<Triangulation>(mct_a, "triangulation");
        Triangulation b = load_as<Triangulation>(mct_b, "triangulation");
        emit(mct_json.empty() ? "-" : mct_json, save_triangulation(mct(a, b)));
    });

    // plan-between
    std::string pb_from, pb_to, pb_json, pb_dot;
    auto* pb = app.add_subcommand("plan-between", "minimum flip plan between triangulations");
    pb->add_option("--from", pb_from, "triangulation document")->required();
    pb->add_option("--to", pb_to, "triangulation document")->required();
    pb->add_option("--json", pb_json, "write plan document");
    pb->add_option("--dot", pb_dot, "write Graphviz DAG");
    pb->callback([&] {
        Triangulation from = load_as<Triangulation>(pb_from, "triangulation");
        Triangulation to = load_as<Triangulation>(pb_to, "triangulation");
        PlanBetween between = plan_between(from, to);
        if (!pb_json.empty()) emit(pb_json, save_plan(between.merged));
        if (!pb_dot.empty()) emit(pb_dot, to_dot(between.merged));
        if (pb_json.empty() && pb_dot.empty()) {
            std::printf("flips: %zu\nreversed: %zu\nforward: %zu\n", between.size(),
                        between.reversed_ids.size(), between.forward_ids.size());
        }
    });

    // verify
    std::string vf_plan, vf_start, vf_order, vf_json;
    auto* vf = app.add_subcommand("verify", "execute a plan on a triangulation");
    vf->add_option("--plan", vf_plan, "plan document")->required();
    vf->add_option("--start", vf_start, "triangulation document")->required();
    vf->add_option("--order", vf_order, "JSON array of node indices");
    vf->add_option("--json", vf_json, "write the final triangulation");
    vf->callback([&] {
        FlipPlan plan = load_as<FlipPlan>(vf_plan, "plan");
        Triangulation start = load_as<Triangulation>(vf_start, "triangulation");
        Triangulation result;
        if (!vf_order.empty()) {
            std::vector<int> order = load_order_file(vf_order);
            result = apply_plan(start, plan, &order);
        } else {
            result = apply_plan(start, plan);
        }
        ValidationReport rep = validate_triangulation(result);
        if (!rep.ok) throw_internal("plan execution broke the triangulation");
        if (!vf_json.empty()) emit(vf_json, save_triangulation(result));
        std::printf("ok: executed %zu flips\n", plan.size());
    });

    // optimize-pair
    std::string op_u, op_v, op_e, op_e2, op_out_u, op_out_v;
    auto* op = app.add_subcommand("optimize-pair", "optimal pair per the plan-size minimum");
    op->add_option("--u", op_u, "triangulation document")->required();
    op->add_option("--v", op_v, "triangulation document")->required();
    op->add_option("--e", op_e, "edges kept in u")->required();
    op->add_option("--e2", op_e2, "edges kept in v")->required();
    op->add_option("--out-u", op_out_u, "write optimized u");
    op->add_option("--out-v", op_out_v, "write optimized v");
    op->callback([&] {
        Triangulation u = load_as<Triangulation>(op_u, "triangulation");
        Triangulation v = load_as<Triangulation>(op_v, "triangulation");
        auto e = load_as<EdgeListDocument>(op_e, "edges").items;
        auto e2 = load_as<EdgeListDocument>(op_e2, "edges").items;
        auto [bu, bv] = optimize_pair(u, v, e, e2);
        std::printf("plan size: %zu\n", plan_between(bu, bv).size());
        if (!op_out_u.empty()) emit(op_out_u, save_triangulation(bu));
        if (!op_out_v.empty()) emit(op_out_v, save_triangulation(bv));
    });

    // oracle
    auto* oracle = app.add_subcommand("oracle", "brute-force cross checks");
    oracle->require_subcommand(1);

    std::string ob_start, ob_targets;
    auto* ob = oracle->add_subcommand("bfs", "shortest flip path to a target edge set");
    ob->add_option("--start", ob_start, "triangulation document")->required();
    ob->add_option("--targets", ob_targets, "edges document")->required();
    ob->callback([&] {
        Triangulation start = load_as<Triangulation>(ob_start, "triangulation");
        auto targets = to_segments(load_as<EdgeListDocument>(ob_targets, "edges"));
        auto res = flip_graph_bfs(start, [&](const Triangulation& t) {
            for (const Segment& s : targets) {
                if (!t.has_edge(s)) return false;
            }
            return true;
        });
        if (!res.reachable) {
            std::printf("unreachable\n");
            return;
        }
        std::printf("distance: %d\nshortest paths: %llu%s\nflip multisets: %zu\n", res.distance,
                    static_cast<unsigned long long>(res.shortest_paths),
                    res.paths_exact ? "" : "+", res.multisets.size());
    });

    std::string oe_poly, oe_constraints;
    auto* oe = oracle->add_subcommand("enumerate", "count triangulations of a polygon");
    oe->add_option("--polygon", oe_poly, "polygon document")->required();
    oe->add_option("--constraints", oe_constraints, "edges document");
    oe->callback([&] {
        Polygon poly = load_as<Polygon>(oe_poly, "polygon");
        std::vector<Segment> constraints;
        if (!oe_constraints.empty()) {
            constraints = to_segments(load_as<EdgeListDocument>(oe_constraints, "edges"));
        }
        auto all = enumerate_triangulations(poly, constraints);
        std::printf("triangulations: %zu\n", all.size());
    });

    std::string oq_edge, oq_origin = "0,0";
    auto* oq = oracle->add_subcommand("unique-quad", "empty quads with the edge as long diagonal");
    oq->add_option("edge,--edge", oq_edge, "edge class X,Y")->required();
    oq->add_option("--origin", oq_origin, "originating point A,B");
    oq->callback([&] {
        EdgeClass cls = parse_class(oq_edge);
        auto [oa, ob2] = parse_pair(oq_origin);
        auto quads = brute_unique_quad(EdgeInstance({oa, ob2}, class_vector(cls)));
        std::printf("quadrilaterals: %zu\n", quads.size());
        for (const QuadKey& q : quads) {
            for (const LatticePoint& p : q) std::printf(" (%lld,%lld)", (long long)p.a, (long long)p.b);
            std::printf("\n");
        }
    });

    std::string om_poly, om_e, om_e2;
    auto* om = oracle->add_subcommand("min-pair", "minimum plan size over constrained pairs");
    om->add_option("--polygon", om_poly, "polygon document")->required();
    om->add_option("--e", om_e, "edges document")->required();
    om->add_option("--e2", om_e2, "edges document")->required();
    om->callback([&] {
        Polygon poly = load_as<Polygon>(om_poly, "polygon");
        auto e = to_segments(load_as<EdgeListDocument>(om_e, "edges"));
        auto e2 = to_segments(load_as<EdgeListDocument>(om_e2, "edges"));
        auto res = brute_min_pair(e, e2, poly);
        std::printf("minimum: %d\n", res.minimum);
    });

    // render
    std::string rd_in, rd_out;
    auto* rd = app.add_subcommand("render", "render a document to SVG or DOT");
    rd->add_option("--in", rd_in, "document to render")->required();
    rd->add_option("--out", rd_out, "output file (.svg or .dot)")->required();
    rd->callback([&] {
        Document doc = load_document_file(rd_in);
        bool dot = rd_out.size() >= 4 && rd_out.substr(rd_out.size() - 4) == ".dot";
        if (auto* t = std::get_if<Triangulation>(&doc)) {
            if (dot) throw_validation("ValidationError", "triangulations render to SVG only");
            emit(rd_out, to_svg(*t));
        } else if (auto* p = std::get_if<FlipPlan>(&doc)) {
            emit(rd_out, dot ? to_dot(*p) : to_svg(*p));
        } else {
            throw_validation("ValidationError", "render expects a triangulation or plan");
        }
    });

    CLI11_PARSE(app, argc, argv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        switch (e.cls()) {
            case ErrorClass::Validation: return 2;
            case ErrorClass::TooLarge: return 3;
            case ErrorClass::Internal: return 4;
        }
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    }
}
