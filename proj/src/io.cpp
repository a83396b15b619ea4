#include "fareyflip/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace fareyflip {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw_validation("ParseError", what); }

void expect_keys(const json& obj, std::initializer_list<const char*> keys) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : keys) {
            if (it.key() == k) {
                known = true;
                break;
            }
        }
        if (!known) parse_fail("unknown field \"" + it.key() + "\"");
    }
    for (const char* k : keys) {
        if (!obj.contains(k)) parse_fail(std::string("missing field \"") + k + "\"");
    }
}

LatticePoint parse_point(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
        parse_fail("point must be a pair of integers");
    }
    LatticePoint p{j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
    check_coord_range(p);
    return p;
}

json point_json(LatticePoint p) { return json::array({p.a, p.b}); }

void check_version(const json& j) {
    if (!j["version"].is_number_integer() || j["version"].get<int>() != 1) {
        parse_fail("unsupported document version");
    }
}

Polygon parse_polygon(const json& j) {
    expect_keys(j, {"kind", "version", "vertices"});
    check_version(j);
    if (!j["vertices"].is_array()) parse_fail("vertices must be an array");
    std::vector<LatticePoint> ring;
    for (const json& v : j["vertices"]) ring.push_back(parse_point(v));
    return Polygon::from_ring(std::move(ring));
}

EdgeListDocument parse_edges(const json& j) {
    expect_keys(j, {"kind", "version", "items"});
    check_version(j);
    if (!j["items"].is_array()) parse_fail("items must be an array");
    EdgeListDocument out;
    for (const json& item : j["items"]) {
        if (!item.is_object()) parse_fail("edge item must be an object");
        expect_keys(item, {"from", "to"});
        LatticePoint from = parse_point(item["from"]);
        LatticePoint to = parse_point(item["to"]);
        if (from == to) parse_fail("edge endpoints must differ");
        LatticeVector d = to - from;
        if (!is_primitive(d)) {
            throw_validation("ValidationError", "edge vector must be primitive");
        }
        out.items.emplace_back(from, d);
    }
    return out;
}

Triangulation parse_triangulation(const json& j) {
    expect_keys(j, {"kind", "version", "vertices", "edges"});
    check_version(j);
    std::vector<LatticePoint> ring;
    for (const json& v : j["vertices"]) ring.push_back(parse_point(v));
    Triangulation t;
    t.polygon = Polygon::from_ring(std::move(ring));
    for (const json& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) parse_fail("edge must be a pair of points");
        t.edges.insert(Segment(parse_point(e[0]), parse_point(e[1])));
    }
    ValidationReport rep = validate_triangulation(t);
    if (!rep.ok) {
        throw_validation("ValidationError", "triangulation invalid: " + rep.violations.front());
    }
    return t;
}

Segment parse_segment(const json& j) {
    if (!j.is_array() || j.size() != 2) parse_fail("segment must be a pair of points");
    LatticePoint a = parse_point(j[0]);
    LatticePoint b = parse_point(j[1]);
    if (a == b) parse_fail("segment endpoints must differ");
    return Segment(a, b);
}

FlipPlan parse_plan(const json& j) {
    expect_keys(j, {"kind", "version", "nodes", "arcs"});
    check_version(j);
    if (!j["nodes"].is_array() || !j["arcs"].is_array()) parse_fail("nodes/arcs must be arrays");
    FlipPlan plan;
    for (const json& n : j["nodes"]) {
        if (!n.is_object()) parse_fail("plan node must be an object");
        expect_keys(n, {"quad", "removed", "created", "direction"});
        Flip f;
        if (!n["quad"].is_array() || n["quad"].size() != 4) parse_fail("quad needs 4 vertices");
        for (std::size_t i = 0; i < 4; ++i) f.quad[i] = parse_point(n["quad"][i]);
        f.removed = parse_segment(n["removed"]);
        f.created = parse_segment(n["created"]);
        if (!n["direction"].is_string()) parse_fail("direction must be a string");
        std::string dir = n["direction"].get<std::string>();
        if (dir == "forward") {
            f.direction = FlipDirection::Forward;
        } else if (dir == "reversed") {
            f.direction = FlipDirection::Reversed;
        } else {
            parse_fail("direction must be forward or reversed");
        }
        plan.nodes.push_back(f);
        plan.children.emplace_back();
        plan.parents.emplace_back();
        plan.node_targets.emplace_back();
    }
    for (const json& arc : j["arcs"]) {
        if (!arc.is_array() || arc.size() != 2 || !arc[0].is_number_integer() ||
            !arc[1].is_number_integer()) {
            parse_fail("arc must be [child,parent]");
        }
        int c = arc[0].get<int>();
        int p = arc[1].get<int>();
        if (c < 0 || p < 0 || static_cast<std::size_t>(c) >= plan.size() ||
            static_cast<std::size_t>(p) >= plan.size()) {
            parse_fail("arc index out of range");
        }
        plan.children[static_cast<std::size_t>(p)].push_back(c);
        plan.parents[static_cast<std::size_t>(c)].push_back(p);
    }
    // Reject cyclic inputs early.
    (void)plan.default_order();
    return plan;
}

std::string dump(const json& j) { return j.dump() + "\n"; }

}  // namespace

Document load_document(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) parse_fail("malformed JSON");
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        parse_fail("document needs a \"kind\" field");
    }
    std::string kind = j["kind"].get<std::string>();
    try {
        if (kind == "polygon") return parse_polygon(j);
        if (kind == "edges") return parse_edges(j);
        if (kind == "triangulation") return parse_triangulation(j);
        if (kind == "plan") return parse_plan(j);
    } catch (const json::exception& e) {
        parse_fail(e.what());
    }
    parse_fail("unknown document kind \"" + kind + "\"");
}

Document load_document_file(const std::string& path) { return load_document(read_file(path)); }

std::string save_polygon(const Polygon& poly) {
    json j;
    j["kind"] = "polygon";
    j["version"] = 1;
    json verts = json::array();
    for (const LatticePoint& p : poly.ring()) verts.push_back(point_json(p));
    j["vertices"] = verts;
    return dump(j);
}

std::string save_edges(const EdgeListDocument& edges) {
    json j;
    j["kind"] = "edges";
    j["version"] = 1;
    json items = json::array();
    for (const EdgeInstance& e : edges.items) {
        json item;
        item["from"] = point_json(e.origin);
        item["to"] = point_json(e.head());
        items.push_back(item);
    }
    j["items"] = items;
    return dump(j);
}

std::string save_triangulation(const Triangulation& t) {
    json j;
    j["kind"] = "triangulation";
    j["version"] = 1;
    json verts = json::array();
    for (const LatticePoint& p : t.polygon.ring()) verts.push_back(point_json(p));
    j["vertices"] = verts;
    json edges = json::array();
    for (const Segment& e : t.edges) {
        edges.push_back(json::array({point_json(e.p), point_json(e.q)}));
    }
    j["edges"] = edges;
    return dump(j);
}

std::string save_plan(const FlipPlan& plan) {
    json j;
    j["kind"] = "plan";
    j["version"] = 1;
    json nodes = json::array();
    for (const Flip& f : plan.nodes) {
        json n;
        json quad = json::array();
        for (const LatticePoint& p : f.quad) quad.push_back(point_json(p));
        n["quad"] = quad;
        n["removed"] = json::array({point_json(f.removed.p), point_json(f.removed.q)});
        n["created"] = json::array({point_json(f.created.p), point_json(f.created.q)});
        n["direction"] = f.direction == FlipDirection::Forward ? "forward" : "reversed";
        nodes.push_back(n);
    }
    j["nodes"] = nodes;
    json arcs = json::array();
    for (std::size_t p = 0; p < plan.size(); ++p) {
        for (int c : plan.children[p]) {
            arcs.push_back(json::array({c, static_cast<int>(p)}));
        }
    }
    j["arcs"] = arcs;
    return dump(j);
}

std::string save_document(const Document& doc) {
    return std::visit(
        [](const auto& d) -> std::string {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Polygon>) return save_polygon(d);
            if constexpr (std::is_same_v<T, EdgeListDocument>) return save_edges(d);
            if constexpr (std::is_same_v<T, Triangulation>) return save_triangulation(d);
            if constexpr (std::is_same_v<T, FlipPlan>) return save_plan(d);
        },
        doc);
}

std::vector<int> load_order_file(const std::string& path) {
    json j = json::parse(read_file(path), nullptr, false);
    if (j.is_discarded() || !j.is_array()) parse_fail("order file must be a JSON array");
    std::vector<int> out;
    for (const json& v : j) {
        if (!v.is_number_integer()) parse_fail("order entries must be integers");
        out.push_back(v.get<int>());
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw_validation("ParseError", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw_validation("ParseError", "cannot write " + path);
    out << content;
}

}  // namespace fareyflip
