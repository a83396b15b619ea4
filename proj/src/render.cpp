#include "fareyflip/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace fareyflip {

namespace {

constexpr double kScale = 48.0;
constexpr double kMargin = 24.0;
constexpr double kRoot3Over2 = 0.86602540378443864676;

struct XY {
    double x;
    double y;
};

XY embed(LatticePoint p) {
    return {static_cast<double>(p.a) + 0.5 * static_cast<double>(p.b),
            kRoot3Over2 * static_cast<double>(p.b)};
}

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

struct Canvas {
    double min_x = std::numeric_limits<double>::max();
    double min_y = min_x;
    double max_x = std::numeric_limits<double>::lowest();
    double max_y = max_x;

    void include(XY p) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }

    // SVG y grows downward; flip vertically.
    XY map(XY p) const {
        return {kMargin + kScale * (p.x - min_x), kMargin + kScale * (max_y - p.y)};
    }
    double width() const { return 2 * kMargin + kScale * (max_x - min_x); }
    double height() const { return 2 * kMargin + kScale * (max_y - min_y); }
};

std::string line(const Canvas& c, XY a, XY b, const char* stroke, const char* width) {
    XY ma = c.map(a), mb = c.map(b);
    return "  <line x1=\"" + num(ma.x) + "\" y1=\"" + num(ma.y) + "\" x2=\"" + num(mb.x) +
           "\" y2=\"" + num(mb.y) + "\" stroke=\"" + stroke + "\" stroke-width=\"" + width +
           "\" stroke-linecap=\"round\"/>\n";
}

std::string svg_open(const Canvas& c) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(c.width()) +
           "\" height=\"" + num(c.height()) + "\" viewBox=\"0 0 " + num(c.width()) + " " +
           num(c.height()) + "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

}  // namespace

std::string to_svg(const Triangulation& t) {
    Canvas c;
    for (const LatticePoint& p : t.polygon.point_set()) c.include(embed(p));
    std::string body;
    // Unit edges first, long edges on top in red.
    for (const Segment& e : t.edges) {
        if (e.squared() == 1) body += line(c, embed(e.p), embed(e.q), "#444444", "1.5");
    }
    for (const Segment& e : t.edges) {
        if (e.squared() != 1) body += line(c, embed(e.p), embed(e.q), "#cc2222", "2.5");
    }
    for (const LatticePoint& p : t.polygon.point_set()) {
        XY m = c.map(embed(p));
        body += "  <circle cx=\"" + num(m.x) + "\" cy=\"" + num(m.y) +
                "\" r=\"3.0\" fill=\"#222222\"/>\n";
    }
    return svg_open(c) + body + "</svg>\n";
}

std::string to_svg(const FlipPlan& plan) {
    // Layout: one row per height, nodes sorted by quad key inside a row.
    std::vector<int> heights = plan.empty() ? std::vector<int>{} : node_heights(plan);
    int max_h = 0;
    for (int h : heights) max_h = std::max(max_h, h);

    std::vector<std::vector<int>> rows(static_cast<std::size_t>(max_h));
    for (std::size_t i = 0; i < plan.size(); ++i) {
        rows[static_cast<std::size_t>(heights[i] - 1)].push_back(static_cast<int>(i));
    }
    for (auto& row : rows) {
        std::sort(row.begin(), row.end(), [&](int a, int b) {
            return plan.nodes[static_cast<std::size_t>(a)].key() <
                   plan.nodes[static_cast<std::size_t>(b)].key();
        });
    }
    const double bw = 150.0, bh = 40.0, hgap = 20.0, vgap = 50.0;
    std::size_t widest = 1;
    for (const auto& row : rows) widest = std::max(widest, row.size());
    double width = 2 * kMargin + static_cast<double>(widest) * (bw + hgap);
    double height = 2 * kMargin + static_cast<double>(std::max(max_h, 1)) * (bh + vgap);

    std::vector<XY> centers(plan.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        double y = height - kMargin - bh / 2 - static_cast<double>(r) * (bh + vgap);
        double row_w = static_cast<double>(rows[r].size()) * (bw + hgap) - hgap;
        double x0 = (width - row_w) / 2;
        for (std::size_t k = 0; k < rows[r].size(); ++k) {
            centers[static_cast<std::size_t>(rows[r][k])] = {
                x0 + static_cast<double>(k) * (bw + hgap) + bw / 2, y};
        }
    }
    std::string body;
    for (std::size_t p = 0; p < plan.size(); ++p) {
        for (int ch : plan.children[p]) {
            XY a = centers[static_cast<std::size_t>(ch)];
            XY b = centers[p];
            body += "  <line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y - bh / 2) + "\" x2=\"" +
                    num(b.x) + "\" y2=\"" + num(b.y + bh / 2) +
                    "\" stroke=\"#888888\" stroke-width=\"1.2\"/>\n";
        }
    }
    for (std::size_t i = 0; i < plan.size(); ++i) {
        const Flip& f = plan.nodes[i];
        XY ctr = centers[i];
        EdgeClass cls = canonical_edge_class(f.created.delta());
        std::string label = "(" + std::to_string(cls.x) + "," + std::to_string(cls.y) + ") at (" +
                            std::to_string(f.created.p.a) + "," + std::to_string(f.created.p.b) +
                            ")";
        const char* stroke = f.direction == FlipDirection::Reversed ? "#2244cc" : "#222222";
        body += "  <rect x=\"" + num(ctr.x - bw / 2) + "\" y=\"" + num(ctr.y - bh / 2) +
                "\" width=\"" + num(bw) + "\" height=\"" + num(bh) +
                "\" fill=\"#f7f7f7\" stroke=\"" + stroke + "\"/>\n";
        body += "  <text x=\"" + num(ctr.x) + "\" y=\"" + num(ctr.y + 4) +
                "\" font-size=\"12\" font-family=\"monospace\" text-anchor=\"middle\">" + label +
                "</text>\n";
    }
    std::string head = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
                       "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " +
                       num(height) +
                       "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    return head + body + "</svg>\n";
}

}  // namespace fareyflip
