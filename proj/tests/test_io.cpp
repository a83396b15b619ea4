#include <doctest.h>

#include <random>

#include "fareyflip/io.hpp"
#include "fareyflip/mintri.hpp"
#include "fareyflip/render.hpp"

using namespace fareyflip;

TEST_SUITE_BEGIN("io");

namespace {

Polygon parallelogram(std::int64_t w, std::int64_t h) {
    return Polygon::from_ring({{0, 0}, {w, 0}, {w, h}, {0, h}});
}

}  // namespace

TEST_CASE("canonical documents round-trip byte for byte") {
    Polygon poly = parallelogram(3, 2);
    std::string text = save_polygon(poly);
    Document doc = load_document(text);
    CHECK(save_document(doc) == text);

    Triangulation t = min_triangulation(poly, {EdgeInstance({0, 0}, {3, 2})});
    std::string ttext = save_triangulation(t);
    CHECK(save_document(load_document(ttext)) == ttext);

    FlipPlan plan = flip_plan(EdgeInstance({0, 0}, {3, 2}));
    std::string ptext = save_plan(plan);
    CHECK(save_document(load_document(ptext)) == ptext);

    EdgeListDocument edges{{EdgeInstance({0, 0}, {3, 2}), EdgeInstance({1, 1}, {-1, 2})}};
    std::string etext = save_edges(edges);
    CHECK(save_document(load_document(etext)) == etext);
}

TEST_CASE("loaded plans behave like built ones") {
    FlipPlan plan = flip_plan(EdgeInstance({0, 0}, {3, 2}));
    Document doc = load_document(save_plan(plan));
    auto* loaded = std::get_if<FlipPlan>(&doc);
    REQUIRE(loaded != nullptr);
    CHECK(loaded->size() == plan.size());
    Polygon region = parallelogram(3, 2);
    Triangulation start = equilateral_triangulation(region);
    CHECK(apply_plan(start, *loaded) == apply_plan(start, plan));
}

TEST_CASE("validation failures") {
    // Non-coprime edge vector.
    CHECK_THROWS_AS(
        (void)load_document(R"({"kind":"edges","version":1,)"
                            R"("items":[{"from":[0,0],"to":[2,4]}]})"),
        Error);
    // Unknown field.
    CHECK_THROWS_AS(
        (void)load_document(R"({"kind":"polygon","version":1,"vertices":[[0,0],[1,0],[0,1]],)"
                            R"("extra":1})"),
        Error);
    // Bad version.
    CHECK_THROWS_AS(
        (void)load_document(R"({"kind":"polygon","version":2,"vertices":[[0,0],[1,0],[0,1]]})"),
        Error);
    // Malformed JSON.
    CHECK_THROWS_AS((void)load_document("{"), Error);

    // Structurally wrong documents surface as parse errors, not crashes.
    CHECK_THROWS_AS(
        (void)load_document(R"({"kind":"plan","version":1,"nodes":[{"quad":[[0,0],[1,0],[1,1],)"
                            R"([0,1]],"removed":7,"created":[[1,0],[0,1]],)"
                            R"("direction":"forward"}],"arcs":[]})"),
        Error);
    CHECK_THROWS_AS(
        (void)load_document(R"({"kind":"edges","version":1,"items":[{"from":[0,0],"to":"x"}]})"),
        Error);

    // Triangulation missing a boundary segment.
    Polygon poly = parallelogram(1, 1);
    Triangulation t = equilateral_triangulation(poly);
    Triangulation broken = t;
    broken.edges.erase(Segment({0, 0}, {1, 0}));
    CHECK_THROWS_AS((void)load_document(save_triangulation(broken)), Error);
}

TEST_CASE("mangled documents never escape as non-Error exceptions") {
    Polygon poly = parallelogram(3, 2);
    Triangulation t = min_triangulation(poly, {EdgeInstance({0, 0}, {3, 2})});
    std::string clean = save_triangulation(t);
    std::string plan = save_plan(flip_plan(EdgeInstance({0, 0}, {3, 2})));
    std::mt19937 rng(31);
    for (const std::string& base : {clean, plan}) {
        for (int trial = 0; trial < 300; ++trial) {
            std::string broken = base;
            std::uniform_int_distribution<std::size_t> pos(0, broken.size() - 1);
            switch (trial % 3) {
                case 0:  // truncate
                    broken.resize(pos(rng));
                    break;
                case 1:  // corrupt one byte
                    broken[pos(rng)] = "[]{},:x9\""[trial % 9];
                    break;
                case 2:  // delete a span
                {
                    std::size_t a = pos(rng), b = pos(rng);
                    if (a > b) std::swap(a, b);
                    broken.erase(a, b - a);
                    break;
                }
            }
            try {
                (void)load_document(broken);
            } catch (const Error&) {
                // expected for most mutations
            }
        }
    }
    CHECK(true);  // reaching here means no foreign exception or crash
}

TEST_CASE("rendering is deterministic") {
    Polygon poly = parallelogram(3, 2);
    Triangulation t = min_triangulation(poly, {EdgeInstance({0, 0}, {3, 2})});
    CHECK(to_svg(t) == to_svg(t));
    CHECK(to_svg(t).find("<svg") == 0);

    FlipPlan plan = flip_plan(EdgeInstance({0, 0}, {3, 2}));
    CHECK(to_svg(plan) == to_svg(plan));
    CHECK(to_dot(plan) == to_dot(plan));
}

TEST_SUITE_END();
