// End-to-end checks of the CLI surface: every subcommand, the document
// files it reads and writes, and the exit-code contract.  argv[1] is the
// binary under test; files go into a fresh temp directory.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "fareyflip/io.hpp"
#include "fareyflip/mintri.hpp"
#include "fareyflip/plan.hpp"

using namespace fareyflip;
namespace fs = std::filesystem;

namespace {

std::string g_cli;
fs::path g_dir;
int g_failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        std::printf("FAIL: %s\n", what.c_str());
        ++g_failures;
    }
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = g_cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return {-1, ""};
    std::string out;
    char buf[512];
    while (std::fgets(buf, sizeof(buf), pipe) != nullptr) out += buf;
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string path(const std::string& name) { return (g_dir / name).string(); }

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: cli_tests <path-to-fareyflip-cli>\n");
        return 2;
    }
    g_cli = argv[1];
    g_dir = fs::temp_directory_path() / "fareyflip_cli_tests";
    fs::remove_all(g_dir);
    fs::create_directories(g_dir);

    // Fixtures.
    Polygon region = Polygon::from_ring({{0, 0}, {3, 0}, {3, 2}, {0, 2}});
    write_file(path("poly.json"), save_polygon(region));
    write_file(path("e32.json"), save_edges({{EdgeInstance({0, 0}, {3, 2})}}));
    write_file(path("e21.json"), save_edges({{EdgeInstance({0, 0}, {2, 1})}}));

    // farey-plan, both spellings.
    expect(run("farey-plan 3,2").out == "{1/1, 1/2, 2/3}\n", "farey-plan positional");
    expect(run("farey-plan --edge 3,2").out == "{1/1, 1/2, 2/3}\n", "farey-plan flag");

    // flip-plan writes a loadable plan document.
    expect(run("flip-plan 3,2 --json " + path("plan32.json")).exit_code == 0, "flip-plan --json");
    {
        Document doc = load_document_file(path("plan32.json"));
        auto* plan = std::get_if<FlipPlan>(&doc);
        expect(plan != nullptr && plan->size() == 7, "flip-plan document has 7 nodes");
    }
    expect(run("flip-plan 3,2 --dot " + path("plan32.dot")).exit_code == 0, "flip-plan --dot");
    expect(read_file(path("plan32.dot")).find("digraph") == 0, "dot output shape");

    // multi-plan.
    expect(run("multi-plan --edges " + path("e32.json")).out.find("flips: 7") == 0,
           "multi-plan summary");

    // min-tri / mct.
    expect(run("min-tri --polygon " + path("poly.json") + " --json " + path("mt.json") +
               " --svg " + path("mt.svg"))
                   .exit_code == 0,
           "min-tri");
    expect(run("min-tri --polygon " + path("poly.json") + " --constraints " + path("e32.json") +
               " --json " + path("t32.json"))
                   .exit_code == 0,
           "min-tri constrained");
    expect(run("min-tri --polygon " + path("poly.json") + " --constraints " + path("e21.json") +
               " --json " + path("t21.json"))
                   .exit_code == 0,
           "min-tri constrained 2");
    expect(run("mct --a " + path("t32.json") + " --b " + path("t21.json") + " --json " +
               path("mct.json"))
                   .exit_code == 0,
           "mct");
    {
        Document doc = load_document_file(path("mct.json"));
        auto* t = std::get_if<Triangulation>(&doc);
        expect(t != nullptr && t->has_edge(Segment({0, 0}, {2, 1})), "mct keeps the shared edge");
    }

    // plan-between + verify round trip, including an explicit order file.
    expect(run("plan-between --from " + path("mt.json") + " --to " + path("t32.json") +
               " --json " + path("pb.json"))
                   .exit_code == 0,
           "plan-between");
    {
        Document doc = load_document_file(path("pb.json"));
        auto* plan = std::get_if<FlipPlan>(&doc);
        expect(plan != nullptr && plan->size() == 7, "plan-between has 7 forward flips");
        if (plan != nullptr) {
            std::string order = "[";
            auto topo = plan->default_order();
            for (std::size_t i = 0; i < topo.size(); ++i) {
                order += (i ? "," : "") + std::to_string(topo[i]);
            }
            order += "]";
            write_file(path("order.json"), order);
        }
    }
    RunResult verify = run("verify --plan " + path("pb.json") + " --start " + path("mt.json") +
                           " --order " + path("order.json") + " --json " + path("end.json"));
    expect(verify.exit_code == 0 && verify.out.find("ok:") == 0, "verify with explicit order");
    {
        Document doc = load_document_file(path("end.json"));
        auto* t = std::get_if<Triangulation>(&doc);
        expect(t != nullptr && t->has_edge(Segment({0, 0}, {3, 2})), "verify reaches the target");
    }
    // A root-first order must be rejected with the validation exit code.
    // (Node 0 is the root: plans are built root-first.)
    write_file(path("bad_order.json"), "[0,1,2,3,4,5,6]");
    RunResult bad = run("verify --plan " + path("pb.json") + " --start " + path("mt.json") +
                        " --order " + path("bad_order.json"));
    expect(bad.exit_code == 2, "root-first order exits 2");

    // optimize-pair.
    RunResult op = run("optimize-pair --u " + path("t32.json") + " --v " + path("t21.json") +
                       " --e " + path("e32.json") + " --e2 " + path("e21.json"));
    expect(op.exit_code == 0 && op.out.find("plan size: 0") == 0, "optimize-pair");

    // oracle subcommands.
    expect(run("oracle enumerate --polygon " + path("poly.json")).out == "triangulations: 852\n",
           "oracle enumerate");
    RunResult bfs = run("oracle bfs --start " + path("mt.json") + " --targets " + path("e32.json"));
    expect(bfs.out.find("distance: 7") == 0, "oracle bfs distance");
    expect(bfs.out.find("shortest paths: 80") != std::string::npos, "oracle bfs path count");
    expect(run("oracle unique-quad 3,2").out.find("quadrilaterals: 1") == 0, "oracle unique-quad");
    expect(run("oracle min-pair --polygon " + path("poly.json") + " --e " + path("e32.json") +
               " --e2 " + path("e21.json"))
                   .out == "minimum: 0\n",
           "oracle min-pair");

    // render, deterministic across invocations.
    expect(run("render --in " + path("t32.json") + " --out " + path("a.svg")).exit_code == 0,
           "render svg");
    expect(run("render --in " + path("t32.json") + " --out " + path("b.svg")).exit_code == 0,
           "render svg again");
    expect(read_file(path("a.svg")) == read_file(path("b.svg")), "render is deterministic");
    expect(run("render --in " + path("pb.json") + " --out " + path("pb.dot")).exit_code == 0,
           "render plan to dot");

    // Exit-code contract.
    write_file(path("bad_edge.json"),
               R"({"kind":"edges","version":1,"items":[{"from":[0,0],"to":[2,4]}]})" "\n");
    expect(run("multi-plan --edges " + path("bad_edge.json")).exit_code == 2,
           "validation failures exit 2");
    write_file(path("big.json"),
               R"({"kind":"polygon","version":1,"vertices":[[0,0],[9,0],[9,9],[0,9]]})" "\n");
    expect(run("oracle enumerate --polygon " + path("big.json")).exit_code == 3,
           "guard failures exit 3");
    expect(run("farey-plan 2,4").exit_code == 2, "non-coprime class exits 2");

    if (g_failures == 0) std::printf("cli: all checks passed\n");
    return g_failures == 0 ? 0 : 1;
}
