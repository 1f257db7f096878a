// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "o1p/cli.hpp"
#include "o1p/error.hpp"
#include "o1p/generators.hpp"
#include "o1p/io.hpp"
#include "o1p/verifier.hpp"
#include "oracles.hpp"
#include "suite.hpp"

using namespace o1p;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " [" << o.detail << "; "
              << secs << " s]" << std::endl;
}

struct Cli {
    int status = 0;
    std::string out;
};

Cli cli(const std::vector<std::string>& args) {
    std::istringstream in;
    std::ostringstream out, err;
    const int status = run_cli(args, in, out, err);
    return {status, out.str() + err.str()};
}

bool has(const std::string& text, const std::string& line) { return text.find(line + "\n") != std::string::npos; }

}  // namespace

int main() {
    const fs::path dir = fs::temp_directory_path() / ("o1p-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const auto suite = test_suite::full();

    criterion(1, "partition + verify on the full suite: one red per pair, 3n-6 blue, maximal plane, degree <= 4", [&] {
        const auto start = Clock::now();
        int worst = 0;
        for (const auto& inst : suite) {
            const std::string graph = (dir / "g.o1p").string(), coloring = (dir / "c.rbc").string();
            write_text(graph, serialize_o1p(inst.graph));
            if (cli({"partition", graph, "--out", coloring}).status != 0) return Outcome{false, inst.name + ": partition failed"};
            const Cli v = cli({"verify", graph, coloring});
            const int n = inst.graph.vertex_count();
            if (v.status != 0 || !has(v.out, "one_red_per_pair=true") || !has(v.out, "blue_is_maximal_plane=true") ||
                !has(v.out, "blue_count=" + std::to_string(3 * n - 6)))
                return Outcome{false, inst.name + ": " + v.out};
            const ColoringReport r = verify_coloring(inst.graph, parse_rbc(read_text(coloring), inst.graph));
            worst = std::max(worst, r.max_red_degree);
            if (r.max_red_degree > 4) return Outcome{false, inst.name + ": red degree " + std::to_string(r.max_red_degree)};
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        return Outcome{secs < 60, std::to_string(suite.size()) + " instances, max red degree " + std::to_string(worst)};
    });

    criterion(2, "grid h = 5: bound 78/25 > 3 and partition degree exactly 4", [&] {
        const auto start = Clock::now();
        const Cli cert = cli({"certify-grid", "--h", "5"});
        const std::string graph = (dir / "grid5.o1p").string();
        cli({"gen", "--family", "grid", "--h", "5", "--out", graph});
        const Cli part = cli({"partition", graph, "--out", (dir / "grid5.rbc").string()});
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        const bool ok = cert.status == 0 && has(cert.out, "bound=78/25") && has(cert.out, "no_degree_3_coloring=true") &&
                        part.status == 0 && has(part.out, "max_red_degree=4") && secs < 1.0;
        return Outcome{ok, "bound 78/25, max_red_degree " + std::string(has(part.out, "max_red_degree=4") ? "4" : "?")};
    });

    criterion(3, "partition time grows by at most 2.5x per doubling (n = 1e4 .. 8e4)", [&] {
        std::vector<double> medians;
        std::ostringstream detail;
        for (int n : {10000, 20000, 40000, 80000}) {
            const std::string graph = (dir / ("t" + std::to_string(n) + ".o1p")).string();
            write_text(graph, serialize_o1p(build_optimal(gen_random_quad(n, 42))));
            std::vector<double> runs;
            for (int r = 0; r < 5; ++r) {
                const auto start = Clock::now();
                if (cli({"partition", graph, "--out", (dir / "t.rbc").string()}).status != 0)
                    return Outcome{false, "partition failed at n=" + std::to_string(n)};
                runs.push_back(std::chrono::duration<double>(Clock::now() - start).count());
            }
            std::sort(runs.begin(), runs.end());
            medians.push_back(runs[2]);
            detail << "n=" << n << ": " << runs[2] * 1000 << " ms; ";
        }
        bool ok = true;
        for (std::size_t i = 1; i < medians.size(); ++i) {
            const double ratio = medians[i] / medians[i - 1];
            detail << "x" << ratio << ' ';
            ok = ok && ratio <= 2.5;
        }
        return Outcome{ok, detail.str()};
    });

    criterion(4, "every acyclic red selection is two trees spanning all vertices (cube, example)", [&] {
        std::ostringstream detail;
        bool ok = true;
        for (const auto& [name, g] : {std::pair{"cube", build_optimal(cube())}, std::pair{"example", gen_example()}}) {
            const OracleResult res = oracle_enumerate(g);
            std::uint64_t counted = 0;
            for (const auto& [key, count] : res.forest_stats) {
                counted += count;
                ok = ok && std::get<0>(key) == 2 && std::get<1>(key) == g.vertex_count();
            }
            ok = ok && counted == res.forest_colorings && res.forest_colorings > 0;
            detail << name << ": " << res.selections << " selections, " << res.forest_colorings << " forests; ";
        }
        return Outcome{ok, detail.str()};
    });

    criterion(5, "lemma2 k = 2, 3: every forest coloring gives s or t red degree >= k/2", [&] {
        std::ostringstream detail;
        bool ok = true;
        for (int k : {2, 3}) {
            const auto g = gen_lemma2(k);
            const Lemma2Layout lay = lemma2_layout(k);
            OracleOptions opt;
            opt.watch = {lay.s, lay.t};
            opt.threads = 4;
            const OracleResult res = oracle_enumerate(g, opt);
            const bool has_forest = res.watched_min_max_degree.has_value();
            ok = ok && has_forest && 2 * *res.watched_min_max_degree >= k;
            detail << "k=" << k << ": " << res.forest_colorings << " forests, min max(deg s, deg t) = "
                   << (has_forest ? std::to_string(*res.watched_min_max_degree) : "none") << "; ";
        }
        return Outcome{ok, detail.str()};
    });

    criterion(6, "gray-cycle degree sum is 6 for 10^4 random selections on grid h = 5", [&] {
        const auto g = gen_grid_worstcase(5);
        std::mt19937_64 rng(2024);
        int bad = 0;
        for (int round = 0; round < 10000; ++round) {
            RedBlueColoring c;
            for (FaceId f = 0; f < g.crossing_count(); ++f)
                c.red.push_back({rng() & 1 ? EdgeKind::WhiteDiagonal : EdgeKind::BlackDiagonal, f});
            bad += gray_cycle_degree_check(g, c) ? 0 : 1;
        }
        return Outcome{bad == 0, std::to_string(bad) + " failures"};
    });

    criterion(7, "triangulation: 3V-6 edges, triangular faces, degree increase <= 4, tight on grid h = 5", [&] {
        int worst = 0;
        for (const auto& inst : suite) {
            const Quadrangulation& q = inst.graph.quad();
            const Triangulation t = triangulate_quadrangulation(q);
            const int n = q.vertex_count();
            if (t.graph.edge_count() != 3 * n - 6) return Outcome{false, inst.name + ": edge count"};
            for (const Face& f : t.graph.faces())
                if (f.length() != 3) return Outcome{false, inst.name + ": non-triangular face"};
            for (Vertex v = 0; v < n; ++v) {
                const int added = t.graph.degree(v) - q.embedding().degree(v);
                if (added > 4) return Outcome{false, inst.name + ": vertex gains " + std::to_string(added)};
                worst = std::max(worst, added);
            }
        }
        const int grid = triangulate_quadrangulation(gen_grid_worstcase(5).quad()).max_added_degree;
        return Outcome{grid == 4, "max increase " + std::to_string(worst) + ", grid h=5 " + std::to_string(grid)};
    });

    criterion(8, "book embeddings satisfy p1-p3; linear and pairwise crossing checks agree", [&] {
        for (const auto& inst : suite) {
            const Quadrangulation& q = inst.graph.quad();
            const BookEmbedding book = book_embed(q);
            if (!verify_p1p2p3(q, book).ok()) return Outcome{false, inst.name + ": p1-p3"};
            for (Page p : {Page::Upper, Page::Lower})
                if (page_is_noncrossing(q, book, p) != oracle::page_crossing_free(q, book, p))
                    return Outcome{false, inst.name + ": crossing checks disagree"};
        }
        return Outcome{true, std::to_string(suite.size()) + " instances"};
    });

    criterion(9, "shipped two-path selection of the example is a forest coloring of degree 2", [&] {
        const auto g = load_optimal(read_text(O1P_DATA_DIR "/example.o1p"));
        const ColoringReport r = verify_coloring(g, parse_rbc(read_text(O1P_DATA_DIR "/example_forest.rbc"), g));
        const bool ok = r.red_is_forest && r.red_tree_count == 2 && r.max_red_degree == 2 && r.one_red_per_pair &&
                        r.blue_is_maximal_plane;
        return Outcome{ok, "trees " + std::to_string(r.red_tree_count) + ", max degree " +
                               std::to_string(r.max_red_degree) + ", spanned " + std::to_string(r.red_spanned_vertices)};
    });

    fs::remove_all(dir);
    return failures;
}
