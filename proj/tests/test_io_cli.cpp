#include <unistd.h>

#include <cstdlib>
#include <functional>
#include <iterator>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "o1p/cli.hpp"
#include "o1p/error.hpp"
#include "o1p/generators.hpp"
#include "o1p/io.hpp"
#include "o1p/verifier.hpp"

using namespace o1p;
namespace fs = std::filesystem;

namespace {

struct Run {
    int status = 0;
    std::string out, err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    Run r;
    r.status = run_cli(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

Error error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e;
    }
    FAIL("no error thrown");
    return Error(ErrorCode::InvalidArgument, "");
}

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / ("o1p-test-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

const std::string kExample = O1P_DATA_DIR "/example.o1p";

}  // namespace

TEST_CASE("shipped example file") {
    const auto g = load_optimal(read_text(kExample));
    CHECK(g.vertex_count() == 12);
    CHECK(g.edge_count() == 40);
    CHECK(serialize_o1p(g) == read_text(kExample));
    CHECK(serialize_o1p(gen_example()) == read_text(kExample));
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(error_of([] { parse_o1p(""); }).code() == ErrorCode::ParseError);
    CHECK(std::string(error_of([] { parse_o1p(""); }).what()).find("line 1") != std::string::npos);
    CHECK(error_of([] { parse_o1p("O1P/2\n"); }).code() == ErrorCode::ParseError);
    const Error e = error_of([] { parse_o1p("O1P/1\nn 2\nfoo 1\n"); });
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    CHECK(error_of([] { parse_o1p("O1P/1\nn 2\nedge 0 0 5\n"); }).code() == ErrorCode::ParseError);
}

TEST_CASE("corrupted rotation is a validation error") {
    std::string text = read_text(kExample);
    // swap the first two entries of the rotation of vertex 0 (degree 4)
    const auto at = text.find("\nrot 0 ");
    REQUIRE(at != std::string::npos);
    const auto end = text.find('\n', at + 1);
    std::istringstream words(text.substr(at + 7, end - at - 7));
    std::vector<std::string> ids{std::istream_iterator<std::string>(words), {}};
    REQUIRE(ids.size() >= 3);
    std::swap(ids[0], ids[1]);
    std::string line = "\nrot 0";
    for (const auto& id : ids) line += " " + id;
    text.replace(at, end - at, line);
    const Error e = error_of([&] { parse_o1p(text); });
    CHECK(e.code() == ErrorCode::ValidationError);
    CHECK(e.cause() == ErrorCode::NonPlanarRotation);
}

TEST_CASE("round trips") {
    const auto g = build_optimal(gen_random_quad(40, 9));
    const auto g2 = load_optimal(serialize_o1p(g));
    CHECK(g2.embedding().edges() == g.embedding().edges());
    CHECK(g2.embedding().rotations() == g.embedding().rotations());
    CHECK(g2.embedding().outer_face() == g.embedding().outer_face());

    const BookEmbedding book = book_embed(g.quad());
    const BookEmbedding book2 = parse_book(serialize_book(book), g.quad());
    CHECK(book2.spine == book.spine);
    CHECK(book2.page == book.page);

    const RedBlueColoring c = diag_picker(g);
    const RedBlueColoring c2 = parse_rbc(serialize_rbc(c, g), g);
    CHECK(c2.red == c.red);
    CHECK(c2.max_red_degree == c.max_red_degree);

    // plane-only file
    const PlaneEmbedding& emb = g.embedding();
    CHECK(serialize_o1p(parse_o1p(serialize_o1p(emb)).embedding) == serialize_o1p(emb));
}

TEST_CASE("bad book and coloring files") {
    const auto g = gen_example();
    CHECK(error_of([&] { parse_book("BOOK/1\nspine 0 1 2\nupper\nlower\n", g.quad()); }).code() == ErrorCode::MalformedBook);
    CHECK(error_of([&] { parse_rbc("RBC/1\nred 0 0 1\n", g); }).code() == ErrorCode::ForeignEdge);
    CHECK(error_of([&] { parse_rbc("RBC/1\nred 0 zero 1\n", g); }).code() == ErrorCode::ParseError);
}

TEST_CASE("dot export") {
    const auto g = gen_example();
    const RedBlueColoring c = parse_rbc(read_text(O1P_DATA_DIR "/example_forest.rbc"), g);
    const std::string dot = export_dot(g, &c);
    std::size_t red = 0;
    for (std::size_t at = dot.find("color=red"); at != std::string::npos; at = dot.find("color=red", at + 1)) ++red;
    CHECK(red == 10);
    CHECK(dot == export_dot(g, &c));
    const std::string plain = export_dot(g);
    CHECK(plain.find("color=red") == std::string::npos);
    CHECK(plain.find("color=blue") == std::string::npos);
    CHECK(plain.find("crossing 9") != std::string::npos);
}

TEST_CASE("svg export") {
    const auto g = gen_example();
    const std::string svg = export_svg(g.quad(), example_book(g.quad()));
    std::size_t circles = 0, arcs = 0;
    for (std::size_t at = svg.find("<circle"); at != std::string::npos; at = svg.find("<circle", at + 1)) ++circles;
    for (std::size_t at = svg.find("<path"); at != std::string::npos; at = svg.find("<path", at + 1)) ++arcs;
    CHECK(circles == 12);
    CHECK(arcs == 20);
}

TEST_CASE("cli pipeline") {
    const fs::path dir = scratch_dir();
    const std::string graph = (dir / "grid.o1p").string();
    const std::string coloring = (dir / "grid.rbc").string();
    CHECK(run({"gen", "--family", "grid", "--h", "5", "--out", graph}).status == 0);
    const std::string before = read_text(graph);
    const Run part = run({"partition", graph, "--out", coloring});
    CHECK(part.status == 0);
    CHECK(part.out.find("max_red_degree=4") != std::string::npos);
    const Run ver = run({"verify", graph, coloring});
    CHECK(ver.status == 0);
    CHECK(ver.out.find("max_red_degree=4") != std::string::npos);
    CHECK(ver.out.find("blue_count=261") != std::string::npos);
    CHECK(ver.out.find("ok=true") != std::string::npos);
    // stdin in, stdout out
    const Run piped = run({"partition", "-"}, before);
    CHECK(piped.status == 0);
    CHECK(piped.out == read_text(coloring));
    CHECK(read_text(graph) == before);
    for (const auto& entry : fs::directory_iterator(dir)) CHECK(entry.path().string().find(".tmp") == std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("cli exit codes") {
    const fs::path dir = scratch_dir();
    const std::string grid = (dir / "grid.o1p").string();
    REQUIRE(run({"gen", "--family", "grid", "--h", "5", "--out", grid}).status == 0);

    const Run too_large = run({"oracle", grid});
    CHECK(too_large.status == 1);
    CHECK(too_large.err.find("TooLarge") != std::string::npos);

    // drop one crossing pair's partner: no longer the diagonals of its face
    std::string bad = read_text(kExample);
    const auto at = bad.find("diag 0 ");
    const auto end = bad.find('\n', at);
    bad.replace(at, end - at, "diag 0 0 2 0 4");
    const Run not_opt = run({"partition", "-"}, bad);
    CHECK(not_opt.status == 1);
    CHECK(not_opt.err.find("NotOptimal") != std::string::npos);

    CHECK(run({}).status == 2);
    CHECK(run({"gen"}).status == 2);
    CHECK(run({"gen", "--family", "grid"}).status == 2);
    CHECK(run({"gen", "--family", "grid", "--h", "2"}).status == 2);
    CHECK(run({"gen", "--family", "torus"}).status == 2);
    CHECK(run({"partition", (dir / "missing.o1p").string()}).status == 1);
    CHECK(run({"--help"}).status == 0);
    CHECK(run({"gen", "--help"}).out.find("--family") != std::string::npos);

    // two inputs cannot both come from stdin
    CHECK(run({"verify", "-", "-"}, read_text(kExample)).status == 2);
    fs::remove_all(dir);
}

TEST_CASE("cli commands") {
    const Run cert = run({"certify-grid", "--h", "5"});
    CHECK(cert.status == 0);
    CHECK(cert.out.find("bound=78/25") != std::string::npos);
    CHECK(cert.out.find("no_degree_3_coloring=true") != std::string::npos);
    CHECK(run({"certify-grid", "--h", "4"}).out.find("bound=23/8") != std::string::npos);

    const Run orc = run({"oracle", kExample, "--threads", "3"});
    CHECK(orc.status == 0);
    CHECK(orc.out.find("selections=1024") != std::string::npos);
    CHECK(orc.out.find("all_forests_two_spanning_trees=true") != std::string::npos);

    const Run book = run({"book-embed", kExample});
    CHECK(book.status == 0);
    CHECK(book.out.rfind("BOOK/1", 0) == 0);
    CHECK(run({"book-verify", kExample, O1P_DATA_DIR "/example.book"}).out.find("ok=true") != std::string::npos);

    const Run tri = run({"triangulate", kExample});
    CHECK(tri.status == 0);
    const PlaneEmbedding t = parse_o1p(tri.out).embedding;
    CHECK(t.edge_count() == 30);

    const Run forest = run({"verify", kExample, O1P_DATA_DIR "/example_forest.rbc"});
    CHECK(forest.status == 0);
    CHECK(forest.out.find("red_tree_count=2") != std::string::npos);
    CHECK(forest.out.find("max_red_degree=2") != std::string::npos);
    CHECK(run({"verify", kExample, O1P_DATA_DIR "/example_forest.rbc", "--max-degree", "1"}).status == 1);

    CHECK(run({"export", kExample, "--format", "svg"}).out.rfind("<svg", 0) == 0);
    CHECK(run({"export", kExample, "--format", "dot", "--coloring", O1P_DATA_DIR "/example_forest.rbc"}).status == 0);
}

TEST_CASE("book-verify fails on a broken book") {
    std::string text = read_text(O1P_DATA_DIR "/example.book");
    // move edge 0 to the other page
    text.replace(text.find("upper 0 "), 8, "upper ");
    text.replace(text.find("lower "), 6, "lower 0 ");
    const fs::path dir = scratch_dir();
    const std::string path = (dir / "bad.book").string();
    write_text(path, text);
    const Run r = run({"book-verify", kExample, path});
    CHECK(r.status == 1);
    CHECK(r.out.find("p3=false") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("oracle budget from the environment") {
    ::setenv("O1P_ORACLE_BUDGET", "5", 1);
    CHECK(default_oracle_budget() == 5);
    CHECK(run({"oracle", kExample}).status == 1);
    ::setenv("O1P_ORACLE_BUDGET", "many", 1);
    CHECK(run({"oracle", kExample}).status == 2);
    ::unsetenv("O1P_ORACLE_BUDGET");
    CHECK(default_oracle_budget() == 22);
}
