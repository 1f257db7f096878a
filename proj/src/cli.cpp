#include "o1p/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "o1p/error.hpp"
#include "o1p/generators.hpp"
#include "o1p/io.hpp"
#include "o1p/verifier.hpp"

namespace o1p {

namespace {

using Json = nlohmann::ordered_json;

// Key=value lines, mirrored into the JSON report.
class Report {
  public:
    explicit Report(std::string command) { json_["format"] = "RPT/1"; json_["command"] = std::move(command); }

    template <class T>
    void add(const std::string& key, const T& value) {
        json_["result"][key] = value;
        text_ << key << '=' << format(value) << '\n';
    }
    void add_line(const std::string& line) { text_ << line << '\n'; }
    Json& json() { return json_; }
    std::string text() const { return text_.str(); }

  private:
    template <class T>
    static std::string format(const T& v) {
        if constexpr (std::is_same_v<T, bool>)
            return v ? "true" : "false";
        else if constexpr (std::is_convertible_v<T, std::string>)
            return std::string(v);
        else {
            std::ostringstream s;
            s << v;
            return s.str();
        }
    }

    Json json_;
    std::ostringstream text_;
};

class Io {
  public:
    Io(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

    std::string read(const std::string& path) {
        if (path != "-") return read_text(path);
        if (stdin_used_) throw Error(ErrorCode::InvalidArgument, "stdin can feed only one input");
        stdin_used_ = true;
        std::ostringstream buf;
        buf << in_.rdbuf();
        return buf.str();
    }
    void write(const std::string& path, const std::string& text) {
        if (path == "-") {
            out_ << text;
            stdout_used_ = true;
        } else {
            write_text(path, text);
        }
    }
    // Summary lines go to stdout unless an artifact already went there.
    void summary(const std::string& text, std::ostream& err) { (stdout_used_ ? err : out_) << text; }

  private:
    std::istream& in_;
    std::ostream& out_;
    bool stdin_used_ = false;
    bool stdout_used_ = false;
};

std::string rational_text(const Rational& r) { return std::to_string(r.num) + "/" + std::to_string(r.den); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Red-blue edge partitions of optimal 1-plane graphs", "o1p"};
    app.require_subcommand(1);
    Io io(in, out);

    // gen
    std::string family, gen_out = "-";
    int k = 0, h = 0, n = 0;
    std::uint64_t seed = 0;
    auto* gen = app.add_subcommand("gen", "Generate an instance as O1P/1");
    gen->set_help_flag("--help", "Print this help message and exit");
    gen->add_option("--family", family, "lemma2, grid, example or random")
        ->required()
        ->check(CLI::IsMember({"lemma2", "grid", "example", "random"}));
    gen->add_option("--k", k, "lemma2: number of disjoint edges")->check(CLI::PositiveNumber);
    gen->add_option("--h", h, "grid: side length (>= 3)")->check(CLI::PositiveNumber);
    gen->add_option("--n", n, "random: vertex count (>= 8, not 9)")->check(CLI::PositiveNumber);
    gen->add_option("--seed", seed, "random: seed");
    gen->add_option("--out", gen_out, "output path");

    // partition
    std::string part_in = "-", part_out = "-", part_dot, part_book, part_report;
    bool trusted = false;
    auto* part = app.add_subcommand("partition", "Pick one red diagonal per face (RBC/1)");
    part->add_option("input", part_in, "O1P/1 graph");
    part->add_option("--out", part_out, "RBC/1 output path");
    part->add_option("--dot", part_dot, "also write a DOT drawing");
    part->add_option("--book", part_book, "use this BOOK/1 embedding instead of computing one");
    part->add_option("--report", part_report, "RPT/1 report path");
    part->add_flag("--trusted", trusted, "skip the 3-connectivity check");

    // triangulate
    std::string tri_in = "-", tri_out = "-";
    auto* tri = app.add_subcommand("triangulate", "Triangulate a quadrangulation, adding at most 4 edges per vertex");
    tri->add_option("input", tri_in, "O1P/1 quadrangulation");
    tri->add_option("--out", tri_out, "O1P/1 output path");
    tri->add_flag("--trusted", trusted, "skip the 3-connectivity check");

    // book-embed
    std::string be_in = "-", be_out = "-", be_svg;
    auto* be = app.add_subcommand("book-embed", "Compute a 2-page book embedding (BOOK/1)");
    be->add_option("input", be_in, "O1P/1 graph");
    be->add_option("--out", be_out, "BOOK/1 output path");
    be->add_option("--svg", be_svg, "also write an SVG drawing");
    be->add_flag("--trusted", trusted, "skip the 3-connectivity check");

    // book-verify
    std::string bv_in, bv_book;
    auto* bv = app.add_subcommand("book-verify", "Check p1-p3 and page planarity of a book embedding");
    bv->add_option("input", bv_in, "O1P/1 graph")->required();
    bv->add_option("book", bv_book, "BOOK/1 file")->required();
    bv->add_flag("--trusted", trusted, "skip the 3-connectivity check");

    // verify
    std::string vf_in, vf_col, vf_report;
    int vf_max = 4;
    auto* vf = app.add_subcommand("verify", "Recompute every property of a coloring");
    vf->add_option("input", vf_in, "O1P/1 graph")->required();
    vf->add_option("coloring", vf_col, "RBC/1 coloring")->required();
    vf->add_option("--max-degree", vf_max, "fail if the red degree exceeds this")->capture_default_str();
    vf->add_option("--report", vf_report, "RPT/1 report path");
    vf->add_flag("--trusted", trusted, "skip the 3-connectivity check");

    // oracle
    std::string or_in, or_report;
    int budget = 0, threads = 1;
    std::vector<int> watch;
    auto* orc = app.add_subcommand("oracle", "Enumerate every diagonal selection (small graphs)");
    orc->add_option("input", or_in, "O1P/1 graph")->required();
    orc->add_option("--budget", budget, "max faces (default: $O1P_ORACLE_BUDGET or 22)")->check(CLI::PositiveNumber);
    orc->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    orc->add_option("--watch", watch, "vertices whose largest red degree is minimised over forest colorings")
        ->delimiter(',');
    orc->add_option("--report", or_report, "RPT/1 report path");
    orc->add_flag("--trusted", trusted, "skip the 3-connectivity check");

    // certify-grid
    int cg_h = 0;
    std::string cg_report;
    auto* cg = app.add_subcommand("certify-grid", "Degree-counting lower bound on the grid family");
    cg->set_help_flag("--help", "Print this help message and exit");
    cg->add_option("--h", cg_h, "grid side length (>= 3)")->required();
    cg->add_option("--report", cg_report, "RPT/1 report path");

    // export
    std::string ex_in, ex_format, ex_col, ex_book, ex_out = "-";
    auto* exp = app.add_subcommand("export", "Draw a graph as DOT or SVG");
    exp->add_option("input", ex_in, "O1P/1 graph")->required();
    exp->add_option("--format", ex_format, "dot or svg")->required()->check(CLI::IsMember({"dot", "svg"}));
    exp->add_option("--coloring", ex_col, "RBC/1 coloring (dot)");
    exp->add_option("--book", ex_book, "BOOK/1 embedding (svg; computed if absent)");
    exp->add_option("--out", ex_out, "output path");
    exp->add_flag("--trusted", trusted, "skip the 3-connectivity check");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "o1p: " << e.what() << '\n';
        return 2;
    }

    const ValidationOptions vopt{trusted};
    auto write_report = [&](const std::string& path, Report& r) {
        if (!path.empty()) io.write(path, r.json().dump(2) + "\n");
    };

    try {
        if (gen->parsed()) {
            FamilyParams p;
            if (family == "lemma2") {
                if (k <= 0) throw Error(ErrorCode::InvalidArgument, "lemma2 needs --k");
                p = {Family::Lemma2, k, 0};
            } else if (family == "grid") {
                if (h <= 0) throw Error(ErrorCode::InvalidArgument, "grid needs --h");
                p = {Family::Grid, h, 0};
            } else if (family == "random") {
                if (n <= 0) throw Error(ErrorCode::InvalidArgument, "random needs --n");
                p = {Family::Random, n, seed};
            } else {
                p = {Family::Example, 0, 0};
            }
            io.write(gen_out, serialize_o1p(generate(p)));
            return 0;
        }
        if (part->parsed()) {
            const OptimalOnePlaneGraph g = load_optimal(io.read(part_in), vopt);
            RedBlueColoring c;
            if (part_book.empty())
                c = diag_picker(g);
            else
                c = diag_picker(g, parse_book(io.read(part_book), g.quad()));
            io.write(part_out, serialize_rbc(c, g));
            if (!part_dot.empty()) io.write(part_dot, export_dot(g, &c));
            Report r("partition");
            r.add("n", g.vertex_count());
            r.add("red_count", static_cast<int>(c.red.size()));
            r.add("max_red_degree", c.max_red_degree);
            write_report(part_report, r);
            io.summary(r.text(), err);
            return 0;
        }
        if (tri->parsed()) {
            const OptimalOnePlaneGraph g = load_optimal(io.read(tri_in), vopt);
            const Triangulation t = triangulate_quadrangulation(g.quad());
            io.write(tri_out, serialize_o1p(t.graph));
            Report r("triangulate");
            r.add("n", t.graph.vertex_count());
            r.add("edges", t.graph.edge_count());
            r.add("quad_max_degree", t.quad_max_degree);
            r.add("max_degree", t.max_degree);
            r.add("max_added_degree", t.max_added_degree);
            io.summary(r.text(), err);
            return 0;
        }
        if (be->parsed()) {
            const OptimalOnePlaneGraph g = load_optimal(io.read(be_in), vopt);
            const BookEmbedding book = book_embed(g.quad());
            io.write(be_out, serialize_book(book));
            if (!be_svg.empty()) io.write(be_svg, export_svg(g.quad(), book));
            return 0;
        }
        if (bv->parsed()) {
            const OptimalOnePlaneGraph g = load_optimal(io.read(bv_in), vopt);
            const BookEmbedding book = parse_book(io.read(bv_book), g.quad());
            const BookReport br = verify_p1p2p3(g.quad(), book);
            Report r("book-verify");
            r.add("p1", br.p1);
            r.add("p2", br.p2);
            r.add("p3", br.p3);
            r.add("noncrossing", br.noncrossing);
            r.add("ok", br.ok());
            out << r.text();
            return br.ok() ? 0 : 1;
        }
        if (vf->parsed()) {
            const OptimalOnePlaneGraph g = load_optimal(io.read(vf_in), vopt);
            const RedBlueColoring c = parse_rbc(io.read(vf_col), g);
            const ColoringReport cr = verify_coloring(g, c);
            const bool ok = cr.one_red_per_pair && cr.blue_is_maximal_plane && cr.max_red_degree <= vf_max;
            Report r("verify");
            r.add("n", g.vertex_count());
            r.add("red_count", cr.red_count);
            r.add("blue_count", cr.blue_count);
            r.add("max_red_degree", cr.max_red_degree);
            r.add("red_is_forest", cr.red_is_forest);
            r.add("red_tree_count", cr.red_tree_count);
            r.add("red_spanned_vertices", cr.red_spanned_vertices);
            r.add("blue_is_maximal_plane", cr.blue_is_maximal_plane);
            r.add("one_red_per_pair", cr.one_red_per_pair);
            if (cr.red_is_forest) r.add("two_spanning_trees", lemma1_counting_check(cr, g.vertex_count()));
            r.add("ok", ok);
            write_report(vf_report, r);
            io.summary(r.text(), err);
            return ok ? 0 : 1;
        }
        if (orc->parsed()) {
            const OptimalOnePlaneGraph g = load_optimal(io.read(or_in), vopt);
            OracleOptions opt;
            opt.budget = budget > 0 ? budget : default_oracle_budget();
            opt.threads = threads;
            opt.watch.assign(watch.begin(), watch.end());
            const OracleResult res = oracle_enumerate(g, opt);
            Report r("oracle");
            r.add("faces", g.crossing_count());
            r.add("selections", res.selections);
            r.add("min_max_degree", res.min_max_degree);
            std::string witness;
            for (const EdgeRef& e : res.witness.red) witness += e.kind == EdgeKind::BlackDiagonal ? 'b' : 'w';
            r.add("witness", witness);
            r.add("forest_colorings", res.forest_colorings);
            bool two_trees = true;
            Json stats = Json::array();
            for (const auto& [key, count] : res.forest_stats) {
                const auto [trees, spanned, maxd] = key;
                two_trees = two_trees && trees == 2 && spanned == g.vertex_count();
                r.add_line("forest trees=" + std::to_string(trees) + " spanned=" + std::to_string(spanned) +
                           " max_degree=" + std::to_string(maxd) + " count=" + std::to_string(count));
                stats.push_back({{"trees", trees}, {"spanned", spanned}, {"max_degree", maxd}, {"count", count}});
            }
            r.json()["result"]["forest_stats"] = stats;
            r.add("all_forests_two_spanning_trees", two_trees);
            if (res.watched_min_max_degree) r.add("watched_min_max_degree", *res.watched_min_max_degree);
            write_report(or_report, r);
            io.summary(r.text(), err);
            return 0;
        }
        if (cg->parsed()) {
            const GridCertificate c = lemma4_certificate(cg_h);
            Report r("certify-grid");
            r.add("h", c.h);
            r.add("red_endpoints", c.red_endpoints);
            r.add("gray_endpoints", c.gray_endpoints);
            r.add("black_vertices", c.black_vertices);
            r.add("bound", rational_text(c.bound));
            r.add("bound_value", c.bound.value());
            r.add("no_degree_3_coloring", c.no_degree_3_coloring);
            write_report(cg_report, r);
            io.summary(r.text(), err);
            return 0;
        }
        if (exp->parsed()) {
            const OptimalOnePlaneGraph g = load_optimal(io.read(ex_in), vopt);
            if (ex_format == "dot") {
                if (ex_col.empty()) {
                    io.write(ex_out, export_dot(g));
                } else {
                    const RedBlueColoring c = parse_rbc(io.read(ex_col), g);
                    io.write(ex_out, export_dot(g, &c));
                }
            } else {
                const BookEmbedding book = ex_book.empty() ? book_embed(g.quad()) : parse_book(io.read(ex_book), g.quad());
                io.write(ex_out, export_svg(g.quad(), book));
            }
            return 0;
        }
    } catch (const Error& e) {
        err << "o1p: " << e.what() << '\n';
        return e.code() == ErrorCode::InvalidArgument ? 2 : 1;
    } catch (const std::exception& e) {
        err << "o1p: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace o1p
