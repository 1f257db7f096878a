#include "o1p/io.hpp"

#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "o1p/error.hpp"

namespace o1p {

namespace {

// Non-blank, non-comment lines split into words, with 1-based line numbers.
struct Line {
    int number = 0;
    std::vector<std::string_view> words;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string_view raw = text.substr(start, end - start);
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            std::size_t j = i;
            while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
            if (j > i) line.words.push_back(raw.substr(i, j - i));
            i = j;
        }
        if (!line.words.empty()) out.push_back(std::move(line));
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

int to_int(const Line& line, std::size_t k, int lo, int hi, const char* what) {
    if (k >= line.words.size()) parse_fail(line.number, std::string("missing ") + what);
    const std::string_view w = line.words[k];
    int v = 0;
    const auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (ec != std::errc{} || ptr != w.data() + w.size()) parse_fail(line.number, "bad " + std::string(what) + " '" + std::string(w) + "'");
    if (v < lo || v > hi) parse_fail(line.number, std::string(what) + " " + std::to_string(v) + " out of range");
    return v;
}

void expect_words(const Line& line, std::size_t count) {
    if (line.words.size() != count)
        parse_fail(line.number, "expected " + std::to_string(count - 1) + " values after '" +
                                    std::string(line.words[0]) + "'");
}

const std::vector<Line>& expect_header(const std::vector<Line>& lines, std::string_view header) {
    if (lines.empty()) parse_fail(1, "empty input, expected " + std::string(header));
    if (lines[0].words.size() != 1 || lines[0].words[0] != header)
        parse_fail(lines[0].number, "expected header " + std::string(header));
    return lines;
}

template <class F>
auto wrap_validation(F&& build) {
    try {
        return build();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::ValidationError) throw;
        throw Error(ErrorCode::ValidationError, e.code(), e.what());
    }
}

}  // namespace

O1PFile parse_o1p(std::string_view text) {
    const auto lines = split_lines(text);
    expect_header(lines, "O1P/1");
    constexpr int kMax = 1 << 28;

    int n = -1;
    std::vector<Edge> edges;
    std::vector<char> edge_seen;
    std::vector<std::pair<int, Line>> rot_lines;
    const Line* outer = nullptr;
    std::vector<CrossingPair> crossings;
    std::vector<Line> edge_lines;

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const std::string_view key = line.words[0];
        if (key == "n") {
            if (n >= 0) parse_fail(line.number, "repeated n");
            expect_words(line, 2);
            n = to_int(line, 1, 1, kMax, "vertex count");
        } else if (key == "edge") {
            expect_words(line, 4);
            edge_lines.push_back(line);
        } else if (key == "rot") {
            if (line.words.size() < 2) parse_fail(line.number, "rot needs a vertex");
            rot_lines.push_back({line.number, line});
        } else if (key == "outer") {
            if (outer) parse_fail(line.number, "repeated outer");
            outer = &line;
        } else if (key == "diag") {
            expect_words(line, 6);
            CrossingPair cp;
            cp.face = to_int(line, 1, 0, kMax, "face id");
            cp.first = {to_int(line, 2, 0, kMax, "vertex"), to_int(line, 3, 0, kMax, "vertex")};
            cp.second = {to_int(line, 4, 0, kMax, "vertex"), to_int(line, 5, 0, kMax, "vertex")};
            crossings.push_back(cp);
        } else {
            parse_fail(line.number, "unknown keyword '" + std::string(key) + "'");
        }
    }
    if (n < 0) parse_fail(lines.back().number, "missing n line");
    if (!outer) parse_fail(lines.back().number, "missing outer line");

    const int m = static_cast<int>(edge_lines.size());
    edges.assign(static_cast<std::size_t>(m), Edge{});
    edge_seen.assign(static_cast<std::size_t>(m), 0);
    for (const Line& line : edge_lines) {
        const int id = to_int(line, 1, 0, m - 1, "edge id");
        if (edge_seen[id]) parse_fail(line.number, "repeated edge id " + std::to_string(id));
        edge_seen[id] = 1;
        edges[id] = {to_int(line, 2, 0, n - 1, "vertex"), to_int(line, 3, 0, n - 1, "vertex")};
    }
    std::vector<std::vector<EdgeId>> rotation(static_cast<std::size_t>(n));
    std::vector<char> rot_seen(static_cast<std::size_t>(n), 0);
    for (const auto& [number, line] : rot_lines) {
        const int v = to_int(line, 1, 0, n - 1, "vertex");
        if (rot_seen[v]) parse_fail(number, "repeated rot for vertex " + std::to_string(v));
        rot_seen[v] = 1;
        for (std::size_t k = 2; k < line.words.size(); ++k) rotation[v].push_back(to_int(line, k, 0, m - 1, "edge id"));
    }
    for (const CrossingPair& cp : crossings)
        for (Vertex v : {cp.first.a, cp.first.b, cp.second.a, cp.second.b})
            if (v >= n) throw Error(ErrorCode::ParseError, "diag vertex " + std::to_string(v) + " out of range");
    std::vector<Vertex> walk;
    for (std::size_t k = 1; k < outer->words.size(); ++k) walk.push_back(to_int(*outer, k, 0, n - 1, "vertex"));

    PlaneEmbedding emb = wrap_validation([&] { return PlaneEmbedding(n, edges, rotation, 0); });
    const auto outer_face = emb.find_face(walk);
    if (!outer_face) parse_fail(outer->number, "outer walk is not a face of the rotation system");
    if (*outer_face != 0) emb = PlaneEmbedding(n, std::move(edges), std::move(rotation), *outer_face);
    return {std::move(emb), std::move(crossings)};
}

OptimalOnePlaneGraph load_optimal(std::string_view text, ValidationOptions options) {
    const O1PFile file = parse_o1p(text);
    try {
        const Quadrangulation quad = file.crossings.empty()
                                         ? validate_quadrangulation(file.embedding, options)
                                         : extract_quadrangulation({file.embedding, file.crossings}, options);
        return build_optimal(quad);
    } catch (const Error& e) {
        throw Error(ErrorCode::ValidationError, ErrorCode::NotOptimal,
                    e.code() == ErrorCode::NotOptimal ? e.what() : "NotOptimal: " + std::string(e.what()));
    }
}

std::string serialize_o1p(const PlaneEmbedding& emb) {
    std::ostringstream out;
    out << "O1P/1\nn " << emb.vertex_count() << '\n';
    for (EdgeId e = 0; e < emb.edge_count(); ++e) out << "edge " << e << ' ' << emb.edge(e).u << ' ' << emb.edge(e).v << '\n';
    for (Vertex v = 0; v < emb.vertex_count(); ++v) {
        out << "rot " << v;
        for (EdgeId e : emb.rotation(v)) out << ' ' << e;
        out << '\n';
    }
    out << "outer";
    for (Vertex v : emb.face(emb.outer_face()).vertices) out << ' ' << v;
    out << '\n';
    return out.str();
}

std::string serialize_o1p(const OptimalOnePlaneGraph& g) {
    std::string s = serialize_o1p(g.embedding());
    std::ostringstream out;
    for (FaceId f = 0; f < g.crossing_count(); ++f) {
        const FaceDiagonals& d = g.diagonals(f);
        out << "diag " << f << ' ' << d.black.a << ' ' << d.black.b << ' ' << d.white.a << ' ' << d.white.b << '\n';
    }
    return s + out.str();
}

BookEmbedding parse_book(std::string_view text, const Quadrangulation& quad) {
    const auto lines = split_lines(text);
    expect_header(lines, "BOOK/1");
    const int n = quad.vertex_count();
    const int m = quad.embedding().edge_count();
    BookEmbedding book;
    std::vector<char> assigned(static_cast<std::size_t>(m), 0);
    book.page.assign(static_cast<std::size_t>(m), Page::Upper);
    bool have_spine = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const std::string_view key = line.words[0];
        if (key == "spine") {
            if (have_spine) parse_fail(line.number, "repeated spine");
            have_spine = true;
            for (std::size_t k = 1; k < line.words.size(); ++k)
                book.spine.push_back(to_int(line, k, 0, std::max(n - 1, 0), "vertex"));
        } else if (key == "upper" || key == "lower") {
            for (std::size_t k = 1; k < line.words.size(); ++k) {
                const int e = to_int(line, k, 0, m - 1, "edge id");
                if (assigned[e]) throw Error(ErrorCode::MalformedBook, "edge " + std::to_string(e) + " placed twice");
                assigned[e] = 1;
                book.page[e] = key == "upper" ? Page::Upper : Page::Lower;
            }
        } else {
            parse_fail(line.number, "unknown keyword '" + std::string(key) + "'");
        }
    }
    if (!have_spine) parse_fail(lines.back().number, "missing spine line");
    if (static_cast<int>(book.spine.size()) != n)
        throw Error(ErrorCode::MalformedBook, "spine has " + std::to_string(book.spine.size()) + " vertices, expected " +
                                                  std::to_string(n));
    if (const auto it = std::find(assigned.begin(), assigned.end(), 0); it != assigned.end())
        throw Error(ErrorCode::MalformedBook, "edge " + std::to_string(it - assigned.begin()) + " has no page");
    book.s_b = book.spine.front();
    book.t_b = book.spine.back();
    return book;
}

std::string serialize_book(const BookEmbedding& book) {
    std::ostringstream out;
    out << "BOOK/1\nspine";
    for (Vertex v : book.spine) out << ' ' << v;
    for (Page p : {Page::Upper, Page::Lower}) {
        out << (p == Page::Upper ? "\nupper" : "\nlower");
        for (std::size_t e = 0; e < book.page.size(); ++e)
            if (book.page[e] == p) out << ' ' << e;
    }
    out << '\n';
    return out.str();
}

RedBlueColoring parse_rbc(std::string_view text, const OptimalOnePlaneGraph& g) {
    const auto lines = split_lines(text);
    expect_header(lines, "RBC/1");
    RedBlueColoring c;
    std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
    bool have_stats = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const std::string_view key = line.words[0];
        if (key == "red") {
            if (have_stats) parse_fail(line.number, "red line after stats");
            expect_words(line, 4);
            const int f = to_int(line, 1, 0, 1 << 28, "face id");
            const int u = to_int(line, 2, 0, 1 << 28, "vertex");
            const int v = to_int(line, 3, 0, 1 << 28, "vertex");
            if (f >= g.crossing_count())
                throw Error(ErrorCode::ForeignEdge, "line " + std::to_string(line.number) + ": no face " + std::to_string(f));
            const FaceDiagonals& d = g.diagonals(f);
            EdgeRef ref;
            if (d.black.same(u, v))
                ref = {EdgeKind::BlackDiagonal, f};
            else if (d.white.same(u, v))
                ref = {EdgeKind::WhiteDiagonal, f};
            else
                throw Error(ErrorCode::ForeignEdge, "line " + std::to_string(line.number) + ": " + std::to_string(u) +
                                                        "-" + std::to_string(v) + " is not a diagonal of face " +
                                                        std::to_string(f));
            c.red.push_back(ref);
            c.max_red_degree = std::max({c.max_red_degree, ++deg[u], ++deg[v]});
        } else if (key == "stats") {
            if (have_stats) parse_fail(line.number, "repeated stats");
            have_stats = true;
            for (std::size_t k = 1; k < line.words.size(); ++k)
                if (line.words[k].find('=') == std::string_view::npos) parse_fail(line.number, "stats entries are key=value");
        } else {
            parse_fail(line.number, "unknown keyword '" + std::string(key) + "'");
        }
    }
    return c;
}

std::string serialize_rbc(const RedBlueColoring& c, const OptimalOnePlaneGraph& g) {
    std::ostringstream out;
    out << "RBC/1\n";
    for (const EdgeRef& r : c.red) {
        if (r.kind == EdgeKind::Quad) throw Error(ErrorCode::InvalidArgument, "RBC/1 only stores diagonals");
        const VertexPair e = g.endpoints(r);
        out << "red " << r.index << ' ' << e.a << ' ' << e.b << '\n';
    }
    out << "stats max_red_degree=" << c.max_red_degree << '\n';
    return out.str();
}

std::string export_dot(const OptimalOnePlaneGraph& g, const RedBlueColoring* coloring) {
    const Quadrangulation& quad = g.quad();
    std::vector<char> red_black(static_cast<std::size_t>(g.crossing_count()), 0), red_white(red_black);
    if (coloring)
        for (const EdgeRef& r : coloring->red) {
            g.endpoints(r);
            if (r.kind == EdgeKind::BlackDiagonal) red_black[r.index] = 1;
            if (r.kind == EdgeKind::WhiteDiagonal) red_white[r.index] = 1;
        }
    std::ostringstream out;
    out << "graph G {\n  node [shape=circle, style=filled];\n";
    for (Vertex v = 0; v < quad.vertex_count(); ++v) {
        out << "  " << v
            << (quad.color(v) == Color::Black ? " [fillcolor=black, fontcolor=white];\n" : " [fillcolor=white];\n");
    }
    const char* quad_color = coloring ? " [color=blue]" : "";
    for (const Edge& e : quad.embedding().edges()) out << "  " << e.u << " -- " << e.v << quad_color << ";\n";
    for (FaceId f = 0; f < g.crossing_count(); ++f) {
        const FaceDiagonals& d = g.diagonals(f);
        for (int k = 0; k < 2; ++k) {
            const VertexPair& p = k == 0 ? d.black : d.white;
            const bool red = k == 0 ? red_black[f] : red_white[f];
            out << "  " << p.a << " -- " << p.b << " [style=dashed, tooltip=\"crossing " << f << "\"";
            if (coloring) out << ", color=" << (red ? "red" : "blue");
            out << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string export_svg(const Quadrangulation& quad, const BookEmbedding& book) {
    const int n = quad.vertex_count();
    constexpr int kGap = 40;
    const int width = kGap * (n + 1);
    const int half = kGap * n / 2 + kGap;
    const int height = 2 * half;
    const auto pos = book.positions();
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 "
        << width << ' ' << height << "\">\n";
    out << "  <line x1=\"" << kGap / 2 << "\" y1=\"" << half << "\" x2=\"" << width - kGap / 2 << "\" y2=\"" << half
        << "\" stroke=\"#bbb\"/>\n";
    for (EdgeId e = 0; e < quad.embedding().edge_count(); ++e) {
        const Edge& ed = quad.embedding().edge(e);
        const int x1 = kGap * (std::min(pos[ed.u], pos[ed.v]) + 1);
        const int x2 = kGap * (std::max(pos[ed.u], pos[ed.v]) + 1);
        const int r = (x2 - x1) / 2;
        const int sweep = book.page[e] == Page::Upper ? 1 : 0;
        out << "  <path d=\"M " << x1 << ' ' << half << " A " << r << ' ' << r << " 0 0 " << sweep << ' ' << x2 << ' '
            << half << "\" fill=\"none\" stroke=\"black\"/>\n";
    }
    for (int i = 0; i < n; ++i) {
        const Vertex v = book.spine[i];
        const bool black = quad.color(v) == Color::Black;
        out << "  <circle cx=\"" << kGap * (i + 1) << "\" cy=\"" << half << "\" r=\"8\" fill=\""
            << (black ? "black" : "white") << "\" stroke=\"black\"/>\n";
        out << "  <text x=\"" << kGap * (i + 1) << "\" y=\"" << half + 24 << "\" font-size=\"10\" text-anchor=\"middle\">"
            << v << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw Error(ErrorCode::IoError, "cannot read " + path);
    return buf.str();
}

void write_text(const std::string& path, std::string_view text) {
    const std::string tmp = path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorCode::IoError, "cannot create " + tmp);
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
        out.flush();
        if (!out) {
            std::remove(tmp.c_str());
            throw Error(ErrorCode::IoError, "cannot write " + tmp);
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::remove(tmp.c_str());
        throw Error(ErrorCode::IoError, "cannot rename " + tmp + " to " + path + ": " + ec.message());
    }
}

}  // namespace o1p
