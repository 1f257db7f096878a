#include "o1p/verifier.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <thread>

#include "o1p/error.hpp"
#include "o1p/generators.hpp"

namespace o1p {

namespace {

class UnionFind {
  public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { reset(); }
    void reset() { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[a] = b;
        return true;
    }

  private:
    std::vector<int> parent_;
};

// Blue edges drawn in the quad embedding; true iff they triangulate it.
bool blue_triangulates(const OptimalOnePlaneGraph& g, const std::vector<char>& red_quad,
                       const std::vector<char>& red_black, const std::vector<char>& red_white) {
    const PlaneEmbedding& emb = g.embedding();
    const int n = emb.vertex_count();
    std::vector<Vertex> extra(static_cast<std::size_t>(2 * emb.edge_count()), -1);
    int edges = 0;
    for (EdgeId e = 0; e < emb.edge_count(); ++e) edges += red_quad[e] ? 0 : 1;
    for (FaceId f = 0; f < emb.face_count(); ++f) {
        const bool black = !red_black[f], white = !red_white[f];
        if (black && white) return false;  // the two cross
        if (!black && !white) continue;
        const VertexPair& d = black ? g.diagonals(f).black : g.diagonals(f).white;
        const Face& face = emb.face(f);
        const int i = face.vertices[0] == d.a || face.vertices[0] == d.b ? 0 : 1;
        extra[face.darts[i]] = face.vertices[i + 2];
        extra[face.darts[i + 2]] = face.vertices[i];
        ++edges;
    }
    if (edges != 3 * n - 6) return false;

    std::vector<std::vector<Vertex>> nbr(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        for (EdgeId e : emb.rotation(v)) {
            const Dart d = emb.dart(e, v);
            if (!red_quad[e]) nbr[v].push_back(emb.head(d));
            if (extra[d] >= 0) nbr[v].push_back(extra[d]);
        }
    if (nbr[0].empty()) return false;
    try {
        const PlaneEmbedding blue = PlaneEmbedding::from_neighbors(nbr, 0, nbr[0].front());
        for (const Face& f : blue.faces())
            if (f.length() != 3) return false;
    } catch (const Error&) {
        return false;
    }
    return true;
}

std::int64_t checked_budget(const std::string& text) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(text, &used);
        if (used == text.size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::InvalidArgument, "O1P_ORACLE_BUDGET must be a positive integer, got '" + text + "'");
}

}  // namespace

ColoringReport verify_coloring(const OptimalOnePlaneGraph& g, const RedBlueColoring& c) {
    const int n = g.vertex_count();
    const int faces = g.crossing_count();
    std::vector<char> red_quad(static_cast<std::size_t>(g.embedding().edge_count()), 0);
    std::vector<char> red_black(static_cast<std::size_t>(faces), 0), red_white(red_black);

    ColoringReport r;
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    UnionFind uf(n);
    bool acyclic = true;
    for (const EdgeRef& ref : c.red) {
        const VertexPair ends = g.endpoints(ref);
        char& mark = ref.kind == EdgeKind::Quad ? red_quad[ref.index]
                     : ref.kind == EdgeKind::BlackDiagonal ? red_black[ref.index]
                                                           : red_white[ref.index];
        if (mark) continue;
        mark = 1;
        ++r.red_count;
        r.max_red_degree = std::max({r.max_red_degree, ++deg[ends.a], ++deg[ends.b]});
        if (!uf.unite(ends.a, ends.b)) acyclic = false;
    }
    r.blue_count = g.edge_count() - r.red_count;
    r.red_is_forest = acyclic;

    std::vector<char> root_seen(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) {
        if (deg[v] == 0) continue;
        ++r.red_spanned_vertices;
        const int root = uf.find(v);
        if (!root_seen[root]) {
            root_seen[root] = 1;
            ++r.red_tree_count;
        }
    }

    r.one_red_per_pair = std::none_of(red_quad.begin(), red_quad.end(), [](char x) { return x != 0; });
    for (FaceId f = 0; f < faces && r.one_red_per_pair; ++f)
        if (red_black[f] + red_white[f] != 1) r.one_red_per_pair = false;

    r.blue_is_maximal_plane = blue_triangulates(g, red_quad, red_black, red_white);
    return r;
}

RedBlueColoring coloring_from_mask(const OptimalOnePlaneGraph& g, std::uint64_t mask) {
    const int faces = g.crossing_count();
    RedBlueColoring c;
    std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
    for (FaceId f = 0; f < faces; ++f) {
        const bool white = (mask >> (faces - 1 - f)) & 1U;
        c.red.push_back({white ? EdgeKind::WhiteDiagonal : EdgeKind::BlackDiagonal, f});
        const VertexPair& p = white ? g.diagonals(f).white : g.diagonals(f).black;
        c.max_red_degree = std::max({c.max_red_degree, ++deg[p.a], ++deg[p.b]});
    }
    return c;
}

int default_oracle_budget() {
    const char* env = std::getenv("O1P_ORACLE_BUDGET");
    if (env == nullptr || *env == '\0') return 22;
    return static_cast<int>(std::min<std::int64_t>(checked_budget(env), 1 << 20));
}

OracleResult oracle_enumerate(const OptimalOnePlaneGraph& g, const OracleOptions& options) {
    const int n = g.vertex_count();
    const int faces = g.crossing_count();
    if (faces > options.budget || faces > 62)
        throw Error(ErrorCode::TooLarge, std::to_string(faces) + " faces exceed the oracle budget of " +
                                             std::to_string(options.budget));
    if (options.threads < 1) throw Error(ErrorCode::InvalidArgument, "oracle needs at least one thread");
    for (Vertex w : options.watch)
        if (w < 0 || w >= n) throw Error(ErrorCode::InvalidArgument, "watched vertex out of range");

    // ends[2f + bit]
    std::vector<VertexPair> ends;
    for (FaceId f = 0; f < faces; ++f) {
        ends.push_back(g.diagonals(f).black);
        ends.push_back(g.diagonals(f).white);
    }
    const std::uint64_t total = std::uint64_t{1} << faces;
    const int side = n + 1;

    struct Partial {
        int best = -1;
        std::uint64_t best_mask = 0;
        std::uint64_t forests = 0;
        std::vector<std::uint64_t> hist;
        int watched = -1;
    };
    auto work = [&](std::uint64_t lo, std::uint64_t hi, Partial& out) {
        out.hist.assign(static_cast<std::size_t>(side) * side * side, 0);
        std::vector<int> deg(static_cast<std::size_t>(n));
        UnionFind uf(n);
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            std::fill(deg.begin(), deg.end(), 0);
            uf.reset();
            bool acyclic = true;
            int maxd = 0;
            for (int f = 0; f < faces; ++f) {
                const VertexPair& e = ends[2 * f + ((mask >> (faces - 1 - f)) & 1U)];
                maxd = std::max({maxd, ++deg[e.a], ++deg[e.b]});
                if (!uf.unite(e.a, e.b)) acyclic = false;
            }
            if (out.best < 0 || maxd < out.best) {
                out.best = maxd;
                out.best_mask = mask;
            }
            if (!acyclic) continue;
            ++out.forests;
            int trees = 0, spanned = 0;
            for (Vertex v = 0; v < n; ++v) {
                if (deg[v] == 0) continue;
                ++spanned;
                if (uf.find(v) == v) ++trees;
            }
            ++out.hist[(static_cast<std::size_t>(trees) * side + spanned) * side + maxd];
            if (!options.watch.empty()) {
                int w = 0;
                for (Vertex v : options.watch) w = std::max(w, deg[v]);
                if (out.watched < 0 || w < out.watched) out.watched = w;
            }
        }
    };

    const auto workers = static_cast<std::uint64_t>(std::min<std::uint64_t>(options.threads, total));
    std::vector<Partial> parts(workers);
    if (workers == 1) {
        work(0, total, parts[0]);
    } else {
        std::vector<std::thread> pool;
        for (std::uint64_t i = 0; i < workers; ++i)
            pool.emplace_back(work, total * i / workers, total * (i + 1) / workers, std::ref(parts[i]));
        for (auto& t : pool) t.join();
    }

    OracleResult result;
    result.selections = total;
    result.min_max_degree = -1;
    std::uint64_t best_mask = 0;
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(side) * side * side, 0);
    for (const Partial& p : parts) {
        // chunks are in mask order, so the first strict improvement wins ties
        if (p.best >= 0 && (result.min_max_degree < 0 || p.best < result.min_max_degree)) {
            result.min_max_degree = p.best;
            best_mask = p.best_mask;
        }
        result.forest_colorings += p.forests;
        for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += p.hist[i];
        if (p.watched >= 0 && (!result.watched_min_max_degree || p.watched < *result.watched_min_max_degree))
            result.watched_min_max_degree = p.watched;
    }
    for (std::size_t i = 0; i < hist.size(); ++i)
        if (hist[i] != 0) {
            const int d = static_cast<int>(i % side);
            const int s = static_cast<int>(i / side % side);
            const int t = static_cast<int>(i / side / side);
            result.forest_stats[{t, s, d}] = hist[i];
        }
    result.witness = coloring_from_mask(g, best_mask);
    return result;
}

bool lemma1_counting_check(const ColoringReport& report, int n) {
    if (!report.red_is_forest) throw Error(ErrorCode::InvalidArgument, "counting check needs a forest coloring");
    return report.red_tree_count == 2 && report.red_spanned_vertices == n;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }

GridCertificate lemma4_certificate(int h) {
    if (h < 3) throw Error(ErrorCode::InvalidArgument, "grid certificate needs h >= 3");
    GridCertificate c;
    const std::int64_t hh = h;
    c.h = h;
    c.red_endpoints = 2 * (5 * hh * hh - 8 * hh + 2);
    c.gray_endpoints = 6 * (hh - 1) * (hh - 1);
    c.black_vertices = hh * hh;
    c.bound = make_rational(c.red_endpoints - c.gray_endpoints, c.black_vertices);
    c.no_degree_3_coloring = Rational{3, 1} < c.bound;
    return c;
}

bool gray_cycle_degree_check(const OptimalOnePlaneGraph& g, const RedBlueColoring& selection) {
    const int n = g.vertex_count();
    int h = 3;
    while (5 * h * h - 8 * h + 4 < n) ++h;
    if (5 * h * h - 8 * h + 4 != n)
        throw Error(ErrorCode::NotGridFamily, "vertex count " + std::to_string(n) + " matches no grid size");
    const PlaneEmbedding& emb = g.embedding();
    const auto cycles = grid_gray_cycles(h);
    for (const auto& cyc : cycles)
        for (int k = 0; k < 4; ++k)
            if (emb.degree(cyc[k]) != 3 || !emb.find_edge(cyc[k], cyc[(k + 1) % 4]))
                throw Error(ErrorCode::NotGridFamily, "vertex " + std::to_string(cyc[k]) + " is not on a gray cycle");

    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const EdgeRef& r : selection.red) {
        const VertexPair e = g.endpoints(r);
        ++deg[e.a];
        ++deg[e.b];
    }
    return std::all_of(cycles.begin(), cycles.end(), [&](const auto& cyc) {
        return deg[cyc[0]] + deg[cyc[1]] + deg[cyc[2]] + deg[cyc[3]] == 6;
    });
}

}  // namespace o1p
