#include "o1p/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <unordered_map>

#include "o1p/error.hpp"

namespace o1p {

namespace {

struct Point {
    double x, y;
};

// ccw neighbour lists of a straight-line drawing
std::vector<std::vector<Vertex>> rotation_from_points(const std::vector<Point>& pts,
                                                      const std::vector<std::array<Vertex, 2>>& edges) {
    std::vector<std::vector<Vertex>> nbr(pts.size());
    for (const auto& [a, b] : edges) {
        nbr[a].push_back(b);
        nbr[b].push_back(a);
    }
    for (std::size_t v = 0; v < pts.size(); ++v) {
        std::sort(nbr[v].begin(), nbr[v].end(), [&](Vertex a, Vertex b) {
            return std::atan2(pts[a].y - pts[v].y, pts[a].x - pts[v].x) <
                   std::atan2(pts[b].y - pts[v].y, pts[b].x - pts[v].x);
        });
    }
    return nbr;
}

FaceId face_with_vertices(const PlaneEmbedding& emb, Vertex a, Vertex b) {
    for (FaceId f = 0; f < emb.face_count(); ++f) {
        const auto& c = emb.face(f).vertices;
        if (std::find(c.begin(), c.end(), a) != c.end() && std::find(c.begin(), c.end(), b) != c.end()) return f;
    }
    throw Error(ErrorCode::InvalidArgument, "no face holds both vertices");
}

PlaneEmbedding with_outer(const PlaneEmbedding& emb, FaceId outer) {
    const Dart d = emb.face(outer).darts.front();
    std::vector<std::vector<Vertex>> nbr(static_cast<std::size_t>(emb.vertex_count()));
    for (Vertex v = 0; v < emb.vertex_count(); ++v) nbr[v] = emb.neighbors(v);
    return PlaneEmbedding::from_neighbors(nbr, emb.tail(d), emb.head(d));
}

// Vertex-face incidence graph of a plane graph: its vertices stay (black),
// each face becomes a white vertex placed after them.
PlaneEmbedding angle_graph(const PlaneEmbedding& plane) {
    const int nb = plane.vertex_count();
    std::vector<std::vector<Vertex>> nbr(static_cast<std::size_t>(nb + plane.face_count()));
    for (Vertex v = 0; v < nb; ++v)
        for (EdgeId e : plane.rotation(v)) nbr[v].push_back(nb + plane.face_of(plane.dart(e, v)));
    for (FaceId f = 0; f < plane.face_count(); ++f) nbr[nb + f] = plane.face(f).vertices;
    return PlaneEmbedding::from_neighbors(nbr, 0, nbr[0].front());
}

std::uint64_t pair_key(Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}

// Quadrangulation under construction: ccw neighbour lists plus a count of
// every pair of opposite face corners. The graph stays 3-connected as long
// as no pair is counted twice.
class GrowingQuad {
  public:
    explicit GrowingQuad(std::vector<std::vector<Vertex>> nbr) : nbr_(std::move(nbr)) {
        for (Vertex v = 0; v < size(); ++v)
            for (int i = 0; i < degree(v); ++i) {
                const auto c = face(v, i);
                if (c[0] == *std::min_element(c.begin(), c.end()) && is_first_dart(c, v, i)) {
                    ++pairs_[pair_key(c[0], c[2])];
                    ++pairs_[pair_key(c[1], c[3])];
                }
            }
    }

    int size() const { return static_cast<int>(nbr_.size()); }
    int degree(Vertex v) const { return static_cast<int>(nbr_[v].size()); }
    const std::vector<std::vector<Vertex>>& neighbors() const { return nbr_; }

    // Corners of the face holding the angle after nbr[v][i], starting at v.
    std::array<Vertex, 4> face(Vertex v, int i) const {
        std::array<Vertex, 4> c{};
        Vertex tail = v, head = nbr_[v][i];
        for (int k = 0; k < 4; ++k) {
            c[k] = tail;
            const auto& hn = nbr_[head];
            const int at = index_of(head, tail);
            const Vertex next = hn[(at + static_cast<int>(hn.size()) - 1) % hn.size()];
            tail = head;
            head = next;
        }
        return c;
    }

    // Moves the neighbours nbr[v][i..i+k] to a new vertex sharing nbr[v][i]
    // and nbr[v][i+k] with v. Returns false if that would create a 2-cut.
    bool try_split(Vertex v, int i, int k) {
        const int d = degree(v);
        if (k < 2 || k > d - 2) return false;
        const int j = (i + k) % d;
        const Vertex wi = nbr_[v][i], wj = nbr_[v][j];
        if (count(wi, wj) != 0) return false;

        const Vertex nv = size();
        std::vector<Vertex> moved, kept;
        for (int s = 0; s <= k; ++s) moved.push_back(nbr_[v][(i + s) % d]);
        for (int s = 0; s <= d - k; ++s) kept.push_back(nbr_[v][(j + s) % d]);

        for (int s = 0; s < k; ++s) {
            const auto c = face(v, (i + s) % d);
            bump(v, c[2], -1);
            bump(nv, c[2], +1);
        }
        nbr_.push_back(moved);
        nbr_[v] = kept;
        for (int s = 1; s < k; ++s) {
            auto& wn = nbr_[moved[s]];
            *std::find(wn.begin(), wn.end(), v) = nv;
        }
        {
            auto& wn = nbr_[wi];
            wn.insert(wn.begin() + index_of(wi, v), nv);
        }
        {
            auto& wn = nbr_[wj];
            wn.insert(wn.begin() + index_of(wj, v) + 1, nv);
        }
        bump(v, nv, +1);
        bump(wi, wj, +1);
        return true;
    }

    // Puts a new 4-cycle inside the face at angle (v, i), each new vertex tied
    // to one corner.
    void insert_face(Vertex v, int i) {
        const auto x = face(v, i);
        const Vertex base = size();
        std::array<Vertex, 4> a{base, base + 1, base + 2, base + 3};
        bump(x[0], x[2], -1);
        bump(x[1], x[3], -1);
        for (int k = 0; k < 4; ++k) {
            auto& xn = nbr_[x[k]];
            xn.insert(xn.begin() + index_of(x[k], x[(k + 1) % 4]) + 1, a[k]);
        }
        for (int k = 0; k < 4; ++k) nbr_.push_back({a[(k + 1) % 4], a[(k + 3) % 4], x[k]});
        for (int k = 0; k < 4; ++k) {
            bump(x[k], a[(k + 1) % 4], +1);
            bump(x[(k + 1) % 4], a[k], +1);
        }
        bump(a[0], a[2], +1);
        bump(a[1], a[3], +1);
    }

  private:
    int index_of(Vertex v, Vertex w) const {
        const auto& n = nbr_[v];
        return static_cast<int>(std::find(n.begin(), n.end(), w) - n.begin());
    }
    bool is_first_dart(const std::array<Vertex, 4>& c, Vertex v, int i) const {
        return c[0] == v && c[1] == nbr_[v][i];
    }
    int count(Vertex a, Vertex b) const {
        auto it = pairs_.find(pair_key(a, b));
        return it == pairs_.end() ? 0 : it->second;
    }
    void bump(Vertex a, Vertex b, int delta) {
        auto& c = pairs_[pair_key(a, b)];
        c += delta;
        if (c == 0) pairs_.erase(pair_key(a, b));
    }

    std::vector<std::vector<Vertex>> nbr_;
    std::unordered_map<std::uint64_t, int> pairs_;
};

std::vector<std::vector<Vertex>> double_wheel_neighbors(int k) {
    const int len = 2 * k;
    const Vertex hub_in = len, hub_out = len + 1;
    std::vector<std::vector<Vertex>> nbr(static_cast<std::size_t>(len + 2));
    for (int j = 0; j < len; ++j) {
        const Vertex next = (j + 1) % len, prev = (j + len - 1) % len;
        if (j % 2 == 0)
            nbr[j] = {next, hub_in, prev};
        else
            nbr[j] = {hub_out, next, prev};
    }
    for (int j = 0; j < len; j += 2) nbr[hub_in].push_back(j);
    for (int j = len - 1; j >= 1; j -= 2) nbr[hub_out].push_back(j);
    return nbr;
}

}  // namespace

Quadrangulation double_wheel(int k) {
    if (k < 3) throw Error(ErrorCode::InvalidArgument, "double wheel needs k >= 3");
    return validate_quadrangulation(PlaneEmbedding::from_neighbors(double_wheel_neighbors(k), 0, 1));
}

Lemma2Layout lemma2_layout(int k) { return {k, 0, 1, 2 * k + 2}; }

OptimalOnePlaneGraph gen_lemma2(int k) {
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "lemma2 family needs k >= 1");
    const int nb = 2 * k + 2;
    std::vector<Point> pts(static_cast<std::size_t>(nb));
    pts[0] = {0.0, 10.0};
    pts[1] = {0.0, -10.0};
    std::vector<std::array<Vertex, 2>> edges{{0, 1}};
    for (int i = 0; i < k; ++i) {
        const Vertex u = 2 + 2 * i, v = 3 + 2 * i;
        pts[u] = {1.0 + 3.0 * i, 0.0};
        pts[v] = {2.0 + 3.0 * i, 0.0};
        edges.push_back({u, v});
        for (Vertex pole : {0, 1}) {
            edges.push_back({pole, u});
            edges.push_back({pole, v});
        }
    }
    const auto nbr = rotation_from_points(pts, edges);
    const PlaneEmbedding gb = PlaneEmbedding::from_neighbors(nbr, 0, 1);
    const PlaneEmbedding q = angle_graph(gb);
    const PlaneEmbedding rooted = with_outer(q, face_with_vertices(q, 0, 1));
    return build_optimal(validate_quadrangulation(rooted));
}

std::vector<std::array<Vertex, 4>> grid_gray_cycles(int h) {
    std::vector<std::array<Vertex, 4>> out;
    for (int y = 0; y + 1 < h; ++y)
        for (int x = 0; x + 1 < h; ++x) {
            const Vertex base = h * h + 4 * (y * (h - 1) + x);
            out.push_back({base, base + 1, base + 2, base + 3});
        }
    return out;
}

OptimalOnePlaneGraph gen_grid_worstcase(int h) {
    if (h < 3) throw Error(ErrorCode::InvalidArgument, "grid family needs h >= 3");
    const int n = 5 * h * h - 8 * h + 4;
    std::vector<Point> pts(static_cast<std::size_t>(n));
    std::vector<std::array<Vertex, 2>> edges;
    auto id = [h](int x, int y) { return y * h + x; };
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < h; ++x) {
            pts[id(x, y)] = {10.0 * x, 10.0 * y};
            if (x + 1 < h) edges.push_back({id(x, y), id(x + 1, y)});
            if (y + 1 < h) edges.push_back({id(x, y), id(x, y + 1)});
        }
    const auto cycles = grid_gray_cycles(h);
    for (int y = 0; y + 1 < h; ++y)
        for (int x = 0; x + 1 < h; ++x) {
            const auto& g = cycles[y * (h - 1) + x];
            const std::array<Vertex, 4> corner{id(x, y), id(x + 1, y), id(x + 1, y + 1), id(x, y + 1)};
            const std::array<Point, 4> at{Point{2.5, 2.5}, Point{7.5, 2.5}, Point{7.5, 7.5}, Point{2.5, 7.5}};
            for (int k = 0; k < 4; ++k) {
                pts[g[k]] = {10.0 * x + at[k].x, 10.0 * y + at[k].y};
                edges.push_back({g[k], g[(k + 1) % 4]});
                edges.push_back({g[k], corner[k]});
            }
        }
    auto nbr = rotation_from_points(pts, edges);

    // Outer boundary clockwise from the top-left corner, then a fan of chords
    // from that corner closing it down to a 4-cycle.
    const PlaneEmbedding open = PlaneEmbedding::from_neighbors(nbr, id(0, h - 1), id(1, h - 1));
    const Vertex top_left = id(0, h - 1);
    std::vector<Vertex> boundary;
    {
        const Face& outer = open.face(open.outer_face());
        const auto& w = outer.vertices;
        const auto it = std::find(w.begin(), w.end(), top_left);
        boundary.assign(it, w.end());
        boundary.insert(boundary.end(), w.begin(), it);
    }
    const int len = static_cast<int>(boundary.size());
    auto insert_after = [&](Vertex v, Vertex anchor, Vertex w) {
        auto& vn = nbr[v];
        vn.insert(std::find(vn.begin(), vn.end(), anchor) + 1, w);
    };
    for (int j = 3; j <= len - 3; j += 2) {
        insert_after(top_left, boundary[j - 2], boundary[j]);
        insert_after(boundary[j], boundary[j + 1], top_left);
    }
    const PlaneEmbedding closed = PlaneEmbedding::from_neighbors(nbr, boundary[len - 1], top_left);
    return build_optimal(validate_quadrangulation(closed));
}

namespace {

constexpr std::array<std::array<int, 2>, 20> kExampleEdges{{
    {1, 2}, {1, 7}, {1, 9}, {1, 11}, {3, 4}, {3, 7}, {5, 6}, {5, 7}, {8, 9}, {10, 11},
    {2, 3}, {2, 12}, {4, 5}, {4, 10}, {4, 12}, {6, 8}, {6, 10}, {7, 8}, {9, 10}, {11, 12},
}};

}  // namespace

OptimalOnePlaneGraph gen_example() {
    std::vector<Edge> edges;
    for (const auto& [a, b] : kExampleEdges) edges.push_back({a - 1, b - 1});
    std::vector<Vertex> spine(12);
    for (int i = 0; i < 12; ++i) spine[i] = i;
    std::vector<Page> page;
    for (const Edge& e : edges) {
        // v1..v12 coloured black, white, black, white, black, white, white, black, white, black, white, black
        static constexpr bool black[12] = {true, false, true, false, true, false, false, true, false, true, false, true};
        const Vertex left = std::min(e.u, e.v);
        page.push_back(black[left] ? Page::Upper : Page::Lower);
    }
    const auto nbr = rotation_from_book(12, edges, spine, page);
    // outer face v1, v2, v12, v11
    return build_optimal(validate_quadrangulation(PlaneEmbedding::from_neighbors(nbr, 0, 10)));
}

BookEmbedding example_book(const Quadrangulation& quad) {
    BookEmbedding book;
    for (int i = 0; i < quad.vertex_count(); ++i) book.spine.push_back(i);
    book.s_b = book.spine.front();
    book.t_b = book.spine.back();
    book.page = pages_from_spine(quad, book.spine);
    return book;
}

std::vector<std::array<Vertex, 2>> example_forest_edges() {
    const std::array<std::array<int, 6>, 2> paths{{{11, 2, 4, 6, 9, 7}, {8, 5, 3, 1, 10, 12}}};
    std::vector<std::array<Vertex, 2>> out;
    for (const auto& p : paths)
        for (int i = 0; i + 1 < 6; ++i) out.push_back({p[i] - 1, p[i + 1] - 1});
    return out;
}

Quadrangulation gen_random_quad(int n, std::uint64_t seed) {
    if (n < 8) throw Error(ErrorCode::InvalidArgument, "random quadrangulations need n >= 8");
    if (n == 9) throw Error(ErrorCode::GenerationFailed, "no 3-connected quadrangulation has 9 vertices");
    std::mt19937_64 rng(seed);
    auto below = [&rng](int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); };

    GrowingQuad q(double_wheel_neighbors(n == 10 || n == 11 ? 4 : 3));
    constexpr int kMaxAttempts = 10000;
    while (q.size() < n) {
        const int remaining = n - q.size();
        if (remaining >= 4 && (q.size() == 8 || below(4) == 0)) {
            const Vertex v = below(q.size());
            q.insert_face(v, below(q.degree(v)));
            continue;
        }
        bool done = false;
        for (int attempt = 0; attempt < kMaxAttempts && !done; ++attempt) {
            const Vertex v = below(q.size());
            const int d = q.degree(v);
            if (d < 4) continue;
            done = q.try_split(v, below(d), 2 + below(d - 3));
        }
        if (!done) {
            if (remaining < 4)
                throw Error(ErrorCode::GenerationFailed, "no admissible vertex split after " +
                                                             std::to_string(kMaxAttempts) + " attempts");
            const Vertex v = below(q.size());
            q.insert_face(v, below(q.degree(v)));
        }
    }
    const auto& nbr = q.neighbors();
    return validate_quadrangulation(PlaneEmbedding::from_neighbors(nbr, 0, nbr[0].front()));
}

OptimalOnePlaneGraph generate(const FamilyParams& params) {
    switch (params.family) {
    case Family::Lemma2: return gen_lemma2(params.size);
    case Family::Grid: return gen_grid_worstcase(params.size);
    case Family::Example: return gen_example();
    case Family::Random: return build_optimal(gen_random_quad(params.size, params.seed));
    }
    throw Error(ErrorCode::InvalidArgument, "unknown family");
}

std::vector<std::vector<Vertex>> rotation_from_book(int vertex_count, std::span<const Edge> edges,
                                                    const std::vector<Vertex>& spine, const std::vector<Page>& page) {
    std::vector<int> pos(static_cast<std::size_t>(vertex_count), -1);
    for (int i = 0; i < static_cast<int>(spine.size()); ++i) pos[spine[i]] = i;
    // ccw from the right: upper-right near to far, upper-left far to near,
    // lower-left near to far, lower-right far to near
    std::vector<std::vector<Vertex>> nbr(static_cast<std::size_t>(vertex_count));
    for (Vertex v = 0; v < vertex_count; ++v) {
        std::vector<std::pair<int, Vertex>> keyed;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            Vertex w;
            if (edges[e].u == v)
                w = edges[e].v;
            else if (edges[e].v == v)
                w = edges[e].u;
            else
                continue;
            const bool right = pos[w] > pos[v];
            int quadrant, key;
            if (page[e] == Page::Upper) {
                quadrant = right ? 0 : 1;
                key = pos[w];
            } else {
                quadrant = right ? 3 : 2;
                key = -pos[w];
            }
            keyed.push_back({quadrant * 4 * vertex_count + key + 2 * vertex_count, w});
        }
        std::sort(keyed.begin(), keyed.end());
        for (const auto& [k, w] : keyed) nbr[v].push_back(w);
    }
    return nbr;
}

}  // namespace o1p
