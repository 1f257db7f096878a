#include "o1p/diagpicker.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>

#include "o1p/error.hpp"

namespace o1p {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::EmbeddingFailed, what); }

Vertex diagonal_end(const FaceDiagonals& d, EdgeKind kind, bool first) {
    const VertexPair& p = kind == EdgeKind::BlackDiagonal ? d.black : d.white;
    return first ? p.a : p.b;
}

class UnionFind {
  public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
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

std::uint64_t arc_key(const SplitEmbedding& split, Page page, Vertex a, Vertex b) {
    const auto pa = static_cast<std::uint32_t>(split.page_position(a, page));
    const auto pb = static_cast<std::uint32_t>(split.page_position(b, page));
    const std::uint64_t key = (static_cast<std::uint64_t>(std::min(pa, pb)) << 32) | std::max(pa, pb);
    return key ^ (page == Page::Lower ? 0x8000000000000000ULL : 0);
}

// Selected diagonals of each page form paths: degree at most 2, no cycle.
void check_paths_per_page(const SplitEmbedding& split, const std::vector<ParachuteChoice>& choices) {
    for (Page page : {Page::Upper, Page::Lower}) {
        std::vector<int> deg(static_cast<std::size_t>(split.vertex_count()), 0);
        UnionFind uf(split.vertex_count());
        for (std::size_t i = 0; i < choices.size(); ++i) {
            if (split.parachutes[i].page != page) continue;
            const VertexPair& e = choices[i].ends;
            if (++deg[e.a] > 2 || ++deg[e.b] > 2) fail("selected diagonals of a page branch");
            if (!uf.unite(e.a, e.b)) fail("selected diagonals of a page close a cycle");
        }
    }
}

}  // namespace

std::vector<EdgeRef> blue_edges(const OptimalOnePlaneGraph& g, const RedBlueColoring& c) {
    std::vector<EdgeRef> out;
    for (EdgeId e = 0; e < g.embedding().edge_count(); ++e) out.push_back({EdgeKind::Quad, e});
    for (const EdgeRef& r : c.red)
        out.push_back({r.kind == EdgeKind::BlackDiagonal ? EdgeKind::WhiteDiagonal : EdgeKind::BlackDiagonal, r.index});
    return out;
}

SplitEmbedding split_dolphins(const Quadrangulation& quad, const BookEmbedding& book,
                              const std::vector<ClassifiedFace>& classes) {
    SplitEmbedding split;
    const int n = quad.vertex_count();
    split.original_vertex_count = n;
    split.position.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) split.position[book.spine[i]] = 2 * i;
    split.color = quad.colors();

    auto add = [&split](FaceId face, int part, std::array<Vertex, 4> c) {
        SplitEmbedding::Parachute p;
        p.face = face;
        p.part = part;
        p.page = split.color[c[0]] == Color::Black ? Page::Upper : Page::Lower;
        if (p.page == Page::Lower) std::reverse(c.begin(), c.end());
        for (int k = 0; k < 4; ++k)
            if ((split.color[c[k]] == Color::Black) != (k % 2 == 0)) fail("split face is not a parachute");
        p.corners = c;
        split.parachutes.push_back(p);
    };

    for (const ClassifiedFace& cf : classes) {
        const auto& c = cf.corners;
        if (cf.kind == FaceClass::UpperParachute || cf.kind == FaceClass::LowerParachute) {
            add(cf.face, 0, c);
            continue;
        }
        const Vertex x = split.vertex_count();
        const Color xc = cf.kind == FaceClass::UpperDolphin ? Color::Black : Color::White;
        split.position.push_back(split.position[c[1]] + 1);
        split.color.push_back(xc);
        split.dummies.push_back({x, cf.face, xc});
        add(cf.face, 1, {c[0], c[1], x, c[2]});
        add(cf.face, 2, {c[1], x, c[2], c[3]});
    }
    return split;
}

ParachuteForest build_parachute_forest(const SplitEmbedding& split) {
    const int count = static_cast<int>(split.parachutes.size());
    ParachuteForest forest;
    forest.parent.assign(static_cast<std::size_t>(count), -1);
    forest.left_child.assign(static_cast<std::size_t>(count), -1);
    forest.right_child.assign(static_cast<std::size_t>(count), -1);

    std::unordered_map<std::uint64_t, int> by_top;
    by_top.reserve(static_cast<std::size_t>(count) * 2);
    for (int i = 0; i < count; ++i) {
        const auto& p = split.parachutes[i];
        if (!by_top.emplace(arc_key(split, p.page, p.corners[0], p.corners[3]), i).second)
            fail("two parachutes share a top arc");
    }
    auto lookup = [&](Page page, Vertex a, Vertex b) {
        const auto it = by_top.find(arc_key(split, page, a, b));
        return it == by_top.end() ? -1 : it->second;
    };
    for (int i = 0; i < count; ++i) {
        const auto& p = split.parachutes[i];
        const int l = lookup(p.page, p.corners[0], p.corners[1]);
        const int r = lookup(p.page, p.corners[2], p.corners[3]);
        forest.left_child[i] = l;
        forest.right_child[i] = r;
        if (l >= 0) forest.parent[l] = i;
        if (r >= 0) forest.parent[r] = i;
    }
    return forest;
}

std::vector<ParachuteChoice> select_parachute_diagonals(const SplitEmbedding& split, const ParachuteForest& forest) {
    std::vector<ParachuteChoice> out(split.parachutes.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const auto& c = split.parachutes[i].corners;
        const int parent = forest.parent[i];
        const bool right_child = parent >= 0 && forest.right_child[parent] == static_cast<int>(i);
        out[i].white = !right_child;
        out[i].ends = right_child ? VertexPair{c[0], c[2]} : VertexPair{c[1], c[3]};
    }
    return out;
}

std::vector<SelectedDiagonal> remove_dummies(const Quadrangulation& quad, const SplitEmbedding& split,
                                             const std::vector<ParachuteChoice>& choices) {
    const int n = split.original_vertex_count;
    std::vector<SelectedDiagonal> by_face(static_cast<std::size_t>(quad.face_count()));
    std::vector<char> seen(by_face.size(), 0);
    // halves[f] = parachute indices of parts 1 and 2
    std::unordered_map<FaceId, std::array<int, 2>> halves;
    auto kind_of = [&](const VertexPair& p) {
        return quad.color(p.a) == Color::Black ? EdgeKind::BlackDiagonal : EdgeKind::WhiteDiagonal;
    };

    for (std::size_t i = 0; i < choices.size(); ++i) {
        const auto& p = split.parachutes[i];
        if (p.part == 0) {
            by_face[p.face] = {p.face, kind_of(choices[i].ends), choices[i].ends, p.page, p.page};
            seen[p.face] = 1;
        } else {
            halves[p.face][p.part - 1] = static_cast<int>(i);
        }
    }
    for (const auto& [face, idx] : halves) {
        const auto& first = split.parachutes[idx[0]];
        const auto& second = split.parachutes[idx[1]];
        const VertexPair& e1 = choices[idx[0]].ends;
        const VertexPair& e2 = choices[idx[1]].ends;
        const bool real1 = e1.a < n && e1.b < n;
        const bool real2 = e2.a < n && e2.b < n;
        SelectedDiagonal s;
        s.face = face;
        if (real1 || real2) {
            // the two middle corners, possibly chosen twice
            const VertexPair e = real1 ? e1 : e2;
            const Page page = real1 ? first.page : second.page;
            s.kind = kind_of(e);
            s.ends = e;
            s.page_at_a = s.page_at_b = page;
        } else {
            // both halves went through the dummy: join the outer corners instead
            const Vertex a = e1.a < n ? e1.a : e1.b;
            const Vertex b = e2.a < n ? e2.a : e2.b;
            s.kind = kind_of({a, b});
            s.ends = {a, b};
            s.page_at_a = first.page;
            s.page_at_b = second.page;
        }
        by_face[face] = s;
        seen[face] = 1;
    }

    std::vector<SelectedDiagonal> out;
    out.reserve(by_face.size());
    for (FaceId f = 0; f < quad.face_count(); ++f) {
        if (f == quad.embedding().outer_face()) continue;
        if (!seen[f]) fail("inner face " + std::to_string(f) + " received no diagonal");
        out.push_back(by_face[f]);
    }
    return out;
}

bool one_per_side(const std::vector<SelectedDiagonal>& selected, const BookEmbedding& book) {
    const auto pos = book.positions();
    // count[v][page][right]
    std::vector<std::array<int, 4>> count(pos.size(), {0, 0, 0, 0});
    auto bump = [&](Vertex v, Vertex other, Page page) {
        const int slot = (page == Page::Upper ? 0 : 2) + (pos[other] > pos[v] ? 1 : 0);
        return ++count[v][slot] <= 1;
    };
    for (const SelectedDiagonal& s : selected) {
        if (!bump(s.ends.a, s.ends.b, s.page_at_a)) return false;
        if (!bump(s.ends.b, s.ends.a, s.page_at_b)) return false;
    }
    return true;
}

EdgeRef select_outer_diagonal(const Quadrangulation& quad, const BookEmbedding& book,
                              const std::vector<SelectedDiagonal>& selected) {
    const int n = quad.vertex_count();
    const FaceId outer = quad.embedding().outer_face();
    const auto& corners = quad.embedding().face(outer).vertices;
    if (corners.size() != 4) fail("outer face is not a quadrangle");
    const int black_first = quad.color(corners[0]) == Color::Black ? 0 : 1;
    const VertexPair black{corners[black_first], corners[black_first + 2]};
    const VertexPair white{corners[1 - black_first], corners[3 - black_first]};
    if (!black.same(book.s_b, book.t_b)) fail("outer black corners are not the spine ends");
    if (!white.same(book.spine[1], book.spine[n - 2])) fail("outer white corners are not next to the spine ends");

    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const SelectedDiagonal& s : selected) {
        ++deg[s.ends.a];
        ++deg[s.ends.b];
    }
    if (deg[black.a] > 2 || deg[black.b] > 2) fail("spine end has more than two red diagonals");
    if (deg[white.a] > 3 || deg[white.b] > 3) fail("outer white corner has more than three red diagonals");
    if (deg[white.a] < 3 && deg[white.b] < 3) return {EdgeKind::WhiteDiagonal, outer};
    return {EdgeKind::BlackDiagonal, outer};
}

RedBlueColoring diag_picker(const OptimalOnePlaneGraph& g, DiagPickerTrace* trace) {
    return diag_picker(g, book_embed(g.quad()), trace);
}

RedBlueColoring diag_picker(const OptimalOnePlaneGraph& g, const BookEmbedding& given, DiagPickerTrace* trace) {
    const Quadrangulation& quad = g.quad();
    if (!verify_p1p2p3(quad, given).ok()) throw Error(ErrorCode::MalformedBook, "book violates p1-p3");
    BookEmbedding book = given;
    std::vector<ClassifiedFace> classes = classify_inner_faces(quad, book);
    SplitEmbedding split = split_dolphins(quad, book, classes);
    ParachuteForest forest = build_parachute_forest(split);
    std::vector<ParachuteChoice> choices = select_parachute_diagonals(split, forest);
    check_paths_per_page(split, choices);
    std::vector<SelectedDiagonal> selected = remove_dummies(quad, split, choices);
    if (!one_per_side(selected, book)) fail("a vertex has two red diagonals on one side of one page");
    const EdgeRef outer = select_outer_diagonal(quad, book, selected);

    RedBlueColoring out;
    out.red.assign(static_cast<std::size_t>(quad.face_count()), EdgeRef{});
    for (const SelectedDiagonal& s : selected) out.red[s.face] = {s.kind, s.face};
    out.red[outer.index] = outer;

    std::vector<int> deg(static_cast<std::size_t>(quad.vertex_count()), 0);
    for (const EdgeRef& r : out.red) {
        const FaceDiagonals& d = g.diagonals(r.index);
        out.max_red_degree = std::max(out.max_red_degree, ++deg[diagonal_end(d, r.kind, true)]);
        out.max_red_degree = std::max(out.max_red_degree, ++deg[diagonal_end(d, r.kind, false)]);
    }
    if (out.max_red_degree > 4) fail("red degree exceeds 4");

    if (trace) {
        trace->book = std::move(book);
        trace->classes = std::move(classes);
        trace->split = std::move(split);
        trace->forest = std::move(forest);
        trace->choices = std::move(choices);
        trace->selected = std::move(selected);
        trace->outer = outer;
    }
    return out;
}

Triangulation triangulate_quadrangulation(const Quadrangulation& quad) {
    const OptimalOnePlaneGraph g = build_optimal(quad);
    const RedBlueColoring c = diag_picker(g);
    const PlaneEmbedding& emb = quad.embedding();

    // extra[d] = vertex inserted right after the head of dart d in the tail's rotation
    std::vector<Vertex> extra(static_cast<std::size_t>(2 * emb.edge_count()), -1);
    for (FaceId f = 0; f < emb.face_count(); ++f) {
        const Face& face = emb.face(f);
        const Vertex want = diagonal_end(g.diagonals(f), c.red[f].kind, true);
        const int i = face.vertices[0] == want || face.vertices[2] == want ? 0 : 1;
        extra[face.darts[i]] = face.vertices[i + 2];
        extra[face.darts[i + 2]] = face.vertices[i];
    }
    std::vector<std::vector<Vertex>> nbr(static_cast<std::size_t>(emb.vertex_count()));
    for (Vertex v = 0; v < emb.vertex_count(); ++v)
        for (EdgeId e : emb.rotation(v)) {
            const Dart d = emb.dart(e, v);
            nbr[v].push_back(emb.head(d));
            if (extra[d] >= 0) nbr[v].push_back(extra[d]);
        }
    const Dart outer = emb.face(emb.outer_face()).darts.front();
    Triangulation t{PlaneEmbedding::from_neighbors(nbr, emb.tail(outer), emb.head(outer)), {}, emb.max_degree(), 0, 0};
    t.added_degree.resize(static_cast<std::size_t>(emb.vertex_count()));
    for (Vertex v = 0; v < emb.vertex_count(); ++v) {
        t.added_degree[v] = t.graph.degree(v) - emb.degree(v);
        t.max_added_degree = std::max(t.max_added_degree, t.added_degree[v]);
    }
    t.max_degree = t.graph.max_degree();
    return t;
}

}  // namespace o1p
