#include "o1p/book_embedding.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "o1p/error.hpp"

namespace o1p {

std::vector<int> BookEmbedding::positions() const {
    std::vector<int> pos(spine.size(), -1);
    for (int i = 0; i < static_cast<int>(spine.size()); ++i) pos[spine[i]] = i;
    return pos;
}

std::vector<Page> pages_from_spine(const Quadrangulation& quad, const std::vector<Vertex>& spine) {
    const PlaneEmbedding& emb = quad.embedding();
    std::vector<int> pos(static_cast<std::size_t>(emb.vertex_count()), -1);
    for (int i = 0; i < static_cast<int>(spine.size()); ++i) pos[spine[i]] = i;
    std::vector<Page> page(static_cast<std::size_t>(emb.edge_count()));
    for (EdgeId e = 0; e < emb.edge_count(); ++e) {
        Vertex left = emb.edge(e).u, right = emb.edge(e).v;
        if (pos[left] > pos[right]) std::swap(left, right);
        page[e] = quad.color(left) == Color::Black ? Page::Upper : Page::Lower;
    }
    return page;
}

namespace {

struct Outer {
    Vertex s, t;
};

Outer outer_blacks(const Quadrangulation& quad) {
    const auto& c = quad.embedding().face(quad.embedding().outer_face()).vertices;
    Vertex a = quad.color(c[0]) == Color::Black ? c[0] : c[1];
    Vertex b = quad.color(c[0]) == Color::Black ? c[2] : c[3];
    if (a > b) std::swap(a, b);
    return {a, b};
}

Vertex black_partner(const PlaneEmbedding& emb, const Quadrangulation& quad, FaceId f, Vertex v) {
    const auto& c = emb.face(f).vertices;
    for (int i = 0; i < 4; ++i)
        if (c[i] == v) return c[(i + 2) % 4];
    (void)quad;
    throw Error(ErrorCode::EmbeddingFailed, "vertex not on face");
}

// st-numbering of the graph formed by the black diagonals (Tarjan's
// list-insertion method on a DFS tree whose first edge is s-t).
std::vector<int> st_numbering(const Quadrangulation& quad, Vertex s, Vertex t) {
    const PlaneEmbedding& emb = quad.embedding();
    const int n = emb.vertex_count();

    std::vector<int> start(static_cast<std::size_t>(n) + 1, 0);
    for (FaceId f = 0; f < emb.face_count(); ++f) {
        const auto& c = emb.face(f).vertices;
        const Vertex a = quad.color(c[0]) == Color::Black ? c[0] : c[1];
        const Vertex b = quad.color(c[0]) == Color::Black ? c[2] : c[3];
        ++start[a + 1];
        ++start[b + 1];
    }
    std::partial_sum(start.begin(), start.end(), start.begin());
    std::vector<Vertex> adj(static_cast<std::size_t>(start[n]));
    std::vector<int> fill(start.begin(), start.end() - 1);
    for (FaceId f = 0; f < emb.face_count(); ++f) {
        const auto& c = emb.face(f).vertices;
        const Vertex a = quad.color(c[0]) == Color::Black ? c[0] : c[1];
        const Vertex b = quad.color(c[0]) == Color::Black ? c[2] : c[3];
        adj[fill[a]++] = b;
        adj[fill[b]++] = a;
    }
    // the DFS must leave s through the edge to t
    for (int i = start[s]; i < start[s + 1]; ++i) {
        if (adj[i] == t) {
            std::swap(adj[i], adj[start[s]]);
            break;
        }
    }

    std::vector<int> pre(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1), order;
    std::vector<int> cursor(start.begin(), start.end() - 1);
    int timer = 0;
    std::vector<Vertex> stack{s};
    pre[s] = low[s] = timer++;
    order.push_back(s);
    while (!stack.empty()) {
        const Vertex v = stack.back();
        if (cursor[v] < start[v + 1]) {
            const Vertex w = adj[cursor[v]++];
            if (pre[w] == -1) {
                parent[w] = v;
                pre[w] = low[w] = timer++;
                order.push_back(w);
                stack.push_back(w);
            } else {
                low[v] = std::min(low[v], pre[w]);
            }
        } else {
            stack.pop_back();
            if (parent[v] != -1) low[parent[v]] = std::min(low[parent[v]], low[v]);
        }
    }
    if (order.size() < 2 || order[1] != t)
        throw Error(ErrorCode::EmbeddingFailed, "black diagonal graph is not suitable for st-numbering");

    std::vector<Vertex> next(static_cast<std::size_t>(n), -1), prev(static_cast<std::size_t>(n), -1);
    std::vector<signed char> sign(static_cast<std::size_t>(n), 0);
    next[s] = t;
    prev[t] = s;
    sign[s] = -1;
    for (std::size_t i = 2; i < order.size(); ++i) {
        const Vertex v = order[i];
        const Vertex p = parent[v];
        const Vertex lv = order[low[v]];
        if (sign[lv] == -1) {
            // before p
            const Vertex q = prev[p];
            next[v] = p;
            prev[v] = q;
            prev[p] = v;
            if (q != -1) next[q] = v;
            sign[p] = 1;
        } else {
            const Vertex q = next[p];
            prev[v] = p;
            next[v] = q;
            next[p] = v;
            if (q != -1) prev[q] = v;
            sign[p] = -1;
        }
    }

    std::vector<int> number(static_cast<std::size_t>(n), -1);
    int k = 0;
    for (Vertex v = s; v != -1; v = next[v]) number[v] = k++;
    if (k != static_cast<int>(order.size()))
        throw Error(ErrorCode::EmbeddingFailed, "st-numbering lost vertices");

    // every inner black vertex needs a lower and a higher neighbour
    for (Vertex v : order) {
        if (v == s || v == t) continue;
        bool lower = false, higher = false;
        for (int i = start[v]; i < start[v + 1]; ++i) {
            lower |= number[adj[i]] < number[v];
            higher |= number[adj[i]] > number[v];
        }
        if (!lower || !higher)
            throw Error(ErrorCode::EmbeddingFailed, "black diagonal graph is not biconnected");
    }
    return number;
}

}  // namespace

BookEmbedding book_embed(const Quadrangulation& quad) {
    const PlaneEmbedding& emb = quad.embedding();
    const int n = emb.vertex_count();
    const auto [s, t] = outer_blacks(quad);
    const FaceId outer = emb.outer_face();
    const std::vector<int> st = st_numbering(quad, s, t);

    // Parent of every vertex except t in the upper tree. White faces of the
    // black graph hang below their source; an inner black vertex hangs below
    // the face that follows its block of outgoing edges counterclockwise.
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> child_start(static_cast<std::size_t>(n), 0);  // rotation index where children begin
    for (Vertex v = 0; v < n; ++v) {
        const auto rot = emb.rotation(v);
        const int d = static_cast<int>(rot.size());
        if (quad.color(v) == Color::White) {
            int src = 0;
            for (int i = 1; i < d; ++i)
                if (st[emb.other(rot[i], v)] < st[emb.other(rot[src], v)]) src = i;
            parent[v] = emb.other(rot[src], v);
            child_start[v] = (src + 1) % d;
            continue;
        }
        if (v == t) continue;
        if (v == s) {
            for (int i = 0; i < d; ++i)
                if (emb.face_of(emb.dart(rot[i], v)) == outer) child_start[v] = (i + 1) % d;
            continue;
        }
        // partner[i]: black end of the diagonal in the angle between rot[i] and rot[i+1]
        int x = -1, y = -1;
        for (int i = 0; i < d; ++i) {
            const int j = (i + 1) % d;
            const Vertex pi = black_partner(emb, quad, emb.face_of(emb.dart(rot[i], v)), v);
            const Vertex pj = black_partner(emb, quad, emb.face_of(emb.dart(rot[j], v)), v);
            const bool out_i = st[pi] > st[v];
            const bool out_j = st[pj] > st[v];
            if (out_i && !out_j) {
                if (x != -1) throw Error(ErrorCode::EmbeddingFailed, "orientation is not bipolar");
                x = j;
            } else if (!out_i && out_j) {
                if (y != -1) throw Error(ErrorCode::EmbeddingFailed, "orientation is not bipolar");
                y = j;
            }
        }
        if (x == -1 || y == -1) throw Error(ErrorCode::EmbeddingFailed, "orientation is not bipolar");
        parent[v] = emb.other(rot[x], v);
        child_start[v] = (y + 1) % d;
    }

    // Black vertices in preorder, white ones in postorder; siblings follow the
    // rotation from child_start.
    BookEmbedding book;
    book.s_b = s;
    book.t_b = t;
    book.spine.reserve(static_cast<std::size_t>(n));
    struct Frame {
        Vertex v;
        int step;
    };
    std::vector<Frame> stack{{s, 0}};
    book.spine.push_back(s);
    while (!stack.empty()) {
        Frame& fr = stack.back();
        const Vertex v = fr.v;
        const auto rot = emb.rotation(v);
        const int d = static_cast<int>(rot.size());
        bool descended = false;
        while (fr.step < d) {
            const Vertex w = emb.other(rot[(child_start[v] + fr.step) % d], v);
            ++fr.step;
            if (parent[w] == v) {
                if (quad.color(w) == Color::Black) book.spine.push_back(w);
                stack.push_back({w, 0});
                descended = true;
                break;
            }
        }
        if (descended) continue;
        if (quad.color(v) == Color::White) book.spine.push_back(v);
        stack.pop_back();
    }
    book.spine.push_back(t);
    if (static_cast<int>(book.spine.size()) != n)
        throw Error(ErrorCode::EmbeddingFailed, "upper tree does not span the quadrangulation minus t");

    book.page = pages_from_spine(quad, book.spine);
    if (!verify_p1p2p3(quad, book).ok())
        throw Error(ErrorCode::EmbeddingFailed, "constructed spine violates p1-p3");
    return book;
}

bool page_is_noncrossing(const Quadrangulation& quad, const BookEmbedding& book, Page page) {
    const PlaneEmbedding& emb = quad.embedding();
    const int n = emb.vertex_count();
    const std::vector<int> pos = book.positions();
    // bucket edges by left end, longest first
    std::vector<std::vector<int>> starting(static_cast<std::size_t>(n));
    std::vector<int> ending(static_cast<std::size_t>(n), 0);
    for (EdgeId e = 0; e < emb.edge_count(); ++e) {
        if (book.page[e] != page) continue;
        int l = pos[emb.edge(e).u], r = pos[emb.edge(e).v];
        if (l > r) std::swap(l, r);
        starting[l].push_back(r);
        ++ending[r];
    }
    std::vector<int> stack;
    for (int p = 0; p < n; ++p) {
        for (int k = 0; k < ending[p]; ++k) {
            if (stack.empty() || stack.back() != p) return false;
            stack.pop_back();
        }
        auto& rs = starting[p];
        std::sort(rs.begin(), rs.end(), std::greater<>());
        for (int r : rs) stack.push_back(r);
    }
    return stack.empty();
}

BookReport verify_p1p2p3(const Quadrangulation& quad, const BookEmbedding& book) {
    const PlaneEmbedding& emb = quad.embedding();
    const int n = emb.vertex_count();
    if (static_cast<int>(book.spine.size()) != n || static_cast<int>(book.page.size()) != emb.edge_count())
        throw Error(ErrorCode::MalformedBook, "spine or page assignment has the wrong size");
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        const Vertex v = book.spine[i];
        if (v < 0 || v >= n || pos[v] != -1) throw Error(ErrorCode::MalformedBook, "spine is not a permutation");
        pos[v] = i;
    }

    BookReport r;
    const Vertex first = book.spine.front(), last = book.spine.back();
    r.p1 = quad.color(first) == Color::Black && quad.color(last) == Color::Black && book.s_b == first &&
           book.t_b == last;

    r.p3 = true;
    for (EdgeId e = 0; e < emb.edge_count(); ++e) {
        Vertex l = emb.edge(e).u, rt = emb.edge(e).v;
        if (pos[l] > pos[rt]) std::swap(l, rt);
        const Color want_left = book.page[e] == Page::Upper ? Color::Black : Color::White;
        if (quad.color(l) != want_left || quad.color(rt) != opposite(want_left)) r.p3 = false;
    }

    // p2: each page is a spanning tree of Q minus the far end vertex
    auto spanning_tree = [&](Page page, Vertex excluded) {
        std::vector<int> uf(static_cast<std::size_t>(n));
        std::iota(uf.begin(), uf.end(), 0);
        auto find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        int edges = 0;
        for (EdgeId e = 0; e < emb.edge_count(); ++e) {
            if (book.page[e] != page) continue;
            const Vertex a = emb.edge(e).u, b = emb.edge(e).v;
            if (a == excluded || b == excluded) return false;
            const int ra = find(a), rb = find(b);
            if (ra == rb) return false;
            uf[ra] = rb;
            ++edges;
        }
        return edges == n - 2;
    };
    r.p2 = spanning_tree(Page::Upper, last) && spanning_tree(Page::Lower, first);

    r.noncrossing = page_is_noncrossing(quad, book, Page::Upper) && page_is_noncrossing(quad, book, Page::Lower);
    return r;
}

const char* to_string(FaceClass c) {
    switch (c) {
    case FaceClass::UpperParachute: return "upper-parachute";
    case FaceClass::LowerParachute: return "lower-parachute";
    case FaceClass::UpperDolphin: return "upper-dolphin";
    case FaceClass::LowerDolphin: return "lower-dolphin";
    }
    return "?";
}

std::vector<ClassifiedFace> classify_inner_faces(const Quadrangulation& quad, const BookEmbedding& book) {
    const PlaneEmbedding& emb = quad.embedding();
    const std::vector<int> pos = book.positions();
    std::vector<ClassifiedFace> out;
    out.reserve(static_cast<std::size_t>(emb.face_count()));
    for (FaceId f = 0; f < emb.face_count(); ++f) {
        if (f == emb.outer_face()) continue;
        const auto& c = emb.face(f).vertices;
        std::array<Vertex, 4> k{c[0], c[1], c[2], c[3]};
        std::sort(k.begin(), k.end(), [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
        const bool b0 = quad.color(k[0]) == Color::Black, b1 = quad.color(k[1]) == Color::Black;
        const bool b2 = quad.color(k[2]) == Color::Black, b3 = quad.color(k[3]) == Color::Black;
        FaceClass kind;
        if (b0 && !b1 && b2 && !b3) {
            kind = FaceClass::UpperParachute;
        } else if (!b0 && b1 && !b2 && b3) {
            kind = FaceClass::LowerParachute;
        } else if (b0 && !b1 && !b2 && b3) {
            kind = FaceClass::UpperDolphin;
        } else if (!b0 && b1 && b2 && !b3) {
            kind = FaceClass::LowerDolphin;
        } else {
            throw Error(ErrorCode::UnclassifiableFace, "face " + std::to_string(f) + " has a forbidden colour pattern");
        }
        if ((kind == FaceClass::UpperDolphin || kind == FaceClass::LowerDolphin) && pos[k[2]] != pos[k[1]] + 1)
            throw Error(ErrorCode::DolphinGapViolation,
                        "middle corners of dolphin " + std::to_string(f) + " are not adjacent on the spine");
        out.push_back({f, kind, k});
    }
    return out;
}

}  // namespace o1p
