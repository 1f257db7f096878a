#include "o1p/quadrangulation.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>

#include "o1p/error.hpp"

namespace o1p {

namespace {

std::uint64_t pair_key(Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}

bool distinct4(const std::vector<Vertex>& c) {
    std::array<Vertex, 4> s{c[0], c[1], c[2], c[3]};
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

}  // namespace

Quadrangulation validate_quadrangulation(const PlaneEmbedding& embedding, ValidationOptions options) {
    for (FaceId f = 0; f < embedding.face_count(); ++f) {
        const Face& face = embedding.face(f);
        if (face.length() != 4 || !distinct4(face.vertices))
            throw Error(ErrorCode::NonQuadFace,
                        "face " + std::to_string(f) + " has walk length " + std::to_string(face.length()));
    }

    const int n = embedding.vertex_count();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> queue{0};
    side[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex v = queue[head];
        for (EdgeId e : embedding.rotation(v)) {
            const Vertex w = embedding.other(e, v);
            if (side[w] == -1) {
                side[w] = 1 - side[v];
                queue.push_back(w);
            } else if (side[w] == side[v]) {
                throw Error(ErrorCode::NotBipartite,
                            "edge " + std::to_string(e) + " joins two vertices of the same colour");
            }
        }
    }

    if (!options.trusted && !quadrangulation_is_3_connected(embedding))
        throw Error(ErrorCode::Not3Connected, "quadrangulation has a vertex cut of size <= 2");

    std::vector<Color> color(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) color[v] = side[v] == 0 ? Color::Black : Color::White;
    return Quadrangulation(embedding, std::move(color));
}

VertexPair OptimalOnePlaneGraph::endpoints(const EdgeRef& ref) const {
    const PlaneEmbedding& emb = embedding();
    switch (ref.kind) {
    case EdgeKind::Quad:
        if (ref.index < 0 || ref.index >= emb.edge_count()) break;
        return {emb.edge(ref.index).u, emb.edge(ref.index).v};
    case EdgeKind::BlackDiagonal:
        if (ref.index < 0 || ref.index >= emb.face_count()) break;
        return diagonals_[ref.index].black;
    case EdgeKind::WhiteDiagonal:
        if (ref.index < 0 || ref.index >= emb.face_count()) break;
        return diagonals_[ref.index].white;
    }
    throw Error(ErrorCode::ForeignEdge, "edge reference " + std::to_string(ref.index) + " is out of range");
}

OptimalOnePlaneGraph build_optimal(const Quadrangulation& quad, BuildOptions options) {
    const PlaneEmbedding& emb = quad.embedding();
    std::vector<FaceDiagonals> diagonals;
    diagonals.reserve(static_cast<std::size_t>(emb.face_count()));
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(emb.face_count()) * 4);
    for (FaceId f = 0; f < emb.face_count(); ++f) {
        const auto& c = emb.face(f).vertices;
        VertexPair p{c[0], c[2]};
        VertexPair q{c[1], c[3]};
        if (quad.color(p.a) != Color::Black) std::swap(p, q);
        for (const VertexPair& d : {p, q}) {
            if (!seen.insert(pair_key(d.a, d.b)).second && !options.allow_multigraph)
                throw Error(ErrorCode::DuplicateDiagonal, "diagonal " + std::to_string(d.a) + "-" +
                                                              std::to_string(d.b) + " appears in two faces");
        }
        diagonals.push_back({p, q});
    }
    OptimalOnePlaneGraph g(quad, std::move(diagonals));
    if (g.edge_count() != 4 * g.vertex_count() - 8 && !options.allow_multigraph)
        throw Error(ErrorCode::NotOptimal, "edge count differs from 4n - 8");
    return g;
}

Quadrangulation extract_quadrangulation(const RawOnePlaneGraph& raw, ValidationOptions options) {
    const PlaneEmbedding& emb = raw.uncrossed;
    Quadrangulation quad = [&] {
        try {
            return validate_quadrangulation(emb, options);
        } catch (const Error& e) {
            throw Error(ErrorCode::NotOptimal, e.code(), std::string("uncrossed edges: ") + e.what());
        }
    }();

    if (static_cast<int>(raw.crossings.size()) != emb.face_count())
        throw Error(ErrorCode::NotOptimal, std::to_string(raw.crossings.size()) + " crossing pairs for " +
                                               std::to_string(emb.face_count()) + " faces");
    std::vector<char> covered(static_cast<std::size_t>(emb.face_count()), 0);
    for (const CrossingPair& cp : raw.crossings) {
        if (cp.face < 0 || cp.face >= emb.face_count())
            throw Error(ErrorCode::NotOptimal, "crossing pair names unknown face " + std::to_string(cp.face));
        if (covered[cp.face]) throw Error(ErrorCode::NotOptimal, "face " + std::to_string(cp.face) + " crossed twice");
        covered[cp.face] = 1;
        const auto& c = emb.face(cp.face).vertices;
        const VertexPair d0{c[0], c[2]};
        const VertexPair d1{c[1], c[3]};
        const bool ok = (d0.same(cp.first.a, cp.first.b) && d1.same(cp.second.a, cp.second.b)) ||
                        (d1.same(cp.first.a, cp.first.b) && d0.same(cp.second.a, cp.second.b));
        if (!ok)
            throw Error(ErrorCode::NotOptimal,
                        "crossing pair of face " + std::to_string(cp.face) + " is not the diagonal pair of that face");
    }
    return quad;
}

RawOnePlaneGraph to_raw(const OptimalOnePlaneGraph& g) {
    RawOnePlaneGraph raw{g.embedding(), {}};
    raw.crossings.reserve(static_cast<std::size_t>(g.crossing_count()));
    for (FaceId f = 0; f < g.crossing_count(); ++f)
        raw.crossings.push_back({f, g.diagonals(f).black, g.diagonals(f).white});
    return raw;
}

}  // namespace o1p
