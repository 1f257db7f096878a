#include "o1p/embedding.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "o1p/error.hpp"

namespace o1p {

namespace {

std::uint64_t pair_key(Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}

struct DartTables {
    std::vector<int> rotation_index;
};

DartTables check_rotation(int n, std::span<const Edge> edges, const std::vector<std::vector<EdgeId>>& rotation) {
    const int m = static_cast<int>(edges.size());
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "embedding needs at least one vertex");
    if (static_cast<int>(rotation.size()) != n)
        throw Error(ErrorCode::MalformedRotation, "expected " + std::to_string(n) + " rotations");

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(m) * 2);
    for (int e = 0; e < m; ++e) {
        const auto [u, v] = edges[e];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(ErrorCode::MalformedRotation, "edge " + std::to_string(e) + " has an endpoint out of range");
        if (u == v) throw Error(ErrorCode::NotSimple, "edge " + std::to_string(e) + " is a loop");
        if (!seen.insert(pair_key(u, v)).second)
            throw Error(ErrorCode::NotSimple, "parallel edge between " + std::to_string(u) + " and " + std::to_string(v));
    }

    DartTables t;
    t.rotation_index.assign(static_cast<std::size_t>(2 * m), -1);
    for (int v = 0; v < n; ++v) {
        const auto& rot = rotation[v];
        for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
            const EdgeId e = rot[i];
            if (e < 0 || e >= m)
                throw Error(ErrorCode::MalformedRotation, "vertex " + std::to_string(v) + " lists unknown edge " +
                                                              std::to_string(e));
            Dart d;
            if (edges[e].u == v) {
                d = 2 * e;
            } else if (edges[e].v == v) {
                d = 2 * e + 1;
            } else {
                throw Error(ErrorCode::MalformedRotation,
                            "edge " + std::to_string(e) + " is not incident to vertex " + std::to_string(v));
            }
            if (t.rotation_index[d] != -1)
                throw Error(ErrorCode::MalformedRotation,
                            "edge " + std::to_string(e) + " repeated in rotation of " + std::to_string(v));
            t.rotation_index[d] = i;
        }
    }
    for (int d = 0; d < 2 * m; ++d) {
        if (t.rotation_index[d] == -1) {
            const Vertex v = (d & 1) ? edges[d >> 1].v : edges[d >> 1].u;
            throw Error(ErrorCode::MalformedRotation,
                        "edge " + std::to_string(d >> 1) + " missing from rotation of " + std::to_string(v));
        }
    }

    // connectivity
    std::vector<char> reached(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack{0};
    reached[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (EdgeId e : rotation[v]) {
            const Vertex w = edges[e].u == v ? edges[e].v : edges[e].u;
            if (!reached[w]) {
                reached[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    if (count != n) throw Error(ErrorCode::Disconnected, "graph is not connected");
    if (m == 0) throw Error(ErrorCode::InvalidArgument, "embedding needs at least one edge");
    return t;
}

Dart next_dart(std::span<const Edge> edges, const std::vector<std::vector<EdgeId>>& rotation,
               const std::vector<int>& rotation_index, Dart d) {
    const Dart rev = d ^ 1;
    const Vertex h = (rev & 1) ? edges[rev >> 1].v : edges[rev >> 1].u;
    const auto& rot = rotation[h];
    const int deg = static_cast<int>(rot.size());
    const EdgeId e = rot[(rotation_index[rev] + deg - 1) % deg];
    return 2 * e + (edges[e].u == h ? 0 : 1);
}

std::vector<Face> trace_with(int n, std::span<const Edge> edges, const std::vector<std::vector<EdgeId>>& rotation,
                             const std::vector<int>& rotation_index, std::vector<FaceId>* dart_face) {
    const int m = static_cast<int>(edges.size());
    std::vector<FaceId> local(static_cast<std::size_t>(2 * m), -1);
    std::vector<Face> faces;
    for (Dart start = 0; start < 2 * m; ++start) {
        if (local[start] != -1) continue;
        const FaceId id = static_cast<FaceId>(faces.size());
        Face face;
        Dart d = start;
        do {
            local[d] = id;
            face.darts.push_back(d);
            face.vertices.push_back((d & 1) ? edges[d >> 1].v : edges[d >> 1].u);
            d = next_dart(edges, rotation, rotation_index, d);
        } while (d != start);
        faces.push_back(std::move(face));
    }
    if (n - m + static_cast<int>(faces.size()) != 2)
        throw Error(ErrorCode::NonPlanarRotation, "V - E + F = " + std::to_string(n - m + static_cast<int>(faces.size())) +
                                                      ", expected 2");
    if (dart_face) *dart_face = std::move(local);
    return faces;
}

}  // namespace

std::vector<Face> trace_faces(int vertex_count, std::span<const Edge> edges,
                              const std::vector<std::vector<EdgeId>>& rotation) {
    const DartTables t = check_rotation(vertex_count, edges, rotation);
    return trace_with(vertex_count, edges, rotation, t.rotation_index, nullptr);
}

PlaneEmbedding::PlaneEmbedding(int vertex_count, std::vector<Edge> edges, std::vector<std::vector<EdgeId>> rotation,
                               FaceId outer_face)
    : vertex_count_(vertex_count), edges_(std::move(edges)), rotation_(std::move(rotation)), outer_(outer_face) {
    rotation_index_ = check_rotation(vertex_count_, edges_, rotation_).rotation_index;
    faces_ = trace_with(vertex_count_, edges_, rotation_, rotation_index_, &dart_face_);
    if (outer_ < 0 || outer_ >= face_count())
        throw Error(ErrorCode::InvalidArgument, "outer face " + std::to_string(outer_) + " does not exist");
}

PlaneEmbedding PlaneEmbedding::from_neighbors(const std::vector<std::vector<Vertex>>& ccw_neighbors, Vertex outer_tail,
                                              Vertex outer_head) {
    const int n = static_cast<int>(ccw_neighbors.size());
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : ccw_neighbors[u])
            if (u < v) edges.push_back({u, v});
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    std::unordered_map<std::uint64_t, EdgeId> id;
    id.reserve(edges.size() * 2);
    for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) id.emplace(pair_key(edges[e].u, edges[e].v), e);

    std::vector<std::vector<EdgeId>> rotation(static_cast<std::size_t>(n));
    for (Vertex u = 0; u < n; ++u) {
        rotation[u].reserve(ccw_neighbors[u].size());
        for (Vertex v : ccw_neighbors[u]) {
            auto it = id.find(pair_key(u, v));
            if (it == id.end())
                throw Error(ErrorCode::MalformedRotation,
                            "neighbour lists of " + std::to_string(u) + " and " + std::to_string(v) + " disagree");
            rotation[u].push_back(it->second);
        }
    }
    PlaneEmbedding emb(n, std::move(edges), std::move(rotation), 0);
    const auto e = emb.find_edge(outer_tail, outer_head);
    if (!e) throw Error(ErrorCode::InvalidArgument, "outer dart is not an edge");
    emb.outer_ = emb.face_of(emb.dart(*e, outer_tail));
    return emb;
}

Dart PlaneEmbedding::next_in_face(Dart d) const { return next_dart(edges_, rotation_, rotation_index_, d); }

std::optional<EdgeId> PlaneEmbedding::find_edge(Vertex u, Vertex v) const {
    const auto& rot = degree(u) <= degree(v) ? rotation_[u] : rotation_[v];
    for (EdgeId e : rot) {
        const Edge& ed = edges_[e];
        if ((ed.u == u && ed.v == v) || (ed.u == v && ed.v == u)) return e;
    }
    return std::nullopt;
}

std::vector<Vertex> PlaneEmbedding::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    out.reserve(rotation_[v].size());
    for (EdgeId e : rotation_[v]) out.push_back(other(e, v));
    return out;
}

int PlaneEmbedding::max_degree() const {
    int best = 0;
    for (const auto& r : rotation_) best = std::max(best, static_cast<int>(r.size()));
    return best;
}

std::optional<FaceId> PlaneEmbedding::find_face(std::span<const Vertex> walk) const {
    const int k = static_cast<int>(walk.size());
    for (FaceId f = 0; f < face_count(); ++f) {
        const auto& fv = faces_[f].vertices;
        if (static_cast<int>(fv.size()) != k) continue;
        for (int shift = 0; shift < k; ++shift) {
            bool fwd = true, bwd = true;
            for (int i = 0; i < k && (fwd || bwd); ++i) {
                if (fv[(shift + i) % k] != walk[i]) fwd = false;
                if (fv[(shift - i + k) % k] != walk[i]) bwd = false;
            }
            if (fwd || bwd) return f;
        }
    }
    return std::nullopt;
}

namespace {

// Articulation points of the graph with `removed` deleted. Returns true if the
// remaining graph is connected and has no cut vertex.
bool biconnected_without(int n, const std::vector<std::vector<Vertex>>& adj, Vertex removed) {
    const Vertex root = removed == 0 ? 1 : 0;
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<std::size_t> it(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    int timer = 0;
    int root_children = 0;
    bool cut = false;
    std::vector<Vertex> stack{root};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        if (it[v] < adj[v].size()) {
            const Vertex w = adj[v][it[v]++];
            if (w == removed) continue;
            if (disc[w] == -1) {
                parent[w] = v;
                disc[w] = low[w] = timer++;
                if (v == root) ++root_children;
                stack.push_back(w);
            } else if (w != parent[v]) {
                low[v] = std::min(low[v], disc[w]);
            }
        } else {
            stack.pop_back();
            const Vertex p = parent[v];
            if (p != -1) {
                low[p] = std::min(low[p], low[v]);
                if (p != root && low[v] >= disc[p]) cut = true;
            }
        }
    }
    if (root_children > 1) cut = true;
    const int expected = removed >= 0 ? n - 1 : n;
    return timer == expected && !cut;
}

}  // namespace

bool check_3_connected_bruteforce(int vertex_count, std::span<const Edge> edges) {
    if (vertex_count < 4) return false;
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(vertex_count));
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    if (!biconnected_without(vertex_count, adj, -1)) return false;
    for (Vertex v = 0; v < vertex_count; ++v)
        if (!biconnected_without(vertex_count, adj, v)) return false;
    return true;
}

bool quadrangulation_is_3_connected(const PlaneEmbedding& embedding) {
    if (embedding.vertex_count() < 5) return false;
    std::unordered_set<std::uint64_t> pairs;
    pairs.reserve(static_cast<std::size_t>(embedding.face_count()) * 4);
    for (const Face& f : embedding.faces()) {
        if (f.length() != 4) throw Error(ErrorCode::NonQuadFace, "face-pair test needs 4-cycles");
        const auto& c = f.vertices;
        if (!pairs.insert(pair_key(c[0], c[2])).second) return false;
        if (!pairs.insert(pair_key(c[1], c[3])).second) return false;
    }
    return true;
}

bool check_3_connected(const PlaneEmbedding& embedding) {
    bool quad = embedding.vertex_count() >= 5;
    for (const Face& f : embedding.faces()) {
        if (f.length() != 4) {
            quad = false;
            break;
        }
        std::array<Vertex, 4> c{f.vertices[0], f.vertices[1], f.vertices[2], f.vertices[3]};
        std::sort(c.begin(), c.end());
        if (std::adjacent_find(c.begin(), c.end()) != c.end()) {
            quad = false;
            break;
        }
    }
    if (quad) return quadrangulation_is_3_connected(embedding);
    return check_3_connected_bruteforce(embedding.vertex_count(), embedding.edges());
}

}  // namespace o1p
