#pragma once

#include <optional>
#include <span>
#include <vector>

namespace o1p {

using Vertex = int;
using EdgeId = int;
using FaceId = int;
// Directed edge side. Dart 2e runs edge(e).u -> edge(e).v, dart 2e+1 the reverse.
using Dart = int;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// A face is the closed walk that keeps the face on its left. With
// counterclockwise rotations inner faces come out counterclockwise and the
// outer face clockwise.
struct Face {
    std::vector<Vertex> vertices;
    std::vector<Dart> darts;

    int length() const { return static_cast<int>(darts.size()); }
};

// Traces the faces of a rotation system. Throws MalformedRotation, NotSimple,
// Disconnected or NonPlanarRotation. Face ids follow the order in which
// darts 0, 1, 2, ... are first reached.
std::vector<Face> trace_faces(int vertex_count, std::span<const Edge> edges,
                              const std::vector<std::vector<EdgeId>>& rotation);

// Connected simple plane graph given by a counterclockwise rotation system.
// Immutable once constructed.
class PlaneEmbedding {
  public:
    PlaneEmbedding(int vertex_count, std::vector<Edge> edges, std::vector<std::vector<EdgeId>> rotation,
                   FaceId outer_face = 0);

    // Builds an embedding from ccw neighbour lists. Edge ids are assigned in
    // lexicographic (min, max) order. The outer face is the one containing the
    // dart outer_tail -> outer_head.
    static PlaneEmbedding from_neighbors(const std::vector<std::vector<Vertex>>& ccw_neighbors, Vertex outer_tail,
                                         Vertex outer_head);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const EdgeId> rotation(Vertex v) const { return rotation_[v]; }
    const std::vector<std::vector<EdgeId>>& rotations() const { return rotation_; }
    int degree(Vertex v) const { return static_cast<int>(rotation_[v].size()); }
    Vertex other(EdgeId e, Vertex v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }

    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(FaceId f) const { return faces_[f]; }
    FaceId outer_face() const { return outer_; }

    static EdgeId edge_of(Dart d) { return d >> 1; }
    Vertex tail(Dart d) const { return (d & 1) ? edges_[d >> 1].v : edges_[d >> 1].u; }
    Vertex head(Dart d) const { return (d & 1) ? edges_[d >> 1].u : edges_[d >> 1].v; }
    Dart dart(EdgeId e, Vertex tail) const { return 2 * e + (edges_[e].u == tail ? 0 : 1); }
    FaceId face_of(Dart d) const { return dart_face_[d]; }
    // Position of the dart's edge inside the rotation of its tail.
    int rotation_index(Dart d) const { return rotation_index_[d]; }
    Dart next_in_face(Dart d) const;

    // O(degree) lookup.
    std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;
    std::vector<Vertex> neighbors(Vertex v) const;
    int max_degree() const;

    // Face whose walk is a cyclic shift of `walk` (either direction).
    std::optional<FaceId> find_face(std::span<const Vertex> walk) const;

  private:
    int vertex_count_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> rotation_;
    std::vector<Face> faces_;
    std::vector<FaceId> dart_face_;
    std::vector<int> rotation_index_;
    FaceId outer_;
};

// True iff the graph has at least four vertices and no vertex cut of size <= 2.
// Uses the face-pair test when every face is a 4-cycle, brute force otherwise.
bool check_3_connected(const PlaneEmbedding& embedding);

// O(n * (n + m)) reference: removes each vertex and looks for articulation points.
bool check_3_connected_bruteforce(int vertex_count, std::span<const Edge> edges);

// Linear test for plane quadrangulations whose faces are simple 4-cycles: a
// 2-cut exists iff some pair of opposite corners is shared by two faces.
bool quadrangulation_is_3_connected(const PlaneEmbedding& embedding);

}  // namespace o1p
