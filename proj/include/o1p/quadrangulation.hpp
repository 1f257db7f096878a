#pragma once

#include <array>
#include <vector>

#include "o1p/embedding.hpp"

namespace o1p {

enum class Color : unsigned char { Black, White };

inline Color opposite(Color c) { return c == Color::Black ? Color::White : Color::Black; }

struct ValidationOptions {
    // Skip the 3-connectivity test for inputs known to be valid.
    bool trusted = false;
};

// 3-connected plane quadrangulation with its bipartition. Vertex 0 is black.
class Quadrangulation {
  public:
    Quadrangulation(PlaneEmbedding embedding, std::vector<Color> color)
        : embedding_(std::move(embedding)), color_(std::move(color)) {}

    const PlaneEmbedding& embedding() const { return embedding_; }
    Color color(Vertex v) const { return color_[v]; }
    const std::vector<Color>& colors() const { return color_; }
    int vertex_count() const { return embedding_.vertex_count(); }
    int face_count() const { return embedding_.face_count(); }

  private:
    PlaneEmbedding embedding_;
    std::vector<Color> color_;
};

// Throws NonQuadFace, NotBipartite or Not3Connected.
Quadrangulation validate_quadrangulation(const PlaneEmbedding& embedding, ValidationOptions options = {});

struct VertexPair {
    Vertex a = 0;
    Vertex b = 0;

    bool same(Vertex x, Vertex y) const { return (a == x && b == y) || (a == y && b == x); }
};

struct FaceDiagonals {
    VertexPair black;
    VertexPair white;
};

enum class EdgeKind : unsigned char { Quad, BlackDiagonal, WhiteDiagonal };

// Names one edge of the optimal graph: a quad edge by edge id, a diagonal by
// the face it crosses.
struct EdgeRef {
    EdgeKind kind = EdgeKind::Quad;
    int index = 0;

    friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

struct BuildOptions {
    // Keep coinciding diagonals of different faces as parallel edges instead
    // of rejecting them.
    bool allow_multigraph = false;
};

// Quadrangulation plus the crossing pair of diagonals inside every face.
class OptimalOnePlaneGraph {
  public:
    OptimalOnePlaneGraph(Quadrangulation quad, std::vector<FaceDiagonals> diagonals)
        : quad_(std::move(quad)), diagonals_(std::move(diagonals)) {}

    const Quadrangulation& quad() const { return quad_; }
    const PlaneEmbedding& embedding() const { return quad_.embedding(); }
    const FaceDiagonals& diagonals(FaceId f) const { return diagonals_[f]; }
    const std::vector<FaceDiagonals>& all_diagonals() const { return diagonals_; }

    int vertex_count() const { return quad_.vertex_count(); }
    int edge_count() const { return quad_.embedding().edge_count() + 2 * quad_.face_count(); }
    int crossing_count() const { return quad_.face_count(); }

    // Throws ForeignEdge for references outside the graph.
    VertexPair endpoints(const EdgeRef& ref) const;

  private:
    Quadrangulation quad_;
    std::vector<FaceDiagonals> diagonals_;
};

// Throws DuplicateDiagonal unless options.allow_multigraph.
OptimalOnePlaneGraph build_optimal(const Quadrangulation& quad, BuildOptions options = {});

// Declared crossing pair of a raw 1-plane description.
struct CrossingPair {
    FaceId face = 0;
    VertexPair first;
    VertexPair second;
};

// 1-plane input: the plane part (uncrossed edges) plus declared crossing pairs.
struct RawOnePlaneGraph {
    PlaneEmbedding uncrossed;
    std::vector<CrossingPair> crossings;
};

// Throws NotOptimal when the uncrossed edges are not a valid quadrangulation or
// a crossing pair does not consist of the two diagonals of the named face.
Quadrangulation extract_quadrangulation(const RawOnePlaneGraph& raw, ValidationOptions options = {});

// Crossing pairs of a built graph, one per face in face order.
RawOnePlaneGraph to_raw(const OptimalOnePlaneGraph& g);

}  // namespace o1p
