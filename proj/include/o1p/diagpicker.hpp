#pragma once

#include <array>
#include <vector>

#include "o1p/book_embedding.hpp"
#include "o1p/quadrangulation.hpp"

namespace o1p {

// One red diagonal per face of Q(G), outer face included, indexed by face id.
// Every other edge of G is blue.
struct RedBlueColoring {
    std::vector<EdgeRef> red;
    int max_red_degree = 0;
};

// Blue edges of g under c: every quad edge plus the unselected diagonal of each face.
std::vector<EdgeRef> blue_edges(const OptimalOnePlaneGraph& g, const RedBlueColoring& c);

// Dolphins split into two parachutes by a dummy vertex placed between the
// two middle corners. Positions are doubled so a dummy sits at an odd slot.
struct SplitEmbedding {
    struct Parachute {
        FaceId face = 0;
        // 0 for an untouched parachute, 1 or 2 for the halves of a dolphin.
        int part = 0;
        Page page = Page::Upper;
        // Left to right as seen from the page: the lower page is mirrored, so
        // corners 0 and 2 are always black.
        std::array<Vertex, 4> corners{};
    };
    struct Dummy {
        Vertex id = 0;
        FaceId face = 0;
        Color color = Color::Black;
    };

    int original_vertex_count = 0;
    std::vector<int> position;  // per vertex, dummies included
    std::vector<Color> color;
    std::vector<Parachute> parachutes;
    std::vector<Dummy> dummies;

    int vertex_count() const { return static_cast<int>(position.size()); }
    // Position on the page as drawn with the page facing up.
    int page_position(Vertex v, Page page) const { return page == Page::Upper ? position[v] : -position[v]; }
};

SplitEmbedding split_dolphins(const Quadrangulation& quad, const BookEmbedding& book,
                              const std::vector<ClassifiedFace>& classes);

// Children share their top arc with the leftmost (left child) or rightmost
// (right child) spine edge of the parent. Links only join parachutes of the
// same page; -1 marks a missing link.
struct ParachuteForest {
    std::vector<int> parent;
    std::vector<int> left_child;
    std::vector<int> right_child;
};

ParachuteForest build_parachute_forest(const SplitEmbedding& split);

struct ParachuteChoice {
    bool white = true;
    VertexPair ends;
};

// Roots and left children take the white diagonal, right children the black one.
std::vector<ParachuteChoice> select_parachute_diagonals(const SplitEmbedding& split, const ParachuteForest& forest);

// A chosen diagonal of an original face. The page is recorded per endpoint:
// a diagonal that replaced the two halves through a dummy leaves one end on
// each page.
struct SelectedDiagonal {
    FaceId face = 0;
    EdgeKind kind = EdgeKind::WhiteDiagonal;
    VertexPair ends;
    Page page_at_a = Page::Upper;
    Page page_at_b = Page::Upper;
};

// One entry per inner face of quad, in face id order.
std::vector<SelectedDiagonal> remove_dummies(const Quadrangulation& quad, const SplitEmbedding& split,
                                             const std::vector<ParachuteChoice>& choices);

// True iff no vertex has two selected diagonals on the same page whose other
// ends lie on the same side of it.
bool one_per_side(const std::vector<SelectedDiagonal>& selected, const BookEmbedding& book);

// Outer face diagonal: the white one between the second and the second to last
// spine vertices unless one of them already has 3 red diagonals, in which case
// the black one s_b-t_b (whose ends have at most 2).
EdgeRef select_outer_diagonal(const Quadrangulation& quad, const BookEmbedding& book,
                              const std::vector<SelectedDiagonal>& selected);

// Intermediate results, filled when a trace is requested.
struct DiagPickerTrace {
    BookEmbedding book;
    std::vector<ClassifiedFace> classes;
    SplitEmbedding split;
    ParachuteForest forest;
    std::vector<ParachuteChoice> choices;
    std::vector<SelectedDiagonal> selected;
    EdgeRef outer;
};

// Throws EmbeddingFailed if an internal invariant breaks.
RedBlueColoring diag_picker(const OptimalOnePlaneGraph& g, DiagPickerTrace* trace = nullptr);
// Same, on a given book embedding instead of the computed one. The book must
// pass verify_p1p2p3 (MalformedBook otherwise).
RedBlueColoring diag_picker(const OptimalOnePlaneGraph& g, const BookEmbedding& book, DiagPickerTrace* trace = nullptr);

struct Triangulation {
    PlaneEmbedding graph;
    std::vector<int> added_degree;  // per vertex
    int quad_max_degree = 0;
    int max_degree = 0;
    int max_added_degree = 0;
};

// Adds the red diagonal of every face. Each vertex gains at most 4 edges.
Triangulation triangulate_quadrangulation(const Quadrangulation& quad);

}  // namespace o1p
