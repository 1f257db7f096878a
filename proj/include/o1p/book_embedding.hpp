#pragma once

#include <vector>

#include "o1p/quadrangulation.hpp"

namespace o1p {

enum class Page : unsigned char { Upper, Lower };

// Two-page book embedding of a quadrangulation. `page` is indexed by quad edge id.
struct BookEmbedding {
    std::vector<Vertex> spine;
    std::vector<Page> page;
    Vertex s_b = 0;
    Vertex t_b = 0;

    // position[v] = index of v on the spine.
    std::vector<int> positions() const;
};

struct BookReport {
    bool p1 = false;
    bool p2 = false;
    bool p3 = false;
    bool noncrossing = false;

    bool ok() const { return p1 && p2 && p3 && noncrossing; }
    friend bool operator==(const BookReport&, const BookReport&) = default;
};

// Builds a compliant embedding in linear time: st-orient the graph of black
// diagonals, read the separating decomposition off the orientation, and list
// the upper tree with black vertices in preorder and white ones in postorder.
// The result is checked with verify_p1p2p3 before it is returned.
BookEmbedding book_embed(const Quadrangulation& quad);

// Flags are computed independently of each other. Throws MalformedBook if the
// spine is not a permutation or the page vector has the wrong size.
BookReport verify_p1p2p3(const Quadrangulation& quad, const BookEmbedding& book);

// Linear stack scan over one page: true iff no two edges interleave.
bool page_is_noncrossing(const Quadrangulation& quad, const BookEmbedding& book, Page page);

enum class FaceClass : unsigned char { UpperParachute, LowerParachute, UpperDolphin, LowerDolphin };

const char* to_string(FaceClass c);

struct ClassifiedFace {
    FaceId face = 0;
    FaceClass kind = FaceClass::UpperParachute;
    // Corners in left-to-right spine order.
    std::array<Vertex, 4> corners{};
};

// One entry per inner face, in face id order. Throws UnclassifiableFace or
// DolphinGapViolation.
std::vector<ClassifiedFace> classify_inner_faces(const Quadrangulation& quad, const BookEmbedding& book);

// Page of every edge follows from p3 once the spine is fixed: upper iff the
// black end is on the left.
std::vector<Page> pages_from_spine(const Quadrangulation& quad, const std::vector<Vertex>& spine);

}  // namespace o1p
