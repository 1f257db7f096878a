#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "o1p/book_embedding.hpp"
#include "o1p/quadrangulation.hpp"

namespace o1p {

enum class Family : unsigned char { Lemma2, Grid, Example, Random };

struct FamilyParams {
    Family family = Family::Example;
    int size = 0;  // k for lemma2, h for grid, n for random
    std::uint64_t seed = 0;
};

// Pseudo-double wheel on 2k + 2 vertices: an alternating 2k-cycle plus one hub
// on each side. k = 3 is the cube.
Quadrangulation double_wheel(int k);
inline Quadrangulation cube() { return double_wheel(3); }

// Angle graph of the plane graph built from k disjoint edges joined to two
// poles s and t plus the edge s-t, with crossing white edges added. Vertex 0
// is s, vertex 1 is t, u_i = 2 + 2i, v_i = 3 + 2i; face vertices follow.
OptimalOnePlaneGraph gen_lemma2(int k);

struct Lemma2Layout {
    int k = 0;
    Vertex s = 0;
    Vertex t = 1;
    int black_count = 0;  // 2k + 2
};
Lemma2Layout lemma2_layout(int k);

// h x h grid (ids y*h + x) with a 4-cycle of extra vertices inside every
// square, each tied to one square corner, and the outer 4h-4 cycle closed by a
// fan of chords from the top-left corner. Throws InvalidArgument for h < 3.
OptimalOnePlaneGraph gen_grid_worstcase(int h);

// The four extra vertices inside every grid square, in cycle order.
std::vector<std::array<Vertex, 4>> grid_gray_cycles(int h);

// 12-vertex running example, vertices v1..v12 as ids 0..11.
OptimalOnePlaneGraph gen_example();
// The book embedding with spine v1, ..., v12 that has one upper dolphin.
BookEmbedding example_book(const Quadrangulation& quad);
// Red forest of two paths: v11,v2,v4,v6,v9,v7 and v8,v5,v3,v1,v10,v12.
std::vector<std::array<Vertex, 2>> example_forest_edges();

// Random 3-connected quadrangulation with exactly n vertices, grown from a
// pseudo-double wheel by vertex splits and face insertions. Throws
// GenerationFailed for n = 9 (no such quadrangulation) and InvalidArgument for n < 8.
Quadrangulation gen_random_quad(int n, std::uint64_t seed);

OptimalOnePlaneGraph generate(const FamilyParams& params);

// ccw neighbour lists of the drawing given by a spine and page assignment.
std::vector<std::vector<Vertex>> rotation_from_book(int vertex_count, std::span<const Edge> edges,
                                                    const std::vector<Vertex>& spine, const std::vector<Page>& page);

}  // namespace o1p
