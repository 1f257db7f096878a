#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "o1p/error.hpp"
#include "o1p/generators.hpp"
#include "oracles.hpp"

using namespace o1p;

namespace {

std::vector<std::vector<Vertex>> neighbor_lists(const PlaneEmbedding& emb) {
    std::vector<std::vector<Vertex>> nbr(static_cast<std::size_t>(emb.vertex_count()));
    for (Vertex v = 0; v < emb.vertex_count(); ++v) nbr[v] = emb.neighbors(v);
    return nbr;
}

// Rotation-invariant form of a face walk.
std::vector<int> canonical(std::vector<int> walk) {
    std::rotate(walk.begin(), std::min_element(walk.begin(), walk.end()), walk.end());
    return walk;
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::InvalidArgument;
}

// K_{2,3}: every face a 4-cycle, but {0, 1} is a 2-cut.
PlaneEmbedding k23() { return PlaneEmbedding::from_neighbors({{2, 3, 4}, {4, 3, 2}, {0, 1}, {0, 1}, {0, 1}}, 0, 2); }

}  // namespace

TEST_CASE("cube faces") {
    const Quadrangulation q = cube();
    CHECK(q.vertex_count() == 8);
    CHECK(q.embedding().edge_count() == 12);
    CHECK(q.face_count() == 6);
    for (const Face& f : q.embedding().faces()) CHECK(f.length() == 4);
    const auto blacks = std::count(q.colors().begin(), q.colors().end(), Color::Black);
    CHECK(blacks == 4);
}

TEST_CASE("single edge has one face of length two") {
    const std::vector<Edge> edges{{0, 1}};
    const auto faces = trace_faces(2, edges, {{0}, {0}});
    REQUIRE(faces.size() == 1);
    CHECK(faces[0].length() == 2);
}

TEST_CASE("face tracing agrees with a hand tracer") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Quadrangulation q = gen_random_quad(8 + static_cast<int>(seed) * 3 + (seed == 0 ? 0 : 2), seed);
        const auto nbr = neighbor_lists(q.embedding());
        std::set<std::vector<int>> expected, got;
        for (const auto& f : oracle::faces_from_neighbors(nbr)) expected.insert(canonical(f));
        for (const Face& f : q.embedding().faces()) got.insert(canonical(f.vertices));
        CHECK(expected == got);
    }
}

TEST_CASE("running example quadrangulation has ten faces") {
    const auto g = gen_example();
    CHECK(g.quad().face_count() == 10);
    CHECK(g.embedding().edge_count() == 20);
}

TEST_CASE("validation rejects non-quadrangulations") {
    // K4
    const PlaneEmbedding k4 = PlaneEmbedding::from_neighbors({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}, 0, 1);
    CHECK(code_of([&] { validate_quadrangulation(k4); }) == ErrorCode::NonQuadFace);
    CHECK(code_of([&] { validate_quadrangulation(k23()); }) == ErrorCode::Not3Connected);
    CHECK_NOTHROW(validate_quadrangulation(k23(), {.trusted = true}));
}

TEST_CASE("rotation errors") {
    auto nbr = neighbor_lists(cube().embedding());
    SUBCASE("reversed rotation at one vertex breaks planarity") {
        std::reverse(nbr[0].begin(), nbr[0].end());
        CHECK(code_of([&] { PlaneEmbedding::from_neighbors(nbr, 0, nbr[0][0]); }) == ErrorCode::NonPlanarRotation);
    }
    SUBCASE("edge missing from one rotation") {
        const std::vector<Edge> edges{{0, 1}, {1, 2}};
        CHECK(code_of([&] { PlaneEmbedding(3, edges, {{0}, {0}, {1}}); }) == ErrorCode::MalformedRotation);
    }
    SUBCASE("parallel edges") {
        const std::vector<Edge> edges{{0, 1}, {0, 1}};
        CHECK(code_of([&] { PlaneEmbedding(2, edges, {{0, 1}, {1, 0}}); }) == ErrorCode::NotSimple);
    }
    SUBCASE("disconnected") {
        const std::vector<Edge> edges{{0, 1}, {2, 3}};
        CHECK(code_of([&] { PlaneEmbedding(4, edges, {{0}, {0}, {1}, {1}}); }) == ErrorCode::Disconnected);
    }
}

TEST_CASE("build_optimal counts") {
    const auto cube_g = build_optimal(cube());
    CHECK(cube_g.edge_count() == 24);
    CHECK(cube_g.crossing_count() == 6);
    const auto ex = gen_example();
    CHECK(ex.edge_count() == 40);
    CHECK(ex.crossing_count() == 10);
    const auto l3 = gen_lemma2(3);
    CHECK(l3.vertex_count() == 18);
    CHECK(l3.edge_count() == 64);
    for (const auto* g : {&cube_g, &ex, &l3})
        for (FaceId f = 0; f < g->crossing_count(); ++f) {
            const FaceDiagonals& d = g->diagonals(f);
            CHECK(g->quad().color(d.black.a) == Color::Black);
            CHECK(g->quad().color(d.black.b) == Color::Black);
            CHECK(g->quad().color(d.white.a) == Color::White);
            CHECK(g->quad().color(d.white.b) == Color::White);
        }
}

TEST_CASE("coinciding diagonals need the multigraph opt-in") {
    const Quadrangulation q = validate_quadrangulation(k23(), {.trusted = true});
    CHECK(code_of([&] { build_optimal(q); }) == ErrorCode::DuplicateDiagonal);
    CHECK(build_optimal(q, {.allow_multigraph = true}).crossing_count() == 3);
}

TEST_CASE("extract_quadrangulation inverts build_optimal") {
    for (const auto& g : {build_optimal(cube()), gen_example(), gen_lemma2(2)}) {
        const Quadrangulation q = extract_quadrangulation(to_raw(g));
        CHECK(q.embedding().edges() == g.embedding().edges());
        CHECK(q.embedding().rotations() == g.embedding().rotations());
        CHECK(q.embedding().outer_face() == g.embedding().outer_face());
        CHECK(q.colors() == g.quad().colors());
    }
}

TEST_CASE("crossing pair spanning two faces is not optimal") {
    const auto g = gen_example();
    RawOnePlaneGraph raw = to_raw(g);
    std::swap(raw.crossings[0].first, raw.crossings[1].first);
    CHECK(code_of([&] { extract_quadrangulation(raw); }) == ErrorCode::NotOptimal);
}

TEST_CASE("3-connectivity agrees with the vertex-pair oracle") {
    CHECK(check_3_connected(cube().embedding()));
    const PlaneEmbedding path = PlaneEmbedding::from_neighbors({{1}, {0, 2}, {1}}, 0, 1);
    CHECK_FALSE(check_3_connected(path));
    CHECK_FALSE(oracle::three_connected(3, oracle::edge_list(path)));
    CHECK_FALSE(check_3_connected(k23()));
    CHECK_FALSE(oracle::three_connected(5, oracle::edge_list(k23())));

    const auto l3 = gen_lemma2(3);
    CHECK(check_3_connected(l3.embedding()));
    CHECK(oracle::three_connected(l3.vertex_count(), oracle::edge_list(l3.embedding())));
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Quadrangulation q = gen_random_quad(10 + static_cast<int>(seed % 25), seed);
        CHECK(check_3_connected(q.embedding()) == oracle::three_connected(q.vertex_count(), oracle::edge_list(q.embedding())));
        CHECK(check_3_connected_bruteforce(q.vertex_count(), q.embedding().edges()));
    }
}

TEST_CASE("face tracing commutes with relabeling") {
    const Quadrangulation q = gen_random_quad(30, 5);
    const int n = q.vertex_count();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937 rng(1);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto nbr = neighbor_lists(q.embedding());
    std::vector<std::vector<Vertex>> relabeled(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : nbr[v]) relabeled[perm[v]].push_back(perm[w]);
    const PlaneEmbedding r = PlaneEmbedding::from_neighbors(relabeled, relabeled[0][0], 0);
    std::set<std::vector<int>> a, b;
    for (const Face& f : q.embedding().faces()) {
        std::vector<int> walk;
        for (Vertex v : f.vertices) walk.push_back(perm[v]);
        a.insert(canonical(walk));
    }
    for (const Face& f : r.faces()) b.insert(canonical(f.vertices));
    CHECK(a == b);
}
