#include <random>

#include "doctest.h"
#include "o1p/error.hpp"
#include "o1p/generators.hpp"
#include "oracles.hpp"
#include "suite.hpp"

using namespace o1p;

TEST_CASE("book embedding satisfies p1-p3 on the suite") {
    for (const auto& inst : test_suite::small()) {
        CAPTURE(inst.name);
        const Quadrangulation& q = inst.graph.quad();
        const BookEmbedding book = book_embed(q);
        CHECK(verify_p1p2p3(q, book).ok());
        for (Page p : {Page::Upper, Page::Lower})
            CHECK(page_is_noncrossing(q, book, p) == oracle::page_crossing_free(q, book, p));
        CHECK(q.color(book.s_b) == Color::Black);
        CHECK(q.color(book.t_b) == Color::Black);
    }
}

TEST_CASE("p3 fixes the pages once the spine is known") {
    for (const auto& inst : test_suite::small()) {
        const Quadrangulation& q = inst.graph.quad();
        const BookEmbedding book = book_embed(q);
        CHECK(pages_from_spine(q, book.spine) == book.page);
    }
}

TEST_CASE("shipped example book has the one upper dolphin") {
    const auto g = gen_example();
    const BookEmbedding book = example_book(g.quad());
    CHECK(verify_p1p2p3(g.quad(), book).ok());
    const auto classes = classify_inner_faces(g.quad(), book);
    CHECK(classes.size() == 9);
    int dolphins = 0;
    for (const auto& c : classes)
        if (c.kind == FaceClass::UpperDolphin || c.kind == FaceClass::LowerDolphin) {
            ++dolphins;
            CHECK(c.kind == FaceClass::UpperDolphin);
            // v5, v6, v7, v8
            CHECK(c.corners == std::array<Vertex, 4>{4, 5, 6, 7});
        }
    CHECK(dolphins == 1);
}

TEST_CASE("verifier flags each broken property") {
    const auto g = gen_example();
    const Quadrangulation& q = g.quad();
    const BookEmbedding good = example_book(q);

    SUBCASE("white end first violates p1") {
        BookEmbedding b = good;
        std::swap(b.spine[0], b.spine[1]);
        b.s_b = b.spine.front();
        b.page = pages_from_spine(q, b.spine);
        CHECK_FALSE(verify_p1p2p3(q, b).p1);
    }
    SUBCASE("flipped page violates p3") {
        BookEmbedding b = good;
        b.page[0] = b.page[0] == Page::Upper ? Page::Lower : Page::Upper;
        const BookReport r = verify_p1p2p3(q, b);
        CHECK_FALSE(r.p3);
        CHECK(r.p1);
    }
    SUBCASE("spine that is not a permutation") {
        BookEmbedding b = good;
        b.spine[3] = b.spine[4];
        CHECK_THROWS_AS(verify_p1p2p3(q, b), Error);
    }
    SUBCASE("noncrossing check against the pairwise oracle on shuffled spines") {
        std::mt19937 rng(3);
        for (int round = 0; round < 50; ++round) {
            BookEmbedding b = good;
            std::shuffle(b.spine.begin(), b.spine.end(), rng);
            b.page = pages_from_spine(q, b.spine);
            for (Page p : {Page::Upper, Page::Lower})
                CHECK(page_is_noncrossing(q, b, p) == oracle::page_crossing_free(q, b, p));
        }
    }
}

TEST_CASE("every inner face of a compliant embedding classifies") {
    for (const auto& inst : test_suite::small()) {
        const Quadrangulation& q = inst.graph.quad();
        const BookEmbedding book = book_embed(q);
        const auto pos = book.positions();
        const auto classes = classify_inner_faces(q, book);
        CHECK(static_cast<int>(classes.size()) == q.face_count() - 1);
        for (const auto& c : classes) {
            for (int k = 0; k + 1 < 4; ++k) CHECK(pos[c.corners[k]] < pos[c.corners[k + 1]]);
            const bool dolphin = c.kind == FaceClass::UpperDolphin || c.kind == FaceClass::LowerDolphin;
            // nothing sits between the two middle corners of a dolphin
            if (dolphin) CHECK(pos[c.corners[2]] == pos[c.corners[1]] + 1);
        }
    }
}
