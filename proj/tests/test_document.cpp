#include "doctest.h"
#include "facemagic/document.hpp"
#include "support.hpp"

using namespace facemagic;
using namespace facemagic::testing;

TEST_CASE("document round trip, both row orders") {
    std::mt19937 rng(1001);
    for (int trial = 0; trial < 40; ++trial) {
        const Dims dims = trial % 2 ? Dims::of(5, 3) : Dims::of(4, 6);
        LabelingDocument doc;
        doc.labeling = random_labeling(dims, rng);
        if (trial % 3 == 0) doc.S = 42;
        if (trial % 5 == 0) doc.generator = "random";
        for (RowOrder order : {RowOrder::Up, RowOrder::Down}) {
            const LabelingDocument back = parse_document(write_document(doc, order), order);
            CHECK(back.labeling == doc.labeling);
            CHECK(back.S == doc.S);
            CHECK(back.generator == doc.generator);
        }
    }
}

TEST_CASE("document format is pinned") {
    LabelingDocument doc;
    doc.labeling = grid({{1, 4}, {3, 2}});
    doc.S = 10;
    doc.generator = "test";
    CHECK(write_document(doc) ==
          "m=2\nn=2\nsurface=projective\nS=10\ngenerator=test\n\n1 4\n3 2\n");
    CHECK(write_document(doc, RowOrder::Down) ==
          "m=2\nn=2\nsurface=projective\nS=10\ngenerator=test\n\n3 2\n1 4\n");
}

TEST_CASE("parse errors carry context") {
    CHECK_THROWS_AS(parse_document("m=2\nn=2\n\n1 2\n3 4\n"), ParseError); // no surface
    CHECK_THROWS_AS(parse_document("m=2\nn=2\nsurface=torus\n\n1 2\n3 4\n"), ParseError);
    CHECK_THROWS_AS(parse_document("m=2\nn=2\nsurface=projective\nwhat=1\n\n1 2\n3 4\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_document("m=2\nn=2\nsurface=projective\n\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_document("m=2\nn=2\nsurface=projective\n\n1 2 9\n3 4\n"), ParseError);
    CHECK_THROWS_AS(parse_document("m=x\nn=2\nsurface=projective\n\n1 2\n3 4\n"), ParseError);
    // well-formed text with a broken label array is a validation error
    CHECK_THROWS_WITH_AS(parse_document("m=2\nn=2\nsurface=projective\n\n1 2\n3 3\n"),
                         doctest::Contains("duplicate label 3"), ValidationError);
}

TEST_CASE("csv round trip") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        const Labeling L = random_labeling(Dims::of(3, 4), rng);
        CHECK(parse_csv(write_csv(L)) == L);
        CHECK(parse_csv(write_csv(L, RowOrder::Down), RowOrder::Down) == L);
    }
    CHECK(write_csv(grid({{1, 4}, {3, 2}})) == "1,4\n3,2\n");
    CHECK_THROWS_AS(parse_csv("1,2\n3\n"), ParseError);
    CHECK_THROWS_AS(parse_csv(""), ParseError);
}

TEST_CASE("ascii rendering matches the figures") {
    const std::string art = render_ascii(fig2());
    CHECK(art.substr(0, art.find('\n')) == "11 15 12 14 13");
    CHECK(render_ascii(grid({{1, 4}, {3, 2}})) == "3 2\n1 4\n");
}
