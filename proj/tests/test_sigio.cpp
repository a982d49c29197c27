#include "doctest.h"

#include "veer/corpus.hpp"
#include "veer/sigio.hpp"

using namespace veer;

TEST_CASE("parse sizes") {
    CHECK(parse_taut_sig("cPcbbbdxm_10").n == 2);
    auto q = parse_taut_sig("qLLvLQwLQPMkbefgigilnkmnnopppxxxgbrglheabnphwr_1022101010011222");
    CHECK(q.n == 16);
    CHECK(q.pi_pair.size() == 16);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_taut_sig("cPcbbbdxm_1"), SigError);
    CHECK_THROWS_AS(parse_taut_sig("cPcbbbdxm_13"), SigError);
    CHECK_THROWS_AS(parse_taut_sig("cPcbbbdxm10"), SigError);
    CHECK_THROWS_AS(parse_taut_sig("cPcbbbdxm_1_0"), SigError);
    CHECK_THROWS_AS(parse_taut_sig("cPcbbbd_10"), SigError);
    CHECK_THROWS_AS(parse_taut_sig("cPcbbbdxm*_10"), SigError);
}

TEST_CASE("corpus round trip") {
    for (const auto& e : kCorpus) {
        CAPTURE(e.sig);
        auto t = parse_taut_sig(e.sig);
        auto parts = split_taut_sig(e.sig);
        CHECK(t.n == static_cast<int>(parts.angles.size()));
        CHECK(validate_gluing(t).empty());
        CHECK(emit_taut_sig(t) == e.sig);
    }
}

TEST_CASE("one tetrahedron self gluing") {
    RawTriangulation t;
    t.n = 1;
    t.glue.resize(1);
    // faces 0<->1 and 2<->3 via transpositions
    t.glue[0][0] = {0, Perm4::of(1, 0, 2, 3)};
    t.glue[0][1] = {0, Perm4::of(1, 0, 2, 3)};
    t.glue[0][2] = {0, Perm4::of(0, 1, 3, 2)};
    t.glue[0][3] = {0, Perm4::of(0, 1, 3, 2)};
    t.pi_pair = {0};
    REQUIRE(validate_gluing(t).empty());
    auto s = emit_taut_sig(t);
    auto back = parse_taut_sig(s);
    CHECK(back.n == 1);
    CHECK(emit_taut_sig(back) == s);
}

TEST_CASE("gluing diagnostics") {
    auto t = parse_taut_sig("cPcbbbdxm_10");
    SUBCASE("involution") {
        auto bad = t;
        // redirect face 0 of tet 0 to a face whose own gluing points elsewhere
        Gluing g = bad.glue[0][0];
        Perm4 p = g.perm;
        int f2 = (p[0] + 1) % 4;
        int j = 0;
        while (p[j] != f2) ++j;
        std::swap(p.img[0], p.img[j]);
        bad.glue[0][0].perm = p;
        REQUIRE(!(bad.glue[g.tet][f2].tet == 0 && bad.glue[g.tet][f2].perm[f2] == 0));
        auto d = validate_gluing(bad);
        REQUIRE_FALSE(d.empty());
        bool found = false;
        for (auto& s : d) found = found || s.find("involution") != std::string::npos;
        CHECK(found);
    }
    SUBCASE("permutation") {
        auto bad = t;
        auto g = bad.glue[0][0];
        // keep the face pairing but break vertex matching across it
        Perm4 p = g.perm;
        int a = 1, b = 2;
        std::swap(p.img[a], p.img[b]);
        bad.glue[0][0].perm = p;
        auto d = validate_gluing(bad);
        bool found = false;
        for (auto& s : d) found = found || s.find("permutation") != std::string::npos;
        CHECK(found);
    }
}
