#include "doctest.h"

#include "veer/corpus.hpp"
#include "veer/veer_core.hpp"

using namespace veer;

TEST_CASE("m003 structure") {
    auto v = build_veering("cPcbbbdxm_10");
    CHECK(v.edges.count == 2);
    for (int k = 0; k < 2; ++k) CHECK(v.edges.valence[k] == 6);
    CHECK(v.kind[0] == TetKind::Toggle);
    CHECK(v.kind[1] == TetKind::Toggle);
    for (int k = 0; k < 2; ++k) {
        auto p = edge_side_profile(v, k);
        CHECK(p.delta[0] + p.delta[1] == 4);
    }
    for (int t = 0; t < 2; ++t) {
        int up = 0;
        for (int f = 0; f < 4; ++f) up += v.is_top_face(t, f);
        CHECK(up == 2);
    }
}

TEST_CASE("edge class count") { CHECK(build_veering("eLMkbcdddhxqdu_1200").edges.count == 4); }

TEST_CASE("corpus validates") {
    for (const auto& e : kCorpus) {
        CAPTURE(e.sig);
        CHECK(validate_veering(e.sig).empty());
    }
}

TEST_CASE("corpus structural invariants") {
    for (const auto& e : kCorpus) {
        CAPTURE(e.sig);
        auto v = build_veering(e.sig);
        int toggles = 0, fans = 0;
        for (auto k : v.kind) (k == TetKind::Toggle ? toggles : fans)++;
        CHECK(toggles + fans == v.n);
        CHECK(toggles >= 1);
        for (int t = 0; t < v.n; ++t) {
            // the four side edges alternate colours around the tet
            int a = v.top_local[t];
            auto [p, q] = kEdgeVerts[a];
            auto [r, s] = kEdgeVerts[5 - a];
            Color c1 = v.edge_color(t, local_edge(p, r)), c2 = v.edge_color(t, local_edge(r, q));
            Color c3 = v.edge_color(t, local_edge(q, s)), c4 = v.edge_color(t, local_edge(s, p));
            CHECK(c1 != c2);
            CHECK(c2 != c3);
            CHECK(c3 != c4);
        }
        for (int k = 0; k < v.edges.count; ++k) {
            auto pr = edge_side_profile(v, k);
            CHECK(pr.delta[0] >= 1);
            CHECK(pr.delta[1] >= 1);
            CHECK(pr.delta[0] + pr.delta[1] + 2 == v.edges.valence[k]);
        }
        // every face has one tet below and one above
        for (int f = 0; f < v.num_faces(); ++f) {
            CHECK(v.is_top_face(v.face_below[f].tet, v.face_below[f].face));
            CHECK_FALSE(v.is_top_face(v.face_above[f].tet, v.face_above[f].face));
        }
    }
}

TEST_CASE("determinism") {
    for (const auto& e : kCorpus) {
        auto a = build_veering(e.sig), b = build_veering(e.sig);
        CHECK(a.color == b.color);
        CHECK(a.top_local == b.top_local);
    }
}

TEST_CASE("valence four edge is short on both sides") {
    bool seen = false;
    for (const auto& e : kCorpus) {
        auto v = build_veering(e.sig);
        for (int k = 0; k < v.edges.count; ++k)
            if (v.edges.valence[k] == 4) {
                auto p = edge_side_profile(v, k);
                CHECK(p.is_short[0]);
                CHECK(p.is_short[1]);
                seen = true;
            }
    }
    CHECK(seen);
}

TEST_CASE("non-veering taut structures are rejected") {
    // exhaustive over angle choices on the 2-tet gluings of the corpus: some are taut, not veering
    int rejected_color = 0, accepted = 0;
    for (auto body : {"cPcbbbiht", "cPcbbbdxm"}) {
        for (int d0 = 0; d0 < 3; ++d0)
            for (int d1 = 0; d1 < 3; ++d1) {
                std::string sig = std::string(body) + "_" + char('0' + d0) + char('0' + d1);
                auto diag = validate_veering(sig);
                if (diag.empty()) ++accepted;
                for (auto& s : diag) rejected_color += s.find("not veering") != std::string::npos;
            }
    }
    CHECK(accepted >= 2);
    CHECK(rejected_color >= 1);
}

TEST_CASE("not taut reported") {
    auto d = validate_veering("cPcbbbdxm_00");
    CHECK_FALSE(d.empty());
}
