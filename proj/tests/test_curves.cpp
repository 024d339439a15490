#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cactoidlab/curves.hpp"

using namespace cactoidlab;

namespace {

SurfaceInvariants cls(int connectivity, int boundary, bool orientable) {
    SurfaceInvariants s;
    s.connectivity = connectivity;
    s.boundary_count = boundary;
    s.euler_char = 2 - connectivity;
    s.reduced_connectivity = connectivity - boundary;
    s.orientable = orientable;
    return s;
}

std::set<std::pair<int, int>> wedge_pairs(const std::vector<CutOutcome>& outs) {
    std::set<std::pair<int, int>> pairs;
    for (const auto& o : outs) {
        if (o.kind == CutKind::wedge_split) {
            pairs.insert({o.parts[0].connectivity, o.parts[1].connectivity});
        }
    }
    return pairs;
}

}  // namespace

TEST_CASE("separating arc splits") {
    auto c3 = cut_separating_arc(cls(3, 1, true));
    CHECK(wedge_pairs(c3) == std::set<std::pair<int, int>>{{2, 2}});

    auto c5 = cut_separating_arc(cls(5, 1, true));
    CHECK(wedge_pairs(c5) == std::set<std::pair<int, int>>{{2, 4}, {3, 3}});
    for (const auto& o : c5) {
        CHECK(o.parts[0].orientation == OrientationConstraint::orientable);
        CHECK(o.parts[1].orientation == OrientationConstraint::orientable);
    }

    auto n4 = cut_separating_arc(cls(4, 2, false));
    for (const auto& o : n4) {
        CHECK(o.orientability_note == "at least one part non-orientable");
    }

    CHECK_THROWS_AS(cut_separating_arc(cls(2, 1, true)), ValidationError);
    CHECK_THROWS_AS(cut_separating_arc(cls(4, 0, true)), ValidationError);
}

TEST_CASE("non-separating arc") {
    // Moebius band: part of connectivity 1 (disc class), boundary gluing
    auto m = cut_nonseparating_arc(cls(2, 1, false));
    CHECK(m.kind == CutKind::two_point_identified);
    CHECK(m.boundary_identification);
    CHECK(m.parts[0].connectivity == 1);
    CHECK(m.parts[0].orientation == OrientationConstraint::unconstrained);

    auto a = cut_nonseparating_arc(cls(2, 2, true));
    CHECK(a.parts[0].connectivity == 1);
    CHECK(a.parts[0].orientation == OrientationConstraint::orientable);

    // disc: the part would be a sphere with no boundary to glue
    CHECK_THROWS_AS(cut_nonseparating_arc(cls(1, 1, true)), ValidationError);
    CHECK_THROWS_AS(cut_nonseparating_arc(cls(0, 0, true)), ValidationError);
}

TEST_CASE("jordan curves") {
    auto torus = cut_jordan(cls(2, 0, true));
    CHECK(wedge_pairs(torus) == std::set<std::pair<int, int>>{{1, 1}});
    bool has_two_point = false, has_plain = false;
    for (const auto& o : torus) {
        if (o.kind == CutKind::two_point_identified) {
            has_two_point = true;
            CHECK(o.parts[0].connectivity == 0);
            CHECK(o.parts[0].orientation == OrientationConstraint::orientable);
            CHECK_FALSE(o.boundary_identification);
        }
        has_plain = has_plain || o.kind == CutKind::plain_surface;
    }
    CHECK(has_two_point);
    CHECK_FALSE(has_plain);  // orientable input excludes case 3

    auto klein = cut_jordan(cls(2, 0, false));
    has_plain = false;
    for (const auto& o : klein) {
        if (o.kind == CutKind::plain_surface) {
            has_plain = true;
            CHECK(o.parts[0].connectivity == 1);
        }
        if (o.kind == CutKind::two_point_identified) {
            CHECK(o.orientability_note == "orientability unconstrained");
        }
    }
    CHECK(has_plain);

    // projective plane: only case 3 applies
    auto rp2 = cut_jordan(cls(1, 0, false));
    REQUIRE(rp2.size() == 1);
    CHECK(rp2[0].kind == CutKind::plain_surface);
    CHECK(rp2[0].parts[0].connectivity == 0);

    CHECK_THROWS_AS(cut_jordan(cls(0, 0, true)), ValidationError);
}

TEST_CASE("identities and roundtrips, exhaustive to c = 10") {
    for (int c = 0; c <= 10; ++c) {
        for (bool orientable : {true, false}) {
            // b = 1 keeps every arc cut applicable and odd c realizable
            auto s = cls(c, 1, orientable);
            if (c >= 3) {
                for (const auto& o : cut_separating_arc(s)) {
                    CHECK(o.parts[0].connectivity + o.parts[1].connectivity == c + 1);
                    CHECK(o.parts[0].connectivity >= 2);
                    CHECK(o.parts[1].connectivity >= 2);
                    CHECK(reglue_roundtrip(o) == c);
                }
            }
            if (c >= 2) {
                auto o = cut_nonseparating_arc(s);
                CHECK(o.parts[0].connectivity == c - 1);
                CHECK(reglue_roundtrip(o) == c);
            }
            if (c >= 1) {
                for (const auto& o : cut_jordan(s)) {
                    switch (o.kind) {
                        case CutKind::wedge_split:
                            CHECK(o.parts[0].connectivity + o.parts[1].connectivity == c);
                            CHECK(o.parts[0].connectivity >= 1);
                            break;
                        case CutKind::two_point_identified:
                            CHECK(o.parts[0].connectivity == c - 2);
                            break;
                        case CutKind::plain_surface:
                            CHECK(o.parts[0].connectivity == c - 1);
                            CHECK_FALSE(o.source_orientable);
                            break;
                    }
                    CHECK(reglue_roundtrip(o) == c);
                    if (o.source_orientable) {
                        for (const auto& p : o.parts) {
                            CHECK(p.orientation != OrientationConstraint::non_orientable);
                        }
                        CHECK(o.kind != CutKind::plain_surface);
                    }
                }
            }
        }
    }
}
